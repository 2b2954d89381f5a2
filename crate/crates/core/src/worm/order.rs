//! Deciding the relations `<_ξ` between worms.
//!
//! `B <_ξ A` means that `A` proves `⟨ξ⟩B`. It is decided by splitting `B`
//! into its `ξ`-head and `ξ`-remainder: `A → ⟨ξ⟩B` holds exactly when
//! `h_ξ(A) → ⟨ξ⟩h_ξ(B)` and `A → r_ξ(B)`. The first conjunct lives inside
//! `S_ξ`, where `<_ξ` is `<_0` transported by demotion and hence decided by
//! order types. The second is either trivial (empty remainder) or again of
//! the form `A → ⟨β⟩C` with `β < ξ` and `C` shorter than `B`.

use serde::Serialize;

use super::{demote, head, o, remainder, Worm};
use crate::ordinal::Ordinal;

/// Outcome of comparing two worms at a fixed modality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WormOrder {
    /// The worms are GLP-equivalent.
    Equivalent,
    /// The left worm is `<_ξ`-below the right one.
    LeftBelow,
    /// The right worm is `<_ξ`-below the left one.
    RightBelow,
    /// Neither is `<_ξ`-below the other.
    Incomparable,
}

impl WormOrder {
    pub fn as_str(self) -> &'static str {
        match self {
            WormOrder::Equivalent => "equivalent",
            WormOrder::LeftBelow => "left_below",
            WormOrder::RightBelow => "right_below",
            WormOrder::Incomparable => "incomparable",
        }
    }
}

impl std::fmt::Display for WormOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `below <_ξ above`, i.e. `above → ⟨ξ⟩below`.
pub fn less_at(xi: &Ordinal, below: &Worm, above: &Worm) -> bool {
    let lowered = |w: &Worm| {
        let h = head(xi, w);
        o(&demote(xi, &h).expect("heads lie in S_xi"))
    };
    if lowered(below) >= lowered(above) {
        return false;
    }
    let rest = remainder(xi, below);
    match rest.modalities().split_first() {
        None => true,
        Some((beta, tail)) => less_at(beta, &Worm::new(tail.to_vec()), above),
    }
}

/// Compares `left` and `right` under `<_ξ`.
///
/// Equivalence (equal order types) is reported first; otherwise the
/// relation is tested in both directions.
pub fn compare_at(xi: &Ordinal, left: &Worm, right: &Worm) -> WormOrder {
    if o(left) == o(right) {
        WormOrder::Equivalent
    } else if less_at(xi, left, right) {
        WormOrder::LeftBelow
    } else if less_at(xi, right, left) {
        WormOrder::RightBelow
    } else {
        WormOrder::Incomparable
    }
}

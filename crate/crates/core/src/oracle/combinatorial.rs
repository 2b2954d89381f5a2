//! An order-type-free decision procedure for `<_0`, used as the second,
//! independent route against which the order-type calculus is checked.
//!
//! For worms with a common minimum `μ > 0` both are demoted by `μ`.
//! Otherwise write `A = A_1 0 A_2` with `A_1 ∈ S_1` (the part before the
//! first 0; `A_2` is absent when `A` has no 0) and likewise `B = B_1 0 B_2`.
//! Then `B <_0 A` holds exactly when either
//!
//! * `A_2` is present and `B ≤_0 A_2`, or
//! * `1↓B_1 <_0 1↓A_1` and, if `B_2` is present, `B_2 <_0 A`.
//!
//! Equivalence is the absence of both strict relations.

use std::cmp::Ordering;

use crate::ordinal::Ordinal;
use crate::worm::{demote, head, remainder, Worm};

fn split_at_zero(worm: &[Ordinal]) -> (&[Ordinal], Option<&[Ordinal]>) {
    match worm.iter().position(Ordinal::is_zero) {
        Some(i) => (&worm[..i], Some(&worm[i + 1..])),
        None => (worm, None),
    }
}

fn lowered(worm: &[Ordinal], by: &Ordinal) -> Vec<Ordinal> {
    worm.iter()
        .map(|m| by.left_sub(m).expect("modality is at least the bound"))
        .collect()
}

// b <_0 a
fn below(b: &[Ordinal], a: &[Ordinal]) -> bool {
    let Some(mu) = a.iter().chain(b).min() else {
        return false;
    };
    if !mu.is_zero() {
        return below(&lowered(b, mu), &lowered(a, mu));
    }
    let (a1, a2) = split_at_zero(a);
    let (b1, b2) = split_at_zero(b);
    if let Some(a2) = a2 {
        if !below(a2, b) {
            return true;
        }
    }
    let one = Ordinal::one();
    below(&lowered(b1, &one), &lowered(a1, &one)) && b2.is_none_or(|b2| below(b2, a))
}

/// Three-way comparison under `<_0` (`Less` means `left <_0 right`).
pub fn cmp0(left: &Worm, right: &Worm) -> Ordering {
    if below(left.modalities(), right.modalities()) {
        Ordering::Less
    } else if below(right.modalities(), left.modalities()) {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// `below <_ξ above` by the head/remainder recursion, with the heads
/// compared by [`cmp0`] instead of by order types.
pub fn less_at(xi: &Ordinal, below: &Worm, above: &Worm) -> bool {
    let lowered_head = |w: &Worm| demote(xi, &head(xi, w)).expect("heads lie in S_xi");
    if cmp0(&lowered_head(below), &lowered_head(above)) != Ordering::Less {
        return false;
    }
    let rest = remainder(xi, below);
    match rest.modalities().split_first() {
        None => true,
        Some((beta, tail)) => less_at(beta, &Worm::new(tail.to_vec()), above),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_worm;

    fn wm(text: &str) -> Worm {
        parse_worm(text).unwrap()
    }

    #[test]
    fn small_comparisons() {
        assert_eq!(cmp0(&Worm::empty(), &wm("0")), Ordering::Less);
        assert_eq!(cmp0(&wm("0.0"), &wm("1")), Ordering::Less);
        assert_eq!(cmp0(&wm("1.0"), &wm("1")), Ordering::Equal);
        assert_eq!(cmp0(&wm("0.1"), &wm("1")), Ordering::Greater);
        assert_eq!(cmp0(&wm("2.0.1"), &wm("2")), Ordering::Equal);
        assert_eq!(cmp0(&wm("w"), &wm("1.1.1.1")), Ordering::Greater);
    }

    #[test]
    fn antichain_by_the_independent_route() {
        let one = Ordinal::one();
        assert!(less_at(&one, &wm("0.1.1"), &wm("1.0.1.1.1")));
        assert!(less_at(&one, &wm("1.0.1.1.1"), &wm("1.1.1.1")));
        assert!(!less_at(&one, &wm("1.0.1.1.1"), &wm("1.1.0.1.1")));
        assert!(!less_at(&one, &wm("1.1.0.1.1"), &wm("1.0.1.1.1")));
    }
}

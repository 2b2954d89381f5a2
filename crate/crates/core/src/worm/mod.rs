//! Worms `⟨α_1⟩…⟨α_n⟩⊤` of the closed fragment of GLP and their order types.
//!
//! A worm is stored as its string of modalities, leftmost first. The order
//! type `o(A)` of `{B : B <_0 A}` is computed by the calculus
//!
//! * `o(λ) = 0`,
//! * `o(A) = e^μ o(μ↓A)` when `μ = min(A) > 0`,
//! * for `A = B_k 0 … 0 B_1 0 B_0` (so `B_0` is the rightmost block),
//!   `o(A) = t(B_0) + t(B_1) + … + t(B_k)` with `t(B) = ω^{o(1↓B)}`,
//!   except that an empty rightmost block contributes 0.
//!
//! The rightmost block contributes the leading summand. On worms in
//! Beklemishev normal form this is the usual calculus; on other worms the
//! ordinal sum absorbs the summands of blocks that are GLP-redundant.

mod omega;
mod order;

pub use omega::{coordinates_equal, omega, omega_sequence, OmegaSeq, OmegaStep};
pub use order::{compare_at, less_at, WormOrder};

use crate::error::{Error, Result};
use crate::ordinal::{hyperexp, hyperexp_factor, Ordinal};

/// A worm, as the string of its modalities read left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Worm(Vec<Ordinal>);

impl Worm {
    pub fn new(modalities: Vec<Ordinal>) -> Worm {
        Worm(modalities)
    }

    /// The worm `⊤`.
    pub fn empty() -> Worm {
        Worm(Vec::new())
    }

    pub fn from_nats(modalities: &[u64]) -> Worm {
        Worm(modalities.iter().map(|&n| Ordinal::nat(n)).collect())
    }

    pub fn modalities(&self) -> &[Ordinal] {
        &self.0
    }

    pub fn into_modalities(self) -> Vec<Ordinal> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<&Ordinal> {
        self.0.iter().min()
    }

    /// The leftmost modality.
    pub fn first(&self) -> Option<&Ordinal> {
        self.0.first()
    }

    /// Membership in `S_bound`: every modality is at least `bound`.
    pub fn in_fragment(&self, bound: &Ordinal) -> bool {
        self.0.iter().all(|m| m >= bound)
    }

    /// Concatenation `self ⌢ other`.
    pub fn concat(&self, other: &Worm) -> Worm {
        let mut modalities = self.0.clone();
        modalities.extend(other.0.iter().cloned());
        Worm(modalities)
    }

    /// Splits at every occurrence of `separator`, left to right.
    pub(crate) fn blocks(&self, separator: &Ordinal) -> Vec<Worm> {
        self.0
            .split(|m| m == separator)
            .map(|block| Worm(block.to_vec()))
            .collect()
    }

    fn join(blocks: &[Worm], separator: &Ordinal) -> Worm {
        let mut modalities = Vec::new();
        for (i, block) in blocks.iter().enumerate() {
            if i > 0 {
                modalities.push(separator.clone());
            }
            modalities.extend(block.0.iter().cloned());
        }
        Worm(modalities)
    }
}

impl FromIterator<Ordinal> for Worm {
    fn from_iter<I: IntoIterator<Item = Ordinal>>(iter: I) -> Self {
        Worm(iter.into_iter().collect())
    }
}

/// Minimum and leftmost modality; `None` for the empty worm.
pub fn extremes(worm: &Worm) -> (Option<Ordinal>, Option<Ordinal>) {
    (worm.min().cloned(), worm.first().cloned())
}

/// `a↑A`: every modality `m` becomes `a + m`.
pub fn promote(a: &Ordinal, worm: &Worm) -> Worm {
    worm.0.iter().map(|m| a.add(m)).collect()
}

/// `a↓A`: every modality `m` becomes `-a + m`. Requires `A ∈ S_a`.
pub fn demote(a: &Ordinal, worm: &Worm) -> Result<Worm> {
    worm.0
        .iter()
        .map(|m| a.left_sub(m))
        .collect::<Result<Vec<_>>>()
        .map(Worm)
        .map_err(|_| Error::NotInFragment {
            worm: worm.to_string(),
            bound: a.to_string(),
        })
}

/// `h_ξ(A)`: the longest initial segment whose modalities are all `≥ ξ`.
pub fn head(xi: &Ordinal, worm: &Worm) -> Worm {
    Worm(worm.0.iter().take_while(|m| *m >= xi).cloned().collect())
}

/// `r_ξ(A)`: what follows the `ξ`-head.
pub fn remainder(xi: &Ordinal, worm: &Worm) -> Worm {
    Worm(worm.0.iter().skip_while(|m| *m >= xi).cloned().collect())
}

/// `o(A)`, the `<_0` order type below `A`.
pub fn o(worm: &Worm) -> Ordinal {
    let Some(mu) = worm.min().cloned() else {
        return Ordinal::zero();
    };
    if !mu.is_zero() {
        let lowered = demote(&mu, worm).expect("every modality is at least the minimum");
        return hyperexp(&mu, &o(&lowered));
    }
    let one = Ordinal::one();
    let blocks = worm.blocks(&Ordinal::zero());
    let mut total = Ordinal::zero();
    for (i, block) in blocks.iter().rev().enumerate() {
        if i == 0 && block.is_empty() {
            continue;
        }
        let lowered = demote(&one, block).expect("blocks between zeros are in S_1");
        total = total.add(&Ordinal::omega_pow(&o(&lowered)));
    }
    total
}

/// `o_ξ(A) = o(ξ↓A)` for `A ∈ S_ξ`.
pub fn o_at(xi: &Ordinal, worm: &Worm) -> Result<Ordinal> {
    Ok(o(&demote(xi, worm)?))
}

/// Beklemishev normal form test.
///
/// With `α = min(A)` and `A = A_k α … α A_1`, each block must be in normal
/// form and `A_{i+1} ≤_{α+1} A_i`: block order types weakly increase from
/// left to right.
pub fn is_bnf(worm: &Worm) -> bool {
    let Some(alpha) = worm.min().cloned() else {
        return true;
    };
    let above = alpha.succ();
    let mut previous: Option<Ordinal> = None;
    for block in worm.blocks(&alpha) {
        if !is_bnf(&block) {
            return false;
        }
        let value = o_at(&above, &block).expect("blocks lie above the minimum");
        if previous.as_ref().is_some_and(|p| *p > value) {
            return false;
        }
        previous = Some(value);
    }
    true
}

/// The unique worm in Beklemishev normal form with `o(W) = ξ`.
///
/// Principal `ξ ≥ ω` is factored maximally as `e^α(ζ)` and mapped to
/// `α↑W(ζ)`; otherwise, with Cantor exponents `ξ_1 ≥ … ≥ ξ_j ≥ 1` followed by
/// `m` zero exponents, the result is
/// `0^m ⌢ (1↑W(ξ_j)) 0 … 0 (1↑W(ξ_1))`.
pub fn worm_of_ordinal(xi: &Ordinal) -> Worm {
    if xi.is_zero() {
        return Worm::empty();
    }
    if xi.is_principal() && !xi.is_finite() {
        let (alpha, base) = hyperexp_factor(xi).expect("xi is positive");
        return promote(&alpha, &worm_of_ordinal(&base));
    }
    let one = Ordinal::one();
    let exponents = xi.cnf_terms();
    let zeros = exponents.iter().filter(|e| e.is_zero()).count();
    let mut blocks = vec![Worm::empty(); zeros];
    blocks.extend(
        exponents
            .iter()
            .filter(|e| !e.is_zero())
            .rev()
            .map(|e| promote(&one, &worm_of_ordinal(e))),
    );
    if zeros > 0 && blocks.len() == zeros {
        // 0^m splits into m + 1 empty blocks
        blocks.push(Worm::empty());
    }
    Worm::join(&blocks, &Ordinal::zero())
}

/// The normal-form representative of `A`'s GLP-equivalence class.
pub fn normalize(worm: &Worm) -> Worm {
    worm_of_ordinal(&o(worm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_worm;

    fn wm(text: &str) -> Worm {
        parse_worm(text).unwrap()
    }

    fn n(k: u64) -> Ordinal {
        Ordinal::nat(k)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    #[test]
    fn extremes_examples() {
        assert_eq!(extremes(&wm("1.0.2")), (Some(n(0)), Some(n(1))));
        assert_eq!(extremes(&Worm::empty()), (None, None));
        assert_eq!(extremes(&wm("w")), (Some(w()), Some(w())));
    }

    #[test]
    fn promote_demote_examples() {
        assert_eq!(promote(&n(1), &wm("0.1")), wm("1.2"));
        assert_eq!(promote(&n(0), &wm("2.0.w")), wm("2.0.w"));
        assert_eq!(promote(&w(), &wm("1")), wm("w+1"));
        assert_eq!(demote(&n(1), &wm("1.2")).unwrap(), wm("0.1"));
        assert_eq!(demote(&w(), &wm("w.w")).unwrap(), wm("0.0"));
        assert!(matches!(
            demote(&n(1), &wm("0")),
            Err(Error::NotInFragment { .. })
        ));
    }

    #[test]
    fn head_remainder_examples() {
        assert_eq!(head(&n(1), &wm("1.0.2")), wm("1"));
        assert_eq!(remainder(&n(1), &wm("1.0.2")), wm("0.2"));
        let a = wm("2.0.1.w");
        assert_eq!(head(&n(0), &a), a);
        assert_eq!(remainder(&n(0), &a), Worm::empty());
        assert_eq!(head(&n(3), &wm("2.1")), Worm::empty());
    }

    #[test]
    fn bnf_examples() {
        assert!(is_bnf(&wm("0.0.0")));
        assert!(!is_bnf(&wm("1.0")));
        assert!(is_bnf(&wm("1.0.1.1")));
        assert!(is_bnf(&Worm::empty()));
        assert!(is_bnf(&wm("w")));
        assert!(!is_bnf(&wm("2.0.1")));
    }

    #[test]
    fn o_examples() {
        assert_eq!(o(&wm("0.0.0")), n(3));
        assert_eq!(o(&wm("0.1")), w().succ());
        assert_eq!(o(&wm("w")), Ordinal::epsilon0());
        assert_eq!(o(&wm("1.0")), w());
        assert_eq!(o(&wm("1")), w());
        assert_eq!(o(&wm("2")), Ordinal::omega_pow(&w()));
        assert_eq!(o(&wm("1.0.1")), w() + w());
        assert_eq!(o(&Worm::empty()), n(0));
    }

    #[test]
    fn o_at_examples() {
        assert_eq!(o_at(&n(1), &wm("1")).unwrap(), n(1));
        assert_eq!(o_at(&w(), &Worm::empty()).unwrap(), n(0));
        assert_eq!(o_at(&w(), &wm("w.w")).unwrap(), n(2));
        assert!(o_at(&n(1), &wm("1.0")).is_err());
    }

    #[test]
    fn worm_of_ordinal_examples() {
        assert_eq!(worm_of_ordinal(&n(3)), wm("0.0.0"));
        assert_eq!(worm_of_ordinal(&w()), wm("1"));
        let x = Ordinal::omega_pow(&n(2)) + w();
        assert_eq!(worm_of_ordinal(&x), wm("1.0.1.1"));
        assert_eq!(worm_of_ordinal(&Ordinal::epsilon0()), wm("w"));
        assert_eq!(worm_of_ordinal(&n(0)), Worm::empty());
        assert_eq!(worm_of_ordinal(&(w() + n(2))), wm("0.0.1"));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&wm("1.0")), wm("1"));
        assert_eq!(normalize(&wm("0.0.0")), wm("0.0.0"));
        assert_eq!(normalize(&wm("2.0.1")), wm("2"));
    }
}

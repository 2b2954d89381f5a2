//! Ω-sequences `ξ ↦ Ω_ξ(A)`.
//!
//! `Ω_ξ(A)` is the `<_ξ` rank of `A` in all of `S`. It equals both
//! `ℓ^ξ o(A)` and `o_ξ h_ξ(A)`; the first form is the one computed here.
//! The sequence is `ℓ`-exact and eventually 0, so it is a finite staircase:
//! a list of change points with the value that holds from each one on.

use serde::Serialize;

use super::{head, is_bnf, o, Worm};
use crate::error::{Error, Result};
use crate::ordinal::{hyperexp_factor, hyperlog, Ordinal};

/// `Ω_ξ(A) = ℓ^ξ o(A)`.
pub fn omega(xi: &Ordinal, worm: &Worm) -> Ordinal {
    hyperlog(xi, &o(worm))
}

/// From `start` on (until the next step) the sequence has value `value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaStep {
    pub start: Ordinal,
    pub value: Ordinal,
}

/// The staircase of an Ω-sequence. Starts strictly increase from 0, values
/// strictly decrease, and the last value is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaSeq {
    pub steps: Vec<OmegaStep>,
}

impl OmegaSeq {
    /// The value in force at coordinate `xi`.
    pub fn value_at(&self, xi: &Ordinal) -> Ordinal {
        self.steps
            .iter()
            .take_while(|s| s.start <= *xi)
            .last()
            .map(|s| s.value.clone())
            .unwrap_or_else(Ordinal::zero)
    }

    /// The change points after 0.
    pub fn change_points(&self) -> impl Iterator<Item = &Ordinal> {
        self.steps.iter().skip(1).map(|s| &s.start)
    }

    /// Pairs `(start, value)`.
    pub fn pairs(&self) -> Vec<(Ordinal, Ordinal)> {
        self.steps
            .iter()
            .map(|s| (s.start.clone(), s.value.clone()))
            .collect()
    }
}

/// The full Ω-sequence of `worm`.
///
/// From a change point `ξ` with value `v > 0`:
/// * if `v` is not additively principal, `ℓ` already changes it, so the next
///   step is `(ξ + 1, ℓv)`;
/// * if `v = 1` the next step is `(ξ + 1, 0)`;
/// * otherwise `v = e^α(ζ)` maximally, with `ω^ρ` the leading summand of `α`;
///   every `ℓ^η` with `η < ω^ρ` fixes `v`, and the next step is
///   `(ξ + ω^ρ, ℓ^{ω^ρ} v)`.
pub fn omega_sequence(worm: &Worm) -> OmegaSeq {
    let mut start = Ordinal::zero();
    let mut value = o(worm);
    let mut steps = vec![OmegaStep {
        start: start.clone(),
        value: value.clone(),
    }];
    while !value.is_zero() {
        let jump = if !value.is_principal() || value == Ordinal::one() {
            Ordinal::one()
        } else {
            let (alpha, _) = hyperexp_factor(&value).expect("value is positive");
            Ordinal::omega_pow(&alpha.terms()[0].exponent())
        };
        start = start.add(&jump);
        value = hyperlog(&jump, &value);
        steps.push(OmegaStep {
            start: start.clone(),
            value: value.clone(),
        });
    }
    OmegaSeq { steps }
}

/// Decides `Ω_ξ(A) = Ω_ζ(A)` for `A` in normal form without computing Ω:
/// the two coordinates have the same head, and `ξ ∼_η ζ` for every
/// modality `η` of that head.
pub fn coordinates_equal(worm: &Worm, xi: &Ordinal, zeta: &Ordinal) -> Result<bool> {
    if !is_bnf(worm) {
        return Err(Error::NotBnf(worm.to_string()));
    }
    let h = head(xi, worm);
    if h != head(zeta, worm) {
        return Ok(false);
    }
    Ok(h.modalities().iter().all(|eta| Ordinal::sim(xi, zeta, eta)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_ordinal, parse_worm};

    fn wm(text: &str) -> Worm {
        parse_worm(text).unwrap()
    }

    fn ord(text: &str) -> Ordinal {
        parse_ordinal(text).unwrap()
    }

    fn steps(seq: &OmegaSeq) -> Vec<(Ordinal, Ordinal)> {
        seq.pairs()
    }

    #[test]
    fn omega_examples() {
        let a = wm("1.0.1");
        assert_eq!(omega(&Ordinal::zero(), &a), o(&a));
        assert_eq!(omega(&ord("1"), &a), ord("1"));
        assert_eq!(omega(&ord("w"), &wm("w")), ord("1"));
    }

    #[test]
    fn sequence_goldens() {
        assert_eq!(
            steps(&omega_sequence(&wm("w"))),
            vec![
                (ord("0"), ord("phi(1,0)")),
                (ord("w"), ord("1")),
                (ord("w+1"), ord("0")),
            ]
        );
        assert_eq!(
            steps(&omega_sequence(&wm("2"))),
            vec![
                (ord("0"), ord("w^(w)")),
                (ord("1"), ord("w")),
                (ord("2"), ord("1")),
                (ord("3"), ord("0")),
            ]
        );
        assert_eq!(
            steps(&omega_sequence(&Worm::empty())),
            vec![(ord("0"), ord("0"))]
        );
    }

    #[test]
    fn non_principal_values_step_by_one() {
        let seq = omega_sequence(&wm("1.0.1"));
        assert_eq!(
            steps(&seq),
            vec![
                (ord("0"), ord("w+w")),
                (ord("1"), ord("1")),
                (ord("2"), ord("0")),
            ]
        );
    }

    #[test]
    fn value_at_reads_the_staircase() {
        let seq = omega_sequence(&wm("w"));
        assert_eq!(seq.value_at(&ord("5")), ord("phi(1,0)"));
        assert_eq!(seq.value_at(&ord("w")), ord("1"));
        assert_eq!(seq.value_at(&ord("w^(2)")), ord("0"));
    }

    #[test]
    fn coordinates_equal_examples() {
        let a = wm("w");
        assert_eq!(coordinates_equal(&a, &ord("1"), &ord("5")), Ok(true));
        assert_eq!(coordinates_equal(&a, &ord("0"), &ord("w")), Ok(false));
        let b = wm("1.0.1.1");
        assert_eq!(coordinates_equal(&b, &ord("2"), &ord("2")), Ok(true));
        assert!(matches!(
            coordinates_equal(&wm("1.0"), &ord("0"), &ord("1")),
            Err(Error::NotBnf(_))
        ));
    }
}

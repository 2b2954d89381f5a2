//! Hyperexponentials `e^ξ` and hyperlogarithms `ℓ^ξ`.
//!
//! `e` enumerates `{0} ∪ {ω^{1+α}}`, so `e(x) = ω^x` for `x ≥ 1`. The level
//! functions `e_α` form the Veblen progression over `e` and
//! `e^{ω^{a_1} + … + ω^{a_n}} = e_{a_1} ∘ … ∘ e_{a_n}`.
//!
//! `ℓ^ξ` is the cohyperation of the end-exponent map `ℓ` and the left adjoint
//! of `e^ξ`. It is evaluated with the recursion
//!
//! * `ℓ^0 α = α`,
//! * `ℓ^ξ n = 0` and `ℓ^ξ(α + ω^β) = ℓ^ξ ω^β` for `ξ > 0`,
//! * `ℓ^{ω^ρ + ξ} = ℓ^ξ ∘ ℓ^{ω^ρ}`,
//! * `ℓ^{ω^ρ} e^{ω^β} ξ` is `e^{ω^β} ξ`, `ξ` or `ℓ^{ω^ρ} ξ` as `ρ` is below,
//!   equal to or above `β`,
//!
//! where the last clause is applied to the maximal factorization returned by
//! [`hyperexp_factor`].

use std::cmp::Ordering;

use super::Ordinal;
use crate::error::{Error, Result};

/// `e_m(g)`: the `g`-th element of the `m`-th Veblen level over `e`.
///
/// `e_m(0) = 0`, `e_0(g) = ω^g` for `g ≥ 1`, and `e_m(1 + β) = φ_m(β)` for `m ≥ 1`.
pub fn e_enum(m: &Ordinal, g: &Ordinal) -> Ordinal {
    if g.is_zero() {
        Ordinal::zero()
    } else if m.is_zero() {
        Ordinal::omega_pow(g)
    } else {
        Ordinal::veblen(m, &g.minus_one())
    }
}

/// `e^ξ(g)`.
pub fn hyperexp(xi: &Ordinal, g: &Ordinal) -> Ordinal {
    xi.cnf_terms()
        .iter()
        .rev()
        .fold(g.clone(), |acc, level| e_enum(level, &acc))
}

/// The maximal `α` such that `g = e^α(ζ)` for some `ζ`, together with `ζ`.
///
/// A principal `ω^b` that is not an epsilon number equals `e(b)`, so one
/// factor of `e` is peeled off; an epsilon number `φ_a(b)` equals
/// `e^{ω^a}(1 + b)`. Anything else (a proper sum, or 1) admits only `α = 0`.
pub fn hyperexp_factor(g: &Ordinal) -> Result<(Ordinal, Ordinal)> {
    if g.is_zero() {
        return Err(Error::ZeroInput("hyperexp_factor"));
    }
    Ok(factor_positive(g))
}

fn factor_positive(g: &Ordinal) -> (Ordinal, Ordinal) {
    let [term] = g.terms() else {
        return (Ordinal::zero(), g.clone());
    };
    if term.level().is_zero() {
        if term.arg().is_zero() {
            return (Ordinal::zero(), g.clone());
        }
        let (inner, base) = factor_positive(term.arg());
        (Ordinal::one().add(&inner), base)
    } else {
        let (inner, base) = factor_positive(&term.arg().one_plus());
        (Ordinal::omega_pow(term.level()).add(&inner), base)
    }
}

/// `ℓ^ξ(g)`.
pub fn hyperlog(xi: &Ordinal, g: &Ordinal) -> Ordinal {
    let mut value = g.clone();
    for rho in xi.cnf_terms() {
        if value.is_zero() {
            break;
        }
        value = hyperlog_power(&rho, &value);
    }
    value
}

// ℓ^{ω^ρ}(g)
fn hyperlog_power(rho: &Ordinal, g: &Ordinal) -> Ordinal {
    let mut value = g.clone();
    loop {
        let principal = value.last_term();
        if principal.is_finite() {
            return Ordinal::zero();
        }
        let (alpha, base) = factor_positive(&principal);
        let lead = alpha.terms()[0].exponent();
        let inner = hyperexp(&alpha.tail(), &base);
        match rho.cmp(&lead) {
            Ordering::Less => return principal,
            Ordering::Equal => return inner,
            Ordering::Greater => value = inner,
        }
    }
}

/// One summand `e^{exponent}(argument)` of a weak hyperexponential normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhnfTerm {
    pub exponent: Ordinal,
    pub argument: Ordinal,
}

impl WhnfTerm {
    pub fn value(&self) -> Ordinal {
        hyperexp(&self.exponent, &self.argument)
    }
}

/// Weak hyperexponential normal form `Σ e^{ω^{δ_i}}(β_i) + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhnfView {
    pub terms: Vec<WhnfTerm>,
    pub trailing: u64,
}

impl WhnfView {
    pub fn reassemble(&self) -> Ordinal {
        let sum = self
            .terms
            .iter()
            .fold(Ordinal::zero(), |acc, t| acc.add(&t.value()));
        sum.add(&Ordinal::nat(self.trailing))
    }
}

/// The unique weak hyperexponential normal form whose exponents are ω-powers.
///
/// `φ_a(b)` becomes `e^{ω^a}(1 + b)` for `a > 0`, `ω^b` becomes `e^1(b)` for
/// `b > 0`, and the trailing ones are collected into the natural number.
pub fn whnf(a: &Ordinal) -> WhnfView {
    let mut terms = Vec::new();
    let mut trailing = 0;
    for t in a.terms() {
        if !t.level().is_zero() {
            terms.push(WhnfTerm {
                exponent: Ordinal::omega_pow(t.level()),
                argument: t.arg().one_plus(),
            });
        } else if !t.arg().is_zero() {
            terms.push(WhnfTerm {
                exponent: Ordinal::one(),
                argument: t.arg().clone(),
            });
        } else {
            trailing += 1;
        }
    }
    WhnfView { terms, trailing }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> Ordinal {
        Ordinal::nat(k)
    }

    fn w() -> Ordinal {
        Ordinal::omega()
    }

    fn wpow(x: Ordinal) -> Ordinal {
        Ordinal::omega_pow(&x)
    }

    #[test]
    fn e_enum_examples() {
        assert_eq!(e_enum(&n(0), &n(1)), w());
        assert_eq!(e_enum(&w(), &n(0)), n(0));
        assert_eq!(e_enum(&n(1), &n(1)), Ordinal::epsilon0());
        assert_eq!(e_enum(&n(0), &n(3)), wpow(n(3)));
        // e_1(2) = φ_1(1) = ε_1
        assert_eq!(e_enum(&n(1), &n(2)), Ordinal::veblen(&n(1), &n(1)));
    }

    #[test]
    fn hyperexp_examples() {
        let g = wpow(w()) + n(4);
        assert_eq!(hyperexp(&n(0), &g), g);
        assert_eq!(hyperexp(&n(2), &n(1)), wpow(w()));
        assert_eq!(hyperexp(&w(), &n(1)), Ordinal::epsilon0());
        assert_eq!(hyperexp(&w(), &n(0)), n(0));
    }

    #[test]
    fn factor_examples() {
        assert_eq!(hyperexp_factor(&w()).unwrap(), (n(1), n(1)));
        assert_eq!(hyperexp_factor(&wpow(w())).unwrap(), (n(2), n(1)));
        assert_eq!(
            hyperexp_factor(&Ordinal::epsilon0()).unwrap(),
            (w(), n(1))
        );
        assert_eq!(hyperexp_factor(&wpow(n(2))).unwrap(), (n(1), n(2)));
        assert_eq!(hyperexp_factor(&n(1)).unwrap(), (n(0), n(1)));
        assert_eq!(hyperexp_factor(&(w() + n(1))).unwrap(), (n(0), w() + n(1)));
        assert_eq!(hyperexp_factor(&n(0)), Err(Error::ZeroInput("hyperexp_factor")));
    }

    #[test]
    fn hyperlog_examples() {
        for xi in [n(1), n(3), w(), wpow(w())] {
            assert_eq!(hyperlog(&xi, &n(7)), n(0));
        }
        assert_eq!(hyperlog(&n(2), &wpow(w())), n(1));
        assert_eq!(hyperlog(&w(), &Ordinal::epsilon0()), n(1));
        assert_eq!(hyperlog(&n(0), &n(7)), n(7));
        assert_eq!(hyperlog(&n(1), &(wpow(w()) + w())), n(1));
        assert_eq!(hyperlog(&n(1), &(w() + n(1))), n(0));
        assert_eq!(hyperlog(&w(), &(Ordinal::epsilon0() + n(2))), n(0));
        // ε_0 is a fixpoint of ℓ
        let e0 = Ordinal::epsilon0();
        assert_eq!(hyperlog(&n(5), &e0), e0);
        assert_eq!(hyperlog(&wpow(n(2)), &e0), n(0));
    }

    #[test]
    fn whnf_examples() {
        let v = whnf(&n(3));
        assert!(v.terms.is_empty());
        assert_eq!(v.trailing, 3);

        let v = whnf(&w());
        assert_eq!(
            v.terms,
            vec![WhnfTerm {
                exponent: n(1),
                argument: n(1)
            }]
        );
        assert_eq!(v.trailing, 0);

        let x = Ordinal::epsilon0() + wpow(n(2));
        let v = whnf(&x);
        assert_eq!(
            v.terms,
            vec![
                WhnfTerm {
                    exponent: w(),
                    argument: n(1)
                },
                WhnfTerm {
                    exponent: n(1),
                    argument: n(2)
                }
            ]
        );
        assert_eq!(v.reassemble(), x);
    }
}

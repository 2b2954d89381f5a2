//! Ordinals below Gamma_0 in Veblen normal form.
//!
//! An [`Ordinal`] is a weakly decreasing sum of terms, each term `φ_a(b)`
//! stored with `b < φ_a(b)`. Every constructor canonicalizes, so derived
//! equality and hashing coincide with equality of the denoted ordinals.
//!
//! `ω^x` is `φ_0(x)` unless `x` is itself an epsilon number, in which case
//! `ω^x = x` and the stored term is `x`'s own term.

mod hyper;

pub use hyper::{e_enum, hyperexp, hyperexp_factor, hyperlog, whnf, WhnfTerm, WhnfView};

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use crate::error::{Error, Result};

/// One additively principal summand `φ_level(arg)`, with `arg < φ_level(arg)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    level: Ordinal,
    arg: Ordinal,
}

impl Term {
    pub fn level(&self) -> &Ordinal {
        &self.level
    }

    pub fn arg(&self) -> &Ordinal {
        &self.arg
    }

    /// The `β` with `ω^β` equal to this term.
    pub fn exponent(&self) -> Ordinal {
        if self.level.is_zero() {
            self.arg.clone()
        } else {
            Ordinal::from_term(self.clone())
        }
    }

    fn is_one(&self) -> bool {
        self.level.is_zero() && self.arg.is_zero()
    }
}

/// A canonical ordinal notation below Gamma_0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Arc<[Term]>,
}

impl Ordinal {
    fn from_terms(terms: Vec<Term>) -> Ordinal {
        Ordinal {
            terms: terms.into(),
        }
    }

    fn from_term(term: Term) -> Ordinal {
        Ordinal::from_terms(vec![term])
    }

    pub fn zero() -> Ordinal {
        Ordinal::from_terms(Vec::new())
    }

    pub fn one() -> Ordinal {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Ordinal {
        let one = Term {
            level: Ordinal::zero(),
            arg: Ordinal::zero(),
        };
        Ordinal::from_terms(vec![one; n as usize])
    }

    pub fn omega() -> Ordinal {
        Ordinal::omega_pow(&Ordinal::one())
    }

    pub fn epsilon0() -> Ordinal {
        Ordinal::veblen(&Ordinal::one(), &Ordinal::zero())
    }

    /// The value `φ_a(b)` in canonical form.
    ///
    /// When `b` is already a fixpoint of `φ_a` (a single term with a larger
    /// level) the result is `b` itself.
    pub fn veblen(a: &Ordinal, b: &Ordinal) -> Ordinal {
        if let [t] = &*b.terms {
            if t.level > *a {
                return b.clone();
            }
        }
        let result = Ordinal::from_term(Term {
            level: a.clone(),
            arg: b.clone(),
        });
        debug_assert!(*a < result, "Veblen index reached Gamma_0");
        result
    }

    /// `ω^x`.
    pub fn omega_pow(x: &Ordinal) -> Ordinal {
        Ordinal::veblen(&Ordinal::zero(), x)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(Term::is_one)
    }

    pub fn as_nat(&self) -> Option<u64> {
        self.is_finite().then_some(self.terms.len() as u64)
    }

    /// True for ordinals of the form `ω^β` (exactly one Cantor term).
    pub fn is_principal(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(Term::is_one)
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// Ordinal sum `self + other`.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = other.terms.first() else {
            return self.clone();
        };
        if self.is_zero() {
            return other.clone();
        }
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| cmp_term(t, lead) != Ordering::Less)
            .cloned()
            .collect();
        terms.extend(other.terms.iter().cloned());
        Ordinal::from_terms(terms)
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// `1 + self`: the successor on finite values, the identity on infinite ones.
    pub fn one_plus(&self) -> Ordinal {
        Ordinal::one().add(self)
    }

    /// `-1 + self`: inverse of [`Ordinal::one_plus`] on positive values.
    pub(crate) fn minus_one(&self) -> Ordinal {
        match self.as_nat() {
            Some(n) if n > 0 => Ordinal::nat(n - 1),
            _ => self.clone(),
        }
    }

    /// The unique `η` with `self + η = target`.
    pub fn left_sub(&self, target: &Ordinal) -> Result<Ordinal> {
        if self > target {
            return Err(Error::Underflow {
                left: self.to_string(),
                right: target.to_string(),
            });
        }
        let common = self
            .terms
            .iter()
            .zip(target.terms.iter())
            .take_while(|(a, b)| a == b)
            .count();
        Ok(Ordinal::from_terms(target.terms[common..].to_vec()))
    }

    /// `ℓ`: the exponent of the last Cantor term, with `ℓ0 = 0`.
    pub fn last_exponent(&self) -> Ordinal {
        self.terms
            .last()
            .map(Term::exponent)
            .unwrap_or_else(Ordinal::zero)
    }

    /// The last Cantor term `ω^{ℓ self}` as an ordinal; 0 for 0.
    pub fn last_term(&self) -> Ordinal {
        match self.terms.last() {
            Some(t) => Ordinal::from_term(t.clone()),
            None => Ordinal::zero(),
        }
    }

    /// The leading Cantor term as an ordinal; 0 for 0.
    pub fn leading_term(&self) -> Ordinal {
        match self.terms.first() {
            Some(t) => Ordinal::from_term(t.clone()),
            None => Ordinal::zero(),
        }
    }

    /// Everything after the leading Cantor term.
    pub fn tail(&self) -> Ordinal {
        if self.is_zero() {
            return Ordinal::zero();
        }
        Ordinal::from_terms(self.terms[1..].to_vec())
    }

    /// Cantor normal form exponents, weakly decreasing; empty for 0.
    pub fn cnf_terms(&self) -> Vec<Ordinal> {
        self.terms.iter().map(Term::exponent).collect()
    }

    /// The partial sums of the Cantor normal form, from 0 up to `self`.
    pub fn cnf_approximations(&self) -> Vec<Ordinal> {
        (0..=self.terms.len())
            .map(|k| Ordinal::from_terms(self.terms[..k].to_vec()))
            .collect()
    }

    /// The largest partial sum of the Cantor normal form of `x` that is `≤ z`.
    pub fn cnp(z: &Ordinal, x: &Ordinal) -> Ordinal {
        let mut best = 0;
        for k in 1..=x.terms.len() {
            let partial = Ordinal::from_terms(x.terms[..k].to_vec());
            if partial <= *z {
                best = k;
            } else {
                break;
            }
        }
        Ordinal::from_terms(x.terms[..best].to_vec())
    }

    /// `a ∼_g b`: equal Cantor normal form projections onto `g`.
    pub fn sim(a: &Ordinal, b: &Ordinal, g: &Ordinal) -> bool {
        Ordinal::cnp(a, g) == Ordinal::cnp(b, g)
    }
}

impl Default for Ordinal {
    fn default() -> Self {
        Ordinal::zero()
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl Add for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(self, rhs)
    }
}

impl Add for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: Ordinal) -> Ordinal {
        Ordinal::add(&self, &rhs)
    }
}

impl Add<&Ordinal> for Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        Ordinal::add(&self, rhs)
    }
}

// Compare the values φ_a(b) and φ_c(d) of two canonical terms.
fn cmp_term(s: &Term, t: &Term) -> Ordering {
    match s.level.cmp(&t.level) {
        Ordering::Equal => s.arg.cmp(&t.arg),
        // φ_a(b) < φ_c(d) iff b < φ_c(d) when a < c
        Ordering::Less => cmp_with_term(&s.arg, t),
        // φ_c(d) < φ_a(b) iff d < φ_a(b) when c < a
        Ordering::Greater => cmp_with_term(&t.arg, s).reverse(),
    }
}

// Compare an ordinal with the value of a single term.
fn cmp_with_term(x: &Ordinal, t: &Term) -> Ordering {
    match x.terms.first() {
        None => Ordering::Less,
        Some(lead) => match cmp_term(lead, t) {
            Ordering::Equal if x.terms.len() > 1 => Ordering::Greater,
            other => other,
        },
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (s, t) in self.terms.iter().zip(other.terms.iter()) {
            match cmp_term(s, t) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Three-way comparison of two ordinals.
pub fn compare(a: &Ordinal, b: &Ordinal) -> Ordering {
    a.cmp(b)
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi({},{})", self.level, self.arg)
    }
}

//! Algebraic laws of ordinal arithmetic, hyperexponentials and
//! hyperlogarithms on a seeded sample.

use std::time::Instant;

use super::sample::{random_below, seeded_rng};
use super::{finish, run_check, Subject, VerifyReport};
use crate::ordinal::{e_enum, hyperexp_factor, whnf, Ordinal};

/// Checks the ordinal laws on `samples` seeded points below `bound`, over
/// all `samples × samples` pairs (triples use a third, shifted index).
pub fn verify_ordinal_grid(bound: &Ordinal, samples: usize, seed: u64) -> VerifyReport {
    verify_ordinal_grid_with(&Subject::default(), bound, samples, seed)
}

pub fn verify_ordinal_grid_with(
    subject: &Subject,
    bound: &Ordinal,
    samples: usize,
    seed: u64,
) -> VerifyReport {
    let start = Instant::now();
    let mut rng = seeded_rng(seed);
    let points: Vec<Ordinal> = (0..samples).map(|_| random_below(&mut rng, bound, 3)).collect();
    let n = points.len();
    let pairs = n * n;
    let exp = |x: &Ordinal, g: &Ordinal| (subject.hyperexp)(x, g);
    let log = |x: &Ordinal, g: &Ordinal| (subject.hyperlog)(x, g);
    let pair = |k: usize| (&points[k / n], &points[k % n]);
    let triple = |k: usize| (&points[k / n], &points[k % n], &points[(k / n + 2 * (k % n) + 1) % n]);
    let mut checks = Vec::new();

    checks.push(run_check("comparison is a strict total order", pairs, |k| {
        let (a, b, c) = triple(k);
        if a.cmp(b) != b.cmp(a).reverse() || (a == b) != (a.cmp(b).is_eq()) {
            return Some(format!("{a:#} vs {b:#} is not antisymmetric"));
        }
        (a < b && b < c && a >= c).then(|| format!("{a:#} < {b:#} < {c:#} but not {a:#} < {c:#}"))
    }));
    checks.push(run_check("addition is associative and left subtraction cancels it", pairs, |k| {
        let (a, b, c) = triple(k);
        if a.add(b).add(c) != a.add(&b.add(c)) {
            return Some(format!("({a:#}+{b:#})+{c:#} differs from {a:#}+({b:#}+{c:#})"));
        }
        let back = a.left_sub(&a.add(b));
        (back.as_ref() != Ok(b)).then(|| format!("-{a:#} + ({a:#}+{b:#}) gives {back:?}"))
    }));
    checks.push(run_check("hyperexp composes, fixes 0 and is strictly monotone", pairs, |k| {
        let (x, z, g) = triple(k);
        let composed = exp(x, &exp(z, g));
        let direct = exp(&x.add(z), g);
        if composed != direct {
            return Some(format!("e^({x:#}+{z:#})({g:#}) = {direct:#} but e^{x:#} e^{z:#} gives {composed:#}"));
        }
        if !exp(x, &Ordinal::zero()).is_zero() {
            return Some(format!("e^{x:#}(0) is not 0"));
        }
        (z < g && exp(x, z) >= exp(x, g)).then(|| format!("e^{x:#} is not strictly increasing at {z:#} < {g:#}"))
    }));
    checks.push(run_check("e^(w^a) is the a-th Veblen level", pairs, |k| {
        let (a, g) = pair(k);
        let lhs = exp(&Ordinal::omega_pow(a), g);
        let rhs = e_enum(a, g);
        (lhs != rhs).then(|| format!("e^(w^{a:#})({g:#}) = {lhs:#} but e_{a:#}({g:#}) = {rhs:#}"))
    }));
    checks.push(run_check("lower Veblen levels fix higher ones", pairs, |k| {
        let (a, b, g) = triple(k);
        if a >= b {
            return None;
        }
        let high = e_enum(b, g);
        (e_enum(a, &high) != high).then(|| format!("e_{a:#} moves e_{b:#}({g:#}) = {high:#}"))
    }));
    checks.push(run_check("limit clause approximations", n, |i| {
        let beta = &points[i];
        let top = exp(&Ordinal::omega(), &beta.succ());
        let base = exp(&Ordinal::omega(), beta).succ();
        let mut previous: Option<Ordinal> = None;
        for m in 0..8 {
            let v = exp(&Ordinal::nat(m), &base);
            if v >= top || previous.as_ref().is_some_and(|p| *p >= v) {
                return Some(format!("e^{m}(e^w({beta:#})+1) = {v:#} breaks the approximation of {top:#}"));
            }
            previous = Some(v);
        }
        None
    }));
    checks.push(run_check("hyperlog composes and never increases", pairs, |k| {
        let (x, z, g) = triple(k);
        let composed = log(z, &log(x, g));
        let direct = log(&x.add(z), g);
        if composed != direct {
            return Some(format!("l^({x:#}+{z:#})({g:#}) = {direct:#} but l^{z:#} l^{x:#} gives {composed:#}"));
        }
        (log(x, g) > *g).then(|| format!("l^{x:#}({g:#}) exceeds its argument"))
    }));
    checks.push(run_check("hyperlog is left adjoint to hyperexp", pairs, |k| {
        let (x, g, d) = triple(k);
        let back = log(x, &exp(x, g));
        if back != *g {
            return Some(format!("l^{x:#} e^{x:#}({g:#}) = {back:#}"));
        }
        (g < &exp(x, d) && log(x, g) >= *d)
            .then(|| format!("{g:#} < e^{x:#}({d:#}) but l^{x:#}({g:#}) = {:#}", log(x, g)))
    }));
    checks.push(run_check("cancellation of hyperlog against hyperexp", pairs, |k| {
        let (x, z, g) = triple(k);
        if x >= z {
            return None;
        }
        let lhs = log(x, &exp(z, g));
        let rest = x.left_sub(z).expect("x < z");
        let rhs = exp(&rest, g);
        (lhs != rhs).then(|| format!("l^{x:#} e^{z:#}({g:#}) = {lhs:#} but e^({rest:#})({g:#}) = {rhs:#}"))
    }));
    checks.push(run_check("hyperlog at w^r ignores shorter logarithms", pairs, |k| {
        let (r, g) = pair(k);
        let power = Ordinal::omega_pow(r);
        let direct = log(&power, g);
        [Ordinal::one(), Ordinal::nat(3), Ordinal::omega_pow(&r.minus_one())]
            .iter()
            .filter(|eta| **eta < power)
            .find_map(|eta| {
                let via = log(&power, &log(eta, g));
                (via != direct).then(|| format!("l^(w^{r:#}) of {g:#} is {direct:#} but {via:#} after l^{eta:#}"))
            })
    }));
    checks.push(run_check("WHNF round trip", n, |i| {
        let a = &points[i];
        let view = whnf(a);
        if view.reassemble() != *a {
            return Some(format!("WHNF of {a:#} reassembles to {:#}", view.reassemble()));
        }
        view.terms
            .iter()
            .find(|t| !t.exponent.is_principal())
            .map(|t| format!("WHNF of {a:#} has exponent {:#} that is not a power of w", t.exponent))
    }));
    checks.push(run_check("maximal hyperexponential factorization", n, |i| {
        let g = &points[i];
        if g.is_zero() {
            return None;
        }
        let (alpha, zeta) = hyperexp_factor(g).expect("g is positive");
        if exp(&alpha, &zeta) != *g {
            return Some(format!("e^{alpha:#}({zeta:#}) does not give back {g:#}"));
        }
        small_exponents().into_iter().filter(|b| *b > alpha).find_map(|b| {
            let candidate = log(&b, g);
            (exp(&b, &candidate) == *g)
                .then(|| format!("{g:#} = e^{b:#}({candidate:#}) beats the factor exponent {alpha:#}"))
        })
    }));
    finish(start, checks)
}

// Every exponent built from at most two Cantor terms with exponents in
// {0, 1, 2, w, eps_0}, plus a few epsilon levels.
fn small_exponents() -> Vec<Ordinal> {
    let bases = [
        Ordinal::zero(),
        Ordinal::one(),
        Ordinal::nat(2),
        Ordinal::omega(),
        Ordinal::epsilon0(),
    ];
    let mut out = Vec::new();
    for a in &bases {
        for b in &bases {
            if b > a {
                continue;
            }
            let first = Ordinal::omega_pow(a);
            out.push(first.clone());
            out.push(first.add(&Ordinal::omega_pow(b)));
        }
    }
    out.push(Ordinal::veblen(&Ordinal::one(), &Ordinal::one()));
    out.push(Ordinal::veblen(&Ordinal::nat(2), &Ordinal::zero()));
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_grid_passes() {
        let report = verify_ordinal_grid(&Ordinal::one(), 1, 1);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn small_grid_passes() {
        let bound = Ordinal::veblen(&Ordinal::nat(2), &Ordinal::zero());
        let report = verify_ordinal_grid(&bound, 12, 5);
        assert!(report.passed(), "{report}");
    }
}

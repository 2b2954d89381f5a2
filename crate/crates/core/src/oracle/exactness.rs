//! Randomized checks of the structure of Ω-sequences.

use std::time::Instant;

use rand::Rng;

use super::sample::{random_ordinal, random_worm, seeded_rng};
use super::{finish, run_check, Subject, VerifyReport};
use crate::ordinal::Ordinal;
use crate::worm::{coordinates_equal, demote, head, Worm};

struct Case {
    worm: Worm,
    xi: Ordinal,
    zeta: Ordinal,
}

/// Checks `cases` seeded triples `(A, ξ, ζ)`.
pub fn verify_exactness(cases: usize, seed: u64) -> VerifyReport {
    verify_exactness_with(&Subject::default(), cases, seed)
}

pub fn verify_exactness_with(subject: &Subject, cases: usize, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let mut rng = seeded_rng(seed);
    let samples: Vec<Case> = (0..cases)
        .map(|_| {
            let depth = rng.gen_range(1..=2);
            Case {
                worm: random_worm(&mut rng, 5, depth),
                xi: random_ordinal(&mut rng, 2),
                zeta: random_ordinal(&mut rng, 2),
            }
        })
        .collect();
    let omega = |xi: &Ordinal, a: &Worm| (subject.hyperlog)(xi, &(subject.o)(a));
    let mut checks = Vec::new();

    checks.push(run_check("successor coordinates take l", cases, |i| {
        let Case { worm, xi, .. } = &samples[i];
        let here = omega(xi, worm);
        let next = omega(&xi.succ(), worm);
        (next != here.last_exponent())
            .then(|| format!("{worm} at {xi:#}: Omega = {here:#}, next is {next:#}"))
    }));
    checks.push(run_check("l-exactness", cases, |i| {
        let Case { worm, xi, zeta } = &samples[i];
        let lhs = omega(&xi.add(zeta), worm);
        let rhs = (subject.hyperlog)(zeta, &omega(xi, worm));
        (lhs != rhs).then(|| format!("{worm} at {xi:#} + {zeta:#}: {lhs:#} vs l^{zeta:#} gives {rhs:#}"))
    }));
    checks.push(run_check("lower bound by hyperexp", cases, |i| {
        let Case { worm, xi, zeta } = &samples[i];
        let here = omega(xi, worm);
        let bound = (subject.hyperexp)(zeta, &omega(&xi.add(zeta), worm));
        (here < bound).then(|| format!("{worm}: Omega at {xi:#} is {here:#} < {bound:#}"))
    }));
    checks.push(run_check("Omega is weakly decreasing", cases, |i| {
        let Case { worm, xi, zeta } = &samples[i];
        let (lo, hi) = if xi <= zeta { (xi, zeta) } else { (zeta, xi) };
        let (a, b) = (omega(lo, worm), omega(hi, worm));
        (a < b).then(|| format!("{worm}: Omega at {lo:#} is {a:#} < {b:#} at {hi:#}"))
    }));
    checks.push(run_check("three Omega routes agree", cases, |i| {
        let Case { worm, xi, .. } = &samples[i];
        let via_log = omega(xi, worm);
        let via_head = (subject.o)(&demote(xi, &head(xi, worm)).expect("heads lie in S_xi"));
        let via_seq = (subject.omega_sequence)(worm).value_at(xi);
        (via_log != via_head || via_log != via_seq).then(|| {
            format!("{worm} at {xi:#}: hyperlog {via_log:#}, head {via_head:#}, sequence {via_seq:#}")
        })
    }));
    checks.push(run_check("the last nonzero coordinate is the first modality", cases, |i| {
        let worm = &samples[i].worm;
        let first = worm.first()?;
        let seq = (subject.omega_sequence)(worm);
        let last = seq.steps.iter().rev().find(|s| !s.value.is_zero())?;
        if last.start != *first {
            return Some(format!("{worm}: last nonzero step starts at {:#}", last.start));
        }
        let beyond = omega(&first.succ(), worm);
        (!beyond.is_zero()).then(|| format!("{worm}: Omega after the first modality is {beyond:#}"))
    }));
    checks.push(run_check("limit change points are partial sums of head modalities", cases, |i| {
        let worm = (subject.normalize)(&samples[i].worm);
        let seq = (subject.omega_sequence)(&worm);
        let predicted = |zeta: &Ordinal| {
            head(zeta, &worm)
                .modalities()
                .iter()
                .any(|eta| eta.cnf_approximations().contains(zeta))
        };
        if let Some(start) = seq.change_points().find(|z| z.is_limit() && !predicted(z)) {
            return Some(format!("{worm} changes at the limit {start:#} without a head witness"));
        }
        let changes: Vec<&Ordinal> = seq.change_points().collect();
        worm.modalities()
            .iter()
            .flat_map(|eta| eta.cnf_approximations())
            .filter(|z| z.is_limit() && predicted(z))
            .find(|z| !changes.contains(&z))
            .map(|z| format!("{worm} has a head witness at {z:#} but no change there"))
    }));
    checks.push(run_check("coordinate equality matches Omega equality", cases, |i| {
        let Case { worm, xi, zeta } = &samples[i];
        let normal = (subject.normalize)(worm);
        let predicted = coordinates_equal(&normal, xi, zeta).expect("normal forms are BNF");
        let actual = omega(xi, &normal) == omega(zeta, &normal);
        (predicted != actual).then(|| {
            format!("{normal} at {xi:#} and {zeta:#}: criterion says {predicted}, Omega values equal is {actual}")
        })
    }));
    checks.push(run_check("normal forms invert order types", cases, |i| {
        let xi = &samples[i].xi;
        let w = (subject.worm_of_ordinal)(xi);
        let back = (subject.o)(&w);
        if back != *xi {
            return Some(format!("o(W({xi:#})) = {back:#}"));
        }
        (!(subject.is_bnf)(&w)).then(|| format!("W({xi:#}) = {w} is not in BNF"))
    }));
    finish(start, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = verify_exactness(60, 11);
        assert!(report.passed(), "{report}");
    }
}

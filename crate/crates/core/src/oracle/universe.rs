//! Exhaustive checks over every worm up to a given length.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::combinatorial::{cmp0, less_at as route_less_at};
use super::{finish, run_check, Subject, VerifyReport};
use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::worm::{demote, head, o_at, promote, remainder, Worm};

/// Largest number of worms [`enumerate_worms`] will produce.
pub const MAX_UNIVERSE: usize = 50_000;

/// All worms over `alphabet` of length at most `max_length`, in
/// length-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Universe {
    pub alphabet: Vec<Ordinal>,
    pub max_length: usize,
    pub worms: Vec<Worm>,
}

pub fn enumerate_worms(alphabet: &[Ordinal], max_length: usize) -> Result<Universe> {
    let mut letters = alphabet.to_vec();
    letters.sort();
    letters.dedup();
    let k = letters.len();
    let mut size: usize = 0;
    let mut layer: usize = 1;
    for _ in 0..=max_length {
        size = size.saturating_add(layer);
        layer = layer.saturating_mul(k.max(1));
        if size > MAX_UNIVERSE {
            return Err(Error::TooLarge(format!(
                "{k} letters up to length {max_length} exceeds {MAX_UNIVERSE} worms"
            )));
        }
    }
    let mut worms = vec![Worm::empty()];
    let mut previous = vec![Vec::<Ordinal>::new()];
    for _ in 0..max_length {
        if k == 0 {
            break;
        }
        let next: Vec<Vec<Ordinal>> = previous
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |m| {
                    let mut longer = w.clone();
                    longer.push(m.clone());
                    longer
                })
            })
            .collect();
        worms.extend(next.iter().cloned().map(Worm::new));
        previous = next;
    }
    Ok(Universe {
        alphabet: letters,
        max_length,
        worms,
    })
}

pub fn verify_universe(universe: &Universe, xis: &[Ordinal]) -> VerifyReport {
    verify_universe_with(&Subject::default(), universe, xis)
}

// below[i] has bit j set iff worms[j] <_ξ worms[i]
struct Relation {
    words: usize,
    below: Vec<Vec<u64>>,
}

impl Relation {
    fn build(subject: &Subject, worms: &[Worm], xi: &Ordinal) -> Relation {
        let words = worms.len().div_ceil(64);
        let below = worms
            .par_iter()
            .map(|a| {
                let mut row = vec![0u64; words];
                for (j, b) in worms.iter().enumerate() {
                    if (subject.less_at)(xi, b, a) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
                row
            })
            .collect();
        Relation { words, below }
    }

    fn holds(&self, j: usize, i: usize) -> bool {
        self.below[i][j / 64] >> (j % 64) & 1 == 1
    }

    fn members(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.words * 64).filter(move |&j| j < self.below.len() && self.holds(j, i))
    }

    // Kahn's algorithm; returns a worm index on a cycle if there is one.
    fn cycle_witness(&self) -> Option<usize> {
        let n = self.below.len();
        let mut pending: Vec<usize> = (0..n).map(|i| self.members(i).count()).collect();
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in self.members(i) {
                above[j].push(i);
            }
        }
        let mut ready: Vec<usize> = (0..n).filter(|&i| pending[i] == 0).collect();
        let mut done = 0;
        while let Some(j) = ready.pop() {
            done += 1;
            for &i in &above[j] {
                pending[i] -= 1;
                if pending[i] == 0 {
                    ready.push(i);
                }
            }
        }
        (done < n).then(|| (0..n).find(|&i| pending[i] > 0).expect("some node is left"))
    }
}

/// Runs every exhaustive check on `universe` for each `ξ` in `xis`.
pub fn verify_universe_with(subject: &Subject, universe: &Universe, xis: &[Ordinal]) -> VerifyReport {
    let start = Instant::now();
    let worms = &universe.worms;
    let n = worms.len();
    let pairs = n * n;
    let values: Vec<Ordinal> = worms.par_iter().map(|w| (subject.o)(w)).collect();
    let mut checks = Vec::new();

    checks.push(run_check("o agrees with the combinatorial <_0", pairs, |k| {
        let (i, j) = (k / n, k % n);
        let by_o = values[i].cmp(&values[j]);
        let by_route = cmp0(&worms[i], &worms[j]);
        (by_o != by_route).then(|| {
            format!(
                "{} vs {}: o gives {by_o:?}, combinatorial route gives {by_route:?}",
                worms[i], worms[j]
            )
        })
    }));

    // <_0 is always built: several checks compare against it
    let mut levels: Vec<Ordinal> = xis.to_vec();
    if !levels.iter().any(Ordinal::is_zero) {
        levels.insert(0, Ordinal::zero());
    }
    let xis = &levels[..];
    let relations: Vec<Relation> = xis.iter().map(|xi| Relation::build(subject, worms, xi)).collect();
    let zero = xis.iter().position(Ordinal::is_zero).expect("level 0 is present");

    for (xi, rel) in xis.iter().zip(&relations) {
        checks.push(run_check(&format!("<_{xi:#} is irreflexive"), n, |i| {
            rel.holds(i, i).then(|| format!("{} <_{xi:#} {}", worms[i], worms[i]))
        }));
        checks.push(run_check(&format!("<_{xi:#} is transitive"), n, |i| {
            rel.members(i).find_map(|j| {
                (0..rel.words)
                    .find(|&w| rel.below[j][w] & !rel.below[i][w] != 0)
                    .map(|w| {
                        let k = w * 64 + (rel.below[j][w] & !rel.below[i][w]).trailing_zeros() as usize;
                        format!(
                            "{} <_{xi:#} {} <_{xi:#} {} but not {} <_{xi:#} {}",
                            worms[k], worms[j], worms[i], worms[k], worms[i]
                        )
                    })
            })
        }));
        checks.push(run_check(&format!("<_{xi:#} is acyclic"), 1, |_| {
            rel.cycle_witness()
                .map(|i| format!("{} lies on a <_{xi:#} cycle", worms[i]))
        }));
        checks.push(run_check(&format!("reduction recursion at {xi:#}: both routes agree"), pairs, |k| {
            let (i, j) = (k / n, k % n);
            let by_o = rel.holds(j, i);
            let by_route = route_less_at(xi, &worms[j], &worms[i]);
            (by_o != by_route).then(|| {
                format!(
                    "{} <_{xi:#} {}: order-type route says {by_o}, combinatorial route says {by_route}",
                    worms[j], worms[i]
                )
            })
        }));
        checks.push(run_check(&format!("Omega_{xi:#} is strictly monotone along <_{xi:#}"), pairs, |k| {
            let (i, j) = (k / n, k % n);
            if !rel.holds(j, i) {
                return None;
            }
            let (lo, hi) = (
                (subject.hyperlog)(xi, &values[j]),
                (subject.hyperlog)(xi, &values[i]),
            );
            (lo >= hi).then(|| {
                format!("{} <_{xi:#} {} but Omega values {lo:#} >= {hi:#}", worms[j], worms[i])
            })
        }));
        let lifted: Vec<Worm> = worms.iter().map(|w| promote(xi, w)).collect();
        checks.push(run_check(&format!("order transport to S_{xi:#}"), pairs, |k| {
            let (i, j) = (k / n, k % n);
            let plain = relations[zero].holds(j, i);
            let moved = (subject.less_at)(xi, &lifted[j], &lifted[i]);
            (plain != moved).then(|| {
                format!(
                    "{} <_0 {} is {plain} but {} <_{xi:#} {} is {moved}",
                    worms[j], worms[i], lifted[j], lifted[i]
                )
            })
        }));
        checks.push(run_check(&format!("three Omega routes agree at {xi:#}"), n, |i| {
            let a = &worms[i];
            let via_log = (subject.hyperlog)(xi, &values[i]);
            let via_head = (subject.o)(&demote(xi, &head(xi, a)).expect("heads lie in S_xi"));
            let via_seq = (subject.omega_sequence)(a).value_at(xi);
            (via_log != via_head || via_log != via_seq).then(|| {
                format!(
                    "{a} at {xi:#}: hyperlog {via_log:#}, head order type {via_head:#}, sequence {via_seq:#}"
                )
            })
        }));
    }

    checks.push(run_check("<_0 is total modulo equivalence", pairs, |k| {
        let (i, j) = (k / n, k % n);
        let rel = &relations[zero];
        let outcomes = [rel.holds(i, j), rel.holds(j, i), values[i] == values[j]];
        (outcomes.iter().filter(|&&b| b).count() != 1).then(|| {
            format!(
                "{} vs {}: below {}, above {}, equivalent {}",
                worms[i], worms[j], outcomes[0], outcomes[1], outcomes[2]
            )
        })
    }));
    checks.push(run_check("<_ξ shrinks as ξ grows", pairs, |k| {
        let (i, j) = (k / n, k % n);
        xis.iter().zip(&relations).find_map(|(xi, rel)| {
            xis.iter().zip(&relations).find_map(|(zeta, other)| {
                (zeta < xi && rel.holds(j, i) && !other.holds(j, i)).then(|| {
                    format!("{} <_{xi:#} {} but not <_{zeta:#}", worms[j], worms[i])
                })
            })
        })
    }));

    checks.push(run_check("normalize preserves o, is idempotent and lands in BNF", n, |i| {
        let a = &worms[i];
        let normal = (subject.normalize)(a);
        if (subject.o)(&normal) != values[i] {
            return Some(format!("o({normal}) differs from o({a}) = {:#}", values[i]));
        }
        if !(subject.is_bnf)(&normal) {
            return Some(format!("normalize({a}) = {normal} is not in BNF"));
        }
        let again = (subject.normalize)(&normal);
        (again != normal).then(|| format!("normalize({normal}) = {again}"))
    }));
    checks.push(run_check("BNF worms are their own normal forms", n, |i| {
        let a = &worms[i];
        if !(subject.is_bnf)(a) {
            return None;
        }
        let back = (subject.worm_of_ordinal)(&values[i]);
        (back != *a).then(|| format!("{a} is BNF but the normal form of o = {:#} is {back}", values[i]))
    }));
    checks.push(run_check("head/remainder and promotion laws", n * xis.len(), |k| {
        let (a, xi) = (&worms[k / xis.len()], &xis[k % xis.len()]);
        let (h, r) = (head(xi, a), remainder(xi, a));
        if h.concat(&r) != *a {
            return Some(format!("head and remainder of {a} at {xi:#} do not concatenate"));
        }
        if (subject.is_bnf)(a) && !(subject.is_bnf)(&h) {
            return Some(format!("{a} is BNF but its head {h} at {xi:#} is not"));
        }
        let one = Ordinal::one();
        if promote(xi, &promote(&one, a)) != promote(&xi.add(&one), a) {
            return Some(format!("promotion does not compose on {a} with {xi:#} and 1"));
        }
        if demote(xi, &promote(xi, a)).as_ref() != Ok(a) {
            return Some(format!("demotion does not undo promotion on {a} by {xi:#}"));
        }
        let lifted = o_at(xi, &promote(xi, a)).expect("promoted worm lies in S_xi");
        (lifted != values[k / xis.len()]).then(|| format!("o_{xi:#}({xi:#} up {a}) = {lifted:#} differs from o({a})"))
    }));

    let bnf_count = worms.iter().filter(|w| (subject.is_bnf)(w)).count();
    checks.push(run_check("BNF worms are unique per class", 1, |_| {
        let classes = worms
            .iter()
            .filter(|w| (subject.is_bnf)(w))
            .map(|w| (subject.o)(w))
            .collect::<std::collections::HashSet<_>>()
            .len();
        (classes != bnf_count).then(|| {
            format!("{bnf_count} BNF worms but only {classes} distinct order types among them")
        })
    }));

    checks.push(run_check("equivalent worms are indistinguishable", pairs, |k| {
        let (i, j) = (k / n, k % n);
        if i == j || values[i] != values[j] {
            return None;
        }
        xis.iter().zip(&relations).find_map(|(xi, rel)| {
            (0..n).find_map(|m| {
                (rel.holds(m, i) != rel.holds(m, j) || rel.holds(i, m) != rel.holds(j, m)).then(|| {
                    format!(
                        "{} and {} have equal o but differ against {} at {xi:#}",
                        worms[i], worms[j], worms[m]
                    )
                })
            })
        })
    }));
    finish(start, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_sizes() {
        let u = enumerate_worms(&[Ordinal::zero(), Ordinal::one()], 3).unwrap();
        assert_eq!(u.worms.len(), 15);
        let u = enumerate_worms(&[Ordinal::zero()], 2).unwrap();
        assert_eq!(u.worms, vec![Worm::empty(), Worm::from_nats(&[0]), Worm::from_nats(&[0, 0])]);
        let letters: Vec<_> = (0..3).map(Ordinal::nat).collect();
        assert_eq!(enumerate_worms(&letters, 0).unwrap().worms, vec![Worm::empty()]);
        assert_eq!(enumerate_worms(&letters, 5).unwrap().worms.len(), 364);
        assert!(matches!(enumerate_worms(&letters, 12), Err(Error::TooLarge(_))));
    }

    #[test]
    fn trivial_universe_passes() {
        let u = enumerate_worms(&[Ordinal::zero()], 0).unwrap();
        let report = verify_universe(&u, &[Ordinal::zero(), Ordinal::one()]);
        assert!(report.passed(), "{report}");
    }
}

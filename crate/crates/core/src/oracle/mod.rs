//! Brute-force verification: exhaustive small worm universes and seeded
//! random grids, checked against independent routes.
//!
//! Every check runs over an index range in parallel and reports the first
//! failing case (in index order, so reports are deterministic) as a
//! reproducible counterexample.

mod combinatorial;
mod exactness;
mod grid;
mod sample;
mod universe;

pub use combinatorial::{cmp0, less_at as combinatorial_less_at};
pub use exactness::{verify_exactness, verify_exactness_with};
pub use grid::{verify_ordinal_grid, verify_ordinal_grid_with};
pub use sample::{random_below, random_ordinal, random_worm, seeded_rng, Sampler};
pub use universe::{enumerate_worms, verify_universe, verify_universe_with, Universe, MAX_UNIVERSE};

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::ordinal::{self, Ordinal};
use crate::worm::{self, OmegaSeq, Worm};

/// Fixed seed for the default random suites.
pub const DEFAULT_SEED: u64 = 0x6c70_2d67_6c70;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Number of cases examined.
    pub cases: u64,
    /// The first failing case, if any.
    pub counterexample: Option<String>,
    pub wall_ms: u64,
}

/// A list of check outcomes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub wall_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(mut self, other: VerifyReport) -> VerifyReport {
        self.checks.extend(other.checks);
        self.wall_ms += other.wall_ms;
        self
    }

    /// The report without timings, for reproducibility comparisons.
    pub fn outcomes(&self) -> Vec<(String, bool, u64, Option<String>)> {
        self.checks
            .iter()
            .map(|c| (c.name.clone(), c.passed, c.cases, c.counterexample.clone()))
            .collect()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "[{status}] {} ({} cases, {} ms)", c.name, c.cases, c.wall_ms)?;
            if let Some(cx) = &c.counterexample {
                write!(f, "\n       counterexample: {cx}")?;
            }
            writeln!(f)?;
        }
        write!(f, "total: {} ms", self.wall_ms)
    }
}

/// Runs `case(i)` for `i < cases` in parallel; `case` returns a description
/// of the failure, if any.
pub(crate) fn run_check<F>(name: &str, cases: usize, case: F) -> CheckResult
where
    F: Fn(usize) -> Option<String> + Sync + Send,
{
    let start = Instant::now();
    let counterexample = (0..cases).into_par_iter().find_map_first(case);
    CheckResult {
        name: name.to_string(),
        passed: counterexample.is_none(),
        cases: cases as u64,
        counterexample,
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

pub(crate) fn finish(start: Instant, checks: Vec<CheckResult>) -> VerifyReport {
    VerifyReport {
        checks,
        wall_ms: start.elapsed().as_millis() as u64,
    }
}

type WormToOrdinal = Arc<dyn Fn(&Worm) -> Ordinal + Send + Sync>;
type WormToWorm = Arc<dyn Fn(&Worm) -> Worm + Send + Sync>;
type Binary = Arc<dyn Fn(&Ordinal, &Ordinal) -> Ordinal + Send + Sync>;
type Relation = Arc<dyn Fn(&Ordinal, &Worm, &Worm) -> bool + Send + Sync>;

/// The implementations under test. The default is the library itself;
/// individual entries can be replaced to check that the oracle notices.
#[derive(Clone)]
pub struct Subject {
    pub o: WormToOrdinal,
    /// `less_at(ξ, B, A)` decides `B <_ξ A`.
    pub less_at: Relation,
    pub omega_sequence: Arc<dyn Fn(&Worm) -> OmegaSeq + Send + Sync>,
    pub normalize: WormToWorm,
    pub worm_of_ordinal: Arc<dyn Fn(&Ordinal) -> Worm + Send + Sync>,
    pub is_bnf: Arc<dyn Fn(&Worm) -> bool + Send + Sync>,
    pub hyperexp: Binary,
    pub hyperlog: Binary,
}

impl Default for Subject {
    fn default() -> Self {
        Subject {
            o: Arc::new(worm::o),
            less_at: Arc::new(worm::less_at),
            omega_sequence: Arc::new(worm::omega_sequence),
            normalize: Arc::new(worm::normalize),
            worm_of_ordinal: Arc::new(worm::worm_of_ordinal),
            is_bnf: Arc::new(worm::is_bnf),
            hyperexp: Arc::new(ordinal::hyperexp),
            hyperlog: Arc::new(ordinal::hyperlog),
        }
    }
}

impl fmt::Debug for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Subject { .. }")
    }
}

/// Runs the default suites: the `{0,1,2}`, length ≤ 5 universe at
/// `ξ ∈ {0,1,2,3}`, the 50-point ordinal grid below `φ(2,0)`, and 1000
/// exactness cases.
pub fn selftest(seed: u64) -> VerifyReport {
    let alphabet: Vec<Ordinal> = (0..3).map(Ordinal::nat).collect();
    let universe = enumerate_worms(&alphabet, 5).expect("default universe is small");
    let xis: Vec<Ordinal> = (0..4).map(Ordinal::nat).collect();
    let bound = Ordinal::veblen(&Ordinal::nat(2), &Ordinal::zero());
    verify_universe(&universe, &xis)
        .merge(verify_ordinal_grid(&bound, 50, seed))
        .merge(verify_exactness(1000, seed))
}

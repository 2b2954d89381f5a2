//! The oracle must pass on the library and fail, with a counterexample, on
//! deliberately broken implementations.

use std::sync::Arc;

use glp_core::oracle::{
    enumerate_worms, verify_exactness, verify_exactness_with, verify_ordinal_grid,
    verify_ordinal_grid_with, verify_universe, verify_universe_with, Subject, DEFAULT_SEED,
};
use glp_core::ordinal::{hyperlog, Ordinal};
use glp_core::worm::{self, omega_sequence, OmegaSeq, Worm};
use glp_core::{parse_ordinal, parse_worm};

fn small_universe() -> glp_core::oracle::Universe {
    let letters: Vec<Ordinal> = (0..3).map(Ordinal::nat).collect();
    enumerate_worms(&letters, 3).unwrap()
}

fn levels() -> Vec<Ordinal> {
    (0..3).map(Ordinal::nat).collect()
}

fn phi20() -> Ordinal {
    parse_ordinal("phi(2,0)").unwrap()
}

#[test]
fn library_passes_small_suites() {
    let report = verify_universe(&small_universe(), &levels());
    assert!(report.passed(), "{report}");
    let report = verify_ordinal_grid(&phi20(), 20, DEFAULT_SEED);
    assert!(report.passed(), "{report}");
    let report = verify_exactness(200, DEFAULT_SEED);
    assert!(report.passed(), "{report}");
}

#[test]
fn corrupted_order_type_is_caught() {
    let target = parse_worm("0.1").unwrap();
    let subject = Subject {
        o: Arc::new(move |w: &Worm| {
            let value = worm::o(w);
            if *w == target {
                value.succ()
            } else {
                value
            }
        }),
        ..Subject::default()
    };
    let report = verify_universe_with(&subject, &small_universe(), &levels());
    assert!(!report.passed());
    let failure = report.failures().next().unwrap();
    assert!(failure.counterexample.as_deref().unwrap().contains("0.1"), "{report}");
}

#[test]
fn ignoring_the_remainder_is_caught() {
    let subject = Subject {
        less_at: Arc::new(|xi: &Ordinal, below: &Worm, above: &Worm| {
            let h = |w: &Worm| worm::o(&worm::demote(xi, &worm::head(xi, w)).unwrap());
            h(below) < h(above)
        }),
        ..Subject::default()
    };
    let report = verify_universe_with(&subject, &small_universe(), &levels());
    assert!(!report.passed());
    assert!(report.failures().all(|f| f.counterexample.is_some()));
}

#[test]
fn corrupted_hyperlog_is_caught() {
    let subject = Subject {
        hyperlog: Arc::new(|xi: &Ordinal, g: &Ordinal| {
            if *xi == Ordinal::omega() {
                g.clone()
            } else {
                hyperlog(xi, g)
            }
        }),
        ..Subject::default()
    };
    let report = verify_ordinal_grid_with(&subject, &phi20(), 30, DEFAULT_SEED);
    assert!(!report.passed(), "{report}");
}

#[test]
fn truncated_sequence_is_caught() {
    let subject = Subject {
        omega_sequence: Arc::new(|w: &Worm| {
            let mut seq: OmegaSeq = omega_sequence(w);
            if seq.steps.len() > 2 {
                seq.steps.remove(1);
            }
            seq
        }),
        ..Subject::default()
    };
    let report = verify_exactness_with(&subject, 200, DEFAULT_SEED);
    assert!(!report.passed());
    assert!(report.check("three Omega routes agree").is_some_and(|c| !c.passed));
}

#[test]
fn reports_are_reproducible() {
    let a = verify_exactness(100, 42);
    let b = verify_exactness(100, 42);
    assert_eq!(a.outcomes(), b.outcomes());
    let a = verify_ordinal_grid(&phi20(), 15, 9);
    let b = verify_ordinal_grid(&phi20(), 15, 9);
    assert_eq!(a.outcomes(), b.outcomes());
}

#[test]
fn empty_universe_is_vacuous() {
    let u = enumerate_worms(&[Ordinal::zero()], 0).unwrap();
    assert_eq!(u.worms, vec![Worm::empty()]);
    assert!(verify_universe(&u, &levels()).passed());
}

#[test]
fn degenerate_grid_passes() {
    assert!(verify_ordinal_grid(&Ordinal::one(), 1, DEFAULT_SEED).passed());
}

//! Seeded samplers for ordinals below `φ(2,0)` and for worms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ordinal::Ordinal;
use crate::worm::Worm;

pub type Sampler = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> Sampler {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random ordinal below `φ(2,0)` with term nesting at most `depth`.
pub fn random_ordinal<R: Rng>(rng: &mut R, depth: u32) -> Ordinal {
    let terms = rng.gen_range(0..=3);
    (0..terms).fold(Ordinal::zero(), |acc, _| acc.add(&random_term(rng, depth)))
}

fn random_term<R: Rng>(rng: &mut R, depth: u32) -> Ordinal {
    if depth == 0 {
        return Ordinal::nat(rng.gen_range(1..=3));
    }
    match rng.gen_range(0..10) {
        0..=2 => Ordinal::nat(rng.gen_range(1..=4)),
        3..=6 => Ordinal::omega_pow(&random_ordinal(rng, depth - 1)),
        _ => Ordinal::veblen(&Ordinal::one(), &random_ordinal(rng, depth - 1)),
    }
}

/// A random ordinal below `bound` (rejection sampling; 0 if nothing is found).
pub fn random_below<R: Rng>(rng: &mut R, bound: &Ordinal, depth: u32) -> Ordinal {
    (0..64)
        .map(|_| random_ordinal(rng, depth))
        .find(|x| x < bound)
        .unwrap_or_else(Ordinal::zero)
}

/// A random worm of length at most `max_len` with modalities of nesting
/// at most `depth`.
pub fn random_worm<R: Rng>(rng: &mut R, max_len: usize, depth: u32) -> Worm {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_ordinal(rng, depth)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_stay_below_phi_2_0() {
        let bound = Ordinal::veblen(&Ordinal::nat(2), &Ordinal::zero());
        let mut rng = seeded_rng(7);
        for _ in 0..500 {
            assert!(random_ordinal(&mut rng, 3) < bound);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let a: Vec<_> = (0..20).map({
            let mut rng = seeded_rng(3);
            move |_| random_worm(&mut rng, 4, 2)
        }).collect();
        let b: Vec<_> = (0..20).map({
            let mut rng = seeded_rng(3);
            move |_| random_worm(&mut rng, 4, 2)
        }).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_bound_gives_zero() {
        let mut rng = seeded_rng(1);
        assert_eq!(random_below(&mut rng, &Ordinal::one(), 3), Ordinal::zero());
    }
}

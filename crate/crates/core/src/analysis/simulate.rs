use rand::distr::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DigitHistogram;
use crate::digit::leading_digit;

/// The two-stage experiment: `i` uniform on `1..=n`, then `j` uniform on `1..=i`.
#[derive(Clone, Copy, Debug)]
pub struct TwoDice {
    outer: Uniform<u64>,
}

impl TwoDice {
    pub fn new(n: u64) -> Self {
        assert!(n >= 1, "the upper bound n must be at least 1");
        TwoDice {
            outer: Uniform::new_inclusive(1, n).expect("1 <= n"),
        }
    }
}

impl Distribution<u64> for TwoDice {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let i = self.outer.sample(rng);
        rng.random_range(1..=i)
    }
}

/// Leading-digit histogram of `samples` seeded draws at bound `n`.
pub fn sample_histogram(n: u64, samples: usize, seed: u64) -> DigitHistogram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    TwoDice::new(n)
        .sample_iter(&mut rng)
        .take(samples)
        .map(|j| leading_digit(j).expect("draws are positive"))
        .collect()
}

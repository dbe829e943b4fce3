//! Exact rational evaluation of the law.
//!
//! Every term `count / i` is brought over the common denominator
//! `L = lcm(1, ..., n)`, so the numerator is a sum of integers `count * (L / i)`
//! and only one gcd is needed at the end.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::digit::Digit;
use crate::error::{Error, Result};
use crate::law::{runs, Run};

/// Largest `n` evaluated exactly by default.
pub const DEFAULT_EXACT_CEILING: u64 = 100_000;

/// Exact evaluator with a configurable practical limit on `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactEvaluator {
    pub ceiling: u64,
}

impl Default for ExactEvaluator {
    fn default() -> Self {
        ExactEvaluator {
            ceiling: DEFAULT_EXACT_CEILING,
        }
    }
}

impl ExactEvaluator {
    pub fn with_ceiling(ceiling: u64) -> Self {
        ExactEvaluator { ceiling }
    }

    /// `P(L_n = d)` as a reduced rational.
    pub fn prob(&self, d: Digit, n: u64) -> Result<BigRational> {
        assert!(n >= 1, "the upper bound n must be at least 1");
        if n > self.ceiling {
            return Err(Error::ExactCeiling {
                n,
                ceiling: self.ceiling,
            });
        }
        if d.as_u64() > n {
            return Ok(BigRational::zero());
        }
        let lcm = lcm_upto(n);
        let mut numer = BigUint::zero();
        for run in runs(d, n) {
            match run {
                Run::Leading { lo, hi, offset } => {
                    // sum (b - offset) * L/b = len * L - offset * sum L/b
                    let len = hi - lo + 1;
                    let partial = scaled_harmonic(&lcm, lo, hi);
                    numer += &lcm * len;
                    numer -= partial * offset;
                }
                Run::Trailing { lo, hi, repunit } => {
                    numer += scaled_harmonic(&lcm, lo, hi) * repunit;
                }
            }
        }
        let denom = lcm * n;
        Ok(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }
}

/// `P(L_n = d)` exactly, with the default ceiling.
pub fn prob_exact(d: Digit, n: u64) -> Result<BigRational> {
    ExactEvaluator::default().prob(d, n)
}

/// `sum_{i=lo..=hi} L / i`, each quotient exact because `i <= n` divides `L`.
fn scaled_harmonic(lcm: &BigUint, lo: u64, hi: u64) -> BigUint {
    let mut acc = BigUint::zero();
    for i in lo..=hi {
        acc += lcm / i;
    }
    acc
}

/// `lcm(1, 2, ..., n)` as the product of maximal prime powers `p^e <= n`.
pub(crate) fn lcm_upto(n: u64) -> BigUint {
    let limit = usize::try_from(n).expect("n fits in memory");
    let mut composite = vec![false; limit + 1];
    let mut acc = BigUint::one();
    let mut chunk: u64 = 1;
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        let mut multiple = p * p;
        while multiple <= limit {
            composite[multiple] = true;
            multiple += p;
        }
        let p = p as u64;
        let mut power = p;
        while power <= n / p {
            power *= p;
        }
        match chunk.checked_mul(power) {
            Some(c) => chunk = c,
            None => {
                acc *= chunk;
                chunk = power;
            }
        }
    }
    acc * chunk
}

//! Brute-force reference for the law: literal enumeration, no closed forms.
//!
//! Quadratic in `n`; meant for cross-checking the fast evaluators on small
//! bounds (a few thousand).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::digit::{leading_digit, Digit};

fn literal_count(d: Digit, i: u64) -> u64 {
    (1..=i)
        .filter(|&j| leading_digit(j).expect("j >= 1") == d)
        .count() as u64
}

/// `(1/n) * sum_{i=1..n} #{j <= i : lead(j) = d} / i` by direct enumeration.
pub fn prob_oracle(d: Digit, n: u64) -> BigRational {
    assert!(n >= 1, "the upper bound n must be at least 1");
    let mut sum = BigRational::zero();
    for i in 1..=n {
        let c = literal_count(d, i);
        if c > 0 {
            sum += BigRational::new(BigInt::from(c), BigInt::from(i));
        }
    }
    sum / BigInt::from(n)
}

/// `prob_oracle(d, n)` for every `n` in `1..=n_max`, sharing the running sum.
pub fn oracle_sequence(d: Digit, n_max: u64) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(n_max as usize);
    let mut sum = BigRational::zero();
    for i in 1..=n_max {
        let c = literal_count(d, i);
        if c > 0 {
            sum += BigRational::new(BigInt::from(c), BigInt::from(i));
        }
        out.push(&sum / BigInt::from(i));
    }
    out
}

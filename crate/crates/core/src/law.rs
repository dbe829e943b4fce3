//! Evaluation of `P(L_n = d)` for the bounded two-dice model.
//!
//! A first fair die picks `i` in `[1, n]`; a second die picks `j` in `[1, i]`.
//! `P(L_n = d)` is the probability that `j` starts with `d`, i.e.
//! `(1/n) * sum_{i=1..n} count_leading(d, i) / i`.
//!
//! The sum splits `[1, n]` into runs on which `count_leading(d, i)` has a
//! closed form: on `[d*10^l, (d+1)*10^l - 1]` it is `i - offset(d, l)`, on
//! `[(d+1)*10^l, d*10^(l+1) - 1]` it is the repunit `(10^(l+1) - 1)/9`.

use crate::counting::{offset, repunit};
use crate::digit::{pow10, BlockIndex, Digit};
use crate::summation::{harmonic_range, NeumaierSum};

/// Probabilities of the nine leading digits, indexed by `Digit::index`.
pub type DigitProbs = [f64; 9];

/// Which of the two closed-form branches applies at `(d, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `n < (d+1)*10^(k-1)`: `n` sits in a run of integers starting with `d`.
    InsideLeadingRun,
    /// `n >= (d+1)*10^(k-1)`: the run starting with `d` is complete.
    AfterLeadingRun,
}

/// Branch for `(d, n)`, `None` when `d > n` (the probability is zero).
pub fn branch(d: Digit, n: u64) -> Option<Branch> {
    let e = BlockIndex::of(d, n).block_exponent()?;
    let upper = (d.as_u64() + 1).checked_mul(10u64.pow(e));
    Some(match upper {
        Some(u) if n >= u => Branch::AfterLeadingRun,
        _ => Branch::InsideLeadingRun,
    })
}

/// A maximal run of integers on which the leading-digit count is a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Run {
    /// `count(i) = i - offset` for `i` in `[lo, hi]`.
    Leading { lo: u64, hi: u64, offset: u64 },
    /// `count(i) = repunit` for `i` in `[lo, hi]`.
    Trailing { lo: u64, hi: u64, repunit: u64 },
}

/// Runs covering `[d, n]` in increasing order; `[1, d-1]` contributes nothing.
pub(crate) fn runs(d: Digit, n: u64) -> Vec<Run> {
    let k = BlockIndex::of(d, n).get();
    let mut out = Vec::with_capacity(2 * k as usize);
    if k == 0 {
        return out;
    }
    let dd = d.as_u64();
    let leading = |l: u32, hi: u64| {
        let p = pow10(l).expect("block below n fits");
        Run::Leading {
            lo: dd * p,
            hi,
            offset: offset(d, l).expect("block below n fits"),
        }
    };
    let trailing = |l: u32, hi: u64| {
        let p = pow10(l).expect("block below n fits");
        Run::Trailing {
            lo: (dd + 1) * p,
            hi,
            repunit: repunit(l).expect("block below n fits"),
        }
    };

    for l in 0..k - 1 {
        let p = 10u64.pow(l);
        out.push(leading(l, (dd + 1) * p - 1));
        out.push(trailing(l, dd * p * 10 - 1));
    }
    let last = k - 1;
    match branch(d, n).expect("k >= 1") {
        Branch::InsideLeadingRun => out.push(leading(last, n)),
        Branch::AfterLeadingRun => {
            let p = 10u64.pow(last);
            out.push(leading(last, (dd + 1) * p - 1));
            out.push(trailing(last, n));
        }
    }
    out
}

/// `sum_{i=1..n} count_leading(d, i) / i` in compensated floating point.
///
/// On a leading run the terms sum to `len - offset * H`, on a trailing run to
/// `repunit * H`, with `H` the harmonic sum over the run.
pub(crate) fn weighted_count_sum(d: Digit, n: u64) -> f64 {
    let mut acc = NeumaierSum::new();
    for run in runs(d, n) {
        match run {
            Run::Leading { lo, hi, offset } => {
                acc.add((hi - lo + 1) as f64);
                acc.add(-(offset as f64) * harmonic_range(lo, hi));
            }
            Run::Trailing { lo, hi, repunit } => {
                acc.add(repunit as f64 * harmonic_range(lo, hi));
            }
        }
    }
    acc.value()
}

/// `P(L_n = d)` in double precision, `O(log n)` time.
///
/// Run sums are combined with Neumaier summation; the absolute error stays
/// near `1e-15` far beyond `n = 10^7`.
///
/// # Panics
/// If `n == 0`.
pub fn prob_float(d: Digit, n: u64) -> f64 {
    assert!(n >= 1, "the upper bound n must be at least 1");
    if d.as_u64() > n {
        return 0.0;
    }
    weighted_count_sum(d, n) / n as f64
}

/// The whole leading-digit distribution at upper bound `n`.
pub fn distribution(n: u64) -> DigitProbs {
    let mut out = [0.0; 9];
    for d in Digit::all() {
        out[d.index()] = prob_float(d, n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_leading;
    use crate::rounding::round_sig;

    fn d(v: u8) -> Digit {
        Digit::new(v).unwrap()
    }

    #[test]
    fn branches() {
        assert_eq!(branch(d(1), 20), Some(Branch::AfterLeadingRun));
        assert_eq!(branch(d(8), 86), Some(Branch::InsideLeadingRun));
        assert_eq!(branch(d(9), 5), None);
        assert_eq!(branch(d(1), 1), Some(Branch::InsideLeadingRun));
        assert_eq!(branch(d(1), 2), Some(Branch::AfterLeadingRun));
    }

    #[test]
    fn runs_tile_the_range_and_match_counts() {
        for digit in Digit::all() {
            for n in [1u64, 5, 9, 10, 19, 20, 86, 99, 100, 806, 1999, 12345] {
                let mut next = digit.as_u64();
                for run in runs(digit, n) {
                    let (lo, hi) = match run {
                        Run::Leading { lo, hi, offset } => {
                            for i in lo..=hi {
                                assert_eq!(i - offset, count_leading(digit, i));
                            }
                            (lo, hi)
                        }
                        Run::Trailing { lo, hi, repunit } => {
                            for i in lo..=hi {
                                assert_eq!(repunit, count_leading(digit, i));
                            }
                            (lo, hi)
                        }
                    };
                    assert_eq!(lo, next);
                    assert!(hi >= lo);
                    next = hi + 1;
                }
                if digit.as_u64() <= n {
                    assert_eq!(next, n + 1, "d={digit} n={n}");
                }
            }
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(round_sig(prob_float(d(1), 20), 3), 0.381);
        assert_eq!(prob_float(d(1), 1), 1.0);
        assert_eq!(round_sig(prob_float(d(1), 9), 3), 0.314);
        assert_eq!(round_sig(prob_float(d(1), 99), 3), 0.253);
        assert_eq!(prob_float(d(9), 5), 0.0);
        assert_eq!(round_sig(prob_float(d(8), 806), 2), 0.034);
        assert_eq!(round_sig(prob_float(d(8), 86), 3), 0.0323);
    }

    #[test]
    fn distribution_small_cases() {
        assert_eq!(
            distribution(1),
            [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]
        );
        assert_eq!(round_sig(distribution(9)[0], 3), 0.314);
    }

    #[test]
    fn normalization() {
        for n in 1..=10_000u64 {
            let s: f64 = distribution(n).iter().sum();
            assert!((s - 1.0).abs() <= 1e-12, "n={n} sum={s}");
        }
    }

    #[test]
    fn zero_law() {
        for digit in Digit::all() {
            for n in 1..=30u64 {
                assert_eq!(prob_float(digit, n) == 0.0, digit.as_u64() > n);
            }
        }
    }

    #[test]
    fn monotone_in_digit() {
        for n in 1..=3000u64 {
            let p = distribution(n);
            for w in p.windows(2) {
                if n >= 10 {
                    assert!(w[0] > w[1], "n={n} {p:?}");
                } else {
                    assert!(w[0] >= w[1], "n={n} {p:?}");
                }
            }
        }
    }
}

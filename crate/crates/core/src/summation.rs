use std::iter::Sum;
use std::ops::{Add, AddAssign};

/// Kahan–Babuška–Neumaier compensated accumulator.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub const fn new() -> Self {
        NeumaierSum {
            sum: 0.0,
            compensation: 0.0,
        }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl AddAssign<f64> for NeumaierSum {
    #[inline]
    fn add_assign(&mut self, rhs: f64) {
        NeumaierSum::add(self, rhs);
    }
}

impl Add<f64> for NeumaierSum {
    type Output = NeumaierSum;

    fn add(mut self, rhs: f64) -> NeumaierSum {
        self += rhs;
        self
    }
}

impl Sum<f64> for NeumaierSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        iter.fold(NeumaierSum::new(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a f64> for NeumaierSum {
    fn sum<I: Iterator<Item = &'a f64>>(iter: I) -> Self {
        iter.copied().sum()
    }
}

/// Compensated sum of a sequence of floats.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    values.into_iter().sum::<NeumaierSum>().value()
}

/// Below this index, reciprocals are summed term by term.
const DIRECT_BELOW: u64 = 64;

/// `sum_{i=lo..=hi} 1/i` in `O(1)` for large `lo`.
///
/// Uses `H(hi) - H(lo-1) = psi(hi+1) - psi(lo)` with the asymptotic series of
/// the digamma function; the logarithms are combined through `ln_1p` so the
/// result keeps full relative precision. Returns 0 for an empty range.
pub fn harmonic_range(lo: u64, hi: u64) -> f64 {
    assert!(lo >= 1, "harmonic sums start at 1");
    if hi < lo {
        return 0.0;
    }
    let mut acc = NeumaierSum::new();
    let mut start = lo;
    while start <= hi && (start < DIRECT_BELOW || hi - start < DIRECT_BELOW) {
        acc += 1.0 / start as f64;
        start += 1;
    }
    if start <= hi {
        let (a, b) = (start as f64, (hi + 1) as f64);
        acc += ((hi + 1 - start) as f64 / a).ln_1p();
        acc += digamma_tail(b) - digamma_tail(a);
    }
    acc.value()
}

/// `psi(x) - ln(x)` for `x >= 64`, accurate to well below `1e-18`.
fn digamma_tail(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    -0.5 / x - r * (1.0 / 12.0 - r * (1.0 / 120.0 - r * (1.0 / 252.0 - r / 240.0)))
}

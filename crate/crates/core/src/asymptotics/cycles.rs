use super::ScanBudget;
use crate::digit::{pow10, Digit};
use crate::error::{Error, Result};
use crate::scan::ScanState;
use crate::summation::NeumaierSum;

/// Which pseudo-cycle convention a mean is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleBlock {
    /// `[d*10^i, d*10^(i+1) - 1]`.
    Standard,
    /// `[(d+1)*10^i, (d+1)*10^(i+1) - 1]`.
    Shifted,
}

impl CycleBlock {
    pub fn bounds(self, d: Digit, i: u32) -> Result<(u64, u64)> {
        let start = match self {
            CycleBlock::Standard => d.as_u64(),
            CycleBlock::Shifted => d.as_u64() + 1,
        };
        let lo = pow10(i)
            .and_then(|p| p.checked_mul(start))
            .ok_or(Error::Overflow("cycle start"))?;
        let end = lo.checked_mul(10).ok_or(Error::Overflow("cycle end"))?;
        Ok((lo, end - 1))
    }
}

fn block_mean(d: Digit, lo: u64, hi: u64, budget: ScanBudget) -> Result<f64> {
    budget.check(hi)?;
    let mut state = ScanState::new(d, lo);
    let mut acc = NeumaierSum::new();
    acc.add(state.p());
    while state.n() < hi {
        state.advance();
        acc.add(state.p());
    }
    Ok(acc.value() / (hi - lo + 1) as f64)
}

/// Mean of `P(d, n)` over the pseudo-cycle `[d*10^i, d*10^(i+1) - 1]`.
pub fn cycle_mean(d: Digit, i: u32, budget: ScanBudget) -> Result<f64> {
    let (lo, hi) = CycleBlock::Standard.bounds(d, i)?;
    block_mean(d, lo, hi, budget)
}

/// Mean of `P(d, n)` over the shifted cycle `[(d+1)*10^i, (d+1)*10^(i+1) - 1]`.
pub fn cycle_mean_alt(d: Digit, i: u32, budget: ScanBudget) -> Result<f64> {
    let (lo, hi) = CycleBlock::Shifted.bounds(d, i)?;
    block_mean(d, lo, hi, budget)
}

//! Limits, envelopes, extrema and pseudo-cycle means of `P(d, n)`.

mod cycles;
mod envelope;
mod extrema;
mod limits;

pub use cycles::{cycle_mean, cycle_mean_alt, CycleBlock};
pub use envelope::{
    envelope, envelope_max, envelope_min, leading_run_envelope, trailing_run_envelope,
    EnvelopeParams,
};
pub use extrema::{
    est_extremum_rank, extremum_block, find_extremum_rank, ExtremumEstimate, ExtremumKind,
};
pub use limits::{alpha, benford, beta, central_limit, central_limit_alt, phi, psi};

/// Default cap on the largest rank a block scan may reach.
pub const DEFAULT_SCAN_BUDGET: u64 = 100_000_000;

/// Upper limit on the ranks a block scan may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBudget(pub u64);

impl Default for ScanBudget {
    fn default() -> Self {
        ScanBudget(DEFAULT_SCAN_BUDGET)
    }
}

impl ScanBudget {
    pub(crate) fn check(self, last_rank: u64) -> crate::Result<()> {
        if last_rank > self.0 {
            Err(crate::Error::BudgetExceeded {
                steps: last_rank,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

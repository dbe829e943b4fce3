use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::envelope::{envelope_max, envelope_min};
use super::ScanBudget;
use crate::digit::{pow10, Digit};
use crate::error::{Error, Result};
use crate::rounding::round_half_up;
use crate::scan::ScanState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    /// Local minimum on `[d*10^i, (d+1)*10^i - 1]`.
    Min,
    /// Local maximum on `[(d+1)*10^i, d*10^(i+1) - 1]`.
    Max,
}

impl FromStr for ExtremumKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "min" => Ok(ExtremumKind::Min),
            "max" => Ok(ExtremumKind::Max),
            other => Err(format!(
                "unknown extremum kind {other:?}; expected min or max"
            )),
        }
    }
}

impl fmt::Display for ExtremumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremumKind::Min => "min",
            ExtremumKind::Max => "max",
        })
    }
}

/// Estimated (and optionally searched) rank of a local extremum of `P(d, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremumEstimate {
    pub digit: Digit,
    pub block: u32,
    pub kind: ExtremumKind,
    pub est_rank: u64,
    pub exact_rank: Option<u64>,
    pub value_at_exact: Option<f64>,
}

impl ExtremumEstimate {
    /// The estimate, plus the exhaustive search result when `search` is given.
    pub fn compute(
        d: Digit,
        block: u32,
        kind: ExtremumKind,
        search: Option<ScanBudget>,
    ) -> Result<Self> {
        let est_rank = est_extremum_rank(d, block, kind)?;
        let (exact_rank, value_at_exact) = match search {
            Some(budget) => {
                let (r, v) = find_extremum_rank(d, block, kind, budget)?;
                (Some(r), Some(v))
            }
            None => (None, None),
        };
        Ok(ExtremumEstimate {
            digit: d,
            block,
            kind,
            est_rank,
            exact_rank,
            value_at_exact,
        })
    }
}

/// Inclusive rank range searched for the extremum of the given kind in block `i`.
pub fn extremum_block(d: Digit, i: u32, kind: ExtremumKind) -> Result<(u64, u64)> {
    let overflow = Error::Overflow("extremum block bounds");
    let p = pow10(i).ok_or(Error::Overflow("10^i"))?;
    let dd = d.as_u64();
    let lo_lead = dd.checked_mul(p).ok_or(overflow)?;
    let mid = (dd + 1)
        .checked_mul(p)
        .ok_or(Error::Overflow("(d+1) * 10^i"))?;
    Ok(match kind {
        ExtremumKind::Min => (lo_lead, mid - 1),
        ExtremumKind::Max => {
            let end = lo_lead
                .checked_mul(10)
                .ok_or(Error::Overflow("d * 10^(i+1)"))?;
            (mid, end - 1)
        }
    })
}

/// `round(10^i / x*)`, with `x*` the arg-extremum of the envelope piece.
pub fn est_extremum_rank(d: Digit, i: u32, kind: ExtremumKind) -> Result<u64> {
    let p = pow10(i).ok_or(Error::Overflow("10^i"))?;
    let x = match kind {
        ExtremumKind::Min => envelope_min(d).0,
        ExtremumKind::Max => envelope_max(d).0,
    };
    let rank = round_half_up(p as f64 / x);
    if rank >= u64::MAX as f64 {
        return Err(Error::Overflow("estimated extremum rank"));
    }
    Ok(rank as u64)
}

/// Exhaustive search of the block; ties go to the smallest rank.
pub fn find_extremum_rank(
    d: Digit,
    i: u32,
    kind: ExtremumKind,
    budget: ScanBudget,
) -> Result<(u64, f64)> {
    let (lo, hi) = extremum_block(d, i, kind)?;
    budget.check(hi)?;
    let mut state = ScanState::new(d, lo);
    let mut best = (lo, state.p());
    while state.n() < hi {
        state.advance();
        let p = state.p();
        let better = match kind {
            ExtremumKind::Min => p < best.1,
            ExtremumKind::Max => p > best.1,
        };
        if better {
            best = (state.n(), p);
        }
    }
    Ok(best)
}

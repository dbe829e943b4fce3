//! Streaming evaluation: `P(d, n+1)` from `P(d, n)` in `O(1)`.
//!
//! With `c` the number of integers in `[1, n+1]` starting with `d`,
//! `P(d, n+1) = P(d, n) + (c/(n+1) - P(d, n)) / (n+1)`.

use serde::{Deserialize, Serialize};

use crate::counting::{offset, repunit};
use crate::digit::{pow10, BlockIndex, Digit};
use crate::error::Result;
use crate::exact::ExactEvaluator;
use crate::law::prob_float;
use num_traits::ToPrimitive;

/// How a [`LawPoint`] value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalMode {
    ExactRational,
    Float64,
}

/// One value `P(d, n)` of the law.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LawPoint {
    pub digit: Digit,
    pub n: u64,
    pub p: f64,
    pub mode: EvalMode,
}

impl LawPoint {
    pub fn float(digit: Digit, n: u64) -> Self {
        LawPoint {
            digit,
            n,
            p: prob_float(digit, n),
            mode: EvalMode::Float64,
        }
    }

    pub fn exact(digit: Digit, n: u64, evaluator: &ExactEvaluator) -> Result<Self> {
        let q = evaluator.prob(digit, n)?;
        Ok(LawPoint {
            digit,
            n,
            p: q.to_f64().expect("probability converts to f64"),
            mode: EvalMode::ExactRational,
        })
    }
}

/// The pseudo-cycle `[d*10^e, d*10^(e+1) - 1]` and its counting constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Cycle {
    /// `(d+1) * 10^e`: first rank whose leading digit exceeds `d`.
    mid: u64,
    /// `d * 10^(e+1)`, saturated at `u64::MAX`.
    end: u64,
    offset: u64,
    repunit: u64,
}

impl Cycle {
    fn containing(d: Digit, m: u64) -> Option<Cycle> {
        let e = BlockIndex::of(d, m).block_exponent()?;
        let p = pow10(e)?;
        let dd = d.as_u64();
        Some(Cycle {
            mid: (dd + 1).saturating_mul(p),
            end: dd.saturating_mul(p).saturating_mul(10),
            offset: offset(d, e)?,
            repunit: repunit(e).unwrap_or(u64::MAX),
        })
    }

    #[inline]
    fn count(&self, m: u64) -> u64 {
        if m < self.mid {
            m - self.offset
        } else {
            self.repunit
        }
    }
}

/// State of a running scan at rank `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanState {
    digit: Digit,
    n: u64,
    p: f64,
    cycle: Option<Cycle>,
}

impl ScanState {
    /// Seed the scan at `n0` with a direct evaluation.
    pub fn new(digit: Digit, n0: u64) -> Self {
        assert!(n0 >= 1, "the upper bound n must be at least 1");
        ScanState {
            digit,
            n: n0,
            p: prob_float(digit, n0),
            cycle: Cycle::containing(digit, n0),
        }
    }

    pub fn digit(&self) -> Digit {
        self.digit
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn point(&self) -> LawPoint {
        LawPoint {
            digit: self.digit,
            n: self.n,
            p: self.p,
            mode: EvalMode::Float64,
        }
    }

    /// Leading-digit count `c` for rank `n + 1`, advancing the cached cycle.
    fn next_count(&mut self) -> u64 {
        let m = self.n + 1;
        match self.cycle {
            Some(c) if m < c.end => {}
            _ => self.cycle = Cycle::containing(self.digit, m),
        }
        self.cycle.map_or(0, |c| c.count(m))
    }

    /// Advance in place from `n` to `n + 1`.
    #[inline]
    pub fn advance(&mut self) {
        let c = self.next_count();
        let m = (self.n + 1) as f64;
        self.p += (c as f64 / m - self.p) / m;
        self.n += 1;
    }

    /// The state at `n + 1`.
    #[must_use]
    pub fn step(mut self) -> Self {
        self.advance();
        self
    }

    /// Iterator over `n0, n0 + 1, ...` starting with this state's own point.
    pub fn iter(self) -> Scan {
        Scan {
            state: self,
            started: false,
        }
    }
}

/// Infinite stream of [`LawPoint`]s produced by repeated [`ScanState::step`].
#[derive(Clone, Debug)]
pub struct Scan {
    state: ScanState,
    started: bool,
}

impl Iterator for Scan {
    type Item = LawPoint;

    fn next(&mut self) -> Option<LawPoint> {
        if self.started {
            self.state.advance();
        }
        self.started = true;
        Some(self.state.point())
    }
}

pub fn scan_init(d: Digit, n0: u64) -> ScanState {
    ScanState::new(d, n0)
}

pub fn scan_step(s: ScanState) -> ScanState {
    s.step()
}

/// `P(d, n)` for `n = 1..=n_max`, `O(n_max)` total.
pub fn scan_range(d: Digit, n_max: u64) -> Vec<LawPoint> {
    assert!(n_max >= 1, "n_max must be at least 1");
    ScanState::new(d, 1).iter().take(n_max as usize).collect()
}

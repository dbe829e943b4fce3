//! Two-piece closed-form envelope of `P(d, n)` inside a pseudo-cycle.
//!
//! With `e` the exponent of the cycle holding `n` and `x = 10^e / n`:
//! on the run of ranks starting with `d`, `P(d, n) ~ f_d(x)`; on the rest of
//! the cycle, `P(d, n) ~ g_d(x)`.

use serde::{Deserialize, Serialize};

use super::limits::{alpha, benford, beta, central_limit, central_limit_alt};
use crate::digit::{BlockIndex, Digit};
use crate::error::{Error, Result};

/// `f_d(x) = d(alpha_d - 1)x + 1 + ((9d-1)/9) x (ln x + ln d)` on `[1/(d+1), 1/d]`.
pub fn leading_run_envelope(d: Digit, x: f64) -> f64 {
    let a = alpha(d);
    let d = d.as_f64();
    d * (a - 1.0) * x + 1.0 + (9.0 * d - 1.0) / 9.0 * x * (x.ln() + d.ln())
}

/// `g_d(x) = (d+1) beta_d x - (10/9) x (ln x + ln(d+1))` on `[1/(10d), 1/(d+1)]`.
pub fn trailing_run_envelope(d: Digit, x: f64) -> f64 {
    let b = beta(d);
    let d1 = d.as_f64() + 1.0;
    d1 * b * x - 10.0 / 9.0 * x * (x.ln() + d1.ln())
}

/// Envelope value at rank `n`; `n` must be at least `d`.
pub fn envelope(d: Digit, n: u64) -> Result<f64> {
    let e = BlockIndex::of(d, n)
        .block_exponent()
        .ok_or(Error::BelowDigit { digit: d.get(), n })?;
    let p = 10u64.pow(e);
    let x = p as f64 / n as f64;
    let in_leading_run = match (d.as_u64() + 1).checked_mul(p) {
        Some(mid) => n < mid,
        None => true,
    };
    Ok(if in_leading_run {
        leading_run_envelope(d, x)
    } else {
        trailing_run_envelope(d, x)
    })
}

/// Minimiser and minimum `(x_min, m_d)` of `f_d`.
pub fn envelope_min(d: Digit) -> (f64, f64) {
    let df = d.as_f64();
    let x = 10f64.powf(-10.0 / (9.0 * (9.0 * df - 1.0)))
        * (1.0 - 1.0 / (df + 1.0)).powf(-(df + 1.0) / (9.0 * df - 1.0))
        / df;
    let m = 1.0 - (9.0 * df - 1.0) / 9.0 * x;
    (x, m)
}

/// Maximiser and maximum `(x_max, M_d)` of `g_d`.
pub fn envelope_max(d: Digit) -> (f64, f64) {
    let d1 = d.as_f64() + 1.0;
    let shrink = (1.0 - 1.0 / d1).powi(i32::from(d.get()));
    let x = 10f64.powf(1.0 / 9.0) * shrink / d1;
    let big_m = 10f64.powf(10.0 / 9.0) * shrink / (9.0 * d1);
    (x, big_m)
}

/// Per-digit asymptotic constants.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeParams {
    pub digit: Digit,
    pub alpha: f64,
    pub beta: f64,
    /// Minimum of `f_d`.
    pub m: f64,
    /// Maximum of `g_d`.
    #[serde(rename = "M")]
    pub big_m: f64,
    pub x_min: f64,
    pub x_max: f64,
    #[serde(rename = "C")]
    pub c: f64,
    #[serde(rename = "C_alt")]
    pub c_alt: f64,
    pub benford: f64,
}

impl EnvelopeParams {
    pub fn for_digit(d: Digit) -> Self {
        let (x_min, m) = envelope_min(d);
        let (x_max, big_m) = envelope_max(d);
        EnvelopeParams {
            digit: d,
            alpha: alpha(d),
            beta: beta(d),
            m,
            big_m,
            x_min,
            x_max,
            c: central_limit(d),
            c_alt: central_limit_alt(d),
            benford: benford(d),
        }
    }
}

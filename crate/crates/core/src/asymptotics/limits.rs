use std::f64::consts::LN_10;

use crate::digit::{pow10, Digit};
use crate::error::{Error, Result};

/// Limit of `P(d, d*10^k - 1)` as `k` grows.
pub fn alpha(d: Digit) -> f64 {
    let d = d.as_f64();
    (9.0 + 10.0 * LN_10 + 9.0 * (d + 1.0) * (1.0 - 1.0 / (d + 1.0)).ln()) / (81.0 * d)
}

/// Limit of `P(d, (d+1)*10^k - 1)` as `k` grows.
pub fn beta(d: Digit) -> f64 {
    let d = d.as_f64();
    10.0 * (9.0 + LN_10 + 9.0 * d * (1.0 - 1.0 / (d + 1.0)).ln()) / (81.0 * (d + 1.0))
}

/// `d * 10^n - 1`: the last rank before a run of integers starting with `d`.
pub fn phi(d: Digit, n: u32) -> Result<u64> {
    pow10(n)
        .and_then(|p| p.checked_mul(d.as_u64()))
        .map(|v| v - 1)
        .ok_or(Error::Overflow("d * 10^n - 1"))
}

/// `(d+1) * 10^n - 1`: the last rank of a run of integers starting with `d`.
pub fn psi(d: Digit, n: u32) -> Result<u64> {
    pow10(n)
        .and_then(|p| p.checked_mul(d.as_u64() + 1))
        .map(|v| v - 1)
        .ok_or(Error::Overflow("(d+1) * 10^n - 1"))
}

/// Benford's first-digit probability `log10(1 + 1/d)`.
pub fn benford(d: Digit) -> f64 {
    (1.0 + 1.0 / d.as_f64()).log10()
}

/// Limit of the mean of `P(d, n)` over `[d*10^i, d*10^(i+1) - 1]`.
pub fn central_limit(d: Digit) -> f64 {
    let a = alpha(d);
    let b = beta(d);
    let d = d.as_f64();
    let l1 = ((d + 1.0) / d).ln();
    let l2 = (10.0 * d / (d + 1.0)).ln();
    ((18.0 * d * (a - 1.0) - (9.0 * d - 1.0) * l1) * l1
        + 18.0
        + 2.0 * (9.0 * (d + 1.0) * b + 5.0 * l2) * l2)
        / (162.0 * d)
}

/// Limit of the mean of `P(d, n)` over `[(d+1)*10^i, (d+1)*10^(i+1) - 1]`.
pub fn central_limit_alt(d: Digit) -> f64 {
    let a = alpha(d);
    let b = beta(d);
    let d = d.as_f64();
    let l1 = ((d + 1.0) / d).ln();
    let l2 = (10.0 * d / (d + 1.0)).ln();
    ((90.0 * d * (a - 1.0) - 5.0 * (9.0 * d - 1.0) * l1) * l1
        + 90.0
        + (9.0 * (d + 1.0) * b + 5.0 * l2) * l2)
        / (81.0 * (d + 1.0))
}

//! Closed-form counts of integers with a given leading digit.

use num_rational::Ratio;

use crate::digit::{pow10, BlockIndex, Digit};

/// The two integer sequences every branch of the law is built from, at a
/// fixed digit `r` and magnitude `l`:
///
/// * `repunit = (10^(l+1) - 1) / 9` counts the integers in `[1, 10^(l+1) - 1]`
///   that start with `r` (1, 11, 111, ...);
/// * `offset = ((9r - 1) * 10^l - 8) / 9` so that, for `r*10^l <= i < (r+1)*10^l`,
///   exactly `i - offset` integers in `[1, i]` start with `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountingTerms {
    pub level: u32,
    pub repunit: u64,
    pub offset: u64,
}

impl CountingTerms {
    /// `None` when `10^(l+1)` overflows a `u64`.
    pub fn new(r: Digit, level: u32) -> Option<Self> {
        Some(CountingTerms {
            level,
            repunit: repunit(level)?,
            offset: offset(r, level)?,
        })
    }
}

/// `(10^(l+1) - 1) / 9`.
pub fn repunit(l: u32) -> Option<u64> {
    Some((pow10(l + 1)? - 1) / 9)
}

/// `((9r - 1) * 10^l - 8) / 9`; always an integer for `r >= 1`.
pub fn offset(r: Digit, l: u32) -> Option<u64> {
    let scaled = (9 * r.as_u64() - 1).checked_mul(pow10(l)?)?;
    Some((scaled - 8) / 9)
}

/// Number of integers in `[1, i]` whose leading digit is `d`.
pub fn count_leading(d: Digit, i: u64) -> u64 {
    let Some(e) = BlockIndex::of(d, i).block_exponent() else {
        return 0;
    };
    let p = 10u64.pow(e);
    let upper = (d.as_u64() + 1).checked_mul(p);
    match upper {
        Some(upper) if i >= upper => (p * 10 - 1) / 9,
        _ => i - offset(d, e).expect("offset fits when d*10^e does"),
    }
}

/// `P(L_n = d | D_n = i)`: the chance that a uniform draw from `[1, i]`
/// starts with `d`. Independent of `n`.
pub fn cond_prob(d: Digit, i: u64) -> Ratio<u64> {
    assert!(i >= 1, "cond_prob needs i >= 1");
    Ratio::new(count_leading(d, i), i)
}

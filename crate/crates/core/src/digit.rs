use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A leading decimal digit, always in `1..=9`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Digit(u8);

impl Digit {
    pub const ONE: Digit = Digit(1);
    pub const NINE: Digit = Digit(9);

    pub fn new(value: u8) -> Result<Self> {
        if (1..=9).contains(&value) {
            Ok(Digit(value))
        } else {
            Err(Error::InvalidDigit(value.into()))
        }
    }

    /// All nine digits in increasing order.
    pub fn all() -> impl DoubleEndedIterator<Item = Digit> + ExactSizeIterator + Clone {
        (1..=9u8).map(Digit)
    }

    #[inline]
    pub fn get(self) -> u8 {
        self.0
    }

    #[inline]
    pub(crate) fn as_u64(self) -> u64 {
        u64::from(self.0)
    }

    #[inline]
    pub(crate) fn as_f64(self) -> f64 {
        f64::from(self.0)
    }

    /// Position of this digit in a 9-slot array.
    #[inline]
    pub fn index(self) -> usize {
        usize::from(self.0 - 1)
    }
}

impl TryFrom<u8> for Digit {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Digit::new(value)
    }
}

impl TryFrom<u64> for Digit {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        u8::try_from(value)
            .map_err(|_| Error::InvalidDigit(value))
            .and_then(Digit::new)
    }
}

impl From<Digit> for u8 {
    fn from(d: Digit) -> u8 {
        d.0
    }
}

impl FromStr for Digit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: u64 = s.trim().parse().map_err(|_| Error::InvalidDigit(0))?;
        Digit::try_from(v)
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Most significant decimal digit of `j`.
pub fn leading_digit(j: u64) -> Result<Digit> {
    if j == 0 {
        return Err(Error::NoLeadingDigit);
    }
    let mut j = j;
    while j >= 10 {
        j /= 10;
    }
    Ok(Digit(j as u8))
}

/// `10^e`, or `None` when it does not fit in a `u64`.
#[inline]
pub(crate) fn pow10(e: u32) -> Option<u64> {
    10u64.checked_pow(e)
}

/// Exponent `k = min { i : d * 10^i > n }`.
///
/// `k = 0` exactly when `n < d`. Otherwise `d * 10^(k-1) <= n < d * 10^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockIndex(pub u32);

impl BlockIndex {
    pub fn of(d: Digit, n: u64) -> BlockIndex {
        let d = d.as_u64();
        let mut k = 0u32;
        let mut scaled = d;
        while scaled <= n {
            k += 1;
            match scaled.checked_mul(10) {
                Some(s) => scaled = s,
                None => break,
            }
        }
        BlockIndex(k)
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Exponent of the pseudo-cycle `[d*10^e, d*10^(e+1) - 1]` holding `n`,
    /// i.e. `k - 1`. `None` when `n < d`.
    #[inline]
    pub fn block_exponent(self) -> Option<u32> {
        self.0.checked_sub(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn digit_bounds() {
        assert!(Digit::new(0).is_err());
        assert!(Digit::new(10).is_err());
        assert_eq!(Digit::new(9).unwrap().get(), 9);
        assert!("12".parse::<Digit>().is_err());
        assert_eq!("3".parse::<Digit>().unwrap().get(), 3);
        assert_eq!(Digit::all().count(), 9);
    }

    #[test]
    fn leading_digit_examples() {
        assert_eq!(leading_digit(7).unwrap().get(), 7);
        assert_eq!(leading_digit(1999).unwrap().get(), 1);
        assert_eq!(leading_digit(1_000_000_000_005).unwrap().get(), 1);
        assert_eq!(leading_digit(u64::MAX).unwrap().get(), 1);
        assert!(matches!(leading_digit(0), Err(Error::NoLeadingDigit)));
    }

    #[test]
    fn block_index_examples() {
        let one = Digit::ONE;
        assert_eq!(BlockIndex::of(one, 20).get(), 2);
        assert_eq!(BlockIndex::of(Digit::new(8).unwrap(), 86).get(), 2);
        assert_eq!(BlockIndex::of(Digit::new(3).unwrap(), 2).get(), 0);
        assert_eq!(BlockIndex::of(one, 9).get(), 1);
        assert_eq!(BlockIndex::of(one, 10).get(), 2);
    }

    proptest! {
        #[test]
        fn leading_digit_matches_decimal_string(j in 1u64..u64::MAX) {
            let first = j.to_string().as_bytes()[0] - b'0';
            prop_assert_eq!(leading_digit(j).unwrap().get(), first);
        }

        #[test]
        fn block_index_brackets_n(d in 1u8..=9, n in 1u64..1_000_000_000_000) {
            let digit = Digit::new(d).unwrap();
            let k = BlockIndex::of(digit, n).get();
            let d = u64::from(d);
            prop_assert!(d * 10u64.pow(k) > n);
            prop_assert!(k == 0 || d * 10u64.pow(k - 1) <= n);
        }
    }
}

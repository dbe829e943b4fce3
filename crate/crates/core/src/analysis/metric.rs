use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::DigitHistogram;
use crate::error::{Error, Result};
use crate::law::DigitProbs;

/// Distance between an observed histogram and a digit distribution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// Pearson chi-square statistic.
    Chi2,
    /// Total variation distance.
    Tvd,
    /// Largest absolute frequency gap.
    MaxAbs,
}

impl Metric {
    pub const ALL: [Metric; 3] = [Metric::Chi2, Metric::Tvd, Metric::MaxAbs];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Chi2 => "chi2",
            Metric::Tvd => "tvd",
            Metric::MaxAbs => "maxabs",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Metric::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown metric {s:?}; expected chi2, tvd or maxabs"))
    }
}

pub fn model_distance(h: &DigitHistogram, p: &DigitProbs, metric: Metric) -> Result<f64> {
    if h.total == 0 {
        return Err(Error::EmptyHistogram);
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized(sum));
    }
    Ok(distance_unchecked(h, p, metric))
}

/// [`model_distance`] without the precondition checks.
pub(crate) fn distance_unchecked(h: &DigitHistogram, p: &DigitProbs, metric: Metric) -> f64 {
    let total = h.total as f64;
    let pairs = h.counts.iter().zip(p.iter());
    match metric {
        Metric::Chi2 => pairs
            .map(|(&c, &pd)| {
                let expected = total * pd;
                if pd == 0.0 {
                    if c == 0 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    let diff = c as f64 - expected;
                    diff * diff / expected
                }
            })
            .sum(),
        Metric::Tvd => {
            0.5 * pairs
                .map(|(&c, &pd)| (c as f64 / total - pd).abs())
                .sum::<f64>()
        }
        Metric::MaxAbs => pairs
            .map(|(&c, &pd)| (c as f64 / total - pd).abs())
            .fold(0.0, f64::max),
    }
}

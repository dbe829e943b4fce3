use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::metric::distance_unchecked;
use super::{model_distance, DigitHistogram, Metric};
use crate::asymptotics::benford;
use crate::digit::Digit;
use crate::error::{Error, Result};
use crate::law::{distribution, DigitProbs};
use crate::scan::ScanState;

/// Distances closer than this are reported as inconclusive.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preferred {
    Model,
    Benford,
    Inconclusive,
}

impl Preferred {
    fn decide(model: f64, benford: f64) -> Self {
        if model == benford || (model - benford).abs() <= TIE_TOLERANCE {
            Preferred::Inconclusive
        } else if model < benford {
            Preferred::Model
        } else {
            Preferred::Benford
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricPair {
    pub model: f64,
    pub benford: f64,
}

/// Fitted bounded-uniform law against Benford's law for one histogram.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub histogram: DigitHistogram,
    pub fitted_bound: u64,
    pub search_range: (u64, u64),
    pub metric: Metric,
    pub model_dist: DigitProbs,
    pub benford_dist: DigitProbs,
    pub distances: BTreeMap<Metric, MetricPair>,
    pub preferred: Preferred,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl FitReport {
    pub fn primary(&self) -> MetricPair {
        self.distances[&self.metric]
    }
}

pub fn benford_distribution() -> DigitProbs {
    let mut p = [0.0; 9];
    for d in Digit::all() {
        p[d.index()] = benford(d);
    }
    p
}

/// The bound in `[n_min, n_max]` whose law is closest to `h`; ties go to the smallest.
pub fn fit_bound(h: &DigitHistogram, n_min: u64, n_max: u64, metric: Metric) -> Result<u64> {
    if h.total == 0 {
        return Err(Error::EmptyHistogram);
    }
    if n_min == 0 || n_min > n_max {
        return Err(Error::EmptyRange {
            lo: n_min,
            hi: n_max,
        });
    }
    let mut states: Vec<ScanState> = Digit::all().map(|d| ScanState::new(d, n_min)).collect();
    let probs = |states: &[ScanState]| -> DigitProbs {
        let mut p = [0.0; 9];
        for (slot, s) in p.iter_mut().zip(states) {
            *slot = s.p();
        }
        p
    };
    let mut best = (n_min, distance_unchecked(h, &probs(&states), metric));
    for n in n_min + 1..=n_max {
        for s in states.iter_mut() {
            s.advance();
        }
        let dist = distance_unchecked(h, &probs(&states), metric);
        if dist < best.1 {
            best = (n, dist);
        }
    }
    Ok(best.0)
}

pub fn compare_report(
    h: &DigitHistogram,
    n_range: (u64, u64),
    metric: Metric,
) -> Result<FitReport> {
    let (lo, hi) = n_range;
    let fitted_bound = fit_bound(h, lo, hi, metric)?;
    let model_dist = distribution(fitted_bound);
    let benford_dist = benford_distribution();
    let mut distances = BTreeMap::new();
    for m in Metric::ALL {
        distances.insert(
            m,
            MetricPair {
                model: model_distance(h, &model_dist, m)?,
                benford: model_distance(h, &benford_dist, m)?,
            },
        );
    }
    let primary = distances[&metric];
    Ok(FitReport {
        histogram: *h,
        fitted_bound,
        search_range: n_range,
        metric,
        model_dist,
        benford_dist,
        distances,
        preferred: Preferred::decide(primary.model, primary.benford),
        notes: Vec::new(),
    })
}

//! Leading-digit histograms of real data and fitting of the bounded-uniform law.

mod fit;
mod histogram;
mod metric;
mod simulate;

pub use fit::{
    benford_distribution, compare_report, fit_bound, FitReport, MetricPair, Preferred,
    TIE_TOLERANCE,
};
pub use histogram::{ingest, parse_leading_digit, DigitHistogram, Format};
pub use metric::{model_distance, Metric};
pub use simulate::{sample_histogram, TwoDice};

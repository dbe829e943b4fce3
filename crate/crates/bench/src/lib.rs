//! Shared inputs for the criterion benchmarks.

use digitlaw::analysis::{sample_histogram, DigitHistogram};

/// Ranks used by the point-evaluation benchmarks.
pub const BOUNDS: [u64; 4] = [20, 1_999, 99_999, 123_456_789];

/// A seeded histogram drawn from the law at `n = 500`.
pub fn fixture_histogram(samples: usize) -> DigitHistogram {
    sample_histogram(500, samples, 2024)
}

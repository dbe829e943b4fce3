//! Leading-digit law of a bounded uniform experiment.
//!
//! Draw `i` uniformly from `1..=n`, then `j` uniformly from `1..=i`. This crate
//! evaluates `P(d, n)`, the probability that `j` has leading digit `d`, both
//! exactly (rational) and in floating point, studies its oscillating
//! asymptotics, and fits the law to observed leading-digit histograms.
//!
//! ```
//! use digitlaw::{prob_float, Digit};
//!
//! let p = prob_float(Digit::ONE, 20);
//! assert!((p - 0.381).abs() < 5e-4);
//! ```

pub mod analysis;
pub mod asymptotics;
mod counting;
mod digit;
mod error;
mod exact;
mod law;
mod oracle;
pub mod rounding;
mod scan;
mod summation;

pub use counting::{cond_prob, count_leading, offset, repunit, CountingTerms};
pub use digit::{leading_digit, BlockIndex, Digit};
pub use error::{Error, Result};
pub use exact::{prob_exact, ExactEvaluator, DEFAULT_EXACT_CEILING};
pub use law::{branch, distribution, prob_float, Branch, DigitProbs};
pub use oracle::{oracle_sequence, prob_oracle};
pub use scan::{scan_init, scan_range, scan_step, EvalMode, LawPoint, Scan, ScanState};
pub use summation::{compensated_sum, harmonic_range, NeumaierSum};

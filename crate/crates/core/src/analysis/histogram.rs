use std::io::{BufRead, BufReader, Read};
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::digit::Digit;
use crate::error::{Error, Result};

/// Input layout accepted by [`ingest`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// One numeral per line.
    Lines,
    /// CSV with headers disabled; the 0-based column holds the numeral.
    Csv { column: usize },
}

/// Leading-digit counts of a dataset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitHistogram {
    pub counts: [u64; 9],
    pub total: u64,
    pub skipped: u64,
}

impl DigitHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: [u64; 9]) -> Self {
        DigitHistogram {
            counts,
            total: counts.iter().sum(),
            skipped: 0,
        }
    }

    pub fn record(&mut self, d: Digit) {
        self.counts[d.index()] += 1;
        self.total += 1;
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    /// Records the leading digit of `entry`, or counts it as skipped.
    pub fn push_str(&mut self, entry: &str) {
        match parse_leading_digit(entry) {
            Some(d) => self.record(d),
            None => self.skip(),
        }
    }

    pub fn count(&self, d: Digit) -> u64 {
        self.counts[d.index()]
    }

    pub fn frequencies(&self) -> Result<[f64; 9]> {
        if self.total == 0 {
            return Err(Error::EmptyHistogram);
        }
        let t = self.total as f64;
        Ok(self.counts.map(|c| c as f64 / t))
    }
}

impl AddAssign for DigitHistogram {
    fn add_assign(&mut self, rhs: Self) {
        for (a, b) in self.counts.iter_mut().zip(rhs.counts) {
            *a += b;
        }
        self.total += rhs.total;
        self.skipped += rhs.skipped;
    }
}

impl Add for DigitHistogram {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl FromIterator<Digit> for DigitHistogram {
    fn from_iter<I: IntoIterator<Item = Digit>>(iter: I) -> Self {
        let mut h = DigitHistogram::new();
        for d in iter {
            h.record(d);
        }
        h
    }
}

/// First nonzero digit of the mantissa of a decimal numeral.
///
/// Signs are ignored and scientific notation is accepted. Zero, non-finite
/// and unparseable entries give `None`.
pub fn parse_leading_digit(entry: &str) -> Option<Digit> {
    let s = entry.trim();
    let v: f64 = s.parse().ok()?;
    if !v.is_finite() || v == 0.0 {
        return None;
    }
    let mantissa = s.split(['e', 'E']).next()?;
    mantissa
        .bytes()
        .find(|b| (b'1'..=b'9').contains(b))
        .and_then(|b| Digit::new(b - b'0').ok())
}

/// Builds a histogram from a stream. Malformed rows are skipped.
pub fn ingest<R: Read>(source: R, format: Format) -> Result<DigitHistogram> {
    let mut h = DigitHistogram::new();
    match format {
        Format::Lines => {
            for line in BufReader::new(source).lines() {
                h.push_str(&line?);
            }
        }
        Format::Csv { column } => {
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(false)
                .flexible(true)
                .trim(csv::Trim::All)
                .from_reader(source);
            let mut first = true;
            for record in reader.records() {
                let record = match record {
                    Ok(r) => r,
                    Err(e) if e.is_io_error() => return Err(e.into()),
                    Err(_) => {
                        h.skip();
                        continue;
                    }
                };
                match record.get(column) {
                    Some(field) => h.push_str(field),
                    None if first => {
                        return Err(Error::InvalidColumn {
                            column,
                            width: record.len(),
                        })
                    }
                    None => h.skip(),
                }
                first = false;
            }
        }
    }
    Ok(h)
}

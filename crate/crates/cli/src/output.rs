use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use digitlaw::analysis::FitReport;
use digitlaw::asymptotics::{EnvelopeParams, ExtremumEstimate};
use digitlaw::rounding::round_places;
use digitlaw::{Digit, EvalMode};
use serde::Serialize;

pub const DEFAULT_PRECISION: usize = 3;

/// One machine-mode record, tagged by its schema name.
#[derive(Debug, Serialize)]
#[serde(tag = "schema", rename_all = "kebab-case")]
pub enum OutputRecord {
    LawPoint(LawPointRecord),
    EnvelopePoint(EnvelopePointRecord),
    Extremum(ExtremumRecord),
    CycleMean(CycleMeanRecord),
    Limits(EnvelopeParams),
    FitReport(Box<FitReport>),
}

#[derive(Debug, Serialize)]
pub struct LawPointRecord {
    pub digit: Digit,
    pub n: u64,
    pub p: f64,
    pub mode: EvalMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    /// Set for subsequence tables: which subsequence, its term index and limit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subseq: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub term: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limit: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct EnvelopePointRecord {
    pub digit: Digit,
    pub n: u64,
    pub envelope: f64,
}

#[derive(Debug, Serialize)]
pub struct ExtremumRecord {
    #[serde(flatten)]
    pub estimate: ExtremumEstimate,
    /// Asymptotic turning value `m_d` or `M_d`.
    pub envelope_value: f64,
}

#[derive(Debug, Serialize)]
pub struct CycleMeanRecord {
    pub digit: Digit,
    pub block: u32,
    pub shifted: bool,
    pub mean: f64,
    pub limit: f64,
}

/// Where output goes and how numbers are printed.
pub struct Printer {
    out: Box<dyn Write>,
    pub machine: bool,
    pub precision: usize,
    explicit_precision: bool,
}

impl Printer {
    pub fn new(path: Option<&Path>, machine: bool, precision: Option<usize>) -> io::Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Printer {
            out,
            machine,
            precision: precision.unwrap_or(DEFAULT_PRECISION),
            explicit_precision: precision.is_some(),
        })
    }

    pub fn line(&mut self, s: &str) -> io::Result<()> {
        writeln!(self.out, "{s}")
    }

    pub fn record(&mut self, r: &OutputRecord) -> io::Result<()> {
        serde_json::to_writer(&mut self.out, r).map_err(io::Error::from)?;
        writeln!(self.out)
    }

    /// A number rounded for reading.
    pub fn num(&self, x: f64) -> String {
        human(x, self.precision)
    }

    /// A data cell: full precision unless `--precision` was given.
    pub fn cell(&self, x: f64) -> String {
        if self.explicit_precision && !self.machine {
            human(x, self.precision)
        } else {
            machine(x)
        }
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn machine(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{x:?}")
    }
}

/// `x` rounded to `places` decimals; zero prints as `0`.
pub fn human(x: f64, places: usize) -> String {
    if !x.is_finite() {
        return machine(x);
    }
    if x == 0.0 {
        return "0".into();
    }
    let r = round_places(x, places as u32);
    let s = format!("{r:.places$}");
    if r == 0.0 {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// `x` with three significant figures in scientific notation, e.g. `7.30e-2`.
pub fn scientific(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return human(x, 0);
    }
    format!("{x:.2e}")
}

/// Left-aligned first column, right-aligned rest.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let fmt_row = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (c, w))| {
                if i == 0 {
                    format!("{c:<w$}")
                } else {
                    format!("{c:>w$}")
                }
            })
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut lines = vec![fmt_row(header.to_vec())];
    lines.extend(
        rows.iter()
            .map(|r| fmt_row(r.iter().map(String::as_str).collect())),
    );
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn human_rounding() {
        assert_eq!(human(0.38143985, 3), "0.381");
        assert_eq!(human(0.0339163, 3), "0.034");
        assert_eq!(human(0.0, 3), "0");
        assert_eq!(human(0.0001, 3), "0.000");
        assert_eq!(human(-0.0001, 3), "0.000");
        assert_eq!(human(12.5, 0), "13");
        assert_eq!(human(f64::INFINITY, 3), "inf");
    }

    #[test]
    fn machine_round_trips() {
        for x in [0.1, 1.0 / 3.0, 0.38143985142824153, 1e-300, 123456789.0] {
            assert_eq!(machine(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(machine(1.0), "1.0");
    }

    #[test]
    fn scientific_notation() {
        assert_eq!(scientific(0.07298), "7.30e-2");
        assert_eq!(scientific(2.4251e-5), "2.43e-5");
    }

    #[test]
    fn aligned_table() {
        let t = table(&["d", "value"], &[vec!["1".into(), "0.301".into()]]);
        assert_eq!(t, vec!["d  value", "1  0.301"]);
    }
}

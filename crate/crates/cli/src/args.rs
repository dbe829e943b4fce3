use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use digitlaw::analysis::Metric;
use digitlaw::asymptotics::ExtremumKind;
use digitlaw::Digit;

#[derive(Debug, Parser)]
#[command(
    name = "digitlaw",
    version,
    about = "Leading-digit law of the bounded two-dice experiment"
)]
pub struct Cli {
    /// Machine-readable output: JSON lines for records, full-precision CSV for scans.
    #[arg(long, global = true)]
    pub machine: bool,

    /// Decimal places for human-readable numbers (default 3).
    #[arg(long, global = true, value_name = "DIGITS")]
    pub precision: Option<usize>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Probability that the second die starts with digit d, for upper bound n.
    Prob(ProbArgs),
    /// P(d, n) for n = 1..=N as CSV.
    Scan(ScanArgs),
    /// Per-digit limit constants, or the law along the subsequences approaching them.
    Limits(LimitsArgs),
    /// Estimated and searched ranks of local extrema.
    Extrema(ExtremaArgs),
    /// Means of P(d, n) over successive pseudo-cycles and their limit.
    Cycles(CyclesArgs),
    /// Fit the law to the leading digits of a dataset and compare with Benford's law.
    Analyze(AnalyzeArgs),
}

#[derive(Debug, Args)]
pub struct ProbArgs {
    #[arg(short, long)]
    pub digit: Digit,

    /// Upper bound n of the first die.
    #[arg(short = 'n', long = "bound", value_parser = clap::value_parser!(u64).range(1..))]
    pub bound: u64,

    /// Also compute the exact rational value.
    #[arg(long)]
    pub exact: bool,

    /// Largest n accepted by --exact.
    #[arg(long, default_value_t = digitlaw::DEFAULT_EXACT_CEILING)]
    pub ceiling: u64,

    /// Also print the envelope approximation at n.
    #[arg(long)]
    pub envelope: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// A digit 1..9 or `all`.
    #[arg(short, long)]
    pub digit: DigitSel,

    /// Last rank of the scan.
    #[arg(short = 'N', long = "n-max", value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,

    /// Add a log10(n) column.
    #[arg(long)]
    pub log10: bool,

    /// Add the envelope approximation column(s).
    #[arg(long)]
    pub envelope: bool,

    /// Also render the scan as an SVG line plot.
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Subseq {
    /// n = d*10^k - 1, approaching alpha_d.
    Phi,
    /// n = (d+1)*10^k - 1, approaching beta_d.
    Psi,
}

#[derive(Debug, Args)]
pub struct LimitsArgs {
    /// A digit, an inclusive range `a..b`, or `all`.
    #[arg(short, long, default_value = "all")]
    pub digit: DigitSel,

    /// Tabulate P(d, n) along a subsequence instead of the constants.
    #[arg(long)]
    pub subseq: Option<Subseq>,

    /// Number of subsequence terms.
    #[arg(long, default_value_t = 5, requires = "subseq")]
    pub terms: u32,
}

#[derive(Debug, Args)]
pub struct ExtremaArgs {
    /// A digit, an inclusive range `a..b`, or `all`.
    #[arg(short, long)]
    pub digit: DigitSel,

    /// Block index i, or an inclusive range `a..b`.
    #[arg(short = 'i', long)]
    pub block: IndexRange,

    #[arg(long, value_parser = parse_kind)]
    pub kind: ExtremumKind,

    /// Locate the true extremum by scanning the whole block.
    #[arg(long)]
    pub exact_search: bool,

    /// Largest rank a search may reach.
    #[arg(long, default_value_t = digitlaw::asymptotics::DEFAULT_SCAN_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct CyclesArgs {
    /// A digit, an inclusive range `a..b`, or `all`.
    #[arg(short, long)]
    pub digit: DigitSel,

    /// Last cycle index.
    #[arg(short = 'I', long = "i-max")]
    pub i_max: u32,

    /// Use the shifted cycles [(d+1)10^i, (d+1)10^(i+1) - 1].
    #[arg(long)]
    pub alt: bool,

    /// Largest rank a cycle scan may reach.
    #[arg(long, default_value_t = digitlaw::asymptotics::DEFAULT_SCAN_BUDGET)]
    pub budget: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Lines,
    Csv,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("bound").required(true).args(["n", "fit"])))]
pub struct AnalyzeArgs {
    /// Input file, or `-` for stdin.
    pub input: PathBuf,

    #[arg(long, value_enum, default_value_t = InputFormat::Lines)]
    pub format: InputFormat,

    /// 0-based CSV column holding the values.
    #[arg(long, default_value_t = 0)]
    pub column: usize,

    /// Known upper bound; non-integers are floored.
    #[arg(long)]
    pub n: Option<f64>,

    /// Search range `min..max` for the best-fitting bound.
    #[arg(long)]
    pub fit: Option<IndexRange>,

    #[arg(long, value_parser = parse_metric, default_value = "chi2")]
    pub metric: Metric,
}

fn parse_kind(s: &str) -> Result<ExtremumKind, String> {
    s.parse()
}

fn parse_metric(s: &str) -> Result<Metric, String> {
    s.parse()
}

/// Inclusive range of integers written `a..b`, or a single integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexRange {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for IndexRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid integer {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(IndexRange { lo, hi })
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// One digit, a range of digits, or all nine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DigitSel {
    lo: Digit,
    hi: Digit,
}

impl DigitSel {
    pub fn digits(self) -> impl Iterator<Item = Digit> {
        Digit::all().filter(move |d| (self.lo..=self.hi).contains(d))
    }
}

impl FromStr for DigitSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(DigitSel {
                lo: Digit::ONE,
                hi: Digit::NINE,
            });
        }
        let r: IndexRange = s.parse()?;
        let digit = |v: u64| Digit::try_from(v).map_err(|e| e.to_string());
        Ok(DigitSel {
            lo: digit(r.lo)?,
            hi: digit(r.hi)?,
        })
    }
}

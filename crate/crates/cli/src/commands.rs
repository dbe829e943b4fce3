use std::fs::{self, File};
use std::io::{self, Read};

use digitlaw::analysis::{compare_report, ingest, FitReport, Format, Metric};
use digitlaw::asymptotics::{
    alpha, beta, central_limit, central_limit_alt, cycle_mean, cycle_mean_alt, envelope,
    envelope_max, envelope_min, phi, psi, EnvelopeParams, ExtremumEstimate, ExtremumKind,
    ScanBudget,
};
use digitlaw::{prob_float, Digit, EvalMode, ExactEvaluator, ScanState};
use num_traits::ToPrimitive;

use crate::args::{
    AnalyzeArgs, CyclesArgs, ExtremaArgs, InputFormat, LimitsArgs, ProbArgs, ScanArgs, Subseq,
};
use crate::error::CliError;
use crate::output::{
    scientific, table, CycleMeanRecord, EnvelopePointRecord, ExtremumRecord, LawPointRecord,
    OutputRecord, Printer,
};
use crate::svg::{line_plot, Series};

type Result<T> = std::result::Result<T, CliError>;

pub fn prob(args: &ProbArgs, out: &mut Printer) -> Result<()> {
    let d = args.digit;
    let n = args.bound;
    let (p, mode, exact) = if args.exact {
        let q = ExactEvaluator::with_ceiling(args.ceiling).prob(d, n)?;
        let p = q.to_f64().expect("probability converts to f64");
        (p, EvalMode::ExactRational, Some(q.to_string()))
    } else {
        (prob_float(d, n), EvalMode::Float64, None)
    };
    let env = if args.envelope {
        Some(envelope(d, n)?)
    } else {
        None
    };
    if out.machine {
        out.record(&OutputRecord::LawPoint(LawPointRecord {
            digit: d,
            n,
            p,
            mode,
            exact,
            subseq: None,
            term: None,
            limit: None,
        }))?;
        if let Some(e) = env {
            out.record(&OutputRecord::EnvelopePoint(EnvelopePointRecord {
                digit: d,
                n,
                envelope: e,
            }))?;
        }
    } else {
        out.line(&format!("P(d={d}, n={n}) = {}", out.num(p)))?;
        if let Some(q) = exact {
            out.line(&format!("exact = {q}"))?;
        }
        if let Some(e) = env {
            out.line(&format!("envelope = {}", out.num(e)))?;
        }
    }
    Ok(())
}

pub fn scan(args: &ScanArgs, out: &mut Printer) -> Result<()> {
    let digits: Vec<Digit> = args.digit.digits().collect();
    let single = digits.len() == 1;
    let mut header = vec!["n".to_string()];
    if args.log10 {
        header.push("log10_n".into());
    }
    let col = |prefix: &str, d: &Digit| {
        if single {
            prefix.to_string()
        } else {
            format!("{prefix}{d}")
        }
    };
    header.extend(digits.iter().map(|d| col("p", d)));
    if args.envelope {
        header.extend(digits.iter().map(|d| col("envelope", d)));
    }
    out.line(&header.join(","))?;

    let mut states: Vec<ScanState> = digits.iter().map(|&d| ScanState::new(d, 1)).collect();
    let mut plot: Vec<Series> = digits
        .iter()
        .map(|d| Series {
            label: format!("d={d}"),
            points: Vec::new(),
        })
        .collect();
    for n in 1..=args.n_max {
        if n > 1 {
            states.iter_mut().for_each(ScanState::advance);
        }
        let abscissa = if args.log10 {
            (n as f64).log10()
        } else {
            n as f64
        };
        let mut row = vec![n.to_string()];
        if args.log10 {
            row.push(out.cell(abscissa));
        }
        for s in &states {
            row.push(out.cell(s.p()));
        }
        if args.envelope {
            for s in &states {
                row.push(
                    envelope(s.digit(), n)
                        .map(|e| out.cell(e))
                        .unwrap_or_default(),
                );
            }
        }
        out.line(&row.join(","))?;
        if args.svg.is_some() {
            for (series, s) in plot.iter_mut().zip(&states) {
                series.points.push((abscissa, s.p()));
            }
        }
    }
    if let Some(path) = &args.svg {
        let x_label = if args.log10 { "log10(n)" } else { "n" };
        fs::write(path, line_plot(&plot, x_label, "P(d, n)"))?;
    }
    Ok(())
}

pub fn limits(args: &LimitsArgs, out: &mut Printer) -> Result<()> {
    match args.subseq {
        Some(which) => subsequence(args, which, out),
        None => constants(args, out),
    }
}

fn constants(args: &LimitsArgs, out: &mut Printer) -> Result<()> {
    let params: Vec<EnvelopeParams> = args.digit.digits().map(EnvelopeParams::for_digit).collect();
    if out.machine {
        for p in params {
            out.record(&OutputRecord::Limits(p))?;
        }
        return Ok(());
    }
    let rows: Vec<Vec<String>> = params
        .iter()
        .map(|p| {
            let mut row = vec![p.digit.to_string()];
            row.extend(
                [p.alpha, p.beta, p.m, p.big_m, p.c, p.c_alt, p.benford].map(|v| out.num(v)),
            );
            row
        })
        .collect();
    let header = ["d", "alpha", "beta", "m", "M", "C", "C_alt", "benford"];
    for line in table(&header, &rows) {
        out.line(&line)?;
    }
    Ok(())
}

fn subsequence(args: &LimitsArgs, which: Subseq, out: &mut Printer) -> Result<()> {
    let (name, limit_name) = match which {
        Subseq::Phi => ("phi", "alpha"),
        Subseq::Psi => ("psi", "beta"),
    };
    let mut rows = Vec::new();
    for d in args.digit.digits() {
        let limit = match which {
            Subseq::Phi => alpha(d),
            Subseq::Psi => beta(d),
        };
        for k in 1..=args.terms {
            let n = match which {
                Subseq::Phi => phi(d, k)?,
                Subseq::Psi => psi(d, k)?,
            };
            let p = prob_float(d, n);
            if out.machine {
                out.record(&OutputRecord::LawPoint(LawPointRecord {
                    digit: d,
                    n,
                    p,
                    mode: EvalMode::Float64,
                    exact: None,
                    subseq: Some(name),
                    term: Some(k),
                    limit: Some(limit),
                }))?;
            } else {
                rows.push(vec![
                    d.to_string(),
                    k.to_string(),
                    n.to_string(),
                    out.num(p),
                    out.num(limit),
                    scientific(p - limit),
                ]);
            }
        }
    }
    if !out.machine {
        let header = ["d", "k", name, "P", limit_name, "P - limit"];
        for line in table(&header, &rows) {
            out.line(&line)?;
        }
    }
    Ok(())
}

pub fn extrema(args: &ExtremaArgs, out: &mut Printer) -> Result<()> {
    if args.block.lo == 0 {
        return Err(CliError::Usage("block index must be at least 1".into()));
    }
    let block_hi = u32::try_from(args.block.hi)
        .map_err(|_| CliError::Usage(format!("block index {} is too large", args.block.hi)))?;
    let search = args.exact_search.then_some(ScanBudget(args.budget));
    let mut rows = Vec::new();
    for d in args.digit.digits() {
        let envelope_value = match args.kind {
            ExtremumKind::Min => envelope_min(d).1,
            ExtremumKind::Max => envelope_max(d).1,
        };
        for i in args.block.lo as u32..=block_hi {
            let estimate = ExtremumEstimate::compute(d, i, args.kind, search)?;
            if out.machine {
                out.record(&OutputRecord::Extremum(ExtremumRecord {
                    estimate,
                    envelope_value,
                }))?;
            } else {
                let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
                rows.push(vec![
                    d.to_string(),
                    i.to_string(),
                    estimate.est_rank.to_string(),
                    opt(estimate.exact_rank.map(|r| r.to_string())),
                    out.num(envelope_value),
                    opt(estimate.value_at_exact.map(|v| out.num(v))),
                ]);
            }
        }
    }
    if !out.machine {
        let turning = match args.kind {
            ExtremumKind::Min => "m_d",
            ExtremumKind::Max => "M_d",
        };
        let header = ["d", "i", "est_rank", "exact_rank", turning, "P(exact)"];
        for line in table(&header, &rows) {
            out.line(&line)?;
        }
    }
    Ok(())
}

pub fn cycles(args: &CyclesArgs, out: &mut Printer) -> Result<()> {
    let budget = ScanBudget(args.budget);
    let mut rows = Vec::new();
    for d in args.digit.digits() {
        let limit = if args.alt {
            central_limit_alt(d)
        } else {
            central_limit(d)
        };
        for i in 0..=args.i_max {
            let mean = if args.alt {
                cycle_mean_alt(d, i, budget)?
            } else {
                cycle_mean(d, i, budget)?
            };
            if out.machine {
                out.record(&OutputRecord::CycleMean(CycleMeanRecord {
                    digit: d,
                    block: i,
                    shifted: args.alt,
                    mean,
                    limit,
                }))?;
            } else {
                rows.push(vec![
                    d.to_string(),
                    i.to_string(),
                    out.num(mean),
                    out.num(limit),
                ]);
            }
        }
    }
    if !out.machine {
        let header = ["d", "i", "mean", if args.alt { "C_alt" } else { "C" }];
        for line in table(&header, &rows) {
            out.line(&line)?;
        }
    }
    Ok(())
}

pub fn analyze(args: &AnalyzeArgs, out: &mut Printer) -> Result<()> {
    let format = match args.format {
        InputFormat::Lines => Format::Lines,
        InputFormat::Csv => Format::Csv {
            column: args.column,
        },
    };
    let source: Box<dyn Read> = if args.input.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        let file = File::open(&args.input)
            .map_err(|e| CliError::Runtime(format!("{}: {e}", args.input.display())))?;
        Box::new(file)
    };
    let histogram = ingest(source, format)?;

    let mut notes = Vec::new();
    let range = match (args.n, args.fit) {
        (Some(x), _) => {
            if !x.is_finite() || x < 1.0 || x >= u64::MAX as f64 {
                return Err(CliError::Usage(format!(
                    "bound must be at least 1, got {x}"
                )));
            }
            let n = x.floor() as u64;
            if n as f64 != x {
                notes.push(format!("non-integer bound {x} floored to {n}"));
            }
            (n, n)
        }
        (None, Some(r)) => (r.lo.max(1), r.hi),
        (None, None) => unreachable!("clap requires --n or --fit"),
    };
    let mut report = compare_report(&histogram, range, args.metric)?;
    report.notes.extend(notes);

    if out.machine {
        out.record(&OutputRecord::FitReport(Box::new(report)))?;
    } else {
        print_report(&report, out)?;
    }
    Ok(())
}

fn print_report(r: &FitReport, out: &mut Printer) -> Result<()> {
    let h = &r.histogram;
    out.line(&format!("values {} (skipped {})", h.total, h.skipped))?;
    let freqs = h.frequencies()?;
    let rows: Vec<Vec<String>> = Digit::all()
        .map(|d| {
            let k = d.index();
            vec![
                d.to_string(),
                h.counts[k].to_string(),
                out.num(freqs[k]),
                out.num(r.model_dist[k]),
                out.num(r.benford_dist[k]),
            ]
        })
        .collect();
    for line in table(&["d", "count", "freq", "model", "benford"], &rows) {
        out.line(&line)?;
    }
    let (lo, hi) = r.search_range;
    let searched = if lo == hi {
        "fixed".to_string()
    } else {
        format!("searched {lo}..{hi}")
    };
    out.line(&format!("fitted bound {} ({searched})", r.fitted_bound))?;
    let rows: Vec<Vec<String>> = Metric::ALL
        .iter()
        .map(|m| {
            let pair = r.distances[m];
            vec![m.to_string(), out.num(pair.model), out.num(pair.benford)]
        })
        .collect();
    for line in table(&["metric", "model", "benford"], &rows) {
        out.line(&line)?;
    }
    let verdict = serde_json::to_value(r.preferred)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default();
    out.line(&format!("preferred {verdict} (under {})", r.metric))?;
    for note in &r.notes {
        out.line(&format!("note: {note}"))?;
    }
    Ok(())
}

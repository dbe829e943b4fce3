//! Acceptance suite: one PASS/FAIL line per criterion, failed checks listed below it.
//!
//! Run with `cargo test -p digitlaw --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use digitlaw::analysis::{fit_bound, model_distance, sample_histogram, DigitHistogram, Metric};
use digitlaw::asymptotics::{
    alpha, beta, central_limit, central_limit_alt, cycle_mean, envelope_max, envelope_min,
    est_extremum_rank, find_extremum_rank, leading_run_envelope, phi, psi, trailing_run_envelope,
    ExtremumKind, ScanBudget,
};
use digitlaw::rounding::{round_places, round_sig};
use digitlaw::{
    distribution, oracle_sequence, prob_exact, prob_float, scan_range, Digit, ScanState,
};
use num_traits::ToPrimitive;

type Criterion = (&'static str, fn(&mut Report));

/// Failed checks of one criterion.
#[derive(Default)]
struct Report {
    failures: Vec<String>,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn within(&mut self, label: &str, elapsed: Duration, limit: Duration) {
        self.check(elapsed <= limit, || {
            format!("{label} took {elapsed:.2?}, limit {limit:.2?}")
        });
    }
}

fn d(v: u8) -> Digit {
    Digit::new(v).unwrap()
}

fn thousandth(x: f64) -> f64 {
    round_places(x, 3)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn spot_values(r: &mut Report) {
    let ms = Duration::from_millis(1);
    for (digit, n, want) in [(1u8, 20u64, 0.381), (8, 86, 0.034)] {
        let digit = d(digit);
        let (p, t_float) = timed(|| prob_float(digit, n));
        let (q, t_exact) = timed(|| prob_exact(digit, n).unwrap());
        let q = q.to_f64().unwrap();
        r.check(thousandth(p) == want, || {
            format!(
                "P({digit},{n}) = {p:.6} rounds to {:.3}, expected {want:.3}",
                thousandth(p)
            )
        });
        r.check((p - q).abs() <= 1e-12, || {
            format!("P({digit},{n}): float {p} vs exact {q}")
        });
        r.within(&format!("float P({digit},{n})"), t_float, ms);
        r.within(&format!("exact P({digit},{n})"), t_exact, ms);
    }
}

fn subsequences_of_digit_one(r: &mut Report) {
    let phi_table = [
        (0.314, 7.30e-2),
        (0.253, 1.12e-2),
        (0.243, 1.55e-3),
        (0.242, 1.99e-4),
        (0.241, 2.43e-5),
    ];
    let psi_table = [
        (0.373, 6.00e-2),
        (0.321, 7.93e-3),
        (0.314, 1.01e-3),
        (0.313, 1.23e-4),
        (0.313, 1.45e-5),
    ];
    let (values, elapsed) = timed(|| {
        let mut s = ScanState::new(Digit::ONE, 1);
        let mut out = Vec::with_capacity(200_000);
        out.push(s.p());
        while s.n() < 200_000 {
            s.advance();
            out.push(s.p());
        }
        out
    });
    r.within("scan to 2e5", elapsed, Duration::from_secs(1));
    let at = |n: u64| values[n as usize - 1];
    for (name, limit, table) in [
        ("phi", alpha(d(1)), phi_table),
        ("psi", beta(d(1)), psi_table),
    ] {
        for (k, &(p_want, delta_want)) in (1..=5u32).zip(table.iter()) {
            let n = if name == "phi" {
                phi(d(1), k)
            } else {
                psi(d(1), k)
            }
            .unwrap();
            let p = at(n);
            r.check(round_sig(p, 3) == p_want, || {
                format!("P(1,{name}({k})) = {p:.6}, table {p_want}")
            });
            let delta = p - limit;
            r.check(round_sig(delta, 1) == round_sig(delta_want, 1), || {
                format!("P(1,{name}({k})) - limit = {delta:.3e}, table {delta_want:.2e}")
            });
        }
    }
}

fn limit_columns(r: &mut Report) {
    let alpha_col = [
        0.241, 0.130, 0.089, 0.068, 0.055, 0.046, 0.040, 0.035, 0.031,
    ];
    let beta_col = [
        0.313, 0.165, 0.109, 0.081, 0.064, 0.053, 0.045, 0.039, 0.034,
    ];
    let (_, elapsed) = timed(|| {
        for (digit, (a, b)) in Digit::all().zip(alpha_col.iter().zip(beta_col)) {
            let (ga, gb) = (thousandth(alpha(digit)), thousandth(beta(digit)));
            r.check(ga == *a, || format!("alpha_{digit} = {ga}, table {a}"));
            r.check(gb == b, || format!("beta_{digit} = {gb}, table {b}"));
        }
    });
    r.within("closed forms", elapsed, Duration::from_millis(1));
}

fn extrema_of_digit_one(r: &mut Report) {
    let minima = [
        (12, 11, 0.300),
        (116, 116, 0.242),
        (1158, 1158, 0.234),
        (11578, 11579, 0.232),
    ];
    let maxima = [
        (31, 27, 0.402),
        (310, 304, 0.364),
        (3097, 3090, 0.359),
        (30971, 30963, 0.359),
    ];
    let (_, elapsed) = timed(|| {
        for (kind, table) in [(ExtremumKind::Min, minima), (ExtremumKind::Max, maxima)] {
            for (i, &(est, exact, value)) in (1..=4).zip(table.iter()) {
                let got_est = est_extremum_rank(d(1), i, kind).unwrap();
                let (rank, v) = find_extremum_rank(d(1), i, kind, ScanBudget::default()).unwrap();
                r.check(got_est == est, || {
                    format!("{kind} i={i}: estimate {got_est}, table {est}")
                });
                r.check(rank == exact, || {
                    format!("{kind} i={i}: rank {rank}, table {exact}")
                });
                r.check(thousandth(v) == value, || {
                    format!("{kind} i={i}: value {v:.6}, table {value}")
                });
            }
        }
    });
    r.within("extrema search", elapsed, Duration::from_secs(5));
}

fn extrema_sample_block_four(r: &mut Report) {
    let two = d(2);
    let (_, elapsed) = timed(|| {
        for (kind, est, exact, turning) in [
            (ExtremumKind::Min, 21643, 21642, 0.127),
            (ExtremumKind::Max, 52263, 52258, 0.213),
        ] {
            let got_est = est_extremum_rank(two, 4, kind).unwrap();
            let (rank, _) = find_extremum_rank(two, 4, kind, ScanBudget::default()).unwrap();
            let value = match kind {
                ExtremumKind::Min => envelope_min(two).1,
                ExtremumKind::Max => envelope_max(two).1,
            };
            r.check(got_est == est, || {
                format!("{kind}: estimate {got_est}, table {est}")
            });
            r.check(rank == exact, || {
                format!("{kind}: rank {rank}, table {exact}")
            });
            r.check(thousandth(value) == turning, || {
                format!("{kind}: turning value {value:.6}, table {turning}")
            });
        }
    });
    r.within("block search", elapsed, Duration::from_secs(10));
}

fn cycle_limits(r: &mut Report) {
    let c_col = [
        0.301, 0.191, 0.139, 0.109, 0.090, 0.077, 0.067, 0.059, 0.053,
    ];
    let c_alt_col = [
        0.281, 0.160, 0.113, 0.088, 0.072, 0.061, 0.053, 0.047, 0.042,
    ];
    let (_, elapsed) = timed(|| {
        for (digit, (c, c_alt)) in Digit::all().zip(c_col.iter().zip(c_alt_col)) {
            let (gc, ga) = (
                thousandth(central_limit(digit)),
                thousandth(central_limit_alt(digit)),
            );
            r.check(gc == *c, || format!("C_{digit} = {gc:.3}, table {c:.3}"));
            r.check(ga == c_alt, || {
                format!("C~_{digit} = {ga:.3}, table {c_alt:.3}")
            });
        }
        let b = ScanBudget::default();
        for (digit, i, want) in [(2u8, 0u32, 0.197), (5, 1, 0.074), (9, 2, 0.043)] {
            let mean = cycle_mean(d(digit), i, b).unwrap();
            r.check(thousandth(mean) == want, || {
                format!("C_({digit},{i}) = {mean:.6}, expected {want}")
            });
        }
    });
    r.within("limits and cycle means", elapsed, Duration::from_secs(5));
}

fn property_suite(r: &mut Report) {
    let (_, elapsed) = timed(|| {
        for n in 1..=10_000u64 {
            let total: f64 = distribution(n).iter().sum();
            r.check((total - 1.0).abs() <= 1e-12, || {
                format!("sum at n={n} is {total}")
            });
        }

        for digit in Digit::all() {
            for (k, q) in oracle_sequence(digit, 2000).iter().enumerate() {
                let n = k as u64 + 1;
                let p = prob_exact(digit, n).unwrap();
                r.check(&p == q, || {
                    format!("exact P({digit},{n}) differs from the oracle")
                });
            }
        }

        for digit in Digit::all() {
            let mut s = ScanState::new(digit, 1);
            let mut worst = 0.0f64;
            while s.n() < 100_000 {
                s.advance();
                worst = worst.max((s.p() - prob_float(digit, s.n())).abs());
            }
            r.check(worst <= 1e-10, || {
                format!("drift for d={digit} is {worst:.3e}")
            });
        }

        let mut states: Vec<ScanState> = Digit::all().map(|x| ScanState::new(x, 10)).collect();
        let mut first_violation = None;
        loop {
            if first_violation.is_none() && !states.windows(2).all(|w| w[0].p() > w[1].p()) {
                first_violation = Some(states[0].n());
            }
            if states[0].n() == 100_000 {
                break;
            }
            states.iter_mut().for_each(ScanState::advance);
        }
        r.check(first_violation.is_none(), || {
            format!(
                "digit order violated at n={}",
                first_violation.unwrap_or_default()
            )
        });

        for digit in Digit::all() {
            let x = digit.get() as f64;
            let (a, b) = (alpha(digit), beta(digit));
            let identities = [
                leading_run_envelope(digit, 1.0 / x) - a,
                leading_run_envelope(digit, 1.0 / (x + 1.0)) - b,
                trailing_run_envelope(digit, 1.0 / (x + 1.0)) - b,
                trailing_run_envelope(digit, 1.0 / (10.0 * x)) - a,
            ];
            r.check(identities.iter().all(|e| e.abs() <= 1e-12), || {
                format!("boundary identities for d={digit}: {identities:?}")
            });
            let slope = |f: &dyn Fn(f64) -> f64, x: f64| {
                let h = 1e-6 * x;
                (f(x + h) - f(x - h)) / (2.0 * h)
            };
            let fmin = slope(&|t| leading_run_envelope(digit, t), envelope_min(digit).0);
            let gmax = slope(&|t| trailing_run_envelope(digit, t), envelope_max(digit).0);
            r.check(fmin.abs() <= 1e-8 && gmax.abs() <= 1e-8, || {
                format!("stationarity for d={digit}: f' = {fmin:.3e}, g' = {gmax:.3e}")
            });
        }
    });
    r.within("property suite", elapsed, Duration::from_secs(60));
}

fn analysis_self_consistency(r: &mut Report) {
    let (_, elapsed) = timed(|| {
        for n in [20u64, 86, 500, 1999] {
            let p = distribution(n);
            let h = DigitHistogram::from_counts(p.map(|x| (x * 1e12).round() as u64));
            let fitted = fit_bound(&h, 2, 2000, Metric::Tvd).unwrap();
            let dist = model_distance(&h, &distribution(fitted), Metric::Tvd).unwrap();
            r.check(fitted == n, || {
                format!("exact histogram for n={n} fitted {fitted}")
            });
            r.check(dist < 1e-11, || format!("distance at n={n} is {dist:.3e}"));
        }
        let hits = (0..100)
            .filter(|&seed| {
                let h = sample_histogram(500, 10_000, seed);
                (400..=620).contains(&fit_bound(&h, 2, 2000, Metric::Chi2).unwrap())
            })
            .count();
        r.check(hits >= 90, || {
            format!("{hits}/100 simulated fits in [400, 620]")
        });
    });
    r.within("analysis", elapsed, Duration::from_secs(30));
}

fn figure_data(r: &mut Report) {
    for (n_max, digits) in [
        (1200u64, vec![d(1)]),
        (32_000, vec![d(1)]),
        (1200, Digit::all().collect()),
    ] {
        for digit in digits {
            let pts = scan_range(digit, n_max);
            r.check(pts.len() as u64 == n_max, || {
                format!("d={digit}: {} rows", pts.len())
            });
            let xs: Vec<f64> = pts.iter().map(|p| (p.n as f64).log10()).collect();
            r.check(xs.windows(2).all(|w| w[0] < w[1]), || {
                format!("d={digit}: abscissa not increasing")
            });
            r.check(pts.iter().all(|p| (0.0..=1.0).contains(&p.p)), || {
                format!("d={digit}: value outside [0, 1]")
            });
        }
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("spot values P(1,20) and P(8,86)", spot_values),
        (
            "subsequence values for d=1 and deltas to alpha_1, beta_1",
            subsequences_of_digit_one,
        ),
        ("alpha_d and beta_d columns", limit_columns),
        (
            "extrema ranks and values for d=1, i=1..4",
            extrema_of_digit_one,
        ),
        ("extrema sample d=2, i=4", extrema_sample_block_four),
        ("C_d, C~_d columns and empirical cycle means", cycle_limits),
        ("property suite", property_suite),
        ("analysis self-consistency", analysis_self_consistency),
        ("figure data shape", figure_data),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let mut report = Report::default();
        let (_, elapsed) = timed(|| run(&mut report));
        let status = if report.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("{status}  {name}  ({elapsed:.2?})");
        for f in &report.failures {
            println!("      - {f}");
        }
        failed += usize::from(!report.failures.is_empty());
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

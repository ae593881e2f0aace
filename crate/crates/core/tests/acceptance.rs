//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the
//! numbers behind the verdict.
//!
//! Criteria listed in `EXPECTED_FAILURES` are known to be unattainable as
//! stated; they still run in full and print `FAIL`. The process exits
//! non-zero on any other failure, and also if an expected failure starts
//! passing.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use hartogs::analysis::{
    ball_coefficient, ball_estimate_ratio, ball_integral_series, disk_estimate_ratio, disk_integral_series,
    reproduce_check, Monomial, MonteCarlo,
};
use hartogs::combinatorics::{
    count_f, count_h, g_polynomial, g_polynomial_n2_closed, g_total, IntPolynomial,
};
use hartogs::domain::{pair, sample_uniform, DomainParams, Point, UniformSampler};
use hartogs::kernel::{
    bell_sides, kernel_closed, kernel_k1_closed, kernel_n2_closed, kernel_series, min_lattice_q,
    normalizing_constant, IndexPair, DEFAULT_SERIES_TRUNCATION,
};
use hartogs::regularity::{
    critical_interval, divergence_exponent, divergence_threshold, schur_epsilon_range, schur_grid, schur_ratio,
    schur_to_interval, test_function, truncated_lp_norm, SchurOutcome,
};
use hartogs::special::gamma;
use hartogs::{Complex64, Rational64};
use num_bigint::BigUint;

const SEED: u64 = 42;

/// Criteria that fail for reasons recorded in the project notes.
const EXPECTED_FAILURES: &[u32] = &[12];

/// Regression values recorded from the reference run (seed 42); later runs
/// must stay within 20 %. `(1, 2)` has no finite cells and no recorded sup.
const DISK_RATIO_SUP: f64 = 14.308205;
const BALL_RATIO_SUP: f64 = 12.337006;
const BALL_RATIO_INF: f64 = 11.616414;
const SCHUR_SUPS: [((u32, usize), f64); 4] = [((1, 1), 17.710074), ((1, 2), f64::NAN), ((2, 1), 59.396369), ((2, 2), 131.403265)];
const REGRESSION_TOLERANCE: f64 = 0.2;

struct Verdict {
    passed: bool,
    detail: String,
}

impl Verdict {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
        }
    }
}

fn params(n: usize, k: u32) -> DomainParams {
    DomainParams::new(n, k).unwrap()
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

fn within_regression(value: f64, pinned: f64) -> bool {
    pinned.is_finite() && (value / pinned - 1.0).abs() <= REGRESSION_TOLERANCE
}

fn ones(k: u32) -> IntPolynomial {
    IntPolynomial::from_u64(&vec![1; k as usize])
}

fn counting_lemmas() -> Verdict {
    let mut worst = String::new();
    let mut ok = true;
    for k in 1..=8u32 {
        let mut brute_f = vec![0u64; 2 * k as usize];
        let mut brute_h = vec![0u64; 3 * k as usize];
        for a in 0..k {
            for b in 0..k {
                brute_f[(a + b) as usize] += 1;
                for c in 0..k {
                    brute_h[(a + b + c) as usize] += 1;
                }
            }
        }
        for l in 0..3 * k as u64 {
            let bf = brute_f.get(l as usize).copied().unwrap_or(0);
            let bh = brute_h[l as usize];
            if count_f(l, k) != bf || count_h(l, k) != bh {
                ok = false;
                worst = format!("k={k} l={l}");
            }
        }
        let sum_f: u64 = (0..2 * k as u64).map(|l| count_f(l, k)).sum();
        let sum_h: u64 = (0..3 * k as u64).map(|l| count_h(l, k)).sum();
        ok &= sum_f == (k * k) as u64 && sum_h == (k * k * k) as u64;
    }
    for k in 1..=10u32 {
        let square = &ones(k) * &ones(k);
        let cube = &square * &ones(k);
        let f = IntPolynomial::from_coeffs((0..2 * k as u64).map(|l| BigUint::from(count_f(l, k))).collect());
        let h = IntPolynomial::from_coeffs((0..3 * k as u64).map(|l| BigUint::from(count_h(l, k))).collect());
        ok &= f == square && h == cube;
    }
    Verdict::new(ok, if ok { "k<=8 enumeration, sums k^2/k^3, generating functions k<=10".into() } else { format!("mismatch at {worst}") })
}

fn raw_g_polynomials(n: usize, k: u32) -> Vec<Vec<u64>> {
    let parts = n + 3;
    let pp = params(n, k);
    let mut out = vec![vec![0u64; (n + 1) * k as usize + 1]; n + 2];
    let mut tuple = vec![0u32; parts];
    loop {
        let total: i64 = tuple.iter().map(|&j| j as i64).sum();
        for l in 0..=(n as u32 + 1) {
            if g_total(l, pp) == total {
                let t: u32 = tuple[2..].iter().sum();
                out[l as usize][t as usize] += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == parts {
                return out;
            }
            tuple[i] += 1;
            if tuple[i] < k {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

fn g_polynomials_exact() -> Verdict {
    let mut checked = 0;
    for k in 1..=4u32 {
        for n in 1..=3usize {
            let raw = raw_g_polynomials(n, k);
            for (l, coeffs) in raw.iter().enumerate() {
                let expected = IntPolynomial::from_u64(coeffs);
                if g_polynomial(l as u32, params(n, k)).unwrap() != expected {
                    return Verdict::new(false, format!("n={n} k={k} l={l} differs from enumeration"));
                }
                checked += 1;
            }
        }
    }
    Verdict::new(true, format!("{checked} polynomials equal raw tuple enumeration"))
}

fn n2_cross_check() -> Verdict {
    let mut worst: f64 = 0.0;
    for k in 1..=6u32 {
        let pp = params(2, k);
        let pts = sample_uniform(pp, 200, SEED + k as u64).unwrap();
        for pr in pts.chunks(2) {
            let a = kernel_n2_closed(k, &pr[0], &pr[1]).unwrap().value;
            let b = kernel_closed(pp, &pr[0], &pr[1]).unwrap().value;
            worst = worst.max(rel(a, b));
        }
    }
    // Golden normalization: the explicit n = 2 polynomials equal n! = 2
    // times the tuple-count polynomials, so they already include the n!
    // factor and carry no extra 1/2.
    let mut golden = true;
    for k in 1..=6u32 {
        for l in 0..=3 {
            golden &= g_polynomial_n2_closed(l, k).unwrap() == g_polynomial(l, params(2, k)).unwrap().scaled(2);
        }
    }
    let ok = worst <= 1e-12 && golden;
    Verdict::new(
        ok,
        format!("max rel err {worst:.2e} over 600 pairs; verdict: explicit polynomials = n! * g (golden {golden})"),
    )
}

/// Pairs with `|a| <= 0.75` and `|b| / |a|^(1/k) <= 0.75`.
fn contraction_safe_pairs(pp: DomainParams, count: usize, seed: u64) -> Vec<(Point, Point)> {
    let mut sampler = UniformSampler::new(pp, seed, 0);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (x, y) = (sampler.next_point(), sampler.next_point());
        let args = pair(&x, &y).unwrap();
        let a = args.a.norm();
        if a <= 0.75 && args.b.norm() / a.powf(1.0 / pp.k() as f64) <= 0.75 {
            out.push((x, y));
        }
    }
    out
}

fn series_agreement() -> Verdict {
    let mut worst: f64 = 0.0;
    let mut where_ = String::new();
    let t = DEFAULT_SERIES_TRUNCATION;
    for k in 1..=4u32 {
        for n in 1..=3usize {
            let pp = params(n, k);
            for (x, y) in contraction_safe_pairs(pp, 100, SEED) {
                let s = kernel_series(pp, &x, &y, t, t as i64).unwrap().value;
                let c = kernel_closed(pp, &x, &y).unwrap().value;
                let e = rel(s, c);
                if e > worst {
                    worst = e;
                    where_ = format!("k={k} n={n}");
                }
            }
        }
    }
    Verdict::new(worst <= 1e-8, format!("max rel err {worst:.2e} ({where_}) over 1200 pairs, truncation {t}"))
}

fn k1_reduction() -> Verdict {
    let mut worst: f64 = 0.0;
    for n in 1..=3usize {
        let pts = sample_uniform(params(n, 1), 200, SEED).unwrap();
        for pr in pts.chunks(2) {
            let a = kernel_closed(params(n, 1), &pr[0], &pr[1]).unwrap().value;
            let b = kernel_k1_closed(n, &pr[0], &pr[1]).unwrap().value;
            worst = worst.max(rel(a, b));
        }
    }
    Verdict::new(worst <= 1e-13, format!("max rel err {worst:.2e} over 300 pairs"))
}

fn bell_identity() -> Verdict {
    let mut worst: f64 = 0.0;
    for k in [2u32, 3] {
        for n in [1usize, 2] {
            let sources = sample_uniform(params(n, 1), 50, SEED).unwrap();
            let targets = sample_uniform(params(n, k), 50, SEED + 1).unwrap();
            for (p, q) in sources.iter().zip(&targets) {
                let (lhs, rhs) = bell_sides(k, n, p, q).unwrap();
                worst = worst.max((lhs - rhs).norm() / lhs.norm());
            }
        }
    }
    Verdict::new(worst <= 1e-10, format!("max relative residual {worst:.2e} over 200 pairs"))
}

fn normalizing_constants() -> Verdict {
    let mut worst_exact: f64 = 0.0;
    for n in 1..=3usize {
        let nf = n as f64;
        for p1 in 0..=20u64 {
            let q_min = min_lattice_q(params(n, 1), p1);
            for q in q_min..q_min + 10 {
                let pf = p1 as f64;
                let printed = PI.powi(n as i32 + 1) * gamma(pf + 1.0).unwrap()
                    / ((pf + nf) * (pf + nf + q as f64 + 1.0) * gamma(pf + nf).unwrap());
                let ours = normalizing_constant(params(n, 1), IndexPair::new(p1, q)).unwrap();
                worst_exact = worst_exact.max(((ours - printed) / printed).abs());
            }
        }
    }
    let mut worst_z: f64 = 0.0;
    let mut checks = 0;
    for k in [2u32, 3] {
        for n in [1usize, 2] {
            let pp = params(n, k);
            for (i, idx) in [IndexPair::new(0, 0), IndexPair::new(1, -1), IndexPair::new(2, -1), IndexPair::new(1, 1)]
                .into_iter()
                .enumerate()
            {
                // Monte Carlo variance is finite only when |z1|^(4 p1) |w|^(4 q) is integrable.
                if 2 * idx.p1 as i64 + k as i64 * (2 * idx.q + 1) <= -(n as i64) {
                    continue;
                }
                let mc = MonteCarlo::new(1_000_000, SEED + 10 * k as u64 + 100 * n as u64 + i as u64);
                let est = mc
                    .integrate_uniform(pp, |y| {
                        Complex64::new(y.z[0].norm_sqr().powi(idx.p1 as i32) * y.w.norm_sqr().powi(idx.q as i32), 0.0)
                    })
                    .unwrap();
                let truth = normalizing_constant(pp, idx).unwrap();
                worst_z = worst_z.max(est.z_score(Complex64::new(truth, 0.0)));
                checks += 1;
            }
        }
    }
    Verdict::new(
        worst_exact <= 1e-13 && worst_z <= 3.0,
        format!("k=1 printed form max rel err {worst_exact:.2e}; {checks} Monte Carlo checks, max |z| = {worst_z:.2}"),
    )
}

fn reproducing_property() -> Verdict {
    let mut worst_sigma: f64 = 0.0;
    let mut count = 0;
    let mut failures = Vec::new();
    for k in [1u32, 2] {
        for n in [1usize, 2] {
            let pp = params(n, k);
            let w = Complex64::from_polar(0.55, 0.3);
            let radius = 0.55f64.powf(1.0 / k as f64);
            let mut z = vec![Complex64::from_polar(0.4 * radius, 0.7)];
            if n == 2 {
                z.push(Complex64::from_polar(0.3 * radius, -1.1));
            }
            let x = Point::new(z, w);
            for (i, m) in Monomial::standard_set(pp).iter().enumerate() {
                let mc = MonteCarlo::new(1_000_000, SEED + 1000 * k as u64 + 100 * n as u64 + i as u64);
                let report = reproduce_check(pp, m, &x, &mc).unwrap();
                let sigmas = report.relative_error / report.relative_std_error;
                worst_sigma = worst_sigma.max(sigmas);
                if !report.within_sigmas(3.0) {
                    failures.push(format!("k={k} n={n} {} at {sigmas:.2} sigma", m.label()));
                }
                count += 1;
            }
        }
    }
    Verdict::new(
        failures.is_empty(),
        format!("{count} monomials, worst {worst_sigma:.2} sigma{}", if failures.is_empty() { String::new() } else { format!("; failing: {}", failures.join(", ")) }),
    )
}

fn sharp_interval_exact() -> Verdict {
    let mut ok = true;
    for k in 1..=12u32 {
        for n in 1..=12usize {
            let spec = test_function(k, n).unwrap();
            let interval = critical_interval(k, n).unwrap();
            let crossing = divergence_threshold(k, n, &spec);
            let (k64, n64) = (k as i64, n as i64);
            ok &= crossing == Rational64::new(2 * k64 + 2 * n64, k64 + n64 - 1);
            ok &= crossing == interval.upper;
            ok &= divergence_exponent(k, n, &spec, crossing) == Rational64::from(-1);
            ok &= schur_to_interval(k, n).unwrap() == interval;
        }
    }
    let base = critical_interval(1, 1).unwrap();
    ok &= base.lower == Rational64::new(4, 3) && base.upper == Rational64::from(4);
    Verdict::new(ok, format!("k,n<=12 exact; k=n=1 interval ({}, {})", base.lower, base.upper))
}

fn divergence_behavior() -> Verdict {
    let mut notes = Vec::new();
    let mut ok = true;
    let deltas: Vec<f64> = (1..=40).map(|j| 0.5f64.powi(j)).collect();
    for k in [1u32, 2] {
        for n in [1usize, 2] {
            let spec = test_function(k, n).unwrap();
            let upper = critical_interval(k, n).unwrap().upper;
            let norms = |p: Rational64| -> Vec<f64> {
                deltas.iter().map(|&d| truncated_lp_norm(k, n, &spec, p, d).unwrap()).collect()
            };
            // monotone nonincreasing in delta, i.e. nondecreasing along deltas
            for p in [Rational64::from(2), upper, upper + Rational64::new(1, 2)] {
                let v = norms(p);
                ok &= v.windows(2).all(|w| w[1] >= w[0]);
            }
            // above the threshold: local power-law exponent
            let p = upper + Rational64::new(1, 2);
            let e1 = divergence_exponent(k, n, &spec, p) + 1;
            let predicted = *e1.numer() as f64 / *e1.denom() as f64;
            let v = norms(p);
            let j = 30;
            let measured = (v[j + 1] / v[j]).ln() / (deltas[j + 1] / deltas[j]).ln();
            let power_ok = (measured / predicted - 1.0).abs() < 0.01;
            // below: Cauchy convergence to the full norm
            let v = norms(Rational64::from(2));
            let e1 = divergence_exponent(k, n, &spec, Rational64::from(2)) + 1;
            let s = *e1.numer() as f64 / *e1.denom() as f64;
            let full = v[0] / (1.0 - deltas[0].powf(s));
            let increments: Vec<f64> = v.windows(2).map(|w| w[1] - w[0]).collect();
            let cauchy_ok = increments.windows(2).all(|w| w[1] <= w[0]) && (v[39] - full).abs() <= 1e-9 * full;
            // at the threshold: constant increments, i.e. log growth
            let v = norms(upper);
            let inc: Vec<f64> = v.windows(2).map(|w| w[1] - w[0]).collect();
            let log_ok = inc.windows(2).all(|w| (w[1] / w[0] - 1.0).abs() < 1e-6);
            ok &= power_ok && cauchy_ok && log_ok;
            notes.push(format!("(k={k},n={n}) exp {measured:.4}/{predicted:.4}"));
        }
    }
    Verdict::new(ok, notes.join("; "))
}

fn estimate_lemmas() -> Verdict {
    let mut ok = true;
    let mc = MonteCarlo::new(100_000, SEED);
    let mut disk_sup: f64 = 0.0;
    let mut worst_z: f64 = 0.0;
    for eps in [0.3, 0.7] {
        for beta in [0.0, 1.0] {
            for zm in [0.0, 0.5, 0.9, 0.99] {
                let series = disk_integral_series(zm, eps, beta).unwrap();
                let ratio = series * (1.0 - zm * zm).powf(eps);
                disk_sup = disk_sup.max(ratio);
                let r = disk_estimate_ratio(Complex64::new(zm, 0.0), eps, beta, &mc).unwrap();
                worst_z = worst_z.max((r.ratio - ratio).abs() / r.ratio_std_error.max(1e-300));
            }
        }
    }
    let (mut ball_sup, mut ball_inf) = (0.0f64, f64::INFINITY);
    for d in [0.0, 0.5, 0.9] {
        let series = ball_integral_series(2, 2, 0.6, d).unwrap();
        let ratio = series * (1.0 - d.powi(4)).powf(0.6);
        ball_sup = ball_sup.max(ratio);
        ball_inf = ball_inf.min(ratio);
        let r = ball_estimate_ratio(2, 2, 0.6, d, &mc).unwrap();
        if r.ratio_std_error > 0.0 {
            worst_z = worst_z.max((r.ratio - ratio).abs() / r.ratio_std_error);
        } else {
            ok &= (r.ratio - ratio).abs() <= 1e-12 * ratio;
        }
    }
    let mut flat_worst: f64 = 0.0;
    for (n, k, eps) in [(2usize, 2u32, 0.6), (1, 1, 0.3), (3, 2, 0.8), (2, 3, 0.5)] {
        let scaled = |m: u64| ball_coefficient(n, k, eps, m).unwrap() * (m as f64).powf(1.0 - eps);
        flat_worst = flat_worst.max((scaled(201) / scaled(200) - 1.0).abs());
    }
    println!("      regression: disk sup {disk_sup:.6}, ball sup {ball_sup:.6}, ball inf {ball_inf:.6}");
    ok &= within_regression(disk_sup, DISK_RATIO_SUP)
        && within_regression(ball_sup, BALL_RATIO_SUP)
        && within_regression(ball_inf, BALL_RATIO_INF)
        && worst_z <= 4.0
        && flat_worst < 0.02;
    Verdict::new(
        ok,
        format!(
            "disk sup {disk_sup:.4}, ball range [{ball_inf:.4}, {ball_sup:.4}], MC vs series max |z| {worst_z:.2}, coefficient flatness {flat_worst:.1e}"
        ),
    )
}

fn schur_ratio_grid() -> Verdict {
    let mut finite_cells = 0;
    let mut divergent_cells = Vec::new();
    let mut ok = true;
    let mut sups = Vec::new();
    for ((k, n), pinned) in SCHUR_SUPS {
        let (a, b) = schur_epsilon_range(k, n).unwrap();
        let (af, bf) = (*a.numer() as f64 / *a.denom() as f64, *b.numer() as f64 / *b.denom() as f64);
        let mut sup: f64 = 0.0;
        let mut any_finite = false;
        for j in 0..4 {
            let eps = af + j as f64 * (bf - af) / 4.0;
            for (i, x) in schur_grid(k, n).iter().enumerate() {
                let mc = MonteCarlo::new(100_000, SEED + i as u64);
                match schur_ratio(k, n, eps, x, &mc).unwrap() {
                    SchurOutcome::Finite(est) => {
                        finite_cells += 1;
                        any_finite = true;
                        sup = sup.max(est.ratio);
                    }
                    SchurOutcome::Divergent { .. } => {
                        if i == 0 {
                            divergent_cells.push(format!("(k={k},n={n},eps={eps})"));
                        }
                        ok = false;
                    }
                }
            }
        }
        if any_finite {
            println!("      regression: k={k} n={n} finite-cell sup {sup:.6}");
            ok &= within_regression(sup, pinned);
            sups.push(format!("(k={k},n={n}) sup {sup:.3}"));
        }
    }
    Verdict::new(
        ok,
        format!(
            "{finite_cells} finite cells [{}]; divergent (x9 points each): {}",
            sups.join(", "),
            if divergent_cells.is_empty() { "none".into() } else { divergent_cells.join(" ") }
        ),
    )
}

type Criterion = (u32, &'static str, Option<Duration>, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 12] = [
        (1, "counting lemmas exact", Some(Duration::from_secs(1)), counting_lemmas),
        (2, "numerator polynomials exact", Some(Duration::from_secs(30)), g_polynomials_exact),
        (3, "n=2 explicit form cross-check", None, n2_cross_check),
        (4, "series vs closed agreement", Some(Duration::from_secs(60)), series_agreement),
        (5, "k=1 reduction", None, k1_reduction),
        (6, "transformation rule identity", None, bell_identity),
        (7, "normalizing constants", None, normalizing_constants),
        (8, "reproducing property", Some(Duration::from_secs(300)), reproducing_property),
        (9, "sharp interval exact arithmetic", Some(Duration::from_secs(1)), sharp_interval_exact),
        (10, "divergence behavior", None, divergence_behavior),
        (11, "estimate lemmas", None, estimate_lemmas),
        (12, "Schur ratio grid", Some(Duration::from_secs(600)), schur_ratio_grid),
    ];
    let mut unexpected = Vec::new();
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let in_time = budget.is_none_or(|b| elapsed <= b);
        let passed = verdict.passed && in_time;
        let status = if passed { "PASS" } else { "FAIL" };
        let expected_failure = EXPECTED_FAILURES.contains(&id);
        let note = match (passed, expected_failure) {
            (false, true) => " [expected failure]",
            (true, true) => " [unexpected pass]",
            _ => "",
        };
        let timing = match budget {
            Some(b) => format!("{:.2}s / {}s", elapsed.as_secs_f64(), b.as_secs()),
            None => format!("{:.2}s", elapsed.as_secs_f64()),
        };
        println!("{status} criterion {id:>2}: {name} ({timing}){note}: {}", verdict.detail);
        if passed == expected_failure {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}

use hartogs::analysis::{
    ball_coefficient, ball_estimate_ratio, ball_integral_series, disk_estimate_ratio, disk_integral_series,
    monomial_l2_norm, radial::monomial_l2_norm_quadrature, reproduce_check, moments::sphere_moment_mc, sphere_moment,
    Monomial, MonomialNorm, MonteCarlo,
};
use hartogs::domain::DomainParams;
use hartogs::kernel::{min_lattice_q, normalizing_constant, IndexPair};
use hartogs::{Complex64, Point};
use serde_json::json;

use super::{params_json, Context, Suite, VerifyArgs};
use crate::error::CliError;
use crate::report::{complex, Record, Report};

const SIGMAS: f64 = 3.0;
/// Agreement required between the radial quadrature and the closed norm.
const QUADRATURE_TOLERANCE: f64 = 1e-8;
/// Largest admissible drift of consecutive rescaled ball coefficients.
const FLATNESS_TOLERANCE: f64 = 0.02;

pub fn verify(args: &VerifyArgs, ctx: &Context) -> Result<Report, CliError> {
    let pp = DomainParams::new(args.n, args.k)?;
    let suites = match args.suite {
        Suite::All => vec![Suite::Lemma1, Suite::Reproduce, Suite::Estimate1, Suite::Estimate2],
        one => vec![one],
    };
    let mut results = Vec::new();
    for (offset, suite) in suites.into_iter().enumerate() {
        let seed = ctx.seed.wrapping_add(1_000_000 * offset as u64);
        let mc = |i: u64| MonteCarlo::new(ctx.samples, seed.wrapping_add(i));
        let records = match suite {
            Suite::Lemma1 => moments(pp, &mc)?,
            Suite::Reproduce => reproduce(pp, &mc)?,
            Suite::Estimate1 => disk(&mc)?,
            Suite::Estimate2 => ball(pp, args.eps, &mc)?,
            Suite::All => unreachable!("expanded above"),
        };
        let label = serde_json::to_value(suite)?;
        results.extend(records.into_iter().map(|r| r.with("suite", label.clone()).with("params", params_json(args.k, args.n))));
    }
    Ok(Report::new(json!(null), results))
}

/// Passes when within `SIGMAS` standard errors, or within rounding when the
/// estimator happens to be exact.
fn mc_agrees(estimate: f64, truth: f64, std_error: f64) -> (bool, f64) {
    let tolerance = (SIGMAS * std_error).max(1e-12 * truth.abs());
    ((estimate - truth).abs() <= tolerance, tolerance)
}

fn multi_indices(n: usize, max_total: u64) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u64>| {
                let used: u64 = prefix.iter().sum();
                (0..=max_total - used).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn moments(pp: DomainParams, mc: &dyn Fn(u64) -> MonteCarlo) -> Result<Vec<Record>, CliError> {
    let n = pp.n();
    let mut out = Vec::new();
    for (i, v) in multi_indices(n, 4).into_iter().enumerate() {
        let exact = sphere_moment(n, &v)?;
        let est = sphere_moment_mc(n, &v, &mc(i as u64))?;
        let (ok, tol) = mc_agrees(est.value.re, exact, est.std_error);
        out.push(
            Record::check(format!("sphere moment v={v:?}"), ok, json!(est.value.re), json!(exact), tol)
                .with("std_error", json!(est.std_error)),
        );
    }
    for p1 in [0u64, 1, 3] {
        let q_min = min_lattice_q(pp, p1);
        let mut p = vec![0u64; n];
        p[0] = p1;
        for q in q_min..q_min + 3 {
            let closed = match monomial_l2_norm(pp, &p, q)? {
                MonomialNorm::Finite(v) => v,
                MonomialNorm::Divergent => {
                    out.push(Record::check(format!("monomial norm p1={p1} q={q}"), false, json!(null), json!("finite"), 0.0));
                    continue;
                }
            };
            let quad = monomial_l2_norm_quadrature(pp, &p, q)?.value.re;
            let rel = (quad - closed).abs() / closed;
            out.push(Record::check(
                format!("monomial norm p1={p1} q={q} (quadrature)"),
                rel <= QUADRATURE_TOLERANCE,
                json!(quad),
                json!(closed),
                QUADRATURE_TOLERANCE * closed,
            ));
            let normalizer = normalizing_constant(pp, IndexPair::new(p1, q))?;
            out.push(Record::check(
                format!("monomial norm p1={p1} q={q} (normalizer)"),
                normalizer == closed,
                json!(normalizer),
                json!(closed),
                0.0,
            ));
        }
        let below = monomial_l2_norm(pp, &p, q_min - 1)?;
        out.push(Record::check(
            format!("monomial norm p1={p1} q={} diverges", q_min - 1),
            below == MonomialNorm::Divergent,
            json!(below.finite()),
            json!(null),
            0.0,
        ));
    }
    Ok(out)
}

fn reproduce_point(pp: DomainParams) -> Point {
    let w = Complex64::from_polar(0.55, 0.3);
    let radius = 0.55f64.powf(1.0 / pp.k() as f64);
    let mut z = vec![Complex64::new(0.0, 0.0); pp.n()];
    z[0] = Complex64::from_polar(0.4 * radius, 0.7);
    if pp.n() > 1 {
        z[1] = Complex64::from_polar(0.3 * radius, -1.1);
    }
    Point::new(z, w)
}

fn reproduce(pp: DomainParams, mc: &dyn Fn(u64) -> MonteCarlo) -> Result<Vec<Record>, CliError> {
    let x = reproduce_point(pp);
    let mut out = Vec::new();
    for (i, m) in Monomial::standard_set(pp).iter().enumerate() {
        let report = reproduce_check(pp, m, &x, &mc(i as u64))?;
        let tol = SIGMAS * report.relative_std_error * report.truth.norm();
        out.push(
            Record::check(
                format!("reproduce {}", m.label()),
                report.within_sigmas(SIGMAS),
                complex(report.estimate.value),
                complex(report.truth),
                tol,
            )
            .with("std_error", json!(report.estimate.std_error)),
        );
    }
    Ok(out)
}

fn disk(mc: &dyn Fn(u64) -> MonteCarlo) -> Result<Vec<Record>, CliError> {
    let mut out = Vec::new();
    let mut sup: f64 = 0.0;
    let mut i = 0;
    for eps in [0.3, 0.7] {
        for beta in [0.0, 1.0] {
            for zm in [0.0, 0.5, 0.9, 0.99] {
                let series = disk_integral_series(zm, eps, beta)? * (1.0 - zm * zm).powf(eps);
                let est = disk_estimate_ratio(Complex64::new(zm, 0.0), eps, beta, &mc(i))?;
                i += 1;
                sup = sup.max(series);
                let (ok, tol) = mc_agrees(est.ratio, series, est.ratio_std_error);
                out.push(
                    Record::check(format!("disk ratio eps={eps} beta={beta} |z|={zm}"), ok, json!(est.ratio), json!(series), tol)
                        .with("std_error", json!(est.ratio_std_error)),
                );
            }
        }
    }
    out.push(Record::info("disk ratio sup over grid", json!(sup)));
    Ok(out)
}

fn ball(pp: DomainParams, eps: f64, mc: &dyn Fn(u64) -> MonteCarlo) -> Result<Vec<Record>, CliError> {
    let (n, k) = (pp.n(), pp.k());
    let mut out = Vec::new();
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for (i, d) in [0.0, 0.5, 0.9].into_iter().enumerate() {
        let series = ball_integral_series(n, k, eps, d)? * (1.0 - d.powi(2 * k as i32)).powf(eps);
        let est = ball_estimate_ratio(n, k, eps, d, &mc(i as u64))?;
        lo = lo.min(series);
        hi = hi.max(series);
        let (ok, tol) = mc_agrees(est.ratio, series, est.ratio_std_error);
        out.push(
            Record::check(format!("ball ratio eps={eps} |delta|={d}"), ok, json!(est.ratio), json!(series), tol)
                .with("std_error", json!(est.ratio_std_error)),
        );
    }
    out.push(Record::info("ball ratio range over grid", json!([lo, hi])));
    let scaled = |m: u64| -> Result<f64, CliError> { Ok(ball_coefficient(n, k, eps, m)? * (m as f64).powf(1.0 - eps)) };
    let drift = scaled(201)? / scaled(200)? - 1.0;
    out.push(Record::check(
        "ball coefficient growth m^(eps-1)",
        drift.abs() <= FLATNESS_TOLERANCE,
        json!(drift),
        json!(0.0),
        FLATNESS_TOLERANCE,
    ));
    Ok(out)
}

use hartogs::analysis::MonteCarlo;
use hartogs::regularity::{
    classify_exponent, conjugate_exponent, divergence_exponent, schur_epsilon_range, schur_grid, schur_ratio,
    test_function, truncated_lp_norm, LpClass, SchurOutcome, TestFunctionSpec,
};
use hartogs::Rational64;
use rayon::prelude::*;
use serde_json::json;

use super::{point_json, Context, LpScanArgs, SchurScanArgs};
use crate::error::CliError;
use crate::grid::{parse_grid, to_f64};
use crate::report::{Record, Report, Status};

fn blows_up(k: u32, n: usize, spec: &TestFunctionSpec, p: Option<Rational64>) -> bool {
    match p {
        Some(p) => divergence_exponent(k, n, spec, p) <= Rational64::from(-1),
        None => true,
    }
}

/// Each cell carries the interval classification and the truncated norm of
/// the projected test function. The status checks that "unbounded" holds
/// exactly when the test function certifies it at `p` or at its conjugate.
pub fn lp_scan(args: &LpScanArgs) -> Result<Report, CliError> {
    let (k, n) = (args.k, args.n);
    let spec = test_function(k, n)?;
    let grid = parse_grid(&args.p_grid)?;
    let mut results = Vec::with_capacity(grid.len());
    for p in grid {
        if p < Rational64::from(1) {
            return Err(CliError::Usage(format!("p = {p} is below 1")));
        }
        let class = classify_exponent(k, n, p)?;
        let diverges_at_p = blows_up(k, n, &spec, Some(p));
        let certified = diverges_at_p || blows_up(k, n, &spec, conjugate_exponent(p));
        let value = truncated_lp_norm(k, n, &spec, p, args.delta)?;
        let mut record = Record::info(format!("p={p}"), json!(value))
            .with("params", json!({ "k": k, "n": n, "p": p.to_string(), "p_float": to_f64(p), "delta": args.delta }))
            .with("std_error", json!(0.0))
            .with("classification", json!(class))
            .with("test_norm", json!(if diverges_at_p { "divergent" } else { "finite" }))
            .with("exponent", json!(divergence_exponent(k, n, &spec, p).to_string()));
        record.status = Status::from_check((class == LpClass::Unbounded) == certified);
        results.push(record);
    }
    Ok(Report::new(json!(null), results))
}

pub fn schur_scan(args: &SchurScanArgs, ctx: &Context) -> Result<Report, CliError> {
    let (k, n) = (args.k, args.n);
    let (a, b) = schur_epsilon_range(k, n)?;
    let eps_grid = match &args.eps_grid {
        Some(text) => parse_grid(text)?,
        None => (0..8).map(|j| a + (b - a) * Rational64::new(j, 8)).collect(),
    };
    let points = schur_grid(k, n);
    let cells: Vec<(usize, usize)> =
        (0..eps_grid.len()).flat_map(|e| (0..points.len()).map(move |i| (e, i))).collect();
    let outcomes = cells
        .par_iter()
        .map(|&(e, i)| {
            let mc = MonteCarlo::new(ctx.samples, ctx.seed.wrapping_add(i as u64 + 100 * e as u64));
            schur_ratio(k, n, to_f64(eps_grid[e]), &points[i], &mc)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut sup: Option<f64> = None;
    let mut results = Vec::with_capacity(cells.len() + 1);
    for (&(e, i), outcome) in cells.iter().zip(outcomes) {
        let eps = eps_grid[e];
        let params = json!({ "k": k, "n": n, "eps": eps.to_string(), "eps_float": to_f64(eps), "point": point_json(&points[i]) });
        let record = match outcome {
            SchurOutcome::Finite(est) => {
                sup = Some(sup.map_or(est.ratio, |s: f64| s.max(est.ratio)));
                Record::info(format!("point {i} eps={eps}"), json!(est.ratio))
                    .with("std_error", json!(est.std_error))
                    .with("classification", json!("finite"))
            }
            SchurOutcome::Divergent { reason } => Record::info(format!("point {i} eps={eps}"), json!(null))
                .with("std_error", json!(null))
                .with("classification", json!("divergent"))
                .with("reason", json!(reason)),
        };
        results.push(record.with("params", params));
    }
    results.push(Record::info("sup over finite cells", json!(sup)));
    Ok(Report::new(json!(null), results))
}

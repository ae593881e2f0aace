use hartogs::combinatorics::{count_f, count_h, g_polynomial, g_total};
use hartogs::domain::DomainParams;
use serde_json::json;

use super::{params_json, CoeffsArgs, CountsArgs};
use crate::error::CliError;
use crate::report::{Record, Report, Table};

pub fn coeffs(args: &CoeffsArgs) -> Result<Report, CliError> {
    let pp = DomainParams::new(args.n, args.k)?;
    let indices: Vec<u32> = match args.l {
        Some(l) => vec![l],
        None => (0..=args.n as u32 + 1).collect(),
    };
    let mut polys = Vec::with_capacity(indices.len());
    for &l in &indices {
        polys.push((l, g_polynomial(l, pp)?));
    }
    let width = polys.iter().map(|(_, g)| g.coeffs().len()).max().unwrap_or(0).max(1);
    let mut header = vec!["l".to_string()];
    header.extend((0..width).map(|t| format!("b^{t}")));
    let rows = polys
        .iter()
        .map(|(l, g)| {
            let mut row = vec![l.to_string()];
            row.extend((0..width).map(|t| g.coeff(t).to_string()));
            row
        })
        .collect();
    let results = polys
        .iter()
        .map(|(l, g)| {
            let coeffs: Vec<String> = g.coeffs().iter().map(|c| c.to_string()).collect();
            Record::info(format!("g_{l}"), json!(coeffs))
                .with("params", params_json(args.k, args.n))
                .with("l", json!(l))
                .with("tuple_sum", json!(g_total(*l, pp)))
        })
        .collect();
    let mut latex_header = vec!["$l$".to_string()];
    latex_header.extend((0..width).map(|t| format!("$b^{{{t}}}$")));
    let mut report = Report::new(json!(null), results);
    report.table = Some(Table {
        header,
        rows,
        latex_header: Some(latex_header),
    });
    Ok(report)
}

pub fn counts(args: &CountsArgs) -> Result<Report, CliError> {
    if args.k == 0 {
        return Err(CliError::Usage("k must be positive".into()));
    }
    let k = args.k;
    let max_l = args.max_l.unwrap_or(3 * k as u64 - 3);
    let header = vec!["l".to_string(), "pairs".to_string(), "triples".to_string()];
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for l in 0..=max_l {
        let (f, h) = (count_f(l, k), count_h(l, k));
        rows.push(vec![l.to_string(), f.to_string(), h.to_string()]);
        results.push(Record::info(format!("l={l}"), json!({ "pairs": f, "triples": h })).with("l", json!(l)));
    }
    let (k64, full) = (k as u64, max_l >= 3 * k as u64 - 3);
    if full {
        let pairs: u64 = (0..=max_l).map(|l| count_f(l, k)).sum();
        let triples: u64 = (0..=max_l).map(|l| count_h(l, k)).sum();
        results.push(Record::check("sum of pair counts", pairs == k64 * k64, json!(pairs), json!(k64 * k64), 0.0));
        results.push(Record::check(
            "sum of triple counts",
            triples == k64.pow(3),
            json!(triples),
            json!(k64.pow(3)),
            0.0,
        ));
    }
    let mut report = Report::new(json!(null), results);
    report.table = Some(Table {
        header,
        rows,
        latex_header: None,
    });
    Ok(report)
}

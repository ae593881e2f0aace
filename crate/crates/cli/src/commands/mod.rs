mod scan;
mod tables;
mod verify;

use clap::{Args, ValueEnum};
use hartogs::domain::{sample_uniform, DomainParams, UniformSampler};
use hartogs::kernel::{kernel as evaluate_kernel, Method};
use hartogs::{Complex64, Point};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::report::{complex, Record, Report};

pub use scan::{lp_scan, schur_scan};
pub use tables::{coeffs, counts};
pub use verify::verify;

/// Settings shared by every Monte Carlo estimate of a run.
pub struct Context {
    pub seed: u64,
    pub samples: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct KernelArgs {
    /// Exponent k of the domain.
    #[arg(long)]
    pub k: u32,
    /// Dimension n of the z variable.
    #[arg(long)]
    pub n: usize,
    /// z coordinates of the first point, comma separated, e.g. `0.1+0.2i,0.3`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub point_z: Vec<Complex64>,
    /// w coordinate of the first point.
    #[arg(long, allow_hyphen_values = true)]
    pub point_w: Complex64,
    /// z coordinates of the second point; defaults to the first point.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "other_w")]
    pub other_z: Option<Vec<Complex64>>,
    /// w coordinate of the second point.
    #[arg(long, allow_hyphen_values = true, requires = "other_z")]
    pub other_w: Option<Complex64>,
    #[arg(long, value_enum, default_value_t = MethodArg::Closed)]
    pub method: MethodArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    /// Closed form with the numerator polynomials.
    Closed,
    /// Truncated orthonormal series with a tail bound.
    Series,
    /// Explicit formula for n = 1 or n = 2.
    Special,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Series => Method::Series,
            MethodArg::Special => Method::SpecialCase,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CoeffsArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: usize,
    /// Only this index l (0 <= l <= n + 1).
    #[arg(long)]
    pub l: Option<u32>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CountsArgs {
    #[arg(long)]
    pub k: u32,
    /// Largest sum listed; defaults to 3k - 3.
    #[arg(long)]
    pub max_l: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Sphere moments against Monte Carlo, monomial norms against quadrature.
    Lemma1,
    /// Reproducing property on monomials.
    Reproduce,
    /// Weighted disk integral against its series.
    Estimate1,
    /// Weighted ball integral against its series and coefficient growth.
    Estimate2,
    All,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: usize,
    /// Exponent eps in (0, 1) used by the ball integral.
    #[arg(long, default_value_t = 0.6)]
    pub eps: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct LpScanArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: usize,
    /// Exponents as exact decimals or fractions: `1.2:4.5:0.1`, `4/3,2,4`.
    #[arg(long)]
    pub p_grid: String,
    /// Inner cutoff |w| > delta of the truncated norm.
    #[arg(long, default_value_t = 1e-6)]
    pub delta: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SchurScanArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: usize,
    /// Exponents eps within the admissible range; defaults to eight equal steps across it.
    #[arg(long)]
    pub eps_grid: Option<String>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SampleArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub n: usize,
    /// Number of points to print.
    #[arg(long, default_value_t = 10)]
    pub count: usize,
}

fn params_json(k: u32, n: usize) -> serde_json::Value {
    json!({ "k": k, "n": n })
}

fn point_json(p: &Point) -> serde_json::Value {
    json!({ "z": p.z.iter().map(|c| complex(*c)).collect::<Vec<_>>(), "w": complex(p.w) })
}

pub fn kernel(args: &KernelArgs, _ctx: &Context) -> Result<Report, CliError> {
    let pp = DomainParams::new(args.n, args.k)?;
    let x = Point::new(args.point_z.clone(), args.point_w);
    let y = match (&args.other_z, args.other_w) {
        (Some(z), Some(w)) => Point::new(z.clone(), w),
        _ => x.clone(),
    };
    let value = evaluate_kernel(pp, &x, &y, args.method.into())?;
    let mut record = Record::info("kernel", complex(value.value))
        .with("params", params_json(args.k, args.n))
        .with("method", json!(value.method))
        .with("est_error", json!(value.est_error));
    record.tolerance = json!(value.est_error);
    Ok(Report::new(json!(null), vec![record]))
}

pub fn sample(args: &SampleArgs, ctx: &Context) -> Result<Report, CliError> {
    let pp = DomainParams::new(args.n, args.k)?;
    let mut results: Vec<Record> = sample_uniform(pp, args.count, ctx.seed)?
        .iter()
        .enumerate()
        .map(|(i, p)| Record::info(format!("point {i}"), point_json(p)))
        .collect();
    // acceptance-rate volume estimate against the exact volume
    let mut sampler = UniformSampler::new(pp, ctx.seed, 1);
    for _ in 0..ctx.samples.min(1 << 24) {
        sampler.next_point();
    }
    let (volume, std_error) = sampler.volume_estimate();
    let exact = pp.volume();
    let z = (volume - exact).abs() / std_error.max(f64::MIN_POSITIVE);
    results.push(
        Record::check("volume", z <= 3.0, json!(volume), json!(exact), 3.0 * std_error)
            .with("std_error", json!(std_error))
            .with("acceptance_rate", json!(sampler.accepted() as f64 / sampler.proposed() as f64)),
    );
    Ok(Report::new(json!(null), results))
}

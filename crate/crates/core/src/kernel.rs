//! Bergman kernel evaluation.
//!
//! Three independent routes are provided:
//!
//! * the closed form
//!   `B = n! * sum_l g_l(b) a^l / (pi^(n+1) k (1 - a)^2 (a - b^k)^(n+1))`
//!   with the numerator polynomials of [`crate::combinatorics`];
//! * special cases: the `k = 1` kernel `n! a / (pi^(n+1) (1-a)^2 (a-b)^(n+1))`
//!   and the explicit `n = 2` polynomials;
//! * the orthonormal-monomial series
//!   `sum_{(p1, q) in Lambda} b^p1 a^q / N(p1, q)`.
//!
//! The denominator carries a single factor of `k`: pushing the `k = 1`
//! kernel through the `k`-sheeted cover `(z, w) -> (z, w^k)` sums `k`
//! branches that all contribute the same numerator coefficient. A `k^2`
//! normalization disagrees with both the series and the transformation rule
//! by exactly a factor `k`; see `tests/kernel_routes.rs`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{radial_monomial_norm, sphere_moment_axis};
use crate::combinatorics::{g_polynomial_n2_closed, g_polynomials, IntPolynomial};
use crate::domain::{contains, pair, DomainError, DomainParams, PairedArgs, Point};
use crate::special::tgamma;

/// Minimum distance of `1 - a` and `a - b^k` from zero before the closed
/// form refuses to evaluate.
pub const DEFAULT_SINGULARITY_FLOOR: f64 = 1e-9;

/// Default truncation for both series indices.
pub const DEFAULT_SERIES_TRUNCATION: u64 = 128;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KernelError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error("index (p1={p1}, q={q}) is outside the L^2 lattice; the norm integral diverges")]
    NotInLattice { p1: u64, q: i64 },
    #[error("series does not converge: |a| = {a_modulus}, |b|/|a|^(1/k) = {contraction}")]
    NonConvergent { a_modulus: f64, contraction: f64 },
    #[error("near-singular denominator: |{factor}| = {distance:e} is below the floor {floor:e}")]
    Singular {
        factor: &'static str,
        distance: f64,
        floor: f64,
    },
    #[error("w = 0 lies on the branch locus of the covering map")]
    BranchLocus,
    #[error("a = 0: the bound ratio is undefined")]
    ZeroPairing,
    #[error("special-case formula unavailable for n={n}, k={k}")]
    NoSpecialCase { n: usize, k: u32 },
}

pub type Result<T> = std::result::Result<T, KernelError>;

/// Lattice index `(p1, q)` of the monomial `z_1^p1 w^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexPair {
    pub p1: u64,
    pub q: i64,
}

impl IndexPair {
    pub fn new(p1: u64, q: i64) -> Self {
        Self { p1, q }
    }

    /// `p1 + k (q + 1) > -n`.
    pub fn in_lattice(&self, params: DomainParams) -> bool {
        self.p1 as i64 + params.k() as i64 * (self.q + 1) > -(params.n() as i64)
    }
}

/// Smallest `q` with `(p1, q)` in the lattice: `-ceil((p1 + n) / k)`.
pub fn min_lattice_q(params: DomainParams, p1: u64) -> i64 {
    let top = p1 as i64 + params.n() as i64;
    let k = params.k() as i64;
    -((top + k - 1) / k)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Closed,
    Series,
    SpecialCase,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "closed" => Ok(Self::Closed),
            "series" => Ok(Self::Series),
            "special" | "special-case" => Ok(Self::SpecialCase),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// A kernel value with the route that produced it. `est_error` is zero for
/// closed forms and a tail bound for the series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelValue {
    pub value: Complex64,
    pub method: Method,
    pub est_error: f64,
}

/// `N(p1, q) = integral of |z_1|^(2 p1) |w|^(2 q)` over the domain,
/// `pi^(n+1) k Gamma(p1+1) / ((p1+n) Gamma(p1+n) (k(q+1) + p1 + n))`.
pub fn normalizing_constant(params: DomainParams, idx: IndexPair) -> Result<f64> {
    if !idx.in_lattice(params) {
        return Err(KernelError::NotInLattice { p1: idx.p1, q: idx.q });
    }
    let moment = sphere_moment_axis(params.n(), idx.p1);
    Ok(radial_monomial_norm(params, idx.p1, moment, idx.q).expect("lattice index has finite norm"))
}

fn check_points(params: DomainParams, p: &Point, q: &Point) -> Result<PairedArgs> {
    for x in [p, q] {
        if x.z.len() != params.n() {
            return Err(DomainError::DimensionMismatch {
                expected: params.n(),
                found: x.z.len(),
            }
            .into());
        }
        if !contains(params, x) {
            return Err(DomainError::OutsideDomain.into());
        }
    }
    Ok(pair(p, q)?)
}

/// Partial sum of the orthonormal series over `p1 <= max_p1`,
/// `q_min(p1) <= q <= max_q`.
pub fn kernel_series(
    params: DomainParams,
    p: &Point,
    q: &Point,
    max_p1: u64,
    max_q: i64,
) -> Result<KernelValue> {
    let args = check_points(params, p, q)?;
    series_from_args(params, args, max_p1, max_q)
}

/// `(p1 + n) Gamma(p1 + n) / (Gamma(p1 + 1) pi^(n+1) k)`, so that
/// `1 / N(p1, q) = row_weight(p1) * (k (q + 1) + p1 + n)`.
fn row_weight(params: DomainParams, p1: u64) -> f64 {
    let n = params.n() as u64;
    let rising: f64 = (1..n).map(|j| (p1 + j) as f64).product();
    (p1 + n) as f64 * rising / (PI.powi(n as i32 + 1) * params.k() as f64)
}

/// Series evaluation from already-paired arguments.
///
/// `est_error` bounds the truncation error plus a rounding allowance.
///
/// Error bound: for a row `p1` the omitted `q > max_q` terms are summed in
/// closed form as an arithmetic-geometric tail in `|a|`. Rows past `max_p1`
/// are bounded by `row_weight(p1) rho^p1 |a|^(-(n+k-1)/k) k / (1-|a|)^2` with
/// `rho = |b| / |a|^(1/k)`, and those bounds decay at least geometrically
/// with ratio `rho * row_weight(M+2) / row_weight(M+1)`.
pub fn series_from_args(params: DomainParams, args: PairedArgs, max_p1: u64, max_q: i64) -> Result<KernelValue> {
    let n = params.n() as f64;
    let k = params.k() as f64;
    let ki = params.k() as i64;
    let x = args.a.norm();
    let contraction = if x > 0.0 { args.b.norm() / x.powf(1.0 / k) } else { f64::INFINITY };
    if !(x > 0.0 && x < 1.0 && contraction < 1.0) {
        return Err(KernelError::NonConvergent {
            a_modulus: x,
            contraction,
        });
    }

    let mut sum = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let mut tail = 0.0;
    let mut q_min = min_lattice_q(params, 0);
    // b^p1 a^q_min(p1), updated incrementally to avoid overflow in a^q_min.
    let mut lead = args.a.powi(q_min as i32);
    for p1 in 0..=max_p1 {
        if p1 > 0 {
            lead *= args.b;
            let next = min_lattice_q(params, p1);
            for _ in next..q_min {
                lead /= args.a;
            }
            q_min = next;
        }
        let weight = row_weight(params, p1);
        let lead_mod = lead.norm();
        if q_min > max_q {
            let c0 = (ki * (q_min + 1)) as f64 + p1 as f64 + n;
            tail += weight * lead_mod * (c0 / (1.0 - x) + k * x / (1.0 - x).powi(2));
            continue;
        }
        let mut row = Complex64::new(0.0, 0.0);
        let mut row_magnitude = 0.0;
        let mut a_pow = Complex64::new(1.0, 0.0);
        for qi in q_min..=max_q {
            let coeff = (ki * (qi + 1)) as f64 + p1 as f64 + n;
            row += a_pow * coeff;
            row_magnitude += a_pow.norm() * coeff;
            a_pow *= args.a;
        }
        sum += lead * row * weight;
        magnitude += lead_mod * row_magnitude * weight;
        let next_coeff = (ki * (max_q + 2)) as f64 + p1 as f64 + n;
        let steps = (max_q + 1 - q_min) as i32;
        tail += weight * lead_mod * x.powi(steps) * (next_coeff / (1.0 - x) + k * x / (1.0 - x).powi(2));
    }

    let m = max_p1 + 1;
    let first = row_weight(params, m) * contraction.powf(m as f64) * x.powf(-(n + k - 1.0) / k) * k / (1.0 - x).powi(2);
    let ratio = contraction * row_weight(params, m + 1) / row_weight(params, m);
    tail += if ratio < 1.0 { first / (1.0 - ratio) } else { f64::INFINITY };
    // floating-point rounding in the partial sum, which matters when the
    // tail bound is tight
    let terms = (max_p1 + 1) as f64 * (max_q - min_lattice_q(params, max_p1) + 1).max(1) as f64;
    tail += 4.0 * f64::EPSILON * terms.sqrt() * magnitude;

    Ok(KernelValue {
        value: sum,
        method: Method::Series,
        est_error: tail,
    })
}

/// Rational kernel `prefactor * sum_l P_l(b) a^l / ((1 - a)^2 (a - b^k)^(n+1))`
/// with coefficients precomputed once per parameter set.
#[derive(Debug, Clone)]
pub struct ClosedKernel {
    params: DomainParams,
    numerator: Vec<Vec<f64>>,
    prefactor: f64,
}

impl ClosedKernel {
    /// General-`n` closed form built from [`g_polynomials`].
    pub fn new(params: DomainParams) -> Self {
        let n = params.n();
        let prefactor = tgamma(n as f64 + 1.0) / (PI.powi(n as i32 + 1) * params.k() as f64);
        Self::from_polynomials(params, &g_polynomials(params), prefactor)
    }

    /// `n = 2` form with the explicit polynomials, which already carry `n!`.
    pub fn n2_explicit(k: u32) -> Self {
        let params = DomainParams::new(2, k).expect("k >= 1");
        let polys: Vec<IntPolynomial> = (0..=3)
            .map(|l| g_polynomial_n2_closed(l, k).expect("l within range"))
            .collect();
        Self::from_polynomials(params, &polys, 1.0 / (PI.powi(3) * k as f64))
    }

    fn from_polynomials(params: DomainParams, polys: &[IntPolynomial], prefactor: f64) -> Self {
        Self {
            params,
            numerator: polys.iter().map(IntPolynomial::to_f64).collect(),
            prefactor,
        }
    }

    pub fn params(&self) -> DomainParams {
        self.params
    }

    pub fn prefactor(&self) -> f64 {
        self.prefactor
    }

    /// `sum_l P_l(b) a^l` by nested Horner evaluation.
    pub fn numerator(&self, a: Complex64, b: Complex64) -> Complex64 {
        let horner = |coeffs: &[f64], x: Complex64| {
            coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
        };
        self.numerator
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, g| acc * a + horner(g, b))
    }

    /// Returns `(1 - a, a - b^k)`.
    pub fn singular_factors(&self, args: PairedArgs) -> (Complex64, Complex64) {
        (1.0 - args.a, args.a - args.b.powi(self.params.k() as i32))
    }

    pub fn evaluate(&self, args: PairedArgs, floor: f64) -> Result<Complex64> {
        let (left, right) = self.singular_factors(args);
        if left.norm() < floor {
            return Err(KernelError::Singular {
                factor: "1 - a",
                distance: left.norm(),
                floor,
            });
        }
        if right.norm() < floor {
            return Err(KernelError::Singular {
                factor: "a - b^k",
                distance: right.norm(),
                floor,
            });
        }
        Ok(self.evaluate_unchecked(args))
    }

    /// Evaluation without the singularity floor, for integration loops over
    /// interior samples.
    pub fn evaluate_unchecked(&self, args: PairedArgs) -> Complex64 {
        let (left, right) = self.singular_factors(args);
        let denominator = left * left * right.powi(self.params.n() as i32 + 1);
        self.prefactor * self.numerator(args.a, args.b) / denominator
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Form {
    General,
    NTwoExplicit,
}

type KernelCache = RwLock<HashMap<(DomainParams, Form), Arc<ClosedKernel>>>;

fn cached(params: DomainParams, form: Form) -> Arc<ClosedKernel> {
    static CACHE: OnceLock<KernelCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(kernel) = cache.read().expect("kernel cache poisoned").get(&(params, form)) {
        return Arc::clone(kernel);
    }
    let built = Arc::new(match form {
        Form::General => ClosedKernel::new(params),
        Form::NTwoExplicit => ClosedKernel::n2_explicit(params.k()),
    });
    let mut guard = cache.write().expect("kernel cache poisoned");
    Arc::clone(guard.entry((params, form)).or_insert(built))
}

/// Shared closed-form kernel for `params`, built on first use.
pub fn closed_kernel(params: DomainParams) -> Arc<ClosedKernel> {
    cached(params, Form::General)
}

pub fn kernel_closed(params: DomainParams, p: &Point, q: &Point) -> Result<KernelValue> {
    kernel_closed_with_floor(params, p, q, DEFAULT_SINGULARITY_FLOOR)
}

pub fn kernel_closed_with_floor(params: DomainParams, p: &Point, q: &Point, floor: f64) -> Result<KernelValue> {
    let args = check_points(params, p, q)?;
    Ok(KernelValue {
        value: closed_kernel(params).evaluate(args, floor)?,
        method: Method::Closed,
        est_error: 0.0,
    })
}

/// `k = 1` kernel `n! a / (pi^(n+1) (1 - a)^2 (a - b)^(n+1))` from paired
/// arguments.
pub fn k1_kernel_from_args(n: usize, args: PairedArgs) -> Complex64 {
    let factorial = tgamma(n as f64 + 1.0);
    let one_minus = 1.0 - args.a;
    factorial * args.a / (PI.powi(n as i32 + 1) * one_minus * one_minus * (args.a - args.b).powi(n as i32 + 1))
}

pub fn kernel_k1_closed(n: usize, p: &Point, q: &Point) -> Result<KernelValue> {
    let params = DomainParams::new(n, 1)?;
    let args = check_points(params, p, q)?;
    closed_kernel(params).evaluate(args, DEFAULT_SINGULARITY_FLOOR)?;
    Ok(KernelValue {
        value: k1_kernel_from_args(n, args),
        method: Method::SpecialCase,
        est_error: 0.0,
    })
}

/// `n = 2` kernel from the explicit polynomials.
pub fn kernel_n2_closed(k: u32, p: &Point, q: &Point) -> Result<KernelValue> {
    let params = DomainParams::new(2, k)?;
    let args = check_points(params, p, q)?;
    Ok(KernelValue {
        value: cached(params, Form::NTwoExplicit).evaluate(args, DEFAULT_SINGULARITY_FLOOR)?,
        method: Method::SpecialCase,
        est_error: 0.0,
    })
}

/// Dispatch on the evaluation route. `SpecialCase` is available for
/// `k = 1` and for `n = 2`.
pub fn kernel(params: DomainParams, p: &Point, q: &Point, method: Method) -> Result<KernelValue> {
    match method {
        Method::Closed => kernel_closed(params, p, q),
        Method::Series => kernel_series(params, p, q, DEFAULT_SERIES_TRUNCATION, DEFAULT_SERIES_TRUNCATION as i64),
        Method::SpecialCase if params.k() == 1 => kernel_k1_closed(params.n(), p, q),
        Method::SpecialCase if params.n() == 2 => kernel_n2_closed(params.k(), p, q),
        Method::SpecialCase => Err(KernelError::NoSpecialCase {
            n: params.n(),
            k: params.k(),
        }),
    }
}

/// k-th root whose argument lies in `[0, 2 pi / k)`.
pub fn sector_root(t: Complex64, k: u32) -> Complex64 {
    let arg = t.arg().rem_euclid(2.0 * PI);
    Complex64::from_polar(t.norm().powf(1.0 / k as f64), arg / k as f64)
}

/// Both sides of the transformation rule for `phi(z, w) = (z, w^k)` from
/// the `k = 1` domain onto the exponent-`k` domain:
/// `u(p) B_k(phi(p), q)` and `sum_j B_1(p, Phi_j(q)) conj(U_j(q))`.
pub fn bell_sides(k: u32, n: usize, p: &Point, q: &Point) -> Result<(Complex64, Complex64)> {
    let source = DomainParams::new(n, 1)?;
    let target = DomainParams::new(n, k)?;
    if p.w == Complex64::new(0.0, 0.0) || q.w == Complex64::new(0.0, 0.0) {
        return Err(KernelError::BranchLocus);
    }
    for (params, x) in [(source, p), (target, q)] {
        if x.z.len() != n {
            return Err(DomainError::DimensionMismatch {
                expected: n,
                found: x.z.len(),
            }
            .into());
        }
        if !contains(params, x) {
            return Err(DomainError::OutsideDomain.into());
        }
    }

    let jacobian = k as f64 * p.w.powi(k as i32 - 1);
    let image = Point::new(p.z.clone(), p.w.powi(k as i32));
    let lhs = jacobian * kernel_closed(target, &image, q)?.value;

    let root = sector_root(q.w, k);
    let zeta = Complex64::from_polar(1.0, 2.0 * PI / k as f64);
    let mut rhs = Complex64::new(0.0, 0.0);
    for j in 1..=k as i32 {
        let rotation = zeta.powi(j);
        let branch = Point::new(q.z.clone(), rotation * root);
        let inverse_jacobian = rotation * root / (q.w * k as f64);
        let args = pair(p, &branch)?;
        rhs += k1_kernel_from_args(n, args) * inverse_jacobian.conj();
    }
    Ok((lhs, rhs))
}

/// `|lhs - rhs|` of [`bell_sides`].
pub fn bell_identity_residual(k: u32, n: usize, p: &Point, q: &Point) -> Result<f64> {
    let (lhs, rhs) = bell_sides(k, n, p, q)?;
    Ok((lhs - rhs).norm())
}

/// `|B| |1 - a|^2 |a - b^k|^(n+1) / |a|^(n - (n-1)/k)`, evaluated from the
/// numerator so it stays finite near the singular set.
pub fn pointwise_bound_ratio(params: DomainParams, p: &Point, q: &Point) -> Result<f64> {
    let args = check_points(params, p, q)?;
    if args.a.norm() == 0.0 {
        return Err(KernelError::ZeroPairing);
    }
    let n = params.n() as f64;
    let exponent = n - (n - 1.0) / params.k() as f64;
    let kernel = closed_kernel(params);
    Ok(kernel.prefactor() * kernel.numerator(args.a, args.b).norm() / args.a.norm().powf(exponent))
}

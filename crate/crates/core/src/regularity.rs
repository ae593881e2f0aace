//! `L^p` mapping interval of the Bergman projection.
//!
//! Interval and threshold arithmetic is exact (`Rational64`); floating
//! point appears only inside integrals.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::Rng;
use rand_distr::{Beta, Distribution};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::radial::{integrate_weighted, periodic_trapezoid};
use crate::analysis::{sphere_moment_general, AnalysisError, IntegralEstimate, MonteCarlo};
use crate::domain::{boundary_distance_weight, contains, pair, sample_sphere, DomainError, DomainParams, PairedArgs, Point};
use crate::kernel::{closed_kernel, normalizing_constant, IndexPair, KernelError, DEFAULT_SINGULARITY_FLOOR};
use crate::special::{beta_unchecked, tgamma};

/// Relative standard error above which a projection estimate is flagged
/// inconclusive.
pub const INCONCLUSIVE_RELATIVE_ERROR: f64 = 0.25;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegularityError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("{name} = {value} is out of range: {requirement}")]
    OutOfRange {
        name: &'static str,
        value: String,
        requirement: String,
    },
}

pub type Result<T> = std::result::Result<T, RegularityError>;

fn params(k: u32, n: usize) -> Result<DomainParams> {
    Ok(DomainParams::new(n, k)?)
}

fn ratio(num: i64, den: i64) -> Rational64 {
    Rational64::new(num, den)
}

/// Open interval of exponents `p` for which the projection is bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalInterval {
    pub lower: Rational64,
    pub upper: Rational64,
}

impl CriticalInterval {
    pub fn contains(&self, p: Rational64) -> bool {
        self.lower < p && p < self.upper
    }
}

/// `((2k + 2n) / (k + n + 1), (2k + 2n) / (k + n - 1))`.
pub fn critical_interval(k: u32, n: usize) -> Result<CriticalInterval> {
    params(k, n)?;
    let (k, n) = (k as i64, n as i64);
    Ok(CriticalInterval {
        lower: ratio(2 * k + 2 * n, k + n + 1),
        upper: ratio(2 * k + 2 * n, k + n - 1),
    })
}

/// Hölder conjugate `p / (p - 1)`; `None` for `p <= 1`.
pub fn conjugate_exponent(p: Rational64) -> Option<Rational64> {
    (p > Rational64::one()).then(|| p / (p - Rational64::one()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LpClass {
    Bounded,
    Unbounded,
}

pub fn classify_exponent(k: u32, n: usize, p: Rational64) -> Result<LpClass> {
    Ok(if critical_interval(k, n)?.contains(p) {
        LpClass::Bounded
    } else {
        LpClass::Unbounded
    })
}

/// `p` and its conjugate receive the same classification.
pub fn duality_consistent(k: u32, n: usize, p: Rational64) -> Result<bool> {
    let Some(q) = conjugate_exponent(p) else {
        return Ok(true);
    };
    Ok(classify_exponent(k, n, p)? == classify_exponent(k, n, q)?)
}

/// `f = z_1^m conj(w)^l` with `m = k l - k - n + 1`, and the constant `C` of
/// its projection `P f = C z_1^m / w^l`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestFunctionSpec {
    pub m: u64,
    pub l: u64,
    pub constant: f64,
}

impl TestFunctionSpec {
    pub fn eval(&self, x: &Point) -> Complex64 {
        x.z[0].powi(self.m as i32) * x.w.conj().powi(self.l as i32)
    }

    pub fn projected(&self, x: &Point) -> Complex64 {
        self.constant * x.z[0].powi(self.m as i32) / x.w.powi(self.l as i32)
    }
}

/// Smallest `l >= 1` with `m >= 0`, i.e. `l = 1 + ceil((n - 1) / k)`, and
/// `C = pi^(n+1) m! B((m+n)/k, 2) / (k N(m, -l) Gamma(n+m))`.
pub fn test_function(k: u32, n: usize) -> Result<TestFunctionSpec> {
    let pp = params(k, n)?;
    let (ki, ni) = (k as i64, n as i64);
    let l = 1 + (ni - 1 + ki - 1) / ki;
    let m = (ki * l - ki - ni + 1) as u64;
    let norm = normalizing_constant(pp, IndexPair::new(m, -l))?;
    let mf = m as f64;
    let constant = PI.powi(n as i32 + 1) * tgamma(mf + 1.0) * beta_unchecked((mf + n as f64) / k as f64, 2.0)
        / (k as f64 * norm * tgamma(n as f64 + mf));
    Ok(TestFunctionSpec { m, l: l as u64, constant })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectionEstimate {
    pub estimate: IntegralEstimate,
    pub expected: Complex64,
    /// Set when the Monte Carlo error exceeds a quarter of the expected
    /// magnitude, so the comparison carries no information.
    pub inconclusive: bool,
}

impl ProjectionEstimate {
    pub fn within_sigmas(&self, sigmas: f64) -> bool {
        self.estimate.within_sigmas(self.expected, sigmas)
    }
}

/// Monte Carlo estimate of `P f (x) = int B(x, y) f(y) dV(y)`.
pub fn project_test_function(
    k: u32,
    n: usize,
    spec: &TestFunctionSpec,
    eval_point: &Point,
    mc: &MonteCarlo,
) -> Result<ProjectionEstimate> {
    let pp = params(k, n)?;
    if eval_point.z.len() != n {
        return Err(DomainError::DimensionMismatch {
            expected: n,
            found: eval_point.z.len(),
        }
        .into());
    }
    if !contains(pp, eval_point) {
        return Err(DomainError::OutsideDomain.into());
    }
    let kernel = closed_kernel(pp);
    kernel.evaluate(pair(eval_point, eval_point)?, DEFAULT_SINGULARITY_FLOOR)?;
    let estimate = mc.integrate_uniform(pp, |y| {
        kernel.evaluate_unchecked(pair(eval_point, y).expect("matching dimensions")) * spec.eval(y)
    })?;
    let expected = spec.projected(eval_point);
    let scale = if expected.norm() > 0.0 {
        expected.norm()
    } else {
        spec.constant / eval_point.w.norm().powi(spec.l as i32)
    };
    Ok(ProjectionEstimate {
        estimate,
        expected,
        inconclusive: estimate.std_error > INCONCLUSIVE_RELATIVE_ERROR * scale,
    })
}

/// Radial exponent `e(p) = -l p + (2n + m p) / k + 1` of `|P f|^p`;
/// the norm is finite iff `e(p) > -1`.
pub fn divergence_exponent(k: u32, n: usize, spec: &TestFunctionSpec, p: Rational64) -> Rational64 {
    let (k, n) = (k as i64, n as i64);
    let (m, l) = (spec.m as i64, spec.l as i64);
    -Rational64::from(l) * p + (Rational64::from(2 * n) + Rational64::from(m) * p) / k + 1
}

/// The `p` at which `e(p) = -1`: `(2k + 2n) / (k l - m)`.
pub fn divergence_threshold(k: u32, n: usize, spec: &TestFunctionSpec) -> Rational64 {
    let (k, n) = (k as i64, n as i64);
    ratio(2 * k + 2 * n, k * spec.l as i64 - spec.m as i64)
}

/// `int_{|w| > delta} |P f|^p dV` in closed form:
/// `C^p sigma(m p / 2) / (2n + m p) * 2 pi * int_delta^1 r^e(p) dr`.
pub fn truncated_lp_norm(k: u32, n: usize, spec: &TestFunctionSpec, p: Rational64, delta: f64) -> Result<f64> {
    params(k, n)?;
    if !(delta > 0.0 && delta < 1.0) {
        return Err(RegularityError::OutOfRange {
            name: "delta",
            value: delta.to_string(),
            requirement: "0 < delta < 1".into(),
        });
    }
    if p < Rational64::one() {
        return Err(RegularityError::OutOfRange {
            name: "p",
            value: p.to_string(),
            requirement: "p >= 1".into(),
        });
    }
    let pf = rational_to_f64(p);
    let mp = spec.m as f64 * pf;
    let angular = sphere_moment_general(n, mp / 2.0) / (2.0 * n as f64 + mp);
    let e = divergence_exponent(k, n, spec, p);
    let radial = if e == -Rational64::one() {
        -delta.ln()
    } else {
        let s = rational_to_f64(e + 1);
        (1.0 - delta.powf(s)) / s
    };
    Ok(spec.constant.powf(pf) * angular * 2.0 * PI * radial)
}

pub fn rational_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `[(k + n - 1) / (2k), (k + n + 1) / (2k))`.
pub fn schur_epsilon_range(k: u32, n: usize) -> Result<(Rational64, Rational64)> {
    params(k, n)?;
    let (k, n) = (k as i64, n as i64);
    Ok((ratio(k + n - 1, 2 * k), ratio(k + n + 1, 2 * k)))
}

/// Image of the exponent range `[a, b)` under the Schur test:
/// `((a + b) / b, (a + b) / a)`.
pub fn schur_to_interval(k: u32, n: usize) -> Result<CriticalInterval> {
    let (a, b) = schur_epsilon_range(k, n)?;
    Ok(CriticalInterval {
        lower: (a + b) / b,
        upper: (a + b) / a,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchurEstimate {
    /// Estimate of `int |B(x, .)| h^(-eps) dV`.
    pub integral: IntegralEstimate,
    pub ratio: f64,
    pub std_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "state")]
pub enum SchurOutcome {
    Finite(SchurEstimate),
    /// The integral is infinite; `reason` names the offending factor.
    Divergent { reason: String },
}

impl SchurOutcome {
    pub fn ratio(&self) -> f64 {
        match self {
            Self::Finite(e) => e.ratio,
            Self::Divergent { .. } => f64::INFINITY,
        }
    }
}

fn check_schur_eps(k: u32, n: usize, eps: f64) -> Result<()> {
    let (a, b) = schur_epsilon_range(k, n)?;
    let (af, bf) = (rational_to_f64(a), rational_to_f64(b));
    if !(eps >= af && eps < bf) {
        return Err(RegularityError::OutOfRange {
            name: "eps",
            value: eps.to_string(),
            requirement: format!("{a} <= eps < {b}"),
        });
    }
    Ok(())
}

const BOUNDARY_DIVERGENCE: &str =
    "eps >= 1: (1 - |w|^2)^(-eps) is not integrable at |w| = 1 where |B(x, .)| stays bounded away from 0";

/// Mass of `(1 - |zeta|^(2k))^(-eps)` over the unit ball of `C^n`.
fn ball_weight_mass(n: usize, k: u32, eps: f64) -> f64 {
    let (nf, kf) = (n as f64, k as f64);
    2.0 * PI.powi(n as i32) / tgamma(nf) * beta_unchecked(nf / kf, 1.0 - eps) / (2.0 * kf)
}

/// `int |B(x, y)| h(y)^(-eps) dV(y) / h(x)^(-eps)` by importance sampling.
///
/// Writing `z = |w|^(1/k) zeta` with `zeta` in the unit ball factors
/// `h = |w|^2 (1 - |zeta|^(2k)) (1 - |w|^2)`. Points are drawn with density
/// proportional to `|w|^(-g) h^(-eps)`, `g = (k + n - 1) / k`:
/// `|w|^2 ~ Beta(1 + n/k - g/2 - eps, 1 - eps)` and
/// `|zeta|^(2k) ~ Beta(n/k, 1 - eps)`. The remaining weight
/// `|B(x, y)| |w|^g` is bounded because
/// `|B| <~ |a|^(n - (n-1)/k) / (|1 - a|^2 |a - b^k|^(n+1))` and
/// `|a - b^k| >= |w_y| (|w_x| - |z_x|^k)`.
pub fn schur_ratio(k: u32, n: usize, eps: f64, eval_point: &Point, mc: &MonteCarlo) -> Result<SchurOutcome> {
    let pp = params(k, n)?;
    check_schur_eps(k, n, eps)?;
    let h_x = boundary_distance_weight(pp, eval_point)?;
    if eps >= 1.0 {
        return Ok(SchurOutcome::Divergent {
            reason: BOUNDARY_DIVERGENCE.into(),
        });
    }
    let (nf, kf) = (n as f64, k as f64);
    let g = (kf + nf - 1.0) / kf;
    let w_shape = 1.0 + nf / kf - g / 2.0 - eps;
    let w_law = Beta::new(w_shape, 1.0 - eps).expect("positive shapes inside the range");
    let zeta_law = Beta::new(nf / kf, 1.0 - eps).expect("positive shapes");
    let mass = PI * beta_unchecked(w_shape, 1.0 - eps) * ball_weight_mass(n, k, eps);
    let kernel = closed_kernel(pp);
    kernel.evaluate(pair(eval_point, eval_point)?, DEFAULT_SINGULARITY_FLOOR)?;

    let mean = mc.run(|rng| {
        let u: f64 = w_law.sample(rng);
        let w_mod = u.sqrt();
        let w = Complex64::from_polar(w_mod, 2.0 * PI * rng.random::<f64>());
        let v: f64 = zeta_law.sample(rng);
        let radius = v.powf(1.0 / (2.0 * kf)) * w_mod.powf(1.0 / kf);
        let z: Vec<Complex64> = sample_sphere(n, rng).into_iter().map(|c| c * radius).collect();
        let y = Point::new(z, w);
        let b = kernel.evaluate_unchecked(pair(eval_point, &y).expect("matching dimensions"));
        Complex64::new(b.norm() * w_mod.powf(g), 0.0)
    })?;
    let integral = mean.scaled(mass);
    let growth = h_x.powf(eps);
    Ok(SchurOutcome::Finite(SchurEstimate {
        integral,
        ratio: integral.value.re * growth,
        std_error: integral.std_error * growth,
    }))
}

/// [`schur_ratio`] at `x = (0, w_x)` by quadrature. There `b = 0`, the
/// kernel depends on `w_y` alone, and the `zeta` integral is exact, leaving
/// `int_0^1 r^(1 + 2n/k - 2 eps) (1 - r^2)^(-eps) int_0^(2 pi) |B(w_x r e^{-it})| dt dr`
/// times the mass of `(1 - |zeta|^(2k))^(-eps)` over the ball.
pub fn schur_axis_ratio(k: u32, n: usize, eps: f64, w_x: f64) -> Result<SchurOutcome> {
    let pp = params(k, n)?;
    check_schur_eps(k, n, eps)?;
    let x = Point::new(vec![Complex64::zero(); n], Complex64::new(w_x, 0.0));
    let h_x = boundary_distance_weight(pp, &x)?;
    if eps >= 1.0 {
        return Ok(SchurOutcome::Divergent {
            reason: BOUNDARY_DIVERGENCE.into(),
        });
    }
    let kernel = closed_kernel(pp);
    let (nf, kf) = (n as f64, k as f64);
    let modulus = |a: Complex64| {
        kernel
            .evaluate_unchecked(PairedArgs {
                a,
                b: Complex64::zero(),
            })
            .norm()
    };
    // |B| ~ |a|^(-c) as a -> 0 with c = ceil(n / k); factor r^c into the
    // smooth part so the quadrature sees a bounded integrand
    let c = (n as u32).div_ceil(k) as f64;
    let smooth = |r: f64| r.powf(c) * periodic_trapezoid(|t| modulus(Complex64::from_polar(w_x * r, -t)), 256);
    let alpha = 1.0 + 2.0 * nf / kf - 2.0 * eps - c;
    let (value, err, evals) = integrate_weighted(smooth, alpha, eps, 1e-12);
    let mass = ball_weight_mass(n, k, eps);
    let integral = IntegralEstimate {
        value: Complex64::new(value * mass, 0.0),
        std_error: err * mass,
        samples: evals as u64,
        method: crate::analysis::IntegrationMethod::RadialQuadrature,
        seed: None,
    };
    let growth = h_x.powf(eps);
    Ok(SchurOutcome::Finite(SchurEstimate {
        integral,
        ratio: integral.value.re * growth,
        std_error: integral.std_error * growth,
    }))
}

/// 3 x 3 grid of evaluation points: `|w| in {0.3, 0.6, 0.9}` and
/// `|z| / |w|^(1/k) in {0, 0.5, 0.9}`, with `z` along the first axis.
pub fn schur_grid(k: u32, n: usize) -> Vec<Point> {
    let mut points = Vec::with_capacity(9);
    for w in [0.3, 0.6, 0.9f64] {
        for fraction in [0.0, 0.5, 0.9] {
            let mut z = vec![Complex64::zero(); n];
            z[0] = Complex64::new(fraction * w.powf(1.0 / k as f64), 0.0);
            points.push(Point::new(z, Complex64::new(w, 0.0)));
        }
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::radial::integrate;

    #[test]
    fn interval_examples() {
        let i = critical_interval(1, 1).unwrap();
        assert_eq!((i.lower, i.upper), (ratio(4, 3), ratio(4, 1)));
        let i = critical_interval(2, 1).unwrap();
        assert_eq!((i.lower, i.upper), (ratio(3, 2), ratio(3, 1)));
        assert!(critical_interval(0, 1).is_err());
    }

    #[test]
    fn interval_endpoints_are_conjugate() {
        for k in 1..=12 {
            for n in 1..=12 {
                let i = critical_interval(k, n).unwrap();
                assert_eq!(i.lower.recip() + i.upper.recip(), Rational64::one());
                assert!(Rational64::one() < i.lower && i.lower < ratio(2, 1) && ratio(2, 1) < i.upper);
                assert_eq!(conjugate_exponent(i.lower), Some(i.upper));
            }
        }
    }

    #[test]
    fn duality_examples() {
        for p in [ratio(5, 4), ratio(4, 3), ratio(2, 1), ratio(7, 2), ratio(4, 1), ratio(9, 1)] {
            assert!(duality_consistent(1, 1, p).unwrap());
        }
        assert_eq!(classify_exponent(1, 1, ratio(4, 1)).unwrap(), LpClass::Unbounded);
        assert_eq!(classify_exponent(1, 1, ratio(399, 100)).unwrap(), LpClass::Bounded);
    }

    #[test]
    fn test_function_examples() {
        let s = test_function(1, 1).unwrap();
        assert_eq!((s.m, s.l), (0, 1));
        let s = test_function(2, 3).unwrap();
        assert_eq!((s.m, s.l), (0, 2));
        for k in 1..=6u32 {
            for n in 1..=6usize {
                let s = test_function(k, n).unwrap();
                assert!(s.l >= 1);
                assert_eq!(s.m as i64 + k as i64 * (1 - s.l as i64), 1 - n as i64);
                // minimality: l - 1 would force m < 0
                assert!(k as i64 * (s.l as i64 - 1) - k as i64 - n as i64 + 1 < 0);
            }
        }
    }

    #[test]
    fn projection_constant_is_norm_ratio() {
        // C = <f, z_1^m w^-l> / N(m, -l) = N(m, 0) / N(m, -l)
        for k in 1..=4u32 {
            for n in 1..=4usize {
                let pp = DomainParams::new(n, k).unwrap();
                let s = test_function(k, n).unwrap();
                let expected = normalizing_constant(pp, IndexPair::new(s.m, 0)).unwrap()
                    / normalizing_constant(pp, IndexPair::new(s.m, -(s.l as i64))).unwrap();
                assert!((s.constant - expected).abs() < 1e-13 * expected);
            }
        }
    }

    #[test]
    fn divergence_exponent_examples() {
        let s = test_function(1, 1).unwrap();
        assert_eq!(divergence_exponent(1, 1, &s, ratio(4, 1)), ratio(-1, 1));
        assert_eq!(divergence_exponent(1, 1, &s, ratio(2, 1)), ratio(1, 1));
        let s = test_function(3, 2).unwrap();
        assert_eq!(divergence_threshold(3, 2, &s), ratio(5, 2));
        assert_eq!(divergence_exponent(3, 2, &s, ratio(5, 2)), ratio(-1, 1));
    }

    #[test]
    fn truncated_norm_matches_quadrature() {
        for (k, n, p) in [(1u32, 1usize, ratio(3, 1)), (2, 2, ratio(5, 2)), (3, 2, ratio(7, 3))] {
            let pp = DomainParams::new(n, k).unwrap();
            let s = test_function(k, n).unwrap();
            let delta = 0.2;
            let pf = rational_to_f64(p);
            // |Pf|^p = C^p |z_1|^(mp) |w|^(-lp), inner integral over |z| < |w|^(1/k)
            let sigma = sphere_moment_general(n, s.m as f64 * pf / 2.0);
            let outer = |r: f64| {
                let radius = r.powf(1.0 / k as f64);
                let (inner, _, _) = integrate(|t| t.powf(s.m as f64 * pf + 2.0 * n as f64 - 1.0), 0.0, radius, 1e-14);
                2.0 * PI * r * r.powf(-(s.l as f64) * pf) * sigma * inner
            };
            let (quad, _, _) = integrate(outer, delta, 1.0, 1e-12);
            let closed = truncated_lp_norm(k, n, &s, p, delta).unwrap() / s.constant.powf(pf);
            assert!((quad - closed).abs() < 1e-8 * closed, "{quad} vs {closed}");
            assert!(pp.n() == n);
        }
    }

    #[test]
    fn truncated_norm_validates_arguments() {
        let s = test_function(1, 1).unwrap();
        assert!(truncated_lp_norm(1, 1, &s, ratio(2, 1), 0.0).is_err());
        assert!(truncated_lp_norm(1, 1, &s, ratio(1, 2), 0.5).is_err());
    }

    #[test]
    fn schur_range_and_interval() {
        assert_eq!(schur_epsilon_range(1, 1).unwrap(), (ratio(1, 2), ratio(3, 2)));
        for k in 1..=10 {
            for n in 1..=10 {
                assert_eq!(schur_to_interval(k, n).unwrap(), critical_interval(k, n).unwrap());
            }
        }
    }

    #[test]
    fn schur_rejects_out_of_range_and_flags_divergence() {
        let x = Point::real(&[0.1], 0.5);
        let mc = MonteCarlo::new(100, 0);
        assert!(schur_ratio(1, 1, 0.4, &x, &mc).is_err());
        assert!(schur_ratio(1, 1, 1.5, &x, &mc).is_err());
        assert!(matches!(schur_ratio(1, 1, 1.2, &x, &mc).unwrap(), SchurOutcome::Divergent { .. }));
    }

    #[test]
    fn schur_mc_matches_axis_quadrature() {
        let mc = MonteCarlo::new(100_000, 42);
        for (k, n, eps) in [(1u32, 1usize, 0.7), (2, 1, 0.6), (2, 2, 0.8)] {
            let x = Point::new(vec![Complex64::zero(); n], Complex64::new(0.6, 0.0));
            let SchurOutcome::Finite(mc_est) = schur_ratio(k, n, eps, &x, &mc).unwrap() else { panic!() };
            let SchurOutcome::Finite(quad) = schur_axis_ratio(k, n, eps, 0.6).unwrap() else { panic!() };
            let diff = (mc_est.ratio - quad.ratio).abs();
            assert!(diff <= 3.0 * mc_est.std_error, "k={k} n={n}: {} vs {}", mc_est.ratio, quad.ratio);
        }
    }

    #[test]
    fn projection_rotates_with_w() {
        let s = test_function(1, 1).unwrap();
        let x = Point::new(vec![Complex64::new(0.1, 0.0)], Complex64::new(0.5, 0.0));
        let phi = 0.7;
        let y = x.rotated(&[0.0], phi);
        let ratio = s.projected(&y) / s.projected(&x);
        assert!((ratio - Complex64::from_polar(1.0, -(s.l as f64) * phi)).norm() < 1e-14);
        let s = test_function(2, 2).unwrap();
        assert_eq!(s.m, 1);
        assert_eq!(s.projected(&Point::real(&[0.0, 0.1], 0.5)), Complex64::zero());
    }
}

//! Radial reduction with one-dimensional quadrature.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::moments::sphere_moment;
use super::{AnalysisError, IntegralEstimate, IntegrationMethod, Result};
use crate::domain::DomainParams;

/// Double-exponential quadrature on `[a, b]`; tolerates integrable
/// algebraic endpoint singularities. Returns `(value, error estimate,
/// evaluations)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tolerance: f64) -> (f64, f64, u32) {
    let out = quadrature::double_exponential::integrate(f, a, b, tolerance);
    (out.integral, out.error_estimate, out.num_function_evaluations)
}

/// `int_0^1 r^alpha (1 - r^2)^(-eps) g(r) dr` for `alpha > -1`, `eps < 1`
/// and bounded `g`.
///
/// Both endpoint singularities are removed before quadrature: on `[0, 1/2]`
/// by `r = t^(1/(alpha+1))`, on `[1/2, 1]` by `1 - r^2 = s^(1/(1-eps))`.
/// The transformed integrands are bounded.
pub fn integrate_weighted<G: Fn(f64) -> f64>(g: G, alpha: f64, eps: f64, tolerance: f64) -> (f64, f64, u32) {
    assert!(alpha > -1.0 && eps < 1.0, "weight not integrable: alpha={alpha}, eps={eps}");
    let a1 = alpha + 1.0;
    let near_zero = |t: f64| {
        let r = t.powf(1.0 / a1);
        (1.0 - r * r).powf(-eps) * g(r) / a1
    };
    let e1 = 1.0 - eps;
    let near_one = |s: f64| {
        let r = (1.0 - s.powf(1.0 / e1)).sqrt();
        r.powf(alpha - 1.0) * g(r) / (2.0 * e1)
    };
    let (left, left_err, left_n) = integrate(near_zero, 0.0, 0.5f64.powf(a1), tolerance);
    let (right, right_err, right_n) = integrate(near_one, 0.0, 0.75f64.powf(e1), tolerance);
    (left + right, left_err + right_err, left_n + right_n)
}

/// Trapezoid rule on a full period; spectrally accurate for smooth periodic
/// integrands.
pub fn periodic_trapezoid<F: Fn(f64) -> f64>(f: F, nodes: usize) -> f64 {
    let h = 2.0 * PI / nodes as f64;
    (0..nodes).map(|j| f(j as f64 * h)).sum::<f64>() * h
}

/// `integral over the domain of |z^p|^2 |w|^(2q)`, with the angular part from
/// the sphere moment and both radial integrals by quadrature:
/// `2 pi * int_0^1 rho^(2q+1) sigma_p int_0^(rho^(1/k)) r^(2|p|+2n-1) dr drho`.
pub fn monomial_l2_norm_quadrature(params: DomainParams, p: &[u64], q: i64) -> Result<IntegralEstimate> {
    let n = params.n() as i32;
    let k = params.k() as f64;
    let abs_p: u64 = p.iter().sum();
    if params.k() as i64 * (q + 1) + abs_p as i64 + n as i64 <= 0 {
        return Err(AnalysisError::Divergent {
            what: format!("L^2 norm of z^{p:?} w^{q}"),
        });
    }
    let sigma = sphere_moment(params.n(), p)?;
    // inner: int_0^R r^(2|p|+2n-1) dr = R^(2|p|+2n) int_0^1 t^(2|p|+2n-1) dt
    let z_power = 2 * abs_p as i32 + 2 * n - 1;
    let (inner, inner_err, inner_evals) = integrate(|t| t.powi(z_power), 0.0, 1.0, 1e-15);
    // outer: 2 pi sigma int_0^1 rho^(2q+1) rho^((2|p|+2n)/k) drho
    let alpha = 2.0 * q as f64 + 1.0 + (2 * abs_p as i32 + 2 * n) as f64 / k;
    let (outer, outer_err, outer_evals) = integrate_weighted(|_| 1.0, alpha, 0.0, 1e-14);
    let scale = 2.0 * PI * sigma;
    let value = scale * inner * outer;
    Ok(IntegralEstimate {
        value: Complex64::new(value, 0.0),
        std_error: (scale * (inner_err * outer + outer_err * inner)).max(f64::EPSILON * value.abs()),
        samples: (inner_evals + outer_evals) as u64,
        method: IntegrationMethod::RadialQuadrature,
        seed: None,
    })
}

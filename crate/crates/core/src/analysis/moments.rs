//! Closed-form moments over spheres and the domain.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{AnalysisError, IntegralEstimate, MonteCarlo, Result};
use crate::domain::{sample_sphere, DomainError, DomainParams};
use crate::special::{lgamma, tgamma};
use num_complex::Complex64;

/// Largest argument for which Gamma is evaluated directly rather than in
/// log space.
const DIRECT_GAMMA_LIMIT: f64 = 170.0;

/// `integral over S^(2n-1) of |zeta^v|^2 = 2 v! pi^n / Gamma(n + |v|)`.
pub fn sphere_moment(n: usize, v: &[u64]) -> Result<f64> {
    if v.len() != n {
        return Err(DomainError::DimensionMismatch {
            expected: n,
            found: v.len(),
        }
        .into());
    }
    if n == 0 {
        return Err(DomainError::InvalidParams { n, k: 1 }.into());
    }
    let total: u64 = v.iter().sum();
    let top = n as f64 + total as f64;
    let value = if top <= DIRECT_GAMMA_LIMIT {
        let numerator: f64 = v.iter().map(|&vi| tgamma(vi as f64 + 1.0)).product();
        2.0 * numerator * PI.powi(n as i32) / tgamma(top)
    } else {
        let log_num: f64 = v.iter().map(|&vi| lgamma(vi as f64 + 1.0)).sum();
        2.0 * PI.powi(n as i32) * (log_num - lgamma(top)).exp()
    };
    Ok(value)
}

/// [`sphere_moment`] at `v = (p1, 0, ..., 0)`.
pub fn sphere_moment_axis(n: usize, p1: u64) -> f64 {
    let mut v = vec![0; n];
    v[0] = p1;
    sphere_moment(n, &v).expect("n >= 1 and matching length")
}

/// `integral over S^(2n-1) of |zeta_1|^(2 v)` for real `v > -1`:
/// `2 Gamma(v + 1) pi^n / Gamma(n + v)`.
pub fn sphere_moment_general(n: usize, v: f64) -> f64 {
    let log = lgamma(v + 1.0) - lgamma(n as f64 + v);
    2.0 * PI.powi(n as i32) * log.exp()
}

/// `integral over the domain of |z^p|^2 |w|^(2q)` given `|p|` and the sphere
/// moment of `p`:
/// `sphere / (2 (|p| + n)) * pi k / (k (q + 1) + |p| + n)`.
/// `None` when the integral diverges.
pub fn radial_monomial_norm(params: DomainParams, abs_p: u64, sphere: f64, q: i64) -> Option<f64> {
    let n = params.n() as i64;
    let k = params.k() as i64;
    let denominator = k * (q + 1) + abs_p as i64 + n;
    if denominator <= 0 {
        return None;
    }
    let z_part = sphere / (2 * (abs_p as i64 + n)) as f64;
    Some(z_part * PI * k as f64 / denominator as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "state", content = "value")]
pub enum MonomialNorm {
    Finite(f64),
    Divergent,
}

impl MonomialNorm {
    pub fn finite(self) -> Option<f64> {
        match self {
            Self::Finite(x) => Some(x),
            Self::Divergent => None,
        }
    }
}

/// Squared `L^2` norm of `z^p w^q` over the domain.
pub fn monomial_l2_norm(params: DomainParams, p: &[u64], q: i64) -> Result<MonomialNorm> {
    let sphere = sphere_moment(params.n(), p)?;
    let abs_p = p.iter().sum();
    Ok(match radial_monomial_norm(params, abs_p, sphere, q) {
        Some(x) => MonomialNorm::Finite(x),
        None => MonomialNorm::Divergent,
    })
}

/// Monte Carlo estimate of [`sphere_moment`] from uniform points on the
/// sphere, scaled by the sphere's area `2 pi^n / (n-1)!`.
pub fn sphere_moment_mc(n: usize, v: &[u64], mc: &MonteCarlo) -> Result<IntegralEstimate> {
    if v.len() != n {
        return Err(AnalysisError::Domain(DomainError::DimensionMismatch {
            expected: n,
            found: v.len(),
        }));
    }
    let area = 2.0 * PI.powi(n as i32) / tgamma(n as f64);
    let exps: Vec<i32> = v.iter().map(|&x| x as i32).collect();
    let estimate = mc.run(|rng| {
        let zeta = sample_sphere(n, rng);
        let value: f64 = zeta.iter().zip(&exps).map(|(c, &e)| c.norm_sqr().powi(e)).product();
        Complex64::new(value, 0.0)
    })?;
    Ok(estimate.scaled(area))
}

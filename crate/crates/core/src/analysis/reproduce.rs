//! Reproducing property `f(x) = integral of B(x, y) f(y) dV(y)` for
//! square-integrable holomorphic monomials, checked by Monte Carlo.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{AnalysisError, IntegralEstimate, MonteCarlo, Result};
use crate::domain::{contains, pair, DomainError, DomainParams, Point};
use crate::kernel::{closed_kernel, DEFAULT_SINGULARITY_FLOOR};

/// Holomorphic monomial `z^p w^q` (negative `q` allowed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Monomial {
    pub p: Vec<u64>,
    pub q: i64,
}

impl Monomial {
    pub fn new(p: Vec<u64>, q: i64) -> Self {
        Self { p, q }
    }

    pub fn eval(&self, x: &Point) -> Complex64 {
        let z: Complex64 = x.z.iter().zip(&self.p).map(|(c, &e)| c.powi(e as i32)).product();
        z * x.w.powi(self.q as i32)
    }

    pub fn abs_p(&self) -> u64 {
        self.p.iter().sum()
    }

    pub fn is_square_integrable(&self, params: DomainParams) -> bool {
        params.k() as i64 * (self.q + 1) + self.abs_p() as i64 + params.n() as i64 > 0
    }

    /// The uniform-sampling estimator of `int B(x, .) f` has finite
    /// variance when `|p| + k q + 1 > 0`.
    pub fn has_finite_mc_variance(&self, params: DomainParams) -> bool {
        self.abs_p() as i64 + params.k() as i64 * self.q + 1 > 0
    }

    /// Five test monomials in dimension `n`: `1, w, z_1, z_1 w` and
    /// `z_1^k / w`.
    pub fn standard_set(params: DomainParams) -> Vec<Self> {
        let n = params.n();
        let e1 = |power: u64| {
            let mut p = vec![0; n];
            p[0] = power;
            p
        };
        vec![
            Self::new(e1(0), 0),
            Self::new(e1(0), 1),
            Self::new(e1(1), 0),
            Self::new(e1(1), 1),
            Self::new(e1(params.k() as u64), -1),
        ]
    }

    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self
            .p
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("z{}", i + 1) } else { format!("z{}^{e}", i + 1) })
            .collect();
        match self.q {
            0 => {}
            1 => parts.push("w".into()),
            q => parts.push(format!("w^{q}")),
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReproduceReport {
    pub estimate: IntegralEstimate,
    pub truth: Complex64,
    pub relative_error: f64,
    /// `std_error / |truth|`, the one-sigma relative uncertainty.
    pub relative_std_error: f64,
}

impl ReproduceReport {
    pub fn within_sigmas(&self, sigmas: f64) -> bool {
        self.relative_error <= sigmas * self.relative_std_error
    }
}

pub fn reproduce_check(
    params: DomainParams,
    monomial: &Monomial,
    eval_point: &Point,
    mc: &MonteCarlo,
) -> Result<ReproduceReport> {
    if monomial.p.len() != params.n() {
        return Err(DomainError::DimensionMismatch {
            expected: params.n(),
            found: monomial.p.len(),
        }
        .into());
    }
    if !monomial.is_square_integrable(params) {
        return Err(AnalysisError::Divergent {
            what: format!("L^2 norm of {}", monomial.label()),
        });
    }
    if !contains(params, eval_point) {
        return Err(DomainError::OutsideDomain.into());
    }
    let kernel = closed_kernel(params);
    // Validates the distance of the evaluation point from the singular set.
    kernel.evaluate(pair(eval_point, eval_point)?, DEFAULT_SINGULARITY_FLOOR)?;
    let estimate = mc.integrate_uniform(params, |y| {
        let args = pair(eval_point, y).expect("matching dimensions");
        kernel.evaluate_unchecked(args) * monomial.eval(y)
    })?;
    let truth = monomial.eval(eval_point);
    Ok(ReproduceReport {
        estimate,
        truth,
        relative_error: (estimate.value - truth).norm() / truth.norm(),
        relative_std_error: estimate.std_error / truth.norm(),
    })
}

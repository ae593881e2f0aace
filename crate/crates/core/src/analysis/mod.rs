//! Integration engine and the integral identities built on it.
//!
//! Two backends: sharded Monte Carlo ([`MonteCarlo`]) for general
//! integrands, and radial reduction with one-dimensional double-exponential
//! quadrature ([`radial`]) for monomial-type integrands. Closed-form moments
//! live in [`moments`]; the reproducing-property check and the two weighted
//! estimates on the disk and the ball are in [`reproduce`] and [`estimates`].

pub mod estimates;
pub mod moments;
pub mod monte_carlo;
pub mod radial;
pub mod reproduce;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domain::DomainError;
use crate::kernel::KernelError;

pub use estimates::{
    ball_coefficient, ball_estimate_ratio, ball_integral_series, disk_estimate_ratio, disk_integral_series,
    EstimateRatio,
};
pub use moments::{
    monomial_l2_norm, radial_monomial_norm, sphere_moment, sphere_moment_axis, sphere_moment_general, MonomialNorm,
};
pub use monte_carlo::{MonteCarlo, DEFAULT_SHARDS};
pub use reproduce::{reproduce_check, Monomial, ReproduceReport};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("{what} diverges")]
    Divergent { what: String },
    #[error("parameter {name} = {value} is out of range: {requirement}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },
    #[error("Monte Carlo needs at least two samples and one shard (got {samples} samples, {shards} shards)")]
    TooFewSamples { samples: u64, shards: u64 },
}

pub type Result<T> = std::result::Result<T, AnalysisError>;

pub(crate) fn require(name: &'static str, value: f64, ok: bool, requirement: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(AnalysisError::OutOfRange {
            name,
            value,
            requirement,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntegrationMethod {
    MonteCarlo,
    RadialQuadrature,
    ExactMoment,
}

/// A numerical integral with its uncertainty.
///
/// `std_error` is zero exactly for `ExactMoment`. For Monte Carlo it is
/// `sqrt(Var Re + Var Im) / sqrt(samples)`; for quadrature it is the
/// integrator's error estimate. `seed` is recorded for Monte Carlo runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegralEstimate {
    pub value: Complex64,
    pub std_error: f64,
    pub samples: u64,
    pub method: IntegrationMethod,
    pub seed: Option<u64>,
}

impl IntegralEstimate {
    pub fn exact(value: f64) -> Self {
        Self {
            value: Complex64::new(value, 0.0),
            std_error: 0.0,
            samples: 0,
            method: IntegrationMethod::ExactMoment,
            seed: None,
        }
    }

    /// Number of standard errors separating the estimate from `truth`.
    pub fn z_score(&self, truth: Complex64) -> f64 {
        (self.value - truth).norm() / self.std_error
    }

    pub fn within_sigmas(&self, truth: Complex64, sigmas: f64) -> bool {
        (self.value - truth).norm() <= sigmas * self.std_error
    }

    pub fn scaled(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            std_error: self.std_error * factor.abs(),
            ..self
        }
    }
}

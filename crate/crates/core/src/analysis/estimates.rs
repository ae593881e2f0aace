//! Weighted integral estimates on the unit disk and the unit ball.
//!
//! Both integrands carry an integrable singular weight. Monte Carlo draws
//! from the weight itself (radial Beta law, uniform angles), which leaves a
//! bounded importance weight and finite variance. Each estimate has an exact
//! power-series oracle obtained by expanding the kernel factor and
//! integrating term by term.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Beta, Distribution};
use serde::{Deserialize, Serialize};

use super::{require, IntegralEstimate, MonteCarlo, Result};
use crate::domain::sample_sphere;
use crate::special::{beta_unchecked, lgamma, tgamma};

/// Hard cap on series terms; reached only for moduli extremely close to 1.
const MAX_SERIES_TERMS: u64 = 10_000_000;

/// An integral and its ratio to the predicted boundary growth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimateRatio {
    pub integral: IntegralEstimate,
    pub ratio: f64,
    pub ratio_std_error: f64,
    /// Series value of the integral.
    pub series: f64,
}

fn check_eps(eps: f64) -> Result<()> {
    require("eps", eps, eps > 0.0 && eps < 1.0, "0 < eps < 1")
}

/// `I(z) = sum_m |z|^(2m) pi B(m + 1 - beta/2, 1 - eps)`.
pub fn disk_integral_series(z_modulus: f64, eps: f64, beta: f64) -> Result<f64> {
    check_eps(eps)?;
    require("beta", beta, beta < 2.0, "beta < 2")?;
    require("|z|", z_modulus, (0.0..1.0).contains(&z_modulus), "0 <= |z| < 1")?;
    let x = z_modulus * z_modulus;
    let s = 1.0 - beta / 2.0;
    let mut term = PI * beta_unchecked(s, 1.0 - eps);
    let mut sum = 0.0;
    for m in 0..MAX_SERIES_TERMS {
        sum += term;
        let mf = m as f64;
        term *= x * (mf + s) / (mf + s + 1.0 - eps);
        // remaining terms decrease at least geometrically with ratio x
        if term <= f64::EPSILON * 0.1 * sum * (1.0 - x) {
            break;
        }
    }
    Ok(sum)
}

/// Estimates `I(z) = int_D (1-|w|^2)^(-eps) |1 - z conj(w)|^(-2) |w|^(-beta) dA(w)`
/// and returns `I(z) (1 - |z|^2)^eps`.
///
/// Sampling: `|w|^2 ~ Beta(1 - beta/2, 1 - eps)`, `arg w` uniform; the
/// importance weight is `pi B(1 - beta/2, 1 - eps) |1 - z conj(w)|^(-2)`.
pub fn disk_estimate_ratio(z: Complex64, eps: f64, beta: f64, mc: &MonteCarlo) -> Result<EstimateRatio> {
    let series = disk_integral_series(z.norm(), eps, beta)?;
    let s = 1.0 - beta / 2.0;
    let radial = Beta::new(s, 1.0 - eps).expect("shape parameters positive");
    let mass = PI * beta_unchecked(s, 1.0 - eps);
    let mean = mc.run(|rng| {
        let u: f64 = radial.sample(rng);
        let w = Complex64::from_polar(u.sqrt(), 2.0 * PI * rng.random::<f64>());
        Complex64::new(1.0 / (1.0 - z * w.conj()).norm_sqr(), 0.0)
    })?;
    let integral = mean.scaled(mass);
    let growth = (1.0 - z.norm_sqr()).powf(eps);
    Ok(EstimateRatio {
        integral,
        ratio: integral.value.re * growth,
        ratio_std_error: integral.std_error * growth,
        series,
    })
}

/// `c_m` of the ball estimate series `sum_m c_m |Delta|^(2 k m)`:
/// `Gamma(1-eps) pi^n / (k Gamma((n+1)/2)^2) (Gamma(m + (n+1)/2) / m!)^2
///  Gamma(n/k + m) / Gamma(n/k + m + 1 - eps) (k m)! / Gamma(k m + n)`.
pub fn ball_coefficient(n: usize, k: u32, eps: f64, m: u64) -> Result<f64> {
    check_eps(eps)?;
    let (nf, kf, mf) = (n as f64, k as f64, m as f64);
    let half = (nf + 1.0) / 2.0;
    let log = lgamma(1.0 - eps) + nf * PI.ln() - kf.ln() - 2.0 * lgamma(half)
        + 2.0 * (lgamma(mf + half) - lgamma(mf + 1.0))
        + lgamma(nf / kf + mf)
        - lgamma(nf / kf + mf + 1.0 - eps)
        + lgamma(kf * mf + 1.0)
        - lgamma(kf * mf + nf);
    Ok(log.exp())
}

pub fn ball_integral_series(n: usize, k: u32, eps: f64, delta_modulus: f64) -> Result<f64> {
    check_eps(eps)?;
    require("|Delta|", delta_modulus, (0.0..1.0).contains(&delta_modulus), "0 <= |Delta| < 1")?;
    let x = delta_modulus.powi(2 * k as i32);
    let mut sum = 0.0;
    let mut power = 1.0;
    for m in 0..MAX_SERIES_TERMS {
        let term = ball_coefficient(n, k, eps, m)? * power;
        sum += term;
        power *= x;
        // c_m grows at most polynomially, so once terms fall this low the
        // geometric factor dominates the rest
        if m > 16 && term <= f64::EPSILON * 0.01 * sum * (1.0 - x) {
            break;
        }
        if power == 0.0 {
            break;
        }
    }
    Ok(sum)
}

/// Estimates `int_{B^n} (1 - |eta|^(2k))^(-eps) |1 - (eta . conj(Delta))^k|^(-(n+1)) dV(eta)`
/// with `Delta = (|Delta|, 0, ..., 0)` and returns it times
/// `(1 - |Delta|^(2k))^eps`.
///
/// Sampling: `|eta|^(2k) ~ Beta(n/k, 1 - eps)` and a uniform direction.
pub fn ball_estimate_ratio(n: usize, k: u32, eps: f64, delta_modulus: f64, mc: &MonteCarlo) -> Result<EstimateRatio> {
    require("n", n as f64, n >= 1, "n >= 1")?;
    require("k", k as f64, k >= 1, "k >= 1")?;
    let series = ball_integral_series(n, k, eps, delta_modulus)?;
    let (nf, kf) = (n as f64, k as f64);
    let radial = Beta::new(nf / kf, 1.0 - eps).expect("shape parameters positive");
    let sphere_area = 2.0 * PI.powi(n as i32) / tgamma(nf);
    let mass = sphere_area * beta_unchecked(nf / kf, 1.0 - eps) / (2.0 * kf);
    let mean = mc.run(|rng| {
        let u: f64 = radial.sample(rng);
        let r = u.powf(1.0 / (2.0 * kf));
        let direction = sample_sphere(n, rng);
        let x = direction[0] * r * delta_modulus;
        Complex64::new((1.0 - x.powi(k as i32)).norm().powi(-(n as i32 + 1)), 0.0)
    })?;
    let integral = mean.scaled(mass);
    let growth = (1.0 - delta_modulus.powi(2 * k as i32)).powf(eps);
    Ok(EstimateRatio {
        integral,
        ratio: integral.value.re * growth,
        ratio_std_error: integral.std_error * growth,
        series,
    })
}

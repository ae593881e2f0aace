//! The generalized Hartogs triangle `{ (z, w) in C^n x C : |z|^k < |w| < 1 }`,
//! its points, kernel-argument pairing, and uniform sampling.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::special::tgamma;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("invalid domain parameters n={n}, k={k}: both must be at least 1")]
    InvalidParams { n: usize, k: u32 },
    #[error("dimension mismatch: expected {expected} z-coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point lies outside the domain")]
    OutsideDomain,
    #[error("sample count must be positive")]
    EmptySample,
}

pub type Result<T> = std::result::Result<T, DomainError>;

/// Dimension `n` of the z-block and exponent `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DomainParams {
    n: usize,
    k: u32,
}

impl DomainParams {
    pub fn new(n: usize, k: u32) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(DomainError::InvalidParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Lebesgue volume `pi^(n+1) k / ((n + k) n!)`.
    pub fn volume(&self) -> f64 {
        let n = self.n as f64;
        let k = self.k as f64;
        PI.powi(self.n as i32 + 1) * k / ((n + k) * tgamma(n + 1.0))
    }
}

/// A point `(z, w)` of `C^n x C`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub z: Vec<Complex64>,
    pub w: Complex64,
}

impl Point {
    pub fn new(z: Vec<Complex64>, w: Complex64) -> Self {
        Self { z, w }
    }

    /// Point with real coordinates, handy in tests and examples.
    pub fn real(z: &[f64], w: f64) -> Self {
        Self {
            z: z.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            w: Complex64::new(w, 0.0),
        }
    }

    pub fn z_norm_sqr(&self) -> f64 {
        self.z.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn z_norm(&self) -> f64 {
        self.z_norm_sqr().sqrt()
    }

    /// Rotate every coordinate independently: `z_i -> e^{i theta_i} z_i`,
    /// `w -> e^{i phi} w`.
    pub fn rotated(&self, thetas: &[f64], phi: f64) -> Self {
        Self {
            z: self
                .z
                .iter()
                .zip(thetas)
                .map(|(z, &t)| z * Complex64::from_polar(1.0, t))
                .collect(),
            w: self.w * Complex64::from_polar(1.0, phi),
        }
    }
}

/// Kernel arguments `a = w conj(t)` and `b = <z, s>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairedArgs {
    pub a: Complex64,
    pub b: Complex64,
}

/// Strict membership `|z|^k < |w| < 1`.
///
/// A point with the wrong number of z-coordinates is not a member.
pub fn contains(params: DomainParams, p: &Point) -> bool {
    if p.z.len() != params.n {
        return false;
    }
    let w = p.w.norm();
    p.z_norm().powi(params.k as i32) < w && w < 1.0
}

pub fn pair(p: &Point, q: &Point) -> Result<PairedArgs> {
    if p.z.len() != q.z.len() {
        return Err(DomainError::DimensionMismatch {
            expected: p.z.len(),
            found: q.z.len(),
        });
    }
    let b = p.z.iter().zip(&q.z).map(|(x, y)| x * y.conj()).sum();
    Ok(PairedArgs { a: p.w * q.w.conj(), b })
}

/// `h(z, w) = (|w|^2 - |z|^(2k)) (1 - |w|^2)`, positive on the domain and
/// vanishing on its boundary.
pub fn boundary_distance_weight(params: DomainParams, p: &Point) -> Result<f64> {
    if p.z.len() != params.n {
        return Err(DomainError::DimensionMismatch {
            expected: params.n,
            found: p.z.len(),
        });
    }
    if !contains(params, p) {
        return Err(DomainError::OutsideDomain);
    }
    let w2 = p.w.norm_sqr();
    Ok((w2 - p.z_norm_sqr().powi(params.k as i32)) * (1.0 - w2))
}

/// Generator for one independent stream: the ChaCha stream id separates
/// workers sharing a seed.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform point on the unit sphere of `C^n`.
pub fn sample_sphere<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let norm = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-300 {
            return v.into_iter().map(|c| c / norm).collect();
        }
    }
}

/// Uniform point in the ball of radius `radius` in `C^n`.
pub fn sample_ball<R: Rng + ?Sized>(n: usize, radius: f64, rng: &mut R) -> Vec<Complex64> {
    let r = radius * rng.random::<f64>().powf(1.0 / (2 * n) as f64);
    sample_sphere(n, rng).into_iter().map(|c| c * r).collect()
}

/// Uniform point of the unit disk.
pub fn sample_disk<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let r = rng.random::<f64>().sqrt();
    Complex64::from_polar(r, 2.0 * PI * rng.random::<f64>())
}

/// Uniform sampler on the domain.
///
/// Proposals are drawn uniformly from the bounding cylinder
/// `B^n x D` (unit ball times unit disk) and accepted when they lie in the
/// domain, so accepted points are exactly uniform. The acceptance rate is
/// `k / (n + k)`. Proposal counts are kept for volume estimation.
#[derive(Debug, Clone)]
pub struct UniformSampler {
    params: DomainParams,
    rng: ChaCha8Rng,
    proposed: u64,
    accepted: u64,
}

impl UniformSampler {
    pub fn new(params: DomainParams, seed: u64, stream: u64) -> Self {
        Self {
            params,
            rng: stream_rng(seed, stream),
            proposed: 0,
            accepted: 0,
        }
    }

    pub fn params(&self) -> DomainParams {
        self.params
    }

    pub fn proposed(&self) -> u64 {
        self.proposed
    }

    pub fn accepted(&self) -> u64 {
        self.accepted
    }

    /// Volume of the bounding cylinder `pi^n / n! * pi`.
    pub fn bounding_volume(&self) -> f64 {
        PI.powi(self.params.n as i32 + 1) / tgamma(self.params.n as f64 + 1.0)
    }

    /// Volume estimate `(accepted / proposed) * vol(bounding set)` with its
    /// binomial standard error.
    pub fn volume_estimate(&self) -> (f64, f64) {
        let p = self.accepted as f64 / self.proposed as f64;
        let se = (p * (1.0 - p) / self.proposed as f64).sqrt();
        (p * self.bounding_volume(), se * self.bounding_volume())
    }

    pub fn next_point(&mut self) -> Point {
        let (p, proposals) = sample_point(self.params, &mut self.rng);
        self.proposed += proposals;
        self.accepted += 1;
        p
    }
}

/// One uniform point of the domain by rejection from `B^n x D`, with the
/// number of proposals it took.
pub fn sample_point<R: Rng + ?Sized>(params: DomainParams, rng: &mut R) -> (Point, u64) {
    let mut proposals = 0;
    loop {
        proposals += 1;
        let z = sample_ball(params.n, 1.0, rng);
        let w = sample_disk(rng);
        let p = Point { z, w };
        if contains(params, &p) {
            return (p, proposals);
        }
    }
}

/// `count` i.i.d. uniform points, deterministic in `seed`.
pub fn sample_uniform(params: DomainParams, count: usize, seed: u64) -> Result<Vec<Point>> {
    if count == 0 {
        return Err(DomainError::EmptySample);
    }
    let mut sampler = UniformSampler::new(params, seed, 0);
    Ok((0..count).map(|_| sampler.next_point()).collect())
}

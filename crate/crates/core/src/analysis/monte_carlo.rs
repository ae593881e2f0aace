//! Sharded, deterministic Monte Carlo.
//!
//! Samples are split over a fixed number of shards. Shard `i` draws from
//! ChaCha8 seeded with the run seed on stream `i`, accumulates a Welford
//! mean and sum of squared deviations, and the shard summaries are merged in
//! shard order. The result depends only on `(seed, samples, shards)`, never
//! on the thread count.

use num_complex::Complex64;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{AnalysisError, IntegralEstimate, IntegrationMethod, Result};
use crate::domain::{sample_point, stream_rng, DomainParams, Point};

pub const DEFAULT_SHARDS: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonteCarlo {
    pub samples: u64,
    pub seed: u64,
    pub shards: u64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Welford {
    count: u64,
    mean: Complex64,
    m2: f64,
}

impl Welford {
    fn push(&mut self, x: Complex64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += (delta.conj() * (x - self.mean)).re;
    }

    fn merge(self, other: Self) -> Self {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let (na, nb) = (self.count as f64, other.count as f64);
        Self {
            count,
            mean: self.mean + delta * (nb / count as f64),
            m2: self.m2 + other.m2 + delta.norm_sqr() * na * nb / count as f64,
        }
    }
}

impl MonteCarlo {
    pub fn new(samples: u64, seed: u64) -> Self {
        Self {
            samples,
            seed,
            shards: DEFAULT_SHARDS,
        }
    }

    pub fn with_shards(self, shards: u64) -> Self {
        Self { shards, ..self }
    }

    fn shard_sizes(&self) -> Vec<u64> {
        let base = self.samples / self.shards;
        let extra = self.samples % self.shards;
        (0..self.shards).map(|i| base + u64::from(i < extra)).collect()
    }

    /// Sample mean of `draw` with its standard error. `draw` is called once
    /// per sample with the shard's generator.
    pub fn run<F>(&self, draw: F) -> Result<IntegralEstimate>
    where
        F: Fn(&mut ChaCha8Rng) -> Complex64 + Sync,
    {
        if self.samples < 2 || self.shards == 0 {
            return Err(AnalysisError::TooFewSamples {
                samples: self.samples,
                shards: self.shards,
            });
        }
        let summaries: Vec<Welford> = self
            .shard_sizes()
            .into_par_iter()
            .enumerate()
            .map(|(shard, size)| {
                let mut rng = stream_rng(self.seed, shard as u64);
                let mut acc = Welford::default();
                for _ in 0..size {
                    acc.push(draw(&mut rng));
                }
                acc
            })
            .collect();
        let total = summaries.into_iter().fold(Welford::default(), Welford::merge);
        let n = total.count as f64;
        Ok(IntegralEstimate {
            value: total.mean,
            std_error: (total.m2 / (n - 1.0) / n).sqrt(),
            samples: total.count,
            method: IntegrationMethod::MonteCarlo,
            seed: Some(self.seed),
        })
    }

    /// `integral over the domain of f dV` from uniform points:
    /// `vol * mean(f)`.
    pub fn integrate_uniform<F>(&self, params: DomainParams, f: F) -> Result<IntegralEstimate>
    where
        F: Fn(&Point) -> Complex64 + Sync,
    {
        let mean = self.run(|rng| f(&sample_point(params, rng).0))?;
        Ok(mean.scaled(params.volume()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn deterministic_and_thread_independent() {
        let mc = MonteCarlo::new(10_001, 9);
        let draw = |rng: &mut ChaCha8Rng| Complex64::new(rng.random::<f64>(), rng.random::<f64>());
        let a = mc.run(draw).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| mc.run(draw).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.samples, 10_001);
        assert_ne!(a, MonteCarlo::new(10_001, 10).run(draw).unwrap());
    }

    #[test]
    fn welford_merge_matches_two_pass() {
        let xs: Vec<Complex64> = (0..1000).map(|i| Complex64::new((i as f64).sin(), (i as f64 * 0.3).cos())).collect();
        let mean: Complex64 = xs.iter().sum::<Complex64>() / xs.len() as f64;
        let m2: f64 = xs.iter().map(|x| (x - mean).norm_sqr()).sum();
        let mut left = Welford::default();
        let mut right = Welford::default();
        for (i, x) in xs.iter().enumerate() {
            if i < 317 { left.push(*x) } else { right.push(*x) }
        }
        let merged = left.merge(right);
        assert!((merged.mean - mean).norm() < 1e-14);
        assert!((merged.m2 - m2).abs() < 1e-10);
    }

    #[test]
    fn uniform_mean_of_constant_is_volume() {
        let pp = DomainParams::new(2, 3).unwrap();
        let est = MonteCarlo::new(1000, 1).integrate_uniform(pp, |_| Complex64::new(1.0, 0.0)).unwrap();
        assert!((est.value.re - pp.volume()).abs() < 1e-12);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn standard_error_of_uniform_variable() {
        let est = MonteCarlo::new(100_000, 3)
            .run(|rng| Complex64::new(rng.random::<f64>(), 0.0))
            .unwrap();
        let expected = (1.0f64 / 12.0).sqrt() / (100_000f64).sqrt();
        assert!((est.std_error / expected - 1.0).abs() < 0.02);
        assert!(est.within_sigmas(Complex64::new(0.5, 0.0), 4.0));
    }

    #[test]
    fn rejects_tiny_runs() {
        assert!(MonteCarlo::new(1, 0).run(|_| Complex64::new(0.0, 0.0)).is_err());
    }
}

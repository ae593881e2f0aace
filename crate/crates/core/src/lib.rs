//! Bergman kernels of the generalized Hartogs triangles
//! `{ (z, w) in C^n x C : |z|^k < |w| < 1 }` and the L^p mapping interval of
//! their Bergman projections.
//!
//! Every closed form is paired with an independent route: the kernel's
//! closed form with its orthonormal series and with the branched-cover
//! transformation rule, the counting formulas with brute-force enumeration,
//! and the integral identities with Monte Carlo or radial quadrature.
//!
//! Modules, bottom-up:
//! - [`special`]: Gamma, Beta, exact binomials.
//! - [`domain`]: parameters, points, membership, uniform sampling.
//! - [`combinatorics`]: bounded compositions and the numerator polynomials.
//! - [`kernel`]: closed-form, special-case and series kernel evaluation.
//! - [`analysis`]: integration engine, moment formulas and estimate checks.
//! - [`regularity`]: the sharp L^p interval, the necessity test function and
//!   the Schur-test ratio.

pub mod analysis;
pub mod combinatorics;
pub mod domain;
pub mod kernel;
pub mod regularity;
pub mod special;

pub use domain::{DomainParams, PairedArgs, Point};
pub use num_complex::Complex64;
pub use num_rational::Rational64;

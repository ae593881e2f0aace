//! Exact counting of bounded compositions and the numerator polynomials of
//! the closed-form kernel.
//!
//! The numerator of the kernel is `sum_l g_l(b) a^l` where the coefficient
//! of `b^t` in `g_l` counts tuples `(j_1, ..., j_{n+3})` with entries in
//! `[0, k-1]`, total `S_l = (n - l + 2) k - (n + 1)`, and tail sum
//! `j_3 + ... + j_{n+3} = t`. Splitting the tuple into its first two
//! entries and its last `n + 1` entries factors every coefficient into two
//! bounded-composition counts.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domain::DomainParams;
use crate::special::binomial_signed;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CombinatoricsError {
    #[error("polynomial index l={l} out of range 0..={max}")]
    IndexOutOfRange { l: u32, max: u32 },
    #[error("cap must be positive")]
    ZeroCap,
}

pub type Result<T> = std::result::Result<T, CombinatoricsError>;

/// Polynomial in `b` with nonnegative integer coefficients; `coeffs[t]`
/// multiplies `b^t`. Trailing zeros are always trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPolynomial {
    coeffs: Vec<BigUint>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_u64(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> BigUint {
        self.coeffs.get(t).cloned().unwrap_or_default()
    }

    /// Index of the first nonzero coefficient.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scaled(&self, factor: u64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Sum of all coefficients, i.e. the value at `b = 1`.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }

    pub fn eval(&self, b: Complex64) -> Complex64 {
        self.to_f64()
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * b + c)
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        IntPolynomial::from_coeffs(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match t {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*b")?,
                _ => write!(f, "{c}*b^{t}")?,
            }
        }
        Ok(())
    }
}

/// Tuples of `parts` integers, each in `[0, cap - 1]`, summing to `total`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSpec {
    pub total: u64,
    pub parts: u32,
    pub cap: u32,
}

impl CompositionSpec {
    pub fn new(total: u64, parts: u32, cap: u32) -> Self {
        Self { total, parts, cap }
    }
}

/// Inclusion-exclusion count
/// `sum_i (-1)^i C(parts, i) C(total - i cap + parts - 1, parts - 1)`.
pub fn bounded_compositions(spec: CompositionSpec) -> BigUint {
    let CompositionSpec { total, parts, cap } = spec;
    if parts == 0 {
        return if total == 0 { BigUint::one() } else { BigUint::zero() };
    }
    if cap == 0 || total > parts as u64 * (cap as u64 - 1) {
        return BigUint::zero();
    }
    let (total, parts, cap) = (total as i64, parts as i64, cap as i64);
    let mut acc = BigInt::zero();
    for i in 0..=parts.min(total / cap) {
        let term = binomial_signed(parts, i) * binomial_signed(total - i * cap + parts - 1, parts - 1);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!(!acc.is_negative());
    acc.to_biguint().unwrap_or_default()
}

/// Number of pairs in `[0, k-1]^2` with sum `l`.
pub fn count_f(l: u64, k: u32) -> u64 {
    let k = k as u64;
    if l < k {
        l + 1
    } else if l <= 2 * k - 2 {
        2 * k - l - 1
    } else {
        0
    }
}

/// Number of triples in `[0, k-1]^3` with sum `l`.
pub fn count_h(l: u64, k: u32) -> u64 {
    let (l, k) = (l as i64, k as i64);
    let value = if l < k {
        (l + 2) * (l + 1) / 2
    } else if l <= 2 * k - 2 {
        (l + 2) * (l + 1) / 2 - 3 * (l + 2 - k) * (l + 1 - k) / 2
    } else if l <= 3 * k - 3 {
        (3 * k - l - 1) * (3 * k - l - 2) / 2
    } else {
        0
    };
    value as u64
}

/// Total `S_l = (n - l + 2) k - (n + 1)` shared by the tuples behind `g_l`.
pub fn g_total(l: u32, params: DomainParams) -> i64 {
    let n = params.n() as i64;
    let k = params.k() as i64;
    (n - l as i64 + 2) * k - (n + 1)
}

/// Coefficient polynomial `g_l(b)`, `0 <= l <= n + 1`.
pub fn g_polynomial(l: u32, params: DomainParams) -> Result<IntPolynomial> {
    let max = params.n() as u32 + 1;
    if l > max {
        return Err(CombinatoricsError::IndexOutOfRange { l, max });
    }
    let k = params.k();
    let tail_parts = params.n() as u32 + 1;
    let total = g_total(l, params);
    if total < 0 {
        return Ok(IntPolynomial::zero());
    }
    let total = total as u64;
    let max_tail = total.min(tail_parts as u64 * (k as u64 - 1));
    let coeffs = (0..=max_tail)
        .map(|t| {
            let head = bounded_compositions(CompositionSpec::new(total - t, 2, k));
            if head.is_zero() {
                return head;
            }
            head * bounded_compositions(CompositionSpec::new(t, tail_parts, k))
        })
        .collect();
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// All `g_0, ..., g_{n+1}` for the given parameters.
pub fn g_polynomials(params: DomainParams) -> Vec<IntPolynomial> {
    (0..=params.n() as u32 + 1)
        .map(|l| g_polynomial(l, params).expect("index within range"))
        .collect()
}

/// Explicit `n = 2` numerator polynomials, indexed by `l` (the polynomial
/// multiplying `a^l`).
///
/// These are the fully expanded closed forms and already include the factor
/// `n! = 2`; each equals `2 * g_polynomial(l, n = 2, k)`. The non-`b^{k-1}`
/// group of `g_2` carries `(m + 2)^2 (m + 1)`: the variant `(m + 2)^2 (m - 1)`
/// goes negative at `m = 0` and cannot count tuples.
pub fn g_polynomial_n2_closed(l: u32, k: u32) -> Result<IntPolynomial> {
    if l > 3 {
        return Err(CombinatoricsError::IndexOutOfRange { l, max: 3 });
    }
    if k == 0 {
        return Err(CombinatoricsError::ZeroCap);
    }
    let k = k as i128;
    let mut coeffs: Vec<i128> = Vec::new();
    let mut add = |power: i128, value: i128| {
        let power = power as usize;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] += value;
    };
    match l {
        3 => {
            for m in 0..=k - 3 {
                add(m, (k - 2 - m) * (m + 2) * (m + 1));
            }
        }
        2 => {
            for m in 0..=k - 2 {
                let mixed = (k + m + 1) * (k + m) - 3 * (m + 1) * m;
                add(k - 1 + m, (k - m - 1) * mixed);
                add(m, (m + 2) * (m + 2) * (m + 1));
            }
        }
        1 => {
            for m in 0..=k - 1 {
                let mixed = (k + m + 1) * (k + m) - 3 * (m + 1) * m;
                add(2 * k - 1 + m, (k - m - 1) * (k - m - 1) * (k - m));
                add(k - 1 + m, (m + 1) * mixed);
            }
        }
        _ => {
            for m in 0..=k - 2 {
                add(2 * k - 1 + m, (m + 1) * (k - m) * (k - m - 1));
            }
        }
    }
    let coeffs = coeffs
        .into_iter()
        .map(|c| {
            debug_assert!(c >= 0);
            BigUint::from(c.max(0) as u128)
        })
        .collect();
    Ok(IntPolynomial::from_coeffs(coeffs))
}

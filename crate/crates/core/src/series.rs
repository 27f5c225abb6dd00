//! Dense truncated power series with complex coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores `c_0, ..., c_N` and stands for
//! `c_0 + c_1 z + ... + c_N z^N`. Binary operations truncate at the smaller
//! of the two orders; coefficients that are not known are never invented.

use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Tolerance used by [`TruncatedSeries::is_normalized`].
pub const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TryFrom<Vec<Complex64>> for TruncatedSeries {
    type Error = Error;

    fn try_from(coeffs: Vec<Complex64>) -> Result<Self> {
        Self::new(coeffs)
    }
}

impl From<TruncatedSeries> for Vec<Complex64> {
    fn from(s: TruncatedSeries) -> Self {
        s.coeffs
    }
}

impl TruncatedSeries {
    /// Builds a series from `c_0..=c_N`. The vector must be non-empty.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Degenerate("a series needs at least the constant coefficient"));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Builds a series of order `order` whose coefficients are `f(m)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![ZERO; order + 1],
        }
    }

    pub fn constant(value: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// The identity map `z`, padded with zeros up to `order` (at least 1).
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order.max(1));
        s.coeffs[1] = ONE;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^m`; zero beyond the order.
    pub fn coeff(&self, m: usize) -> Complex64 {
        self.coeffs.get(m).copied().unwrap_or(ZERO)
    }

    /// True when `c_0 = 0` and `c_1 = 1` (within [`NORMALIZATION_TOL`]), i.e. the
    /// series is a candidate member of the normalized class `z + a_2 z^2 + ...`.
    pub fn is_normalized(&self) -> bool {
        self.order() >= 1
            && self.coeffs[0].norm() <= NORMALIZATION_TOL
            && (self.coeffs[1] - ONE).norm() <= NORMALIZATION_TOL
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ZERO)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Value, first and second derivative at `z` in one Horner pass.
    pub fn evaluate_with_derivatives(&self, z: Complex64) -> [Complex64; 3] {
        let mut p = ZERO;
        let mut d1 = ZERO;
        let mut d2 = ZERO;
        for &c in self.coeffs.iter().rev() {
            d2 = d2 * z + d1;
            d1 = d1 * z + p;
            p = p * z + c;
        }
        [p, d1, d2 * 2.0]
    }

    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::Degenerate("derivative of an order-0 series"));
        }
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(m, &c)| c * m as f64)
                .collect(),
        })
    }

    /// Cauchy product truncated at the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |m| {
            (0..=m).map(|j| self.coeffs[j] * other.coeffs[m - j]).sum()
        })
    }

    /// Power-series quotient `self / other`, truncated at the smaller order.
    /// The divisor must have a non-vanishing constant term.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        let d0 = other.coeffs[0];
        if d0.norm() < 1e-300 {
            return Err(Error::Degenerate("divisor has a vanishing constant term"));
        }
        let order = self.order().min(other.order());
        let mut q: Vec<Complex64> = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let acc: Complex64 = (1..=m).map(|j| other.coeffs[j] * q[m - j]).sum();
            q.push((self.coeffs[m] - acc) / d0);
        }
        Ok(Self { coeffs: q })
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * factor).collect(),
        }
    }

    /// Multiplies by `z`, raising the order by one.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    /// The partial sum `s_n`: coefficients `0..=n`, order `n`.
    pub fn section(&self, n: usize) -> Result<Self> {
        self.check_index(n)?;
        Ok(self.truncate(n))
    }

    /// The remainder `s - s_n`, kept at the full order with the first `n + 1`
    /// coefficients zeroed.
    pub fn tail(&self, n: usize) -> Result<Self> {
        self.check_index(n)?;
        let mut coeffs = self.coeffs.clone();
        coeffs[..=n].fill(ZERO);
        Ok(Self { coeffs })
    }

    fn check_index(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Domain("section index must be at least 1".into()));
        }
        if n > self.order() {
            return Err(Error::InsufficientOrder {
                requested: n,
                order: self.order(),
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |m| f(self.coeffs[m], other.coeffs[m]))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.scale(-ONE)
    }
}

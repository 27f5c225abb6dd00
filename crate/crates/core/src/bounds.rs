//! Closed-form estimates for members of `F`: coefficient bound, growth
//! envelope of `f'`, the tail-derivative bound and its value on `|z| = 1/3`.

use crate::error::{Error, Result};

/// `|a_n| <= (n + 1) / 2` for `n >= 2`.
pub fn coeff_bound(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("coefficient bound needs n >= 2, got {n}")));
    }
    Ok((n as f64 + 1.0) / 2.0)
}

/// `(1 / (1 + r)^3, 1 / (1 - r)^3)`: lower and upper bounds of `|f'(z)|` on `|z| = r`.
pub fn deriv_envelope(r: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&r) {
        return Err(Error::Domain(format!("envelope radius must lie in [0, 1), got {r}")));
    }
    Ok(((1.0 + r).powi(-3), (1.0 - r).powi(-3)))
}

/// Section index and radius for the tail estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailBoundInput {
    n: usize,
    r: f64,
}

impl TailBoundInput {
    pub fn new(n: usize, r: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("tail bound needs n >= 1".into()));
        }
        if !(r > 0.0 && r < 1.0) {
            return Err(Error::Domain(format!("tail bound radius must lie in (0, 1), got {r}")));
        }
        Ok(Self { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// Upper bound for `|sigma_n'(z)|` on `|z| = r`, where `sigma_n = f - s_n`:
    ///
    /// ```text
    /// [n(n+1) r^(n+2) - 2n(n+2) r^(n+1) + (n+1)(n+2) r^n] / [2 (1 - r)^3]
    /// ```
    pub fn bound(&self) -> f64 {
        let n = self.n as f64;
        let r = self.r;
        let rn = r.powi(self.n as i32);
        let num = n * (n + 1.0) * r * r - 2.0 * n * (n + 2.0) * r + (n + 1.0) * (n + 2.0);
        rn * num / (2.0 * (1.0 - r).powi(3))
    }
}

pub fn tail_derivative_bound(n: usize, r: f64) -> Result<f64> {
    Ok(TailBoundInput::new(n, r)?.bound())
}

/// `k(n) = -(2n^2 + 8n + 9) / (8 * 3^(n-1))`, the negated tail bound at `r = 1/3`.
pub fn k_tail(n: usize) -> f64 {
    let nf = n as f64;
    -(2.0 * nf * nf + 8.0 * nf + 9.0) / (8.0 * 3f64.powi(n as i32 - 1))
}

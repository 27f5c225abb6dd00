//! Sampling polynomials on a circle through the FFT.
//!
//! For `z_k = r * exp(2*pi*i*k/m)` the values `p(z_k)` are the unnormalized
//! inverse DFT of `c_j r^j`. Coefficients above `m - 1` fold onto index
//! `j mod m`, which is exact on the roots of unity.

use std::cell::RefCell;

use num_complex::Complex64;
use rustfft::FftPlanner;

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
    static SCRATCH: RefCell<Vec<Complex64>> = const { RefCell::new(Vec::new()) };
}

/// Values of `sum_j coeffs[j] * z^j` at the `m` points `r * exp(2*pi*i*k/m)`.
pub(crate) fn sample(coeffs: &[Complex64], r: f64, m: usize) -> Vec<Complex64> {
    let mut buf = vec![Complex64::new(0.0, 0.0); m];
    let mut rj = 1.0;
    for (j, &c) in coeffs.iter().enumerate() {
        buf[j % m] += c * rj;
        rj *= r;
    }
    let fft = PLANNER.with(|p| p.borrow_mut().plan_fft_inverse(m));
    SCRATCH.with(|scratch| {
        let mut scratch = scratch.borrow_mut();
        let len = fft.get_inplace_scratch_len();
        if scratch.len() < len {
            scratch.resize(len, Complex64::new(0.0, 0.0));
        }
        fft.process_with_scratch(&mut buf, &mut scratch[..len]);
    });
    buf
}

/// Coefficients of `z * p'(z)`.
pub(crate) fn z_derivative(coeffs: &[Complex64]) -> Vec<Complex64> {
    coeffs.iter().enumerate().map(|(j, &c)| c * j as f64).collect()
}

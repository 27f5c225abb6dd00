//! One-dimensional minimization: golden-section search and grid-seeded
//! minimization of periodic functions.

use std::f64::consts::TAU;

/// `1 / phi`, the golden-section shrink factor.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Hard cap on golden-section iterations; 200 steps shrink any bracket by 1e-41.
const MAX_GOLDEN_STEPS: usize = 200;

/// Golden-section search for a minimum of `f` on `[a, b]`, stopping once the
/// bracket is narrower than `tol`. Returns `(x_min, f_min)`.
///
/// Errors from `f` abort the search and are returned unchanged.
pub fn golden_section<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    mut a: f64,
    mut b: f64,
    tol: f64,
) -> Result<(f64, f64), E> {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..MAX_GOLDEN_STEPS {
        if (b - a).abs() <= tol {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 <= f2 { (x1, f1) } else { (x2, f2) })
}

/// Result of [`periodic_minimum`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodicMinimum {
    pub theta: f64,
    pub value: f64,
    /// True when golden-section refinement improved on the best grid sample.
    pub refined: bool,
}

/// Index of the smallest grid value; ties go to the smallest index, i.e. the
/// smallest angle. NaN samples are never selected.
pub fn grid_argmin(values: &[f64]) -> usize {
    let mut best = 0;
    for (k, &v) in values.iter().enumerate() {
        if v < values[best] || values[best].is_nan() {
            best = k;
        }
    }
    best
}

/// Minimizes a `2*pi`-periodic function given its samples on the uniform grid
/// `theta_k = 2*pi*k / values.len()`.
///
/// The best grid cell seeds a golden-section search on its two neighbouring
/// cells, run to `theta_tol`. The returned value never exceeds the best grid
/// sample.
pub fn periodic_minimum<E>(
    values: &[f64],
    f: impl FnMut(f64) -> Result<f64, E>,
    theta_tol: f64,
) -> Result<PeriodicMinimum, E> {
    let m = values.len();
    let step = TAU / m as f64;
    let k = grid_argmin(values);
    let theta_k = step * k as f64;
    let (theta, value) = golden_section(f, theta_k - step, theta_k + step, theta_tol)?;
    Ok(if value < values[k] {
        PeriodicMinimum {
            theta: theta.rem_euclid(TAU),
            value,
            refined: true,
        }
    } else {
        PeriodicMinimum {
            theta: theta_k,
            value: values[k],
            refined: false,
        }
    })
}

/// Samples `f` on a uniform grid of `grid` points and refines the minimum.
pub fn minimize_periodic<E>(
    mut f: impl FnMut(f64) -> Result<f64, E>,
    grid: usize,
    theta_tol: f64,
) -> Result<PeriodicMinimum, E> {
    let step = TAU / grid as f64;
    let values = (0..grid)
        .map(|k| f(step * k as f64))
        .collect::<Result<Vec<_>, E>>()?;
    periodic_minimum(&values, f, theta_tol)
}

//! Radius computations for geometric criteria on partial sums.
//!
//! Each criterion is the real part of a function that is analytic wherever
//! its denominator does not vanish, so on a closed disk free of such zeros
//! its minimum sits on the boundary circle. [`boundary_min`] minimizes on
//! that circle, [`criterion_radius`] bisects on the radius, and
//! [`count_zeros`] rules out denominators vanishing inside the disk.

use std::cell::OnceCell;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circle;
use crate::error::{Error, Result};
use crate::minimize::periodic_minimum;
use crate::series::TruncatedSeries;

pub const DEFAULT_GRID: usize = 2048;
pub const MIN_GRID: usize = 16;
/// Angular tolerance of the golden-section refinement.
pub const THETA_TOL: f64 = 1e-12;
/// Default bisection tolerance in `r`.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Largest radius examined; series semantics end at the unit circle.
pub const RADIUS_CAP: f64 = 1.0 - 1e-6;
/// Denominators below this modulus are treated as zeros.
pub const POLE_EPS: f64 = 1e-300;
/// Boundary moduli below this abort a zero count.
pub const ZERO_ON_CIRCLE_EPS: f64 = 1e-9;

const WINDING_START: usize = 4096;
const WINDING_MAX: usize = 1 << 16;
const WINDING_RESOLUTION: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// `Re s'(z) > 0`
    ReDeriv,
    /// `Re(1 + z s''/s') > 0`
    Convexity,
    /// `Re(z s'/s) > 0`
    Starlikeness,
    /// `s'(z) != 0`
    LocalUnivalence,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [
        Criterion::ReDeriv,
        Criterion::Convexity,
        Criterion::Starlikeness,
        Criterion::LocalUnivalence,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::ReDeriv => "re-deriv",
            Criterion::Convexity => "convex",
            Criterion::Starlikeness => "starlike",
            Criterion::LocalUnivalence => "local-univalence",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Validation(format!("unknown criterion `{s}`")))
    }
}

fn checked_div(num: Complex64, den: Complex64, z: impl FnOnce() -> Complex64) -> Result<Complex64> {
    // Max-norm test; cheaper than the modulus and equivalent up to sqrt(2).
    if den.re.abs().max(den.im.abs()) < POLE_EPS {
        return Err(Error::PoleProximity { z: z() });
    }
    Ok(num / den)
}

/// Real-valued criterion at a single point.
///
/// Starlikeness at `z = 0` returns the removable limit 1; LocalUnivalence
/// returns `|s'(z)|`.
pub fn criterion_value(s: &TruncatedSeries, c: Criterion, z: Complex64) -> Result<f64> {
    let [v, d1, d2] = s.evaluate_with_derivatives(z);
    Ok(match c {
        Criterion::ReDeriv => d1.re,
        Criterion::Convexity => 1.0 + checked_div(z * d2, d1, || z)?.re,
        Criterion::Starlikeness if z == Complex64::new(0.0, 0.0) => 1.0,
        Criterion::Starlikeness => checked_div(z * d1, v, || z)?.re,
        Criterion::LocalUnivalence => d1.norm(),
    })
}

/// Criterion values on the grid `r * exp(2*pi*i*k/m)`.
fn grid_values(s: &TruncatedSeries, c: Criterion, r: f64, m: usize) -> Result<Vec<f64>> {
    let point = |k: usize| Complex64::from_polar(r, TAU * k as f64 / m as f64);
    let ds = derivative_coeffs(s);
    match c {
        Criterion::ReDeriv => Ok(circle::sample(&ds, r, m).iter().map(|d| d.re).collect()),
        Criterion::LocalUnivalence => Ok(circle::sample(&ds, r, m).iter().map(|d| d.norm()).collect()),
        Criterion::Convexity => {
            let den = circle::sample(&ds, r, m);
            let num = circle::sample(&circle::z_derivative(&ds), r, m);
            num.iter()
                .zip(&den)
                .enumerate()
                .map(|(k, (&n, &d))| Ok(1.0 + checked_div(n, d, || point(k))?.re))
                .collect()
        }
        Criterion::Starlikeness => {
            let den = circle::sample(s.coeffs(), r, m);
            let num = circle::sample(&circle::z_derivative(s.coeffs()), r, m);
            num.iter()
                .zip(&den)
                .enumerate()
                .map(|(k, (&n, &d))| Ok(checked_div(n, d, || point(k))?.re))
                .collect()
        }
    }
}

fn derivative_coeffs(s: &TruncatedSeries) -> Vec<Complex64> {
    match s.derivative() {
        Ok(d) => d.coeffs().to_vec(),
        Err(_) => vec![Complex64::new(0.0, 0.0)],
    }
}

/// Minimum of a criterion over one circle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryScan {
    pub r: f64,
    pub grid_size: usize,
    pub min_value: f64,
    /// In `[0, 2*pi)`.
    pub argmin_theta: f64,
    pub refined: bool,
}

/// Minimizes `criterion_value` over `|z| = r`: uniform grid of `grid_size`
/// angles, then golden-section refinement around the best cell (ties go to
/// the smallest angle).
pub fn boundary_min(s: &TruncatedSeries, c: Criterion, r: f64, grid_size: usize) -> Result<BoundaryScan> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!("scan radius must lie in (0, 1), got {r}")));
    }
    if grid_size < MIN_GRID {
        return Err(Error::Domain(format!("grid size must be at least {MIN_GRID}, got {grid_size}")));
    }
    let values = grid_values(s, c, r, grid_size)?;
    let min = periodic_minimum(
        &values,
        |theta| criterion_value(s, c, Complex64::from_polar(r, theta)),
        THETA_TOL,
    )?;
    Ok(BoundaryScan {
        r,
        grid_size,
        min_value: min.value,
        argmin_theta: min.theta,
        refined: min.refined,
    })
}

/// Number of zeros of the polynomial `s` in `|z| < r`, by the argument
/// principle.
///
/// The winding number `(1/2*pi*i) \oint s'/s dz` equals the mean of
/// `z s'(z)/s(z)` over the circle. With `m` samples the trapezoidal rule is
/// off by roughly `exp(-m d / r)` for a zero at distance `d` from the circle,
/// so `m` starts at 4096 and doubles until the nearest zero, estimated by
/// `|s / s'|` at the samples, is at least `60 r / m` away. Zeros too close to
/// the circle for 65536 samples are classified by [`polynomial_roots`].
pub fn count_zeros(s: &TruncatedSeries, r: f64) -> Result<usize> {
    count_zeros_cached(s, r, &OnceCell::new())
}

fn count_zeros_cached(s: &TruncatedSeries, r: f64, roots: &OnceCell<Option<Vec<Complex64>>>) -> Result<usize> {
    if s.is_zero() {
        return Err(Error::Degenerate("zero count of the zero polynomial"));
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::Domain(format!("zero-count radius must be positive, got {r}")));
    }
    match winding_number(s, r)? {
        Ok(n) => Ok(n),
        Err(estimate) => match roots.get_or_init(|| polynomial_roots(s)) {
            Some(roots) => Ok(roots.iter().filter(|z| z.norm() < r).count()),
            None => Err(Error::WindingNotConverged { estimate }),
        },
    }
}

/// `Ok(Err(estimate))` when the sampling cannot resolve a zero near the circle.
fn winding_number(s: &TruncatedSeries, r: f64) -> Result<std::result::Result<usize, f64>> {
    let zd = circle::z_derivative(s.coeffs());
    let mut m = WINDING_START;
    loop {
        let vals = circle::sample(s.coeffs(), r, m);
        let min_modulus = vals.iter().map(|v| v.norm_sqr()).fold(f64::INFINITY, f64::min).sqrt();
        if min_modulus < ZERO_ON_CIRCLE_EPS {
            return Err(Error::ZeroOnCircle { r, min_modulus });
        }
        let nums = circle::sample(&zd, r, m);
        let estimate = nums.iter().zip(&vals).map(|(n, v)| (n / v).re).sum::<f64>() / m as f64;
        // |z s'/s| = r / |s/s'|
        let nearest = nums
            .iter()
            .zip(&vals)
            .map(|(n, v)| v.norm_sqr() / n.norm_sqr())
            .fold(f64::INFINITY, f64::min)
            .sqrt()
            * r;
        let rounded = estimate.round();
        if nearest * m as f64 >= WINDING_RESOLUTION * r && (estimate - rounded).abs() < 1e-3 && rounded >= 0.0 {
            return Ok(Ok(rounded as usize));
        }
        // For an isolated zero `nearest` is at least its distance to the circle,
        // so `needed` is a lower bound on the sample count that resolves it.
        let needed = WINDING_RESOLUTION * r / nearest;
        m = (2 * m).max(needed.min(2.0 * WINDING_MAX as f64).ceil() as usize).next_power_of_two();
        if m > WINDING_MAX {
            return Ok(Err(estimate));
        }
    }
}

/// Largest radius at which a criterion holds on a partial sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub criterion: Criterion,
    /// 1 when `clamped`.
    pub radius: f64,
    /// The criterion still held at [`RADIUS_CAP`].
    pub clamped: bool,
    /// Boundary scan at the reported radius (at the cap when clamped).
    pub witness: BoundaryScan,
    pub iterations: usize,
    pub tol: f64,
}

/// Roots of a polynomial: companion-matrix eigenvalues polished by Newton
/// steps. `None` if the eigenvalue iteration fails.
pub fn polynomial_roots(p: &TruncatedSeries) -> Option<Vec<Complex64>> {
    let c = p.coeffs();
    let scale = c.iter().map(|x| x.norm()).fold(0.0, f64::max);
    let d = c.iter().rposition(|x| x.norm() > 1e-14 * scale)?;
    if d == 0 {
        return Some(Vec::new());
    }
    let mut m = DMatrix::<Complex64>::zeros(d, d);
    for i in 0..d {
        if i + 1 < d {
            m[(i + 1, i)] = Complex64::new(1.0, 0.0);
        }
        m[(i, d - 1)] = -c[i] / c[d];
    }
    let eig = m.try_schur(f64::EPSILON, 10_000)?.eigenvalues()?;
    let roots = eig
        .iter()
        .map(|&z0| {
            let mut z = z0;
            for _ in 0..8 {
                let [v, d1, _] = p.evaluate_with_derivatives(z);
                if d1.norm() == 0.0 {
                    break;
                }
                let next = z - v / d1;
                if p.evaluate(next).norm() >= v.norm() {
                    break;
                }
                z = next;
            }
            z
        })
        .collect();
    Some(roots)
}

struct Predicate<'a> {
    s: &'a TruncatedSeries,
    c: Criterion,
    denominator: Option<(TruncatedSeries, usize)>,
    roots: OnceCell<Option<Vec<Complex64>>>,
}

impl<'a> Predicate<'a> {
    fn new(s: &'a TruncatedSeries, c: Criterion) -> Result<Self> {
        // Denominator and the number of zeros it is allowed in the disk.
        let denominator = match c {
            Criterion::ReDeriv => None,
            Criterion::Convexity | Criterion::LocalUnivalence => Some((s.derivative()?, 0)),
            Criterion::Starlikeness => Some((s.clone(), 1)),
        };
        Ok(Self {
            s,
            c,
            denominator,
            roots: OnceCell::new(),
        })
    }

    fn boundary_positive(&self, r: f64) -> Result<bool> {
        match boundary_min(self.s, self.c, r, DEFAULT_GRID) {
            Ok(scan) => Ok(scan.min_value > 0.0),
            Err(Error::PoleProximity { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    fn zeros_admissible(&self, r: f64) -> Result<bool> {
        let Some((den, allowed)) = &self.denominator else {
            return Ok(true);
        };
        match count_zeros_cached(den, r, &self.roots) {
            Ok(n) => Ok(n == *allowed),
            Err(Error::ZeroOnCircle { .. }) | Err(Error::WindingNotConverged { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    fn holds(&self, r: f64) -> Result<bool> {
        Ok(self.boundary_positive(r)? && self.zeros_admissible(r)?)
    }
}

/// Bisection on `(0, hi]` for the last radius where `pred` holds; `pred` is
/// taken to hold at 0 and fail at `hi`. Returns `(lo, hi, iterations)`.
fn bisect(
    mut pred: impl FnMut(f64) -> Result<bool>,
    hi: f64,
    tol: f64,
) -> Result<(f64, f64, usize)> {
    let (mut lo, mut hi) = (0.0, hi);
    let mut iterations = 0;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if pred(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok((lo, hi, iterations))
}

/// Largest `r <= RADIUS_CAP` such that the criterion holds on `|z| < r`,
/// located by bisection to within `tol`.
///
/// For criteria with a denominator the disk must also be free of its zeros
/// (apart from the simple zero of `s` at the origin), verified by
/// [`count_zeros`].
pub fn criterion_radius(s: &TruncatedSeries, c: Criterion, tol: f64) -> Result<RadiusResult> {
    if !s.is_normalized() {
        return Err(Error::Validation("radius problems need a normalized series z + a_2 z^2 + ...".into()));
    }
    if tol.is_nan() || tol < 1e-12 {
        return Err(Error::Domain(format!("bisection tolerance must be at least 1e-12, got {tol}")));
    }
    let pred = Predicate::new(s, c)?;

    if pred.holds(RADIUS_CAP)? {
        return Ok(RadiusResult {
            criterion: c,
            radius: 1.0,
            clamped: true,
            witness: boundary_min(s, c, RADIUS_CAP, DEFAULT_GRID)?,
            iterations: 0,
            tol,
        });
    }

    // The zero count is monotone in r. If it is admissible at the final lower
    // end of a boundary-only bisection, it is admissible at every midpoint that
    // bisection accepted, so the full predicate would have taken the same path.
    let (mut lo, mut hi, mut iterations) = bisect(|r| pred.boundary_positive(r), RADIUS_CAP, tol)?;
    if lo > 0.0 && !pred.zeros_admissible(lo)? {
        (lo, hi, iterations) = bisect(|r| pred.holds(r), RADIUS_CAP, tol)?;
    }

    let radius = 0.5 * (lo + hi);
    let witness = match boundary_min(s, c, radius, DEFAULT_GRID) {
        Ok(scan) => scan,
        Err(Error::PoleProximity { .. }) => boundary_min(s, c, lo.max(tol), DEFAULT_GRID)?,
        Err(e) => return Err(e),
    };
    Ok(RadiusResult {
        criterion: c,
        radius,
        clamped: false,
        witness,
        iterations,
        tol,
    })
}

/// Re-checks a result: the criterion holds at `radius - tol` and fails at
/// `min(radius + tol, cap)` unless the result was clamped.
pub fn certify(s: &TruncatedSeries, result: &RadiusResult) -> Result<bool> {
    let pred = Predicate::new(s, result.criterion)?;
    if result.clamped {
        return pred.holds(RADIUS_CAP);
    }
    let below = result.radius - result.tol;
    let holds_below = below <= 0.0 || pred.holds(below)?;
    let fails_above = !pred.holds((result.radius + result.tol).min(RADIUS_CAP))?;
    Ok(holds_below && fails_above)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo::{self, HerglotzSpec};
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn real(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn s2_f0() -> TruncatedSeries {
        zoo::f0(2)
    }

    #[test]
    fn criterion_value_examples() {
        let id = TruncatedSeries::identity(1);
        for z in [real(0.3), Complex64::new(-0.2, 0.5)] {
            assert_eq!(criterion_value(&id, Criterion::ReDeriv, z).unwrap(), 1.0);
        }
        // (1 + 6z)/(1 + 3z) vanishes at -1/6.
        let v = criterion_value(&s2_f0(), Criterion::Convexity, real(-1.0 / 6.0)).unwrap();
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-12);
        let v = criterion_value(&s2_f0(), Criterion::ReDeriv, real(-1.0 / 3.0)).unwrap();
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-12);
        assert_eq!(criterion_value(&s2_f0(), Criterion::Starlikeness, real(0.0)).unwrap(), 1.0);
        let v = criterion_value(&s2_f0(), Criterion::LocalUnivalence, real(0.1)).unwrap();
        assert_abs_diff_eq!(v, 1.3, epsilon = 1e-15);
    }

    #[test]
    fn criterion_value_pole_error() {
        let err = criterion_value(&s2_f0(), Criterion::Convexity, real(-1.0 / 3.0));
        // s'(-1/3) = 1 - 1 = 0 exactly in binary64.
        assert!(matches!(err, Err(Error::PoleProximity { .. })), "{err:?}");
    }

    #[test]
    fn criterion_names_round_trip() {
        for c in Criterion::ALL {
            assert_eq!(c.as_str().parse::<Criterion>().unwrap(), c);
        }
        assert!("concave".parse::<Criterion>().is_err());
    }

    #[test]
    fn boundary_min_sharp_case() {
        let scan = boundary_min(&s2_f0(), Criterion::ReDeriv, 1.0 / 3.0, DEFAULT_GRID).unwrap();
        assert_abs_diff_eq!(scan.min_value, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(scan.argmin_theta, PI, epsilon = 1e-6);
    }

    #[test]
    fn boundary_min_cube_kernel() {
        // Re s' for s = f0 is Re 1/(1-z)^3.
        let f = zoo::f0(200);
        let scan = boundary_min(&f, Criterion::ReDeriv, 1.0 / 3.0, DEFAULT_GRID).unwrap();
        assert_abs_diff_eq!(scan.min_value, 27.0 / 64.0, epsilon = 1e-10);
        assert_abs_diff_eq!(scan.argmin_theta, PI, epsilon = 1e-4);
    }

    #[test]
    fn boundary_min_identity() {
        for r in [0.1, 0.5, 0.9] {
            let scan = boundary_min(&TruncatedSeries::identity(3), Criterion::ReDeriv, r, 64).unwrap();
            assert_eq!(scan.min_value, 1.0);
            assert_eq!(scan.argmin_theta, 0.0);
        }
    }

    #[test]
    fn boundary_min_domain_errors() {
        let s = s2_f0();
        assert!(boundary_min(&s, Criterion::ReDeriv, 1.0, 64).is_err());
        assert!(boundary_min(&s, Criterion::ReDeriv, 0.0, 64).is_err());
        assert!(boundary_min(&s, Criterion::ReDeriv, 0.5, 8).is_err());
    }

    #[test]
    fn boundary_min_grid_robust() {
        let f = zoo::sample_specs(5, 3, 3)
            .iter()
            .map(|spec| spec.synthesize(12).unwrap())
            .collect::<Vec<_>>();
        for s in &f {
            for c in [Criterion::ReDeriv, Criterion::Starlikeness, Criterion::Convexity] {
                let a = boundary_min(s, c, 0.3, 2048).unwrap().min_value;
                let b = boundary_min(s, c, 0.3, 4096).unwrap().min_value;
                assert!((a - b).abs() < 1e-9, "{c}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn radius_examples() {
        let r = criterion_radius(&s2_f0(), Criterion::ReDeriv, DEFAULT_TOL).unwrap();
        assert_abs_diff_eq!(r.radius, 1.0 / 3.0, epsilon = 1e-6);
        assert!(!r.clamped);

        let r = criterion_radius(&s2_f0(), Criterion::Convexity, DEFAULT_TOL).unwrap();
        assert_abs_diff_eq!(r.radius, 1.0 / 6.0, epsilon = 1e-6);

        let r = criterion_radius(&TruncatedSeries::identity(4), Criterion::ReDeriv, DEFAULT_TOL).unwrap();
        assert!(r.clamped);
        assert_eq!(r.radius, 1.0);
    }

    #[test]
    fn s3_re_deriv_radius_matches_quadratic_oracle() {
        // Re s'(r e^{it}) = 1 - 6r^2 + 3r x + 12 r^2 x^2 with x = cos t. Its
        // minimum over x in [-1, 1] is found by brute force on a fine x-grid
        // refined around the vertex, and the first r where it reaches zero by
        // a separate bisection.
        let min_over_x = |r: f64| -> f64 {
            let q = |x: f64| 1.0 - 6.0 * r * r + 3.0 * r * x + 12.0 * r * r * x * x;
            let vertex = (-3.0 * r / (24.0 * r * r)).clamp(-1.0, 1.0);
            (0..=2000).map(|i| q(-1.0 + i as f64 / 1000.0)).fold(q(vertex), f64::min)
        };
        let (mut lo, mut hi) = (0.2, 0.5);
        for _ in 0..100 {
            let mid = 0.5 * (lo + hi);
            if min_over_x(mid) > 0.0 {
                lo = mid
            } else {
                hi = mid
            }
        }
        let oracle = 0.5 * (lo + hi);
        assert_abs_diff_eq!(oracle, (13.0f64 / 96.0).sqrt(), epsilon = 1e-12);

        let r = criterion_radius(&zoo::f0(3), Criterion::ReDeriv, DEFAULT_TOL).unwrap();
        assert_abs_diff_eq!(r.radius, oracle, epsilon = 1e-6);
    }

    #[test]
    fn radius_rejects_non_normalized() {
        let s = TruncatedSeries::from_real(&[0.0, 2.0, 1.0]).unwrap();
        assert!(matches!(criterion_radius(&s, Criterion::ReDeriv, 1e-9), Err(Error::Validation(_))));
        assert!(matches!(criterion_radius(&s2_f0(), Criterion::ReDeriv, 1e-13), Err(Error::Domain(_))));
    }

    #[test]
    fn starlikeness_of_s2_f0() {
        // z s'/s = (1 + 3z)/(1 + 3z/2); the image circle is symmetric about the
        // real axis, so the minimum is at z = -r and vanishes at r = 1/3.
        let r = criterion_radius(&s2_f0(), Criterion::Starlikeness, DEFAULT_TOL).unwrap();
        assert_abs_diff_eq!(r.radius, 1.0 / 3.0, epsilon = 1e-6);
    }

    #[test]
    fn local_univalence_radius_is_first_critical_point() {
        // s' = 1 + 3z vanishes at -1/3.
        let r = criterion_radius(&s2_f0(), Criterion::LocalUnivalence, DEFAULT_TOL).unwrap();
        assert_abs_diff_eq!(r.radius, 1.0 / 3.0, epsilon = 1e-6);
    }

    #[test]
    fn starlikeness_guard_catches_interior_zeros() {
        // s = z (1 + 4z)^2 / ... : here s = z + 8 z^2 + 16 z^3 has a double zero
        // at -1/4, so s is not starlike past r = 1/4 whatever the boundary says.
        let s = TruncatedSeries::from_real(&[0.0, 1.0, 8.0, 16.0]).unwrap();
        let r = criterion_radius(&s, Criterion::Starlikeness, DEFAULT_TOL).unwrap();
        assert!(r.radius <= 0.25 + 1e-6, "{}", r.radius);
        assert!(certify(&s, &r).unwrap());
    }

    #[test]
    fn results_certify() {
        let specs = zoo::sample_specs(6, 3, 17);
        for spec in &specs {
            let f = spec.synthesize(10).unwrap();
            for c in Criterion::ALL {
                let s = f.section(6).unwrap();
                let r = criterion_radius(&s, c, 1e-8).unwrap();
                assert!(certify(&s, &r).unwrap(), "{c} radius {}", r.radius);
            }
        }
    }

    #[test]
    fn radius_is_rotation_invariant() {
        let spec = HerglotzSpec::from_seed(99, 3);
        let s = spec.synthesize(8).unwrap();
        let mu = Complex64::from_polar(1.0, 1.234);
        let t = zoo::rotation(&s, mu).unwrap();
        for c in Criterion::ALL {
            let a = criterion_radius(&s, c, DEFAULT_TOL).unwrap().radius;
            let b = criterion_radius(&t, c, DEFAULT_TOL).unwrap().radius;
            assert!((a - b).abs() <= 2.0 * DEFAULT_TOL, "{c}: {a} vs {b}");
        }
    }

    #[test]
    fn re_deriv_boundary_min_non_increasing() {
        for spec in zoo::sample_specs(50, 3, 5) {
            let f = spec.synthesize(64).unwrap();
            let s = f.section(2 + (spec.seed().unwrap() % 18) as usize).unwrap();
            let mut prev = f64::INFINITY;
            for i in 1..=19 {
                let r = 0.05 * i as f64;
                let m = boundary_min(&s, Criterion::ReDeriv, r, DEFAULT_GRID).unwrap().min_value;
                assert!(m <= prev + 1e-12, "r = {r}: {m} > {prev}");
                prev = m;
            }
        }
    }

    #[test]
    fn count_zeros_examples() {
        let p = TruncatedSeries::from_real(&[1.0, 3.0]).unwrap();
        assert_eq!(count_zeros(&p, 0.5).unwrap(), 1);
        assert_eq!(count_zeros(&p, 0.25).unwrap(), 0);
        assert_eq!(count_zeros(&TruncatedSeries::identity(1), 0.5).unwrap(), 1);
    }

    #[test]
    fn count_zeros_errors() {
        let p = TruncatedSeries::from_real(&[1.0, 3.0]).unwrap();
        assert!(matches!(count_zeros(&p, 1.0 / 3.0), Err(Error::ZeroOnCircle { .. })));
        assert!(matches!(count_zeros(&TruncatedSeries::zero(3), 0.5), Err(Error::Degenerate(_))));
        assert!(matches!(count_zeros(&p, -1.0), Err(Error::Domain(_))));
    }

    #[test]
    fn roots_of_product_form() {
        // (z - 0.5)(z + 2)(z - i) expanded.
        let want = [real(0.5), real(-2.0), Complex64::new(0.0, 1.0)];
        let mut p = TruncatedSeries::from_real(&[1.0]).unwrap();
        for w in want {
            let lin = TruncatedSeries::new(vec![-w, real(1.0)]).unwrap();
            p = poly_mul(&p, &lin);
        }
        let mut got = polynomial_roots(&p).unwrap();
        assert_eq!(got.len(), 3);
        for w in want {
            let (k, d) = got
                .iter()
                .enumerate()
                .map(|(k, z)| (k, (z - w).norm()))
                .fold((0, f64::INFINITY), |a, b| if b.1 < a.1 { b } else { a });
            assert!(d < 1e-12, "{w}: {d}");
            got.remove(k);
        }
    }

    fn poly_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        let mut c = vec![real(0.0); a.order() + b.order() + 1];
        for (i, x) in a.coeffs().iter().enumerate() {
            for (j, y) in b.coeffs().iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        TruncatedSeries::new(c).unwrap()
    }

    #[test]
    fn local_univalence_radius_is_smallest_critical_point() {
        // s' = 1 + 2 a z + 3 b z^2; its roots come from the quadratic formula.
        for (a, b) in [(0.7, 0.9), (-1.2, 0.4), (0.3, 1.5)] {
            let s = TruncatedSeries::from_real(&[0.0, 1.0, a, b]).unwrap();
            let disc = Complex64::new(4.0 * a * a - 12.0 * b, 0.0).sqrt();
            let r1 = (-2.0 * a + disc) / (6.0 * b);
            let r2 = (-2.0 * a - disc) / (6.0 * b);
            let want = r1.norm().min(r2.norm()).min(RADIUS_CAP);
            let got = criterion_radius(&s, Criterion::LocalUnivalence, DEFAULT_TOL).unwrap();
            assert_abs_diff_eq!(got.radius, want, epsilon = DEFAULT_TOL);
        }
    }

    fn from_roots(lead: Complex64, roots: &[Complex64]) -> TruncatedSeries {
        let mut c = vec![lead];
        for &z in roots {
            let mut next = vec![real(0.0); c.len() + 1];
            for (j, &a) in c.iter().enumerate() {
                next[j + 1] += a;
                next[j] -= a * z;
            }
            c = next;
        }
        TruncatedSeries::new(c).unwrap()
    }

    proptest! {
        #[test]
        fn zero_count_matches_known_roots(
            roots in prop::collection::vec((-1.5f64..1.5, -1.5f64..1.5), 1..=5),
            r in 0.05f64..1.5,
        ) {
            let roots: Vec<Complex64> = roots.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
            prop_assume!(roots.iter().all(|z| (z.norm() - r).abs() >= 1e-6));
            let p = from_roots(Complex64::new(0.8, -0.3), &roots);
            let want = roots.iter().filter(|z| z.norm() < r).count();
            prop_assert_eq!(count_zeros(&p, r).unwrap(), want);
        }

        #[test]
        fn zero_count_matches_quadratic_formula(
            c0 in -1.0f64..1.0, c1 in -1.0f64..1.0, c2 in -1.0f64..1.0, r in 0.05f64..2.0,
        ) {
            prop_assume!(c2.abs() > 1e-3);
            let disc = Complex64::new(c1 * c1 - 4.0 * c2 * c0, 0.0).sqrt();
            let roots = [(-c1 + disc) / (2.0 * c2), (-c1 - disc) / (2.0 * c2)];
            prop_assume!(roots.iter().all(|z| (z.norm() - r).abs() >= 1e-6));
            let p = TruncatedSeries::from_real(&[c0, c1, c2]).unwrap();
            let want = roots.iter().filter(|z| z.norm() < r).count();
            prop_assert_eq!(count_zeros(&p, r).unwrap(), want);
        }
    }
}

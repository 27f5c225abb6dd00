//! Numerical reproduction of the `Re s_n'(z) > 0` on `|z| < 1/3` argument,
//! randomized suites over the class `F`, and exploratory radius scans.
//!
//! Every check yields a [`VerificationItem`]. Items with an `expected` value
//! pass when `|computed - expected| <= tolerance`; items without one are
//! one-sided margins and pass when `computed >= -tolerance`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::ops::RangeInclusive;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{k_tail, tail_derivative_bound};
use crate::error::{Error, Result};
use crate::minimize::{golden_section, minimize_periodic, periodic_minimum};
use crate::radius::{boundary_min, criterion_radius, BoundaryScan, Criterion, DEFAULT_GRID, DEFAULT_TOL, THETA_TOL};
use crate::series::TruncatedSeries;
use crate::zoo::{self, HerglotzSpec, DEFAULT_ORDER, GENERATOR_NAME};

/// Tolerance for constants that are exact rationals.
pub const CONSTANT_TOL: f64 = 1e-10;
/// Tolerance for the minimum of `Re (1 - z)^-3` and derived margins.
pub const CUBE_KERNEL_TOL: f64 = 1e-9;
/// Tolerance for the bound identities on `k(n)`.
pub const TAIL_TOL: f64 = 1e-13;
/// Tolerance on computed radii.
pub const RADIUS_TOL: f64 = 1e-6;
/// Slack on boundary margins in the randomized suite.
pub const MARGIN_SLACK: f64 = 1e-9;
/// The suite evaluates just inside `|z| = 1/3`; the extremal touches zero on it.
pub const SUITE_RADIUS: f64 = 1.0 / 3.0 - 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub r: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationItem {
    pub name: String,
    pub expected: Option<f64>,
    pub computed: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl VerificationItem {
    pub fn equals(name: impl Into<String>, expected: f64, computed: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            expected: Some(expected),
            computed,
            tolerance,
            pass: (computed - expected).abs() <= tolerance,
            witness: None,
        }
    }

    /// One-sided check `computed >= -tolerance`.
    pub fn margin(name: impl Into<String>, computed: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            expected: None,
            computed,
            tolerance,
            pass: computed >= -tolerance,
            witness: None,
        }
    }

    pub fn with_witness(mut self, r: f64, theta: f64) -> Self {
        self.witness = Some(Witness { r, theta });
        self
    }

    /// Recomputes `pass` from the other fields.
    pub fn is_consistent(&self) -> bool {
        let pass = match self.expected {
            Some(e) => (self.computed - e).abs() <= self.tolerance,
            None => self.computed >= -self.tolerance,
        };
        pass == self.pass
    }
}

/// A run parameter recorded in a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(i64),
    Float(f64),
    Text(String),
}

impl From<usize> for Param {
    fn from(v: usize) -> Self {
        Param::Int(v as i64)
    }
}

impl From<u64> for Param {
    fn from(v: u64) -> Self {
        // Seeds above i64::MAX keep their exact value as text.
        i64::try_from(v).map(Param::Int).unwrap_or_else(|_| Param::Text(v.to_string()))
    }
}

impl From<f64> for Param {
    fn from(v: f64) -> Self {
        Param::Float(v)
    }
}

impl From<&str> for Param {
    fn from(v: &str) -> Self {
        Param::Text(v.to_owned())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub items: Vec<VerificationItem>,
    pub seed: u64,
    pub parameters: BTreeMap<String, Param>,
    pub generator_name: String,
}

impl VerificationReport {
    pub fn new(seed: u64) -> Self {
        Self {
            items: Vec::new(),
            seed,
            parameters: BTreeMap::new(),
            generator_name: GENERATOR_NAME.to_owned(),
        }
    }

    pub fn passed(&self) -> bool {
        !self.items.is_empty() && self.items.iter().all(|i| i.pass)
    }

    pub fn item(&self, name: &str) -> Option<&VerificationItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn param(mut self, key: &str, value: impl Into<Param>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    /// Appends another report's items and parameters (prefixed by `prefix.`).
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        self.items.extend(other.items);
        for (k, v) in other.parameters {
            self.parameters.insert(format!("{prefix}.{k}"), v);
        }
    }
}

/// `g(theta) = 1 + cos(theta) + cos(2 theta)/2`.
pub fn g(theta: f64) -> f64 {
    1.0 + theta.cos() + (2.0 * theta).cos() / 2.0
}

/// `T(theta, phi) = g(theta) + cos(phi)/6`: the value of
/// `Re(1 + alpha + alpha^2/2 + beta/6)` at `alpha = e^{i theta}`, `beta = e^{i phi}`.
pub fn t_objective(theta: f64, phi: f64) -> f64 {
    g(theta) + phi.cos() / 6.0
}

fn ok(v: f64) -> std::result::Result<f64, std::convert::Infallible> {
    Ok(v)
}

/// Minimum of `g` over `[0, 2*pi)`; the exact value is 1/4 at `2*pi/3` and `4*pi/3`.
pub fn min_g() -> VerificationItem {
    let Ok(m) = minimize_periodic(|t| ok(g(t)), DEFAULT_GRID, THETA_TOL);
    VerificationItem::equals("min_g", 0.25, m.value, CONSTANT_TOL).with_witness(1.0, m.theta)
}

/// Minimum of `T` on a 2048 x 64 grid, refined by alternating golden-section
/// passes in each angle. The exact value is 1/12.
pub fn min_t() -> VerificationItem {
    let (theta, phi, value) = minimize_t(DEFAULT_GRID, 64);
    let _ = phi;
    VerificationItem::equals("min_T", 1.0 / 12.0, value, CONSTANT_TOL).with_witness(1.0, theta)
}

/// Returns `(theta, phi, T(theta, phi))` at the located minimum.
pub fn minimize_t(theta_grid: usize, phi_grid: usize) -> (f64, f64, f64) {
    let (dt, dp) = (TAU / theta_grid as f64, TAU / phi_grid as f64);
    let mut best = (0.0, 0.0, f64::INFINITY);
    for i in 0..theta_grid {
        for j in 0..phi_grid {
            let (t, p) = (dt * i as f64, dp * j as f64);
            let v = t_objective(t, p);
            if v < best.2 {
                best = (t, p, v);
            }
        }
    }
    let (mut t, mut p, mut v) = best;
    for _ in 0..3 {
        let Ok((nt, nv)) = golden_section(|x| ok(t_objective(x, p)), t - dt, t + dt, THETA_TOL);
        if nv < v {
            (t, v) = (nt, nv);
        }
        let Ok((np, nv)) = golden_section(|y| ok(t_objective(t, y)), p - dp, p + dp, THETA_TOL);
        if nv < v {
            (p, v) = (np, nv);
        }
    }
    (t.rem_euclid(TAU), p.rem_euclid(TAU), v)
}

/// Coefficients `[q0, q1, q2, q3]` of `Re (1 - z)^-3` on `|z| = r` written as a
/// cubic in `x = cos(theta)`, using the parametrization
/// `(1 - z)^-1 = (1 + r e^{i theta}) / (1 - r^2)` of the image circle.
pub fn cube_kernel_cubic(r: f64) -> [f64; 4] {
    let s = (1.0 - r * r).powi(-3);
    [
        s * (1.0 - 3.0 * r * r),
        s * 3.0 * r * (1.0 - r * r),
        s * 6.0 * r * r,
        s * 4.0 * r.powi(3),
    ]
}

/// Minimum of `Re (1 - z)^-3` on `|z| = r`, computed two independent ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubeKernelMinimum {
    pub r: f64,
    /// Boundary sampling of the closed form, refined.
    pub boundary: f64,
    /// Angle of the boundary minimum in the `z` parametrization.
    pub theta: f64,
    /// Minimum of the cubic in `cos(theta)` over `[-1, 1]`.
    pub cubic: f64,
    pub cubic_x: f64,
}

impl CubeKernelMinimum {
    pub fn agreement(&self) -> f64 {
        (self.boundary - self.cubic).abs()
    }

    pub fn item(&self, name: &str, expected: f64) -> VerificationItem {
        VerificationItem::equals(name, expected, self.boundary, CUBE_KERNEL_TOL).with_witness(self.r, self.theta)
    }

    /// Checks the boundary route against the cubic route.
    pub fn agreement_item(&self, name: &str) -> VerificationItem {
        VerificationItem::equals(name, self.cubic, self.boundary, CUBE_KERNEL_TOL).with_witness(self.r, self.theta)
    }
}

pub fn min_re_cube_kernel(r: f64) -> Result<CubeKernelMinimum> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!("radius must lie in (0, 1), got {r}")));
    }
    let h = |theta: f64| (1.0 - Complex64::from_polar(r, theta)).powi(-3).re;
    let Ok(b) = minimize_periodic(|t| ok(h(t)), DEFAULT_GRID, THETA_TOL);

    let [q0, q1, q2, q3] = cube_kernel_cubic(r);
    let q = |x: f64| q0 + x * (q1 + x * (q2 + x * q3));
    let Ok((x_in, v_in)) = golden_section(|x| ok(q(x)), -1.0, 1.0, 1e-12);
    let (cubic_x, cubic) = [(-1.0, q(-1.0)), (1.0, q(1.0)), (x_in, v_in)]
        .into_iter()
        .fold((0.0, f64::INFINITY), |acc, c| if c.1 < acc.1 { c } else { acc });

    Ok(CubeKernelMinimum {
        r,
        boundary: b.value,
        theta: b.theta,
        cubic,
        cubic_x,
    })
}

/// `min Re (1 - z)^-3 + k(4)` on `|z| = 1/3`; exactly `27/64 - 73/216 = 145/1728`.
pub fn n4_margin() -> Result<VerificationItem> {
    let m = min_re_cube_kernel(1.0 / 3.0)?;
    Ok(
        VerificationItem::equals("n4_margin", 145.0 / 1728.0, m.boundary + k_tail(4), CUBE_KERNEL_TOL)
            .with_witness(m.r, m.theta),
    )
}

/// The tail-bound identities at `n = 4`, `r = 1/3` and monotonicity of `k`.
pub fn tail_items() -> Result<Vec<VerificationItem>> {
    let min_step = (4..60).map(|n| k_tail(n + 1) - k_tail(n)).fold(f64::INFINITY, f64::min);
    Ok(vec![
        VerificationItem::equals("k_tail_4", -73.0 / 216.0, k_tail(4), TAIL_TOL),
        VerificationItem::equals(
            "tail_derivative_bound_4_1/3",
            73.0 / 216.0,
            tail_derivative_bound(4, 1.0 / 3.0)?,
            TAIL_TOL,
        ),
        // Strictly positive increments: the margin must be > 0 and reported as such.
        VerificationItem {
            pass: min_step > 0.0,
            ..VerificationItem::margin("k_tail_increasing_4_60", min_step, 0.0)
        },
    ])
}

fn radius_item(name: &str, s: &TruncatedSeries, c: Criterion, expected: f64, tol: f64) -> Result<VerificationItem> {
    let r = criterion_radius(s, c, tol)?;
    Ok(VerificationItem::equals(name, expected, r.radius, RADIUS_TOL).with_witness(r.radius, r.witness.argmin_theta))
}

/// Sharpness of the radii 1/3 (`Re s'`) and 1/6 (convexity) at `s_2(f0)`, and
/// the `Re s'` radius `sqrt(13/96)` of `s_3(f0)`.
pub fn sharpness_witnesses(tol: f64) -> Result<Vec<VerificationItem>> {
    let s2 = zoo::f0(2);
    let s3 = zoo::f0(3);
    Ok(vec![
        radius_item("radius_re_deriv_s2_f0", &s2, Criterion::ReDeriv, 1.0 / 3.0, tol)?,
        radius_item("radius_convex_s2_f0", &s2, Criterion::Convexity, 1.0 / 6.0, tol)?,
        radius_item("radius_re_deriv_s3_f0", &s3, Criterion::ReDeriv, (13.0f64 / 96.0).sqrt(), tol)?,
    ])
}

/// `min Re s_n'(z)` over `|z| = SUITE_RADIUS`.
pub fn theorem1_margin(f: &TruncatedSeries, n: usize) -> Result<BoundaryScan> {
    boundary_min(&f.section(n)?, Criterion::ReDeriv, SUITE_RADIUS, DEFAULT_GRID)
}

/// One spec of a suite, with `f0` always first.
struct Case {
    label: String,
    spec: HerglotzSpec,
}

fn cases(count: usize, atom_count: usize, seed: u64) -> Result<Vec<Case>> {
    let mut out = vec![Case {
        label: "f0".into(),
        spec: HerglotzSpec::point_mass(Complex64::new(1.0, 0.0))?,
    }];
    out.extend(zoo::sample_specs(count, atom_count, seed).into_iter().enumerate().map(|(i, spec)| Case {
        label: format!("spec={i},seed={}", spec.seed().unwrap_or_default()),
        spec,
    }));
    Ok(out)
}

fn check_count(count: usize) -> Result<()> {
    if count == 0 {
        return Err(Error::Domain("sample count must be at least 1".into()));
    }
    Ok(())
}

/// Worst `(n, scan)` of one case; ties keep the smallest `n`.
fn worst<T: Copy>(per_n: impl Iterator<Item = (usize, T)>, key: impl Fn(&T) -> f64) -> Option<(usize, T)> {
    per_n.fold(None, |acc: Option<(usize, T)>, cur| match acc {
        Some(a) if key(&a.1) <= key(&cur.1) => Some(a),
        _ => Some(cur),
    })
}

/// Checks `Re s_n' > 0` just inside `|z| = 1/3` for `f0` and `count` sampled
/// members of `F`, for every `2 <= n <= n_max`.
///
/// Items: one per spec (its worst section), `theorem1_f0_n2_margin`, and
/// `theorem1_min_margin` locating the global minimum.
pub fn theorem1_suite(count: usize, atom_count: usize, n_max: usize, seed: u64) -> Result<VerificationReport> {
    check_count(count)?;
    if n_max < 2 {
        return Err(Error::Domain(format!("n_max must be at least 2, got {n_max}")));
    }
    let order = DEFAULT_ORDER.max(n_max);
    let cases = cases(count, atom_count, seed)?;
    let per_case: Vec<Vec<BoundaryScan>> = cases
        .par_iter()
        .map(|case| {
            let f = case.spec.synthesize(order)?;
            (2..=n_max).map(|n| theorem1_margin(&f, n)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut report = VerificationReport::new(seed)
        .param("count", count)
        .param("atom_count", atom_count)
        .param("n_max", n_max)
        .param("order", order)
        .param("radius", SUITE_RADIUS)
        .param("grid_size", DEFAULT_GRID);

    let f0_n2 = per_case[0][0];
    report.items.push(
        VerificationItem::margin("theorem1_f0_n2_margin", f0_n2.min_value, MARGIN_SLACK)
            .with_witness(f0_n2.r, f0_n2.argmin_theta),
    );

    let mut global: Option<(String, BoundaryScan)> = None;
    for (case, scans) in cases.iter().zip(&per_case) {
        let (n, scan) = worst(scans.iter().copied().enumerate().map(|(i, s)| (i + 2, s)), |s| s.min_value)
            .expect("n_max >= 2 gives at least one section");
        let name = format!("theorem1[{},n={n}]", case.label);
        if global.as_ref().is_none_or(|g| scan.min_value < g.1.min_value) {
            global = Some((name.clone(), scan));
        }
        report
            .items
            .push(VerificationItem::margin(name, scan.min_value, MARGIN_SLACK).with_witness(scan.r, scan.argmin_theta));
    }
    let (at, scan) = global.expect("at least f0 is present");
    report.items.push(
        VerificationItem::margin("theorem1_min_margin", scan.min_value, MARGIN_SLACK).with_witness(scan.r, scan.argmin_theta),
    );
    Ok(report.param("min_margin_at", at.as_str()))
}

/// Starlikeness radii of `s_n(f)` for `f0` and `count` sampled members of `F`.
///
/// This reports; it does not assert. Each item is the margin
/// `radius - 1/3` of a spec's worst section with tolerance 1e-6, so a failing
/// item is a candidate counterexample with its witness attached.
pub fn conjecture2_scan(
    count: usize,
    atom_count: usize,
    sections: RangeInclusive<usize>,
    seed: u64,
) -> Result<VerificationReport> {
    check_count(count)?;
    let (n_min, n_max) = (*sections.start(), *sections.end());
    if n_min < 2 || n_max < n_min {
        return Err(Error::Domain(format!("section range must satisfy 2 <= a <= b, got {n_min}..{n_max}")));
    }
    let cases = cases(count, atom_count, seed)?;
    let per_case: Vec<Vec<(f64, f64)>> = cases
        .par_iter()
        .map(|case| {
            let f = case.spec.synthesize(n_max)?;
            sections
                .clone()
                .map(|n| {
                    let r = criterion_radius(&f.section(n)?, Criterion::Starlikeness, DEFAULT_TOL)?;
                    Ok((r.radius, r.witness.argmin_theta))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut report = VerificationReport::new(seed)
        .param("count", count)
        .param("atom_count", atom_count)
        .param("n_min", n_min)
        .param("n_max", n_max)
        .param("tol", DEFAULT_TOL)
        .param("conjectured_radius", 1.0 / 3.0);

    let mut global: Option<(usize, usize, (f64, f64))> = None;
    for (idx, (case, radii)) in cases.iter().zip(&per_case).enumerate() {
        let (n, (radius, theta)) =
            worst(radii.iter().copied().enumerate().map(|(i, v)| (i + n_min, v)), |v| v.0).expect("non-empty range");
        if global.is_none_or(|g| radius < g.2 .0) {
            global = Some((idx, n, (radius, theta)));
        }
        report.items.push(
            VerificationItem::margin(format!("conjecture2[{},n={n}]", case.label), radius - 1.0 / 3.0, RADIUS_TOL)
                .with_witness(radius, theta),
        );
    }
    let (idx, n, (radius, theta)) = global.expect("at least f0 is present");
    report.items.push(
        VerificationItem::margin("conjecture2_min_radius_margin", radius - 1.0 / 3.0, RADIUS_TOL)
            .with_witness(radius, theta),
    );
    let witness_seed = cases[idx].spec.seed().map_or(Param::from("f0"), Param::from);
    Ok(report
        .param("min_radius", radius)
        .param("witness_case", cases[idx].label.as_str())
        .param("witness_seed", witness_seed)
        .param("witness_n", n)
        .param("witness_theta", theta))
}

/// `1 - (3/n) log n`.
pub fn classical_threshold(n: usize) -> f64 {
    let n = n as f64;
    1.0 - 3.0 / n * n.ln()
}

/// Starlikeness radii of the Koebe sections against `1 - (3/n) log n`.
pub fn classical_radius_scan(n_min: usize, n_max: usize) -> Result<VerificationReport> {
    if n_min < 5 || n_max < n_min {
        return Err(Error::Domain(format!("classical scan needs 5 <= n_min <= n_max, got {n_min}..{n_max}")));
    }
    let koebe = zoo::koebe(n_max);
    let items = (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let r = criterion_radius(&koebe.section(n)?, Criterion::Starlikeness, DEFAULT_TOL)?;
            Ok(
                VerificationItem::margin(format!("classical[n={n}]"), r.radius - classical_threshold(n), RADIUS_TOL)
                    .with_witness(r.radius, r.witness.argmin_theta),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let mut report = VerificationReport::new(0)
        .param("n_min", n_min)
        .param("n_max", n_max)
        .param("tol", DEFAULT_TOL)
        .param("function", "koebe");
    report.generator_name = "none (deterministic)".into();
    report.items = items;
    Ok(report)
}

/// Closed boundary curve of the image of `|z| < r` under `(1 - z)^-3`:
/// `w = (1 + r e^{i theta})^3 / (1 - r^2)^3` at `samples` equally spaced
/// angles from 0 to `2*pi` inclusive.
pub fn figure1_curves(r: f64, samples: usize) -> Result<Vec<Complex64>> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!("curve radius must lie in (0, 1), got {r}")));
    }
    if samples < 2 {
        return Err(Error::Domain("a closed curve needs at least 2 samples".into()));
    }
    let scale = (1.0 - r * r).powi(-3);
    Ok((0..samples)
        .map(|k| {
            let theta = TAU * k as f64 / (samples - 1) as f64;
            (1.0 + Complex64::from_polar(r, theta)).powi(3) * scale
        })
        .collect())
}

/// Leftmost point of the curve: the sampled minimum of `Re w`, refined on the
/// exact parametrization. Returns `(min Re w, theta)`.
pub fn figure1_min_real(r: f64, samples: usize) -> Result<(f64, f64)> {
    let curve = figure1_curves(r, samples)?;
    let scale = (1.0 - r * r).powi(-3);
    let re: Vec<f64> = curve[..samples - 1].iter().map(|w| w.re).collect();
    let Ok(m) = periodic_minimum(&re, |t| ok(((1.0 + Complex64::from_polar(r, t)).powi(3) * scale).re), THETA_TOL);
    Ok((m.value, m.theta))
}

/// Settings for [`verify_all`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub count: usize,
    pub atom_count: usize,
    pub n_max: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            count: 200,
            atom_count: 3,
            n_max: 20,
            seed: 7,
            tol: DEFAULT_TOL,
        }
    }
}

/// Every fixed constant of the argument plus the randomized suite.
pub fn verify_all(cfg: &VerifyConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(cfg.seed).param("tol", cfg.tol);
    report.items.push(min_g());
    report.items.push(min_t());
    let cube = min_re_cube_kernel(1.0 / 3.0)?;
    report.items.push(cube.item("min_re_cube_kernel_1/3", 27.0 / 64.0));
    report.items.push(cube.agreement_item("min_re_cube_kernel_1/3_dual_path"));
    report.items.extend(tail_items()?);
    report.items.push(n4_margin()?);
    report.items.extend(sharpness_witnesses(cfg.tol)?);
    report.absorb("theorem1", theorem1_suite(cfg.count, cfg.atom_count, cfg.n_max, cfg.seed)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use approx::assert_abs_diff_eq;

    #[test]
    fn g_samples() {
        assert_abs_diff_eq!(g(0.0), 2.5, epsilon = 1e-15);
        assert_abs_diff_eq!(g(PI), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(g(2.0 * PI / 3.0), 0.25, epsilon = 1e-15);
    }

    #[test]
    fn min_g_item() {
        let item = min_g();
        assert!(item.pass, "{item:?}");
        let theta = item.witness.unwrap().theta;
        let near = (theta - 2.0 * PI / 3.0).abs().min((theta - 4.0 * PI / 3.0).abs());
        assert!(near < 1e-5, "theta = {theta}");
    }

    #[test]
    fn min_t_item_and_separability() {
        assert_abs_diff_eq!(t_objective(0.0, 0.0), 8.0 / 3.0, epsilon = 1e-15);
        let item = min_t();
        assert!(item.pass, "{item:?}");
        assert_abs_diff_eq!(item.computed, min_g().computed - 1.0 / 6.0, epsilon = 1e-12);
        let (_, phi, _) = minimize_t(DEFAULT_GRID, 64);
        assert_abs_diff_eq!(phi, PI, epsilon = 1e-5);
    }

    #[test]
    fn cubic_matches_written_form_at_one_third() {
        let s = (9.0f64 / 8.0).powi(3);
        let expected = [s * 2.0 / 3.0, s * 8.0 / 9.0, s * 2.0 / 3.0, s * 4.0 / 27.0];
        for (a, b) in cube_kernel_cubic(1.0 / 3.0).iter().zip(expected) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-14);
        }
        // p'(x) = 81 (x + 2)(x + 1) / 128
        let [_, q1, q2, q3] = cube_kernel_cubic(1.0 / 3.0);
        for x in [-1.0, -0.5, 0.0, 0.7] {
            let dp = q1 + 2.0 * q2 * x + 3.0 * q3 * x * x;
            assert_abs_diff_eq!(dp, 81.0 * (x + 2.0) * (x + 1.0) / 128.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn cube_kernel_minimum_at_one_third() {
        let m = min_re_cube_kernel(1.0 / 3.0).unwrap();
        assert_abs_diff_eq!(m.boundary, 27.0 / 64.0, epsilon = 1e-9);
        assert_abs_diff_eq!(m.cubic, 27.0 / 64.0, epsilon = 1e-9);
        assert!(m.agreement() <= 1e-9);
        assert_abs_diff_eq!(m.theta, PI, epsilon = 1e-4);
        assert_eq!(m.cubic_x, -1.0);
    }

    #[test]
    fn cube_kernel_minimum_at_one_half_touches_zero() {
        // Dense-sampling oracle, independent of the refinement path.
        let dense = (0..200_000)
            .map(|k| (1.0 - Complex64::from_polar(0.5, TAU * k as f64 / 200_000.0)).powi(-3).re)
            .fold(f64::INFINITY, f64::min);
        let m = min_re_cube_kernel(0.5).unwrap();
        assert_abs_diff_eq!(dense, 0.0, epsilon = 1e-7);
        assert_abs_diff_eq!(m.boundary, 0.0, epsilon = 1e-7);
        assert_abs_diff_eq!(m.cubic, 0.0, epsilon = 1e-7);
    }

    #[test]
    fn cube_kernel_minimum_tends_to_one_at_center() {
        let m = min_re_cube_kernel(1e-6).unwrap();
        assert_abs_diff_eq!(m.boundary, 1.0, epsilon = 1e-5);
        assert!(min_re_cube_kernel(1.0).is_err());
    }

    #[test]
    fn n4_margin_item() {
        let item = n4_margin().unwrap();
        assert!(item.pass, "{item:?}");
        assert_abs_diff_eq!(k_tail(4), -73.0 / 216.0, epsilon = 1e-15);
        let with_k10 = min_re_cube_kernel(1.0 / 3.0).unwrap().boundary + k_tail(10);
        assert!(with_k10 > 145.0 / 1728.0);
    }

    #[test]
    fn tail_items_pass() {
        for item in tail_items().unwrap() {
            assert!(item.pass, "{item:?}");
        }
    }

    #[test]
    fn sharpness_items_pass() {
        for item in sharpness_witnesses(DEFAULT_TOL).unwrap() {
            assert!(item.pass, "{item:?}");
        }
    }

    #[test]
    fn identity_limit_margin_is_near_one() {
        let f = HerglotzSpec::roots_of_unity(65).unwrap().synthesize(64).unwrap();
        for n in 2..=20 {
            let m = theorem1_margin(&f, n).unwrap().min_value;
            assert!((m - 1.0).abs() < 1e-9, "n = {n}: {m}");
        }
    }

    #[test]
    fn small_theorem1_suite() {
        let report = theorem1_suite(20, 3, 10, 1).unwrap();
        assert!(report.passed());
        let f0 = report.item("theorem1_f0_n2_margin").unwrap();
        assert!(f0.computed <= 1e-4 && f0.computed >= -1e-9);
        // Re s_2'(z) = 1 + 3 Re z for f0, minimized at z = -r.
        assert_abs_diff_eq!(f0.computed, 1.0 - 3.0 * SUITE_RADIUS, epsilon = 1e-12);
        assert_eq!(report.items.len(), 21 + 2);
        assert!(report.items.iter().all(VerificationItem::is_consistent));
        assert_eq!(report, theorem1_suite(20, 3, 10, 1).unwrap());
        assert!(theorem1_suite(0, 3, 10, 1).is_err());
    }

    #[test]
    fn small_conjecture2_scan() {
        let report = conjecture2_scan(5, 3, 2..=6, 11).unwrap();
        let f0 = &report.items[0];
        assert!(f0.name.starts_with("conjecture2[f0"));
        assert_abs_diff_eq!(f0.witness.unwrap().r, 1.0 / 3.0, epsilon = 1e-6);
        for key in ["min_radius", "witness_seed", "witness_n", "witness_theta"] {
            assert!(report.parameters.contains_key(key), "{key}");
        }
        assert!(conjecture2_scan(5, 3, 1..=6, 11).is_err());
    }

    #[test]
    fn classical_thresholds() {
        assert_abs_diff_eq!(classical_threshold(5), 0.034_337_25, epsilon = 1e-6);
        assert_abs_diff_eq!(classical_threshold(10), 0.309_224_5, epsilon = 1e-6);
        assert!(classical_radius_scan(4, 10).is_err());
        let report = classical_radius_scan(5, 12).unwrap();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn figure_curve_examples() {
        let curve = figure1_curves(1.0 / 3.0, 2049).unwrap();
        assert!((curve[0] - curve[2048]).norm() < 1e-12);
        assert_abs_diff_eq!(curve[1024].re, 27.0 / 64.0, epsilon = 1e-12);
        assert_abs_diff_eq!(curve[1024].im, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(curve[0].re, 27.0 / 8.0, epsilon = 1e-12);
        let (m, _) = figure1_min_real(0.5, 2048).unwrap();
        assert_abs_diff_eq!(m, 0.0, epsilon = 1e-6);
        assert!(figure1_curves(1.5, 10).is_err());
    }

    #[test]
    fn margin_items() {
        assert!(VerificationItem::margin("a", -1e-10, 1e-9).pass);
        assert!(!VerificationItem::margin("a", -1e-8, 1e-9).pass);
        assert!(VerificationItem::equals("b", 1.0, 1.0 + 1e-11, 1e-10).pass);
        assert!(!VerificationItem::equals("b", 1.0, 1.1, 1e-10).pass);
    }

    #[test]
    fn param_from_large_seed_keeps_value() {
        assert_eq!(Param::from(u64::MAX), Param::Text(u64::MAX.to_string()));
        assert_eq!(Param::from(7u64), Param::Int(7));
    }
}

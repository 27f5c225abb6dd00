//! Canonical series and a generator for members of the class `F`.
//!
//! A function `f` with `f(0) = 0`, `f'(0) = 1` belongs to `F` when
//! `Re(1 + z f''/f') > -1/2` on the unit disk. Writing
//! `1 + (2/3) z f''/f' = p` turns this into `Re p > 0`, so every
//! Carathéodory-class `p` yields a member of `F`. Here `p` is given by a
//! finite Herglotz measure
//!
//! ```text
//! p(z) = sum_k w_k (1 + x_k z) / (1 - x_k z),   w_k > 0, sum w_k = 1, |x_k| = 1,
//! ```
//!
//! whose coefficients are `p_j = 2 sum_k w_k x_k^j`.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Tolerance on the unit-mass and unimodularity invariants.
pub const SPEC_TOL: f64 = 1e-12;

/// Synthesis order used when callers have no reason to choose another.
pub const DEFAULT_ORDER: usize = 64;

/// Name of the pseudo-random generator behind [`sample_specs`]; recorded in reports.
pub const GENERATOR_NAME: &str = "rand_chacha::ChaCha8Rng (seed_from_u64)";

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Koebe function `z / (1 - z)^2`: `a_n = n`.
pub fn koebe(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order.max(1), |m| real(m as f64))
}

/// `z / (1 - z)`: every coefficient from `z` on equals 1.
pub fn half_plane(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order.max(1), |m| real(if m == 0 { 0.0 } else { 1.0 }))
}

/// The extremal function `(z - z^2/2) / (1 - z)^2` of `F`: `a_n = (n + 1) / 2`.
pub fn f0(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order.max(1), |m| {
        real(if m == 0 { 0.0 } else { (m as f64 + 1.0) / 2.0 })
    })
}

/// `1 / (1 - z)^3`, the derivative of [`f0`]: coefficient `(m + 1)(m + 2) / 2`.
pub fn cube_kernel(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(order, |m| real(((m + 1) * (m + 2)) as f64 / 2.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub weight: f64,
    pub point: Complex64,
}

/// A finite Herglotz measure: the data that determines one Carathéodory function.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct HerglotzSpec {
    atoms: Vec<Atom>,
    /// Seed this spec was drawn from, when it came out of [`sample_specs`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
}

#[derive(Deserialize)]
struct RawSpec {
    atoms: Vec<Atom>,
    #[serde(default)]
    seed: Option<u64>,
}

impl TryFrom<RawSpec> for HerglotzSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        Self::new(raw.atoms, raw.seed)
    }
}

impl HerglotzSpec {
    pub fn new(atoms: Vec<Atom>, seed: Option<u64>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::Validation("a Herglotz spec needs at least one atom".into()));
        }
        for (i, a) in atoms.iter().enumerate() {
            if !(a.weight > 0.0 && a.weight <= 1.0 + SPEC_TOL) {
                return Err(Error::Validation(format!(
                    "atom {i}: weight {} outside (0, 1]",
                    a.weight
                )));
            }
            if !is_unimodular(a.point) {
                return Err(Error::Validation(format!(
                    "atom {i}: point {} is not unimodular",
                    a.point
                )));
            }
        }
        let total: f64 = atoms.iter().map(|a| a.weight).sum();
        if (total - 1.0).abs() > SPEC_TOL || total.is_nan() {
            return Err(Error::Validation(format!("weights sum to {total}, not 1")));
        }
        Ok(Self { atoms, seed })
    }

    /// Point mass at `point`; at `point = 1` this produces [`f0`].
    pub fn point_mass(point: Complex64) -> Result<Self> {
        Self::new(vec![Atom { weight: 1.0, point }], None)
    }

    /// Equal weights on the `m`-th roots of unity. Then `p_j = 0` for
    /// `0 < j < m`, so up to order `m` the synthesized function is `z`.
    pub fn roots_of_unity(m: usize) -> Result<Self> {
        let atoms = (0..m)
            .map(|k| Atom {
                weight: 1.0 / m as f64,
                point: Complex64::from_polar(1.0, TAU * k as f64 / m as f64),
            })
            .collect();
        Self::new(atoms, None)
    }

    /// Re-draws the spec that [`sample_specs`] recorded under `seed`.
    pub fn from_seed(seed: u64, atom_count: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let draws: Vec<(f64, f64)> = (0..atom_count.max(1))
            .map(|_| {
                // Exponential draws normalized to unit mass are a flat Dirichlet sample.
                let u: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
                (-u.ln(), rng.gen_range(0.0..TAU))
            })
            .collect();
        let total: f64 = draws.iter().map(|d| d.0).sum();
        let atoms = draws
            .into_iter()
            .map(|(e, theta)| Atom {
                weight: e / total,
                point: Complex64::from_polar(1.0, theta),
            })
            .collect();
        Self {
            atoms,
            seed: Some(seed),
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// `p_0 = 1, p_1, ..., p_order`.
    pub fn p_coefficients(&self, order: usize) -> Vec<Complex64> {
        let mut powers: Vec<Complex64> = vec![real(1.0); self.atoms.len()];
        let mut out = Vec::with_capacity(order + 1);
        out.push(real(1.0));
        for _ in 1..=order {
            let mut pj = real(0.0);
            for (pw, a) in powers.iter_mut().zip(&self.atoms) {
                *pw *= a.point;
                pj += *pw * a.weight;
            }
            out.push(pj * 2.0);
        }
        out
    }

    /// `p(z)` in closed form.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.atoms
            .iter()
            .map(|a| (1.0 + a.point * z) / (1.0 - a.point * z) * a.weight)
            .sum()
    }

    /// The member of `F` determined by this spec, truncated at `order`.
    pub fn synthesize(&self, order: usize) -> Result<TruncatedSeries> {
        synthesize(self, order)
    }
}

/// Builds `f` from `1 + (2/3) z f''/f' = p`.
///
/// With `f' = sum c_m z^m` the coefficient of `z^m` gives
/// `m c_m = (3/2) sum_{j=1}^m p_j c_{m-j}`, so `c_0 = 1` and the rest follow
/// in one forward pass; finally `a_{m+1} = c_m / (m + 1)`.
pub fn synthesize(spec: &HerglotzSpec, order: usize) -> Result<TruncatedSeries> {
    if order == 0 {
        return Err(Error::Domain("synthesis order must be at least 1".into()));
    }
    let p = spec.p_coefficients(order - 1);
    let mut c: Vec<Complex64> = Vec::with_capacity(order);
    c.push(real(1.0));
    for m in 1..order {
        let acc: Complex64 = (1..=m).map(|j| p[j] * c[m - j]).sum();
        c.push(acc * (1.5 / m as f64));
    }
    Ok(TruncatedSeries::from_fn(order, |n| {
        if n == 0 {
            real(0.0)
        } else {
            c[n - 1] / n as f64
        }
    }))
}

/// False for NaN input.
fn is_unimodular(z: Complex64) -> bool {
    (z.norm() - 1.0).abs() <= SPEC_TOL
}

/// `conj(mu) f(mu z)`: multiplies `a_n` by `mu^(n-1)`.
pub fn rotation(f: &TruncatedSeries, mu: Complex64) -> Result<TruncatedSeries> {
    if !is_unimodular(mu) {
        return Err(Error::Validation(format!("rotation factor {mu} is not unimodular")));
    }
    let mut pw = mu.conj();
    Ok(TruncatedSeries::from_fn(f.order(), |n| {
        let v = f.coeff(n) * pw;
        pw *= mu;
        v
    }))
}

/// `count` specs with `atom_count` atoms each, reproducible from `seed`.
///
/// Each spec gets its own sub-seed (recorded in the spec) so that a single
/// witness can be regenerated with [`HerglotzSpec::from_seed`].
pub fn sample_specs(count: usize, atom_count: usize, seed: u64) -> Vec<HerglotzSpec> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| HerglotzSpec::from_seed(master.gen(), atom_count))
        .collect()
}

//! Radius problems for partial sums of normalized analytic functions.
//!
//! The crate computes how far the partial sums `s_n(f) = z + a_2 z^2 + ... + a_n z^n`
//! of a function `f` keep a geometric property (positive real part of the
//! derivative, convexity, starlikeness, local univalence), with tooling aimed
//! at the class `F` of functions satisfying `Re(1 + z f''/f') > -1/2`.
//!
//! - [`series`]: truncated complex power series.
//! - [`zoo`]: canonical functions and a generator for members of `F`.
//! - [`bounds`]: closed-form coefficient, growth and tail estimates.
//! - [`radius`]: boundary minimization, radius bisection, zero counting.
//! - [`verify`]: reproducible checks and scans with structured reports.
//!
//! ```
//! use sections::{radius::{criterion_radius, Criterion}, zoo};
//!
//! let s2 = zoo::f0(2); // z + 3z^2/2
//! let r = criterion_radius(&s2, Criterion::ReDeriv, 1e-9)?;
//! assert!((r.radius - 1.0 / 3.0).abs() < 1e-6);
//! # Ok::<(), sections::Error>(())
//! ```

mod circle;
pub mod bounds;
pub mod error;
pub mod minimize;
pub mod radius;
pub mod series;
pub mod verify;
pub mod zoo;

pub use error::{Error, Result};
pub use radius::{BoundaryScan, Criterion, RadiusResult};
pub use series::TruncatedSeries;
pub use verify::{VerificationItem, VerificationReport};
pub use zoo::HerglotzSpec;

/// The guide's code listings, compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/class-f.md")]
    mod class_f {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/radius.md")]
    mod radius {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("series of order {order} cannot provide a section or tail of index {requested}")]
    InsufficientOrder { requested: usize, order: usize },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("denominator vanishes (|value| < 1e-300) at z = {z}")]
    PoleProximity { z: Complex64 },

    #[error("zero within {min_modulus:e} of the circle |z| = {r}")]
    ZeroOnCircle { r: f64, min_modulus: f64 },

    #[error("argument-principle integral did not settle on an integer (last estimate {estimate})")]
    WindingNotConverged { estimate: f64 },
}

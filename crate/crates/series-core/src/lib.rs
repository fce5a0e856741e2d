//! Exact truncated power series over the rationals and over the 24th cyclotomic field.

pub mod cyclotomic;
pub mod error;
pub mod frac;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod series;

pub use cyclotomic::CycScalar;
pub use error::SeriesError;
pub use frac::FracSeries;
pub use poly::Polynomial;
pub use scalar::{rat, Rational, Scalar};
pub use series::PowerSeries;

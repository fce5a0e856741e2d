//! Numeric side of the monodromy data: exact integer matrices, Gamma-value
//! connection matrices and continuation cross-checks at high precision.

pub mod complex;
pub mod constants;
pub mod continuation;
pub mod gamma;
pub mod matrix;
pub mod precision;
pub mod real;
pub mod report;
pub mod suite;

use thiserror::Error;

pub use complex::Complex;
pub use constants::{gamma_constants, normalization_product, rational_constant_oracle, GammaConstants};
pub use continuation::{cayley_y, cayley_y_limits, numeric_continuation_check, ContinuationForm, ContinuationReport};
pub use gamma::{spouge_error_log10, Spouge};
pub use matrix::{ComplexMatrix2, IntMatrix2};
pub use precision::Precision;
pub use real::Real;
pub use report::{NumericCheck, NumericReport};
pub use suite::{conjugated_local_monodromy, conjugation_check, monodromy_matrices, monodromy_suite, MonodromyMatrices};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("precision of {0} digits is outside the supported range 30..=2000")]
    PrecisionUnattainable(u32),
    #[error("no monodromy data for level {0}")]
    UnsupportedLevel(u32),
    #[error("Gamma has a pole at {0}")]
    Pole(String),
    #[error("{0} is not a modular form; no continuation check")]
    NotModular(String),
    #[error("sample |s| = {0} exceeds 0.05 |K|")]
    SampleTooLarge(String),
    #[error(transparent)]
    Cayley(#[from] hypergeom_cayley::CayleyError),
    #[error(transparent)]
    QForm(#[from] q_forms::QFormError),
}

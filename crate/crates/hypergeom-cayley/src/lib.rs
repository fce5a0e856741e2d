//! Hypergeometric periods at the orbifold point, the rational elliptic
//! expansions in v = 2 pi i tau~, the Schwarzian cross-check, and the
//! holomorphic Cayley transport of q-expansions.

pub mod cayley;
pub mod chart;
pub mod hypergeometric;
pub mod rescale;
pub mod schwarzian;
pub mod transport;

use series_core::SeriesError;
use thiserror::Error;

pub use cayley::{cayley_expansions, verify_elliptic_ramanujan, CayleyForms};
pub use chart::{normalized_coordinate, OrbifoldChart};
pub use hypergeometric::{hg_series, HypergeometricParams};
pub use rescale::rescale_form;
pub use schwarzian::{schwarzian, schwarzian_crosscheck, schwarzian_q, SchwarzianReport};
pub use transport::Transport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("unsupported level {0}; only 2 and 3 are implemented")]
    UnsupportedLevel(u32),
    #[error("lower parameter c = {0} is a nonpositive integer")]
    InvalidC(String),
    #[error("prefactor M^(-k/2) = {0} is not rational")]
    IrrationalPrefactor(String),
    #[error("weight {0} is not available at this level")]
    BadWeight(String),
    #[error("series is not a polynomial in the generators of weight {0}: {1}")]
    NotInRing(String, SeriesError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    QForm(#[from] q_forms::QFormError),
}

//! q-expansions at the infinity cusp: eta quotients, theta constants, E2,
//! the generator triples for Gamma0(3) and Gamma0(2), Hauptmoduln and the
//! Ramanujan-system verifier.

pub mod descriptor;
pub mod eta;
pub mod generators;
pub mod ramanujan;

use series_core::SeriesError;
use thiserror::Error;

pub use descriptor::{ExpansionPoint, FormDescriptor};
pub use eta::{eisenstein_e2, eta_quotient, eta_series, theta_series, EtaQuotientSpec, Theta};
pub use generators::{generators, generators_with, hauptmodul, hauptmodul_with, Generators, Normalization};
pub use ramanujan::{verify_ramanujan, verify_ramanujan_with, verify_schwarz_relation, Residual, ResidualReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QFormError {
    #[error("unsupported level {0}; only 2 and 3 are implemented")]
    UnsupportedLevel(u32),
    #[error("unsupported (N, r) = ({0}, {1}); only (3, 3) and (2, 4) are implemented")]
    UnsupportedSystem(u32, u32),
    #[error("theta constants need an even multiplier, got {0}")]
    OddMultiplier(u32),
    #[error("multiplier must be positive")]
    ZeroMultiplier,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

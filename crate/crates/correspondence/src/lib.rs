//! The LG/CY correspondence as exact series identities: state-space
//! isomorphisms, Cayley matching of building blocks, prepotentials and the
//! genus-one function.

pub mod iso;
pub mod matching;
pub mod report;

use thiserror::Error;

pub use iso::{build_iso, IsoEntry, StateIso};
pub use matching::{match_building_blocks, match_genus_one, match_ode_systems, match_prepotential, q_side_systems, Matcher};
pub use report::{IdentityReport, MatchReport, Mismatch};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CorrespondenceError {
    #[error("state-space map is not degree preserving at {0}")]
    Degree(String),
    #[error("state-space map is not pairing preserving at ({0}, {1})")]
    Pairing(String, String),
    #[error(transparent)]
    Cayley(#[from] hypergeom_cayley::CayleyError),
    #[error(transparent)]
    Fjrw(#[from] fjrw_model::FjrwError),
    #[error(transparent)]
    Gw(#[from] gw_model::GwError),
    #[error(transparent)]
    QForm(#[from] q_forms::QFormError),
    #[error(transparent)]
    Series(#[from] series_core::SeriesError),
}

//! Landau-Ginzburg side: state spaces, the WDVV systems solved as exact
//! u-series, derived correlation functions, prepotentials and genus one.

pub mod blocks;
pub mod check;
pub mod genus_one;
pub mod ode;
pub mod pair;
pub mod prepotential;
pub mod state;
pub mod wdvv;

use series_core::SeriesError;
use thiserror::Error;

pub use blocks::{derived_blocks, solve_wdvv, FjrwBlocks};
pub use check::Check;
pub use genus_one::fjrw_genus_one;
pub use ode::OdeSystem;
pub use pair::{build_pair_data, PairData};
pub use prepotential::{cubic_template, fjrw_prepotential, pillowcase_basis_change, pillowcase_template, pillowcase_v_form, Prepotential, TemplateCoeff};
pub use state::{axiom_checks, state_space, AxiomResult, SectorKind, StateElement, StateSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    Cubic,
    Pillowcase,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::Cubic => "cubic",
            Case::Pillowcase => "pillowcase",
        }
    }

    pub fn parse(s: &str) -> Option<Case> {
        match s {
            "cubic" | "333" => Some(Case::Cubic),
            "pillowcase" | "pillow" | "2222" => Some(Case::Pillowcase),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FjrwError {
    #[error("Calabi-Yau condition fails: sum of weights is {0}")]
    NotCalabiYau(String),
    #[error("exponential grading element is not in the group")]
    MissingGradingElement,
    #[error("no closed form for case {0}")]
    Unsupported(&'static str),
    #[error("order must be at least 1")]
    BadOrder,
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("identity failed: {0}")]
    Residual(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

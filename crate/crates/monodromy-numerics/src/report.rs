use serde_json::{json, Value};

use crate::real::Real;

/// A numeric comparison with an explicit tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericCheck {
    pub check: String,
    pub tolerance: String,
    pub max_error: String,
    pub pass: bool,
}

impl NumericCheck {
    pub fn new(check: &str, error: &Real, tolerance: &Real) -> Self {
        NumericCheck { check: check.into(), tolerance: tolerance.to_sci(6), max_error: error.to_sci(6), pass: error <= tolerance }
    }

    /// An exact (integer or symbolic) check.
    pub fn exact(check: &str, pass: bool) -> Self {
        NumericCheck { check: check.into(), tolerance: "0".into(), max_error: if pass { "0" } else { "nonzero" }.into(), pass }
    }

    pub fn to_json(&self) -> Value {
        json!({"check": self.check, "tolerance": self.tolerance, "max_error": self.max_error, "pass": self.pass})
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericReport {
    pub name: String,
    pub checks: Vec<NumericCheck>,
}

impl NumericReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.pass(),
            "checks": self.checks.iter().map(NumericCheck::to_json).collect::<Vec<_>>(),
        })
    }
}

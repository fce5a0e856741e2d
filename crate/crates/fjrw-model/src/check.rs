use serde_json::{json, Value};
use series_core::json::rational_to_json;
use series_core::{PowerSeries, Rational, Scalar};

/// Outcome of checking that a series vanishes to its truncation order.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub identity: String,
    pub checked_through: usize,
    pub first_nonzero: Option<(usize, Rational)>,
}

impl Check {
    pub fn of(identity: &str, residual: &PowerSeries<Rational>) -> Check {
        let first_nonzero = residual.coeffs().iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(n, c)| (n, c.clone()));
        Check { identity: identity.to_string(), checked_through: residual.trunc(), first_nonzero }
    }

    pub fn pass(&self) -> bool {
        self.first_nonzero.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "verified_to_order": self.checked_through,
            "first_nonzero": self.first_nonzero.as_ref().map(|(n, c)| json!({"order": n, "value": rational_to_json(c)})),
        })
    }
}

use serde_json::{json, Value};
use series_core::json::JsonScalar;
use series_core::PowerSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    pub order: usize,
    pub lhs: Value,
    pub rhs: Value,
}

/// One identity lhs = rhs between series, compared to their common truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity: String,
    pub verified_to_order: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn compare<S: JsonScalar>(identity: &str, lhs: &PowerSeries<S>, rhs: &PowerSeries<S>) -> Self {
        let t = lhs.trunc().min(rhs.trunc());
        let first_mismatch = (0..=t).find(|&n| lhs.coeff(n) != rhs.coeff(n)).map(|n| Mismatch {
            order: n,
            lhs: lhs.coeff(n).to_json(),
            rhs: rhs.coeff(n).to_json(),
        });
        IdentityReport { identity: identity.to_string(), verified_to_order: t, first_mismatch }
    }

    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "verified_to_order": self.verified_to_order,
            "first_mismatch": self.first_mismatch.as_ref().map(|m| json!({"order": m.order, "lhs": m.lhs, "rhs": m.rhs})),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchReport {
    pub name: String,
    pub identities: Vec<IdentityReport>,
}

impl MatchReport {
    pub fn pass(&self) -> bool {
        self.identities.iter().all(IdentityReport::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.identities.iter().filter(|r| !r.pass())
    }

    /// Smallest order at which any identity fails.
    pub fn first_failure_order(&self) -> Option<usize> {
        self.failures().filter_map(|r| r.first_mismatch.as_ref().map(|m| m.order)).min()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.pass(),
            "identities": self.identities.iter().map(IdentityReport::to_json).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    
    #[test]
    fn reports_first_mismatch() {
        let a: PowerSeries<series_core::Rational> = PowerSeries::from_ints("v", &[1, 2, 3], 2);
        let b = PowerSeries::from_ints("v", &[1, 2, 4, 5], 3);
        let r = IdentityReport::compare("a = b", &a, &b);
        assert_eq!(r.verified_to_order, 2);
        assert_eq!(r.first_mismatch.as_ref().unwrap().order, 2);
        assert!(IdentityReport::compare("a = a", &a, &a).pass());
    }
}

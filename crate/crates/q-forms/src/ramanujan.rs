use serde_json::{json, Value};
use series_core::json::rational_to_json;
use series_core::{rat, FracSeries, Rational, Scalar};

use crate::generators::{generators_with, hauptmodul_with, Normalization};
use crate::QFormError;

/// One identity checked as "this series vanishes through `checked_through`".
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub identity: String,
    pub checked_through: Rational,
    pub first_nonzero: Option<(Rational, Rational)>,
}

impl Residual {
    pub fn of(identity: &str, r: &FracSeries<Rational>) -> Self {
        Residual { identity: identity.to_string(), checked_through: r.abs_trunc(), first_nonzero: r.first_nonzero() }
    }

    pub fn pass(&self) -> bool {
        self.first_nonzero.is_none()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "checked_through": rational_to_json(&self.checked_through),
            "first_nonzero": self.first_nonzero.as_ref().map(|(e, c)| json!({
                "exponent": rational_to_json(e),
                "value": rational_to_json(c),
            })),
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidualReport {
    pub level: u32,
    pub r: u32,
    pub order: usize,
    pub residuals: Vec<Residual>,
}

impl ResidualReport {
    pub fn pass(&self) -> bool {
        self.residuals.iter().all(Residual::pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level,
            "r": self.r,
            "order": self.order,
            "pass": self.pass(),
            "residuals": self.residuals.iter().map(Residual::to_json).collect::<Vec<_>>(),
        })
    }
}

pub fn verify_ramanujan(level: u32, r: u32, order: usize) -> Result<ResidualReport, QFormError> {
    verify_ramanujan_with(level, r, order, Normalization::default())
}

/// Residuals of the Ramanujan system with d = q d/dq:
/// dA = (1/2r) A (E + (2C^r - A^r)/A^{r-2}), dB = (1/2r) B (E - A^2),
/// dC = (1/2r) C (E + A^2), dE = (1/2r)(E^2 - A^4).
/// Level 2 works with squares, where the same system reads
/// d(A^2) = (1/4)(A^2 E + 2C^4 - A^4), d(B^2) = (1/4) B^2 (E - A^2),
/// d(C^2) = (1/4) C^2 (E + A^2), dE = (1/8)(E^2 - A^4).
pub fn verify_ramanujan_with(level: u32, r: u32, order: usize, norm: Normalization) -> Result<ResidualReport, QFormError> {
    let g = generators_with(level, order, norm)?;
    let (a, b, c, e) = (&g.a.series, &g.b.series, &g.c.series, &g.e.series);
    let mut residuals = Vec::new();
    match (level, r) {
        (3, 3) => {
            let k = rat(1, 6);
            let a2 = a.pow(2);
            let rhs_a = (&(a * e)).add(&c.pow(3).scale_rat(&rat(2, 1))).sub(&a.pow(3)).scale_rat(&k);
            residuals.push(Residual::of("dA - (1/6)(A E + 2C^3 - A^3)", &a.theta().sub(&rhs_a)));
            let rhs_b = (b * &e.sub(&a2)).scale_rat(&k);
            residuals.push(Residual::of("dB - (1/6) B (E - A^2)", &b.theta().sub(&rhs_b)));
            let rhs_c = (c * &e.add(&a2)).scale_rat(&k);
            residuals.push(Residual::of("dC - (1/6) C (E + A^2)", &c.theta().sub(&rhs_c)));
            let rhs_e = e.pow(2).sub(&a.pow(4)).scale_rat(&k);
            residuals.push(Residual::of("dE - (1/6)(E^2 - A^4)", &e.theta().sub(&rhs_e)));
            let cubic = a.pow(3).sub(&b.pow(3)).sub(&c.pow(3));
            residuals.push(Residual::of("A^3 - B^3 - C^3", &cubic));
        }
        (2, 4) => {
            let k = rat(1, 4);
            let rhs_a = (&(a * e)).add(&c.pow(2).scale_rat(&rat(2, 1))).sub(&a.pow(2)).scale_rat(&k);
            residuals.push(Residual::of("d(A^2) - (1/4)(A^2 E + 2C^4 - A^4)", &a.theta().sub(&rhs_a)));
            let rhs_b = (b * &e.sub(a)).scale_rat(&k);
            residuals.push(Residual::of("d(B^2) - (1/4) B^2 (E - A^2)", &b.theta().sub(&rhs_b)));
            let rhs_c = (c * &e.add(a)).scale_rat(&k);
            residuals.push(Residual::of("d(C^2) - (1/4) C^2 (E + A^2)", &c.theta().sub(&rhs_c)));
            let rhs_e = e.pow(2).sub(&a.pow(2)).scale_rat(&rat(1, 8));
            residuals.push(Residual::of("dE - (1/8)(E^2 - A^4)", &e.theta().sub(&rhs_e)));
            let quartic = a.pow(2).sub(&b.pow(2)).sub(&c.pow(2));
            residuals.push(Residual::of("A^4 - B^4 - C^4", &quartic));
        }
        (n, r) => return Err(QFormError::UnsupportedSystem(n, r)),
    }
    Ok(ResidualReport { level, r, order, residuals })
}

/// The Schwarz relation d alpha = alpha (1 - alpha) A^2 (A^2 meaning the
/// squared generator itself at level 2).
pub fn verify_schwarz_relation(level: u32, order: usize) -> Result<Residual, QFormError> {
    let g = generators_with(level, order, Normalization::default())?;
    let alpha = hauptmodul_with(level, order, Normalization::default())?;
    let a2 = match level {
        3 => g.a.series.pow(2),
        _ => g.a.series.clone(),
    }
    .to_power_series()?;
    let one_minus = (-&alpha).add_constant(&Rational::one());
    let resid = alpha.theta() - &(&alpha * &one_minus) * &a2;
    Ok(Residual::of("d alpha - alpha (1 - alpha) A^2", &FracSeries::from_series(resid)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level3_system_vanishes() {
        let rep = verify_ramanujan(3, 3, 25).unwrap();
        assert!(rep.pass(), "{:?}", rep.residuals);
        assert_eq!(rep.residuals.len(), 5);
    }

    #[test]
    fn level2_system_vanishes() {
        let rep = verify_ramanujan(2, 4, 25).unwrap();
        assert!(rep.pass(), "{:?}", rep.residuals);
    }

    #[test]
    fn wrong_e3_denominator_fails_at_order_zero() {
        let rep = verify_ramanujan_with(3, 3, 10, Normalization { e3_denominator: 3 }).unwrap();
        let e_res = rep.residuals.iter().find(|r| r.identity.starts_with("dE")).unwrap();
        assert_eq!(e_res.first_nonzero.as_ref().unwrap().0, rat(0, 1));
        // the dA residual has offset 0 as well
        assert!(!rep.residuals[0].pass());
    }

    #[test]
    fn unsupported_pairs() {
        assert_eq!(verify_ramanujan(3, 4, 5).unwrap_err(), QFormError::UnsupportedSystem(3, 4));
    }

    #[test]
    fn schwarz_relation() {
        assert!(verify_schwarz_relation(3, 20).unwrap().pass());
        assert!(verify_schwarz_relation(2, 20).unwrap().pass());
    }
}

use q_forms::Residual;
use serde_json::{json, Value};
use series_core::json::rational_to_json;
use series_core::{rat, FracSeries, PowerSeries, Rational, Scalar};

use crate::chart::normalized_coordinate;
use crate::CayleyError;

/// {f, x} = f'''/f' - (3/2)(f''/f')^2, for f with invertible f'(0).
pub fn schwarzian(f: &PowerSeries<Rational>) -> Result<PowerSeries<Rational>, CayleyError> {
    let d1 = f.derive()?;
    let d2 = d1.derive()?;
    let d3 = d2.derive()?;
    let r2 = d2.checked_div(&d1)?;
    Ok(d3.checked_div(&d1)? - (&r2 * &r2).scale_rat(&rat(3, 2)))
}

/// Q(y) = k^2 y^{2k-2} / (2 (1 - y^k)^2) + (k^2 - 1) y^{k-2} / (2 (1 - y^k)),
/// the Schwarzian of the period ratio for exponent differences (1/k, 0, 0) at
/// (0, 1, infinity) pulled back along x = y^k.
pub fn schwarzian_q(k: usize, var: &str, order: usize) -> Result<PowerSeries<Rational>, CayleyError> {
    assert!(k >= 2);
    let kk = Rational::from_integer((k as i64).into());
    let one_minus = PowerSeries::monomial(var, k, rat(-1, 1), order).add_constant(&Rational::one());
    let inv = one_minus.inverse()?;
    let first = (&inv * &inv).shift_up(2 * k - 2).with_trunc(order).scale_rat(&(&kk * &kk / rat(2, 1)));
    let second = inv.shift_up(k - 2).with_trunc(order).scale_rat(&((&kk * &kk - rat(1, 1)) / rat(2, 1)));
    Ok(first + second)
}

#[derive(Clone, Debug)]
pub struct SchwarzianReport {
    pub level: u32,
    pub q_at_zero: Rational,
    /// {v, y} - Q(y)
    pub q_residual: Residual,
    /// {v, y} - 2 Q(y), kept to document that the factor 2 does not hold
    pub twice_q_residual: Residual,
    /// {y, v} + (dy/dv)^2 Q(y(v))
    pub inverse_residual: Residual,
    /// c in dy/dv = c (1 - y^k) F3(y^k)^2, read off the leading term
    pub ode_constant: Rational,
    pub ode_residual: Residual,
}

impl SchwarzianReport {
    pub fn pass(&self) -> bool {
        self.q_residual.pass() && self.inverse_residual.pass() && self.ode_residual.pass()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level,
            "q_at_zero": rational_to_json(&self.q_at_zero),
            "q_residual": self.q_residual.to_json(),
            "twice_q_residual": self.twice_q_residual.to_json(),
            "inverse_residual": self.inverse_residual.to_json(),
            "ode_constant": rational_to_json(&self.ode_constant),
            "ode_residual": self.ode_residual.to_json(),
            "pass": self.pass(),
        })
    }
}

fn res(name: &str, s: PowerSeries<Rational>) -> Residual {
    Residual::of(name, &FracSeries::from_series(s))
}

pub fn schwarzian_crosscheck(level: u32, order: usize) -> Result<SchwarzianReport, CayleyError> {
    let chart = normalized_coordinate(level, order + 3)?;
    let var = chart.chart_variable().to_string();
    let k = chart.k;
    let q = schwarzian_q(k, &var, order)?;
    let s = schwarzian(&chart.v_of_y)?.with_trunc(order);
    let q_residual = res("{v, y} - Q(y)", &s - &q);
    let twice_q_residual = res("{v, y} - 2Q(y)", &s - &q.scale_rat(&rat(2, 1)));

    let y = &chart.y_of_v;
    let dy = y.derive()?;
    let q_of_v = q.renamed("v").compose(y)?;
    let inverse = schwarzian(y)? + &(&dy * &dy) * &q_of_v;
    let inverse_residual = res("{y, v} + (dy/dv)^2 Q(y(v))", inverse.with_trunc(order));

    let f3_sq = chart.f3.renamed("v").compose(&chart.x_of_v())?.pow(2);
    let one_minus = (-&chart.x_of_v()).add_constant(&Rational::one());
    let shape = &one_minus * &f3_sq;
    let ode_constant = dy.coeff(0).clone() / shape.coeff(0).clone();
    let ode_residual = res("dy/dv - c (1 - y^k) F3(y^k)^2", (&dy - &shape.scale_rat(&ode_constant)).with_trunc(order));

    Ok(SchwarzianReport {
        level,
        q_at_zero: q.coeff(0).clone(),
        q_residual,
        twice_q_residual,
        inverse_residual,
        ode_constant,
        ode_residual,
    })
}

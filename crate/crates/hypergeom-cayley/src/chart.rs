use series_core::{rat, PowerSeries, Rational};

use crate::hypergeometric::{hg_series, HypergeometricParams};
use crate::CayleyError;

/// The orbifold-point chart. With x = 1/alpha and the chart variable y chosen
/// so that x = y^k (y = psi at level 3, y = psi^2 at level 2), the normalized
/// coordinate is v = k y F4(x) / F3(x).
#[derive(Clone, Debug, PartialEq)]
pub struct OrbifoldChart {
    pub level: u32,
    /// exponent with x = psi^d
    pub psi_exponent: usize,
    /// exponent with x = y^k
    pub k: usize,
    /// power of F3 in the image of C (1 at level 3, 2 for the squared level-2 forms)
    pub c_power: u32,
    pub order: usize,
    pub f3: PowerSeries<Rational>,
    pub f4: PowerSeries<Rational>,
    pub v_of_y: PowerSeries<Rational>,
    pub y_of_v: PowerSeries<Rational>,
}

impl OrbifoldChart {
    pub fn a_parameter(level: u32) -> Result<Rational, CayleyError> {
        match level {
            3 => Ok(rat(1, 3)),
            2 => Ok(rat(1, 4)),
            other => Err(CayleyError::UnsupportedLevel(other)),
        }
    }

    pub fn chart_variable(&self) -> &str {
        self.v_of_y.var()
    }

    /// The leading rational constant k in v = k y + ...
    pub fn normalization_constant(&self) -> Rational {
        Rational::from_integer((self.k as i64).into())
    }

    /// x(v) = y(v)^k
    pub fn x_of_v(&self) -> PowerSeries<Rational> {
        self.y_of_v.pow(self.k as u32)
    }
}

pub fn normalized_coordinate(level: u32, order: usize) -> Result<OrbifoldChart, CayleyError> {
    let a = OrbifoldChart::a_parameter(level)?;
    let one = rat(1, 1);
    let b = &one - &a;
    let (k, psi_exponent, c_power, var) = if level == 3 { (3usize, 3usize, 1u32, "psi") } else { (2, 4, 2, "psi2") };
    let f_order = order / k + 1;
    let f3 = hg_series(&HypergeometricParams::new(a.clone(), a.clone(), &a + &a), f_order)?;
    let f4 = hg_series(&HypergeometricParams::new(b.clone(), b.clone(), &b + &b), f_order)?;
    let f3y = f3.substitute_power(k).renamed(var).with_trunc(order);
    let f4y = f4.substitute_power(k).renamed(var).with_trunc(order);
    let ratio = f4y.checked_div(&f3y)?;
    let v_of_y = ratio.shift_up(1).with_trunc(order).scale_rat(&Rational::from_integer((k as i64).into()));
    let y_of_v = v_of_y.reverse()?.renamed("v");
    Ok(OrbifoldChart { level, psi_exponent, k, c_power, order, f3, f4, v_of_y, y_of_v })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_terms() {
        let c3 = normalized_coordinate(3, 10).unwrap();
        assert_eq!(c3.v_of_y.coeff(1), &rat(3, 1));
        assert_eq!(c3.v_of_y.coeff(2), &rat(0, 1));
        let c2 = normalized_coordinate(2, 10).unwrap();
        assert_eq!(c2.v_of_y.coeff(1), &rat(2, 1));
        assert_eq!(c2.psi_exponent, 4);
    }

    #[test]
    fn roundtrip() {
        for level in [2, 3] {
            let c = normalized_coordinate(level, 25).unwrap();
            let back = c.v_of_y.compose(&c.y_of_v.renamed(c.chart_variable())).unwrap();
            assert_eq!(back, PowerSeries::x(c.chart_variable(), 25));
        }
    }

    #[test]
    fn unsupported() {
        assert!(matches!(normalized_coordinate(4, 5), Err(CayleyError::UnsupportedLevel(4))));
    }
}

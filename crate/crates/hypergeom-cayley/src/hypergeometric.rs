use series_core::{PowerSeries, Rational, Scalar};

use crate::CayleyError;

#[derive(Clone, Debug, PartialEq)]
pub struct HypergeometricParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl HypergeometricParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        HypergeometricParams { a, b, c }
    }
}

/// 2F1(a, b; c; x) = sum (a)_n (b)_n / ((c)_n n!) x^n
pub fn hg_series(p: &HypergeometricParams, order: usize) -> Result<PowerSeries<Rational>, CayleyError> {
    if p.c.is_integer() && p.c <= Rational::zero() {
        return Err(CayleyError::InvalidC(p.c.to_string()));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    for n in 0..=order {
        coeffs.push(term.clone());
        let k = Rational::from_integer(n.into());
        term = term * (&p.a + &k) * (&p.b + &k) / ((&p.c + &k) * (&k + Rational::one()));
    }
    Ok(PowerSeries::new("x", coeffs, order))
}

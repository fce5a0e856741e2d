use num_traits::Signed;
use series_core::{PowerSeries, Rational, Scalar};

use crate::CayleyError;

/// Exact rational square root, if there is one.
fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// M^{-k/2} f(v / M), the effect of rescaling the coordinate by M on a
/// weight-k expansion.
pub fn rescale_form(f: &PowerSeries<Rational>, weight: &Rational, m: &Rational) -> Result<PowerSeries<Rational>, CayleyError> {
    if m.is_zero() {
        return Err(CayleyError::IrrationalPrefactor("M = 0".into()));
    }
    if !weight.is_integer() {
        return Err(CayleyError::BadWeight(weight.to_string()));
    }
    let k: i32 = weight.to_integer().try_into().map_err(|_| CayleyError::BadWeight(weight.to_string()))?;
    // even weight needs only integer powers of M, odd weight a square root
    let pref = if k % 2 == 0 {
        m.pow(-k / 2)
    } else {
        rational_sqrt(m).ok_or_else(|| CayleyError::IrrationalPrefactor(format!("{m}^(-{weight}/2)")))?.pow(-k)
    };
    Ok(f.dilate(&m.recip()).scale_rat(&pref))
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::rat;

    #[test]
    fn weight_zero_is_substitution() {
        let f = PowerSeries::from_ints("v", &[1, 2, 3], 2);
        assert_eq!(rescale_form(&f, &rat(0, 1), &rat(2, 1)).unwrap(), PowerSeries::from_rats("v", &[rat(1, 1), rat(1, 1), rat(3, 4)], 2));
    }

    #[test]
    fn weight_two() {
        let f = PowerSeries::monomial("v", 2, rat(1, 1), 3);
        assert_eq!(rescale_form(&f, &rat(2, 1), &rat(4, 1)).unwrap(), PowerSeries::monomial("v", 2, rat(1, 64), 3));
    }

    #[test]
    fn weight_one_square() {
        let f = PowerSeries::from_ints("v", &[0, 9], 1);
        let g = rescale_form(&f, &rat(1, 1), &rat(9, 1)).unwrap();
        assert_eq!(g, PowerSeries::from_rats("v", &[rat(0, 1), rat(1, 3)], 1));
        assert!(matches!(rescale_form(&f, &rat(1, 1), &rat(2, 1)), Err(CayleyError::IrrationalPrefactor(_))));
    }
}

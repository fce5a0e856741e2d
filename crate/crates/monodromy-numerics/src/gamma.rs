//! Gamma by Spouge's approximation:
//! Gamma(z+1) = (z+a)^{z+1/2} e^{-(z+a)} (c0 + sum_{k=1}^{a-1} c_k/(z+k)) (1 + eps)
//! with c0 = sqrt(2 pi), c_k = (-1)^{k-1}/(k-1)! (a-k)^{k-1/2} e^{a-k} and
//! |eps| <= a^{-1/2} (2 pi)^{-(a+1/2)} for Re z > 0.

use crate::precision::Precision;
use crate::real::Real;
use crate::NumericsError;

/// log10 of Spouge's relative error bound.
pub fn spouge_error_log10(a: u32) -> f64 {
    let a = a as f64;
    -0.5 * a.log10() - (a + 0.5) * (2.0 * std::f64::consts::PI).log10()
}

pub struct Spouge {
    a: u32,
    bits: u32,
    coeffs: Vec<Real>,
}

impl Spouge {
    pub fn new(prec: Precision) -> Self {
        let a = prec.spouge_a();
        let bits = prec.work_bits();
        let mut coeffs = vec![Real::pi(bits).mul_int(2).sqrt()];
        let e = Real::one(bits).exp();
        let mut fact = Real::one(bits);
        for k in 1..a {
            if k > 1 {
                fact = fact.mul_int((k - 1) as i64);
            }
            let base = Real::from_int((a - k) as i64, bits);
            let mut c = base.powi(k - 1).mul(&base.sqrt()).mul(&e.powi(a - k)).div(&fact);
            if k % 2 == 0 {
                c = c.neg();
            }
            coeffs.push(c);
        }
        Spouge { a, bits, coeffs }
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Gamma(x) for real x that is not a non-positive integer.
    pub fn gamma(&self, x: &Real) -> Result<Real, NumericsError> {
        let x = x.with_bits(self.bits);
        let one = Real::one(self.bits);
        if x <= Real::zero(self.bits) && x.sub(&Real::from_rational(&series_core::Rational::from_integer(x.round()), self.bits)).is_zero() {
            return Err(NumericsError::Pole(x.to_sci(10)));
        }
        // shift up so that z = x - 1 > 0
        let mut shifted = x.clone();
        let mut denom = one.clone();
        while shifted <= one {
            denom = denom.mul(&shifted);
            shifted = shifted.add(&one);
        }
        let z = shifted.sub(&one);
        let za = z.add(&Real::from_int(self.a as i64, self.bits));
        let mut sum = self.coeffs[0].clone();
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            sum = sum.add(&c.div(&z.add(&Real::from_int(k as i64, self.bits))));
        }
        let half = Real::from_ratio(1, 2, self.bits);
        let g = za.powr(&z.add(&half)).mul(&za.neg().exp()).mul(&sum);
        Ok(g.div(&denom))
    }
}

use serde_json::{json, Value};
use series_core::{rat, Rational};

use crate::complex::Complex;
use crate::gamma::Spouge;
use crate::precision::Precision;
use crate::real::Real;
use crate::report::{NumericCheck, NumericReport};
use crate::NumericsError;

/// Local exponents (a, b) of the hypergeometric periods at the orbifold point.
pub fn exponents(level: u32) -> Result<(Rational, Rational), NumericsError> {
    match level {
        3 => Ok((rat(1, 3), rat(2, 3))),
        2 => Ok((rat(1, 4), rat(3, 4))),
        _ => Err(NumericsError::UnsupportedLevel(level)),
    }
}

/// The adopted rational constant c in v = c psi^d + ...
pub fn rational_constant(level: u32) -> Result<i64, NumericsError> {
    match level {
        3 => Ok(3),
        2 => Ok(2),
        _ => Err(NumericsError::UnsupportedLevel(level)),
    }
}

#[derive(Debug, Clone)]
pub struct GammaConstants {
    pub level: u32,
    pub precision: Precision,
    pub a: Rational,
    pub b: Rational,
    pub gamma_plus: Real,
    pub gamma_minus: Real,
    pub kappa: Complex,
    pub k: Complex,
    pub tau_star: Complex,
    /// M with M^{1/2} = gamma_+ e^{-i pi a}
    pub m_half: Complex,
    pub m: Complex,
    /// |-K - (tau* - conj tau*)|
    pub identity_error: Real,
}

impl GammaConstants {
    pub fn bits(&self) -> u32 {
        self.precision.work_bits()
    }

    pub fn to_json(&self) -> Value {
        let d = self.precision.digits as usize;
        let c = |z: &Complex| json!({"re": z.re.to_sci(d), "im": z.im.to_sci(d)});
        json!({
            "level": self.level,
            "digits": self.precision.digits,
            "gamma_plus": self.gamma_plus.to_sci(d),
            "gamma_minus": self.gamma_minus.to_sci(d),
            "kappa": c(&self.kappa),
            "K": c(&self.k),
            "tau_star": c(&self.tau_star),
            "M_rational": c(&self.m),
            "identity_error": self.identity_error.to_sci(6),
        })
    }
}

/// gamma_+ = Gamma(b-a)/(Gamma(1-a)Gamma(b)), gamma_- = Gamma(a-b)/(Gamma(1-b)Gamma(a)),
/// K = kappa(e^{-i pi b} - e^{-i pi a}), tau* = kappa e^{-i pi a}.
pub fn gamma_constants(level: u32, prec: Precision) -> Result<GammaConstants, NumericsError> {
    let (a, b) = exponents(level)?;
    let bits = prec.work_bits();
    let s = Spouge::new(prec);
    let g = |r: Rational| s.gamma(&Real::from_rational(&r, bits));
    let one = rat(1, 1);
    let gamma_plus = g(&b - &a)?.div(&g(&one - &a)?.mul(&g(b.clone())?));
    let gamma_minus = g(&a - &b)?.div(&g(&one - &b)?.mul(&g(a.clone())?));
    let kappa = Complex::new(Real::zero(bits), Real::one(bits).div(&Real::from_int(level as i64, bits).sqrt()));
    let ea = Complex::exp_i_pi(&-a.clone(), bits);
    let eb = Complex::exp_i_pi(&-b.clone(), bits);
    let k = kappa.mul(&eb.sub(&ea));
    let tau_star = kappa.mul(&ea);
    let m_half = ea.scale(&gamma_plus);
    let m = m_half.mul(&m_half);
    let identity_error = k.neg().sub(&tau_star.sub(&tau_star.conj())).abs();
    Ok(GammaConstants { level, precision: prec, a, b, gamma_plus, gamma_minus, kappa, k, tau_star, m_half, m, identity_error })
}

/// 2 pi i gamma_+ gamma_- K e^{-2 pi i a} e^{-i pi (b-a)}, the transcendental
/// product in front of psi^d F4/F3 in the normalized coordinate.
pub fn normalization_product(c: &GammaConstants) -> Complex {
    let bits = c.bits();
    let two_pi_i = Complex::new(Real::zero(bits), Real::pi(bits).mul_int(2));
    let phase = Complex::exp_i_pi(&(-rat(2, 1) * &c.a - (&c.b - &c.a)), bits);
    two_pi_i.scale(&c.gamma_plus.mul(&c.gamma_minus)).mul(&c.k).mul(&phase)
}

pub fn rational_constant_oracle(level: u32, prec: Precision) -> Result<NumericReport, NumericsError> {
    let c = gamma_constants(level, prec)?;
    let bits = c.bits();
    let tol = prec.tolerance();
    let expected = rational_constant(level)?;
    let value = normalization_product(&c);
    let err = value.sub(&Complex::from_real(Real::from_int(expected, bits))).abs();
    Ok(NumericReport {
        name: format!("rational constant, level {level}"),
        checks: vec![
            NumericCheck::new(&format!("normalization product = {expected}"), &err, &tol),
            NumericCheck::new("-K = tau* - conj(tau*)", &c.identity_error, &tol),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_two_k_is_minus_i() {
        let c = gamma_constants(2, Precision::default()).unwrap();
        let b = c.bits();
        let err = c.k.add(&Complex::i(b)).abs();
        assert!(err < Precision::default().tolerance());
    }

    #[test]
    fn level_three_tau_star() {
        let p = Precision::default();
        let c = gamma_constants(3, p).unwrap();
        let b = c.bits();
        // -(i/sqrt3) e^{2 pi i/3}
        let alt = Complex::i(b).scale(&Real::one(b).div(&Real::from_int(3, b).sqrt())).mul(&Complex::exp_i_pi(&rat(2, 3), b)).neg();
        assert!(c.tau_star.sub(&alt).abs() < p.tolerance());
        // gamma_+ = Gamma(1/3)/Gamma(2/3)^2 = 1.4610...
        assert!(c.gamma_plus.to_sci(5).starts_with("1.4610"), "{}", c.gamma_plus);
    }

    #[test]
    fn level_two_gamma_product_is_minus_one_over_pi() {
        let p = Precision::default();
        let c = gamma_constants(2, p).unwrap();
        let b = c.bits();
        let err = c.gamma_plus.mul(&c.gamma_minus).add(&Real::one(b).div(&Real::pi(b))).abs();
        assert!(err < p.tolerance());
    }

    #[test]
    fn branch_sign() {
        // e^{-3 pi i a} = -1 for a = 1/3
        let b = 200;
        let z = Complex::exp_i_pi(&rat(-1, 1), b);
        assert!(z.add(&Complex::one(b)).abs() < Real::pow10(-50, b));
    }

    #[test]
    fn oracles_certify_three_and_two() {
        for level in [3, 2] {
            let r = rational_constant_oracle(level, Precision::default()).unwrap();
            assert!(r.pass(), "{}", r.to_json());
        }
        assert!(gamma_constants(4, Precision::default()).is_err());
    }
}

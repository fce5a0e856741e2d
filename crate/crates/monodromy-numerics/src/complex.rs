use std::fmt;

use series_core::Rational;

use crate::real::Real;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let im = Real::zero(re.bits());
        Complex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        Complex::from_real(Real::zero(bits))
    }

    pub fn one(bits: u32) -> Self {
        Complex::from_real(Real::one(bits))
    }

    pub fn i(bits: u32) -> Self {
        Complex::new(Real::zero(bits), Real::one(bits))
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        Complex::from_real(Real::from_rational(r, bits))
    }

    pub fn bits(&self) -> u32 {
        self.re.bits()
    }

    pub fn add(&self, o: &Self) -> Self {
        Complex::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Complex::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Complex::new(self.re.mul(&o.re).sub(&self.im.mul(&o.im)), self.re.mul(&o.im).add(&self.im.mul(&o.re)))
    }

    pub fn scale(&self, r: &Real) -> Self {
        Complex::new(self.re.mul(r), self.im.mul(r))
    }

    pub fn div(&self, o: &Self) -> Self {
        let n = o.norm_sqr();
        let num = self.mul(&o.conj());
        Complex::new(num.re.div(&n), num.im.div(&n))
    }

    pub fn neg(&self) -> Self {
        Complex::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), self.im.neg())
    }

    pub fn norm_sqr(&self) -> Real {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn powi(&self, mut n: u32) -> Self {
        let mut acc = Complex::one(self.bits());
        let mut b = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            n >>= 1;
        }
        acc
    }

    /// e^{i theta}
    pub fn cis(theta: &Real) -> Self {
        let bits = theta.bits();
        let w = bits + 64;
        let t = theta.with_bits(w);
        let two_pi = Real::pi(w).mul_int(2);
        let k = t.div(&two_pi).round();
        let t = t.sub(&two_pi.mul(&Real::from_rational(&Rational::from_integer(k), w)));
        let s = 12;
        let x = Complex::new(Real::zero(w), t.ldexp(-s));
        let mut sum = Complex::one(w);
        let mut term = Complex::one(w);
        let mut n = 1;
        loop {
            term = term.mul(&x);
            term = Complex::new(term.re.div_int(n), term.im.div_int(n));
            if term.re.is_zero() && term.im.is_zero() {
                break;
            }
            sum = sum.add(&term);
            n += 1;
        }
        for _ in 0..s {
            sum = sum.mul(&sum);
        }
        Complex::new(sum.re.with_bits(bits), sum.im.with_bits(bits))
    }

    /// e^{i pi r} for rational r.
    pub fn exp_i_pi(r: &Rational, bits: u32) -> Self {
        Complex::cis(&Real::pi(bits).mul(&Real::from_rational(r, bits)))
    }

    pub fn exp(&self) -> Self {
        Complex::cis(&self.im).scale(&self.re.exp())
    }

    /// sum c_n z^n by Horner's rule.
    pub fn eval_series(coeffs: &[Rational], z: &Complex) -> Self {
        let bits = z.bits();
        let mut acc = Complex::zero(bits);
        for c in coeffs.iter().rev() {
            acc = acc.mul(z).add(&Complex::from_rational(c, bits));
        }
        acc
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re.to_sci(20), self.im.to_sci(20))
    }
}

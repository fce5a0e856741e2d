//! The field Q(zeta) with zeta = exp(2 pi i / 24), stored in the power basis
//! 1, zeta, ..., zeta^7 modulo the cyclotomic polynomial x^8 - x^4 + 1.

use std::fmt;


use crate::linalg;
use crate::scalar::{Rational, Scalar};

pub const DEGREE: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycScalar {
    coeffs: [Rational; DEGREE],
}

impl CycScalar {
    pub fn from_coeffs(coeffs: [Rational; DEGREE]) -> Self {
        CycScalar { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational; DEGREE] {
        &self.coeffs
    }

    pub fn rational(r: Rational) -> Self {
        let mut c: [Rational; DEGREE] = Default::default();
        c[0] = r;
        CycScalar { coeffs: c }
    }

    /// zeta^k for any integer k.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(24) as usize;
        let mut raw = vec![Rational::zero(); k + 1];
        raw[k] = Rational::one();
        Self::reduce(raw)
    }

    /// exp(i pi n / d) for d dividing 12.
    pub fn exp_i_pi(n: i64, d: i64) -> Self {
        assert!(d > 0 && 12 % d == 0, "denominator {d} does not divide 12");
        Self::zeta_pow(n * (12 / d))
    }

    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    pub fn sqrt2() -> Self {
        Self::zeta_pow(3).plus(&Self::zeta_pow(-3))
    }

    pub fn sqrt3() -> Self {
        Self::zeta_pow(2).plus(&Self::zeta_pow(-2))
    }

    pub fn zeta3() -> Self {
        Self::zeta_pow(8)
    }

    /// Complex conjugation, zeta -> zeta^{-1}.
    pub fn conj(&self) -> Self {
        let mut acc = Self::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.plus(&Self::zeta_pow(-(k as i64)).scaled(c));
            }
        }
        acc
    }

    /// Floating approximation, for display and sanity checks only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let x = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::PI * k as f64 / 12.0;
            re += x * t.cos();
            im += x * t.sin();
        }
        (re, im)
    }

    fn reduce(mut raw: Vec<Rational>) -> Self {
        // x^8 = x^4 - 1, applied from the top down
        while raw.len() > DEGREE {
            let k = raw.len() - 1;
            let top = raw.pop().unwrap();
            if !top.is_zero() {
                raw[k - 4] += &top;
                raw[k - 8] -= &top;
            }
        }
        let mut c: [Rational; DEGREE] = Default::default();
        for (i, r) in raw.into_iter().enumerate() {
            c[i] = r;
        }
        CycScalar { coeffs: c }
    }

    fn mul_matrix(&self) -> Vec<Vec<Rational>> {
        // column j is self * zeta^j
        let cols: Vec<CycScalar> = (0..DEGREE as i64).map(|j| self.times(&Self::zeta_pow(j))).collect();
        (0..DEGREE)
            .map(|i| cols.iter().map(|c| c.coeffs[i].clone()).collect())
            .collect()
    }
}

impl Scalar for CycScalar {
    fn zero() -> Self {
        CycScalar { coeffs: Default::default() }
    }
    fn one() -> Self {
        Self::rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn plus(&self, o: &Self) -> Self {
        let mut c = self.coeffs.clone();
        for (a, b) in c.iter_mut().zip(o.coeffs.iter()) {
            *a += b;
        }
        CycScalar { coeffs: c }
    }
    fn minus(&self, o: &Self) -> Self {
        let mut c = self.coeffs.clone();
        for (a, b) in c.iter_mut().zip(o.coeffs.iter()) {
            *a -= b;
        }
        CycScalar { coeffs: c }
    }
    fn times(&self, o: &Self) -> Self {
        let mut raw = vec![Rational::zero(); 2 * DEGREE - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Self::reduce(raw)
    }
    fn negated(&self) -> Self {
        let mut c = self.coeffs.clone();
        for a in c.iter_mut() {
            *a = -a.clone();
        }
        CycScalar { coeffs: c }
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut rhs = vec![Rational::zero(); DEGREE];
        rhs[0] = Rational::one();
        let sol = linalg::solve(self.mul_matrix(), rhs).ok()?;
        let mut c: [Rational; DEGREE] = Default::default();
        for (i, r) in sol.into_iter().enumerate() {
            c[i] = r;
        }
        Some(CycScalar { coeffs: c })
    }
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
    fn scaled(&self, r: &Rational) -> Self {
        let mut c = self.coeffs.clone();
        for a in c.iter_mut() {
            *a *= r;
        }
        CycScalar { coeffs: c }
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

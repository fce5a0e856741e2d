use std::fmt;
use std::ops::Mul;

use serde_json::{json, Value};

use crate::complex::Complex;
use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntMatrix2(pub [[i64; 2]; 2]);

impl IntMatrix2 {
    pub const ID: IntMatrix2 = IntMatrix2([[1, 0], [0, 1]]);
    pub const T: IntMatrix2 = IntMatrix2([[1, 1], [0, 1]]);
    pub const S: IntMatrix2 = IntMatrix2([[0, -1], [1, 0]]);

    pub fn det(&self) -> i64 {
        let m = self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn neg(&self) -> Self {
        let m = self.0;
        IntMatrix2([[-m[0][0], -m[0][1]], [-m[1][0], -m[1][1]]])
    }

    /// Inverse of a unimodular matrix.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.abs() != 1 {
            return None;
        }
        let m = self.0;
        Some(IntMatrix2([[m[1][1] * d, -m[0][1] * d], [-m[1][0] * d, m[0][0] * d]]))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(IntMatrix2::ID, |acc, _| acc * *self)
    }

    pub fn t_pow(n: i64) -> Self {
        IntMatrix2([[1, n], [0, 1]])
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }
}

impl Mul for IntMatrix2 {
    type Output = IntMatrix2;
    fn mul(self, o: IntMatrix2) -> IntMatrix2 {
        let (a, b) = (self.0, o.0);
        let mut c = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        IntMatrix2(c)
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexMatrix2(pub [[Complex; 2]; 2]);

impl ComplexMatrix2 {
    pub fn diag(a: Complex, b: Complex) -> Self {
        let z = Complex::zero(a.bits());
        ComplexMatrix2([[a, z.clone()], [z, b]])
    }

    pub fn from_int(m: &IntMatrix2, bits: u32) -> Self {
        let c = |x: i64| Complex::from_real(Real::from_int(x, bits));
        let m = m.0;
        ComplexMatrix2([[c(m[0][0]), c(m[0][1])], [c(m[1][0]), c(m[1][1])]])
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        ComplexMatrix2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn det(&self) -> Complex {
        let m = &self.0;
        m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]))
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        let m = &self.0;
        ComplexMatrix2([[m[1][1].div(&d), m[0][1].neg().div(&d)], [m[1][0].neg().div(&d), m[0][0].div(&d)]])
    }

    /// Largest entrywise modulus of self - o.
    pub fn max_distance(&self, o: &Self) -> Real {
        let mut best = Real::zero(self.0[0][0].bits());
        for i in 0..2 {
            for j in 0..2 {
                best = best.max(self.0[i][j].sub(&o.0[i][j]).abs());
            }
        }
        best
    }
}

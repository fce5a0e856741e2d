use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for small rational literals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Field operations needed by the series code. The method names avoid
/// clashing with `std::ops` so both can be used on `Rational`.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn try_inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn scaled(&self, r: &Rational) -> Self {
        self.times(&Self::from_rational(r))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// The value as a rational, if it lies in the prime field.
    fn to_rational(&self) -> Option<Rational>;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Largest integer n with n <= r.
pub fn floor(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Fractional part in [0, 1).
pub fn frac_part(r: &Rational) -> Rational {
    r - Rational::from_integer(floor(r))
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Pochhammer symbol (a)_n.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc: Rational = One::one();
    for k in 0..n {
        acc *= a + Rational::from_integer(k.into());
    }
    acc
}

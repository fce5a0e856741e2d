use std::fmt;
use std::ops::{Mul, Neg};

use num_traits::Signed;

use crate::error::SeriesError;
use crate::scalar::{is_nonneg_integer, Rational, Scalar};
use crate::series::PowerSeries;

/// x^offset * body(x), for eta quotients and other forms with a fractional
/// leading exponent. The body is known through degree `body.trunc()`, so the
/// whole series is known through `offset + body.trunc()`.
#[derive(Clone, Debug)]
pub struct FracSeries<S> {
    offset: Rational,
    body: PowerSeries<S>,
}

impl<S: Scalar> FracSeries<S> {
    pub fn new(offset: Rational, body: PowerSeries<S>) -> Self {
        FracSeries { offset, body }
    }

    pub fn from_series(body: PowerSeries<S>) -> Self {
        FracSeries { offset: Rational::zero(), body }
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn body(&self) -> &PowerSeries<S> {
        &self.body
    }

    pub fn var(&self) -> &str {
        self.body.var()
    }

    /// Highest exponent with a known coefficient.
    pub fn abs_trunc(&self) -> Rational {
        &self.offset + Rational::from_integer(self.body.trunc().into())
    }

    pub fn to_power_series(&self) -> Result<PowerSeries<S>, SeriesError> {
        if !is_nonneg_integer(&self.offset) {
            return Err(SeriesError::NonIntegralOffset(self.offset.to_string()));
        }
        let k: usize = self.offset.to_integer().try_into().map_err(|_| SeriesError::Exhausted)?;
        Ok(self.body.shift_up(k))
    }

    /// Moves leading zero coefficients of the body into the offset.
    pub fn normalized(&self) -> Self {
        match self.body.valuation() {
            Some(v) if v > 0 => FracSeries {
                offset: &self.offset + Rational::from_integer(v.into()),
                body: self.body.shift_down(v).expect("leading zeros"),
            },
            _ => self.clone(),
        }
    }

    fn align(&self, o: &Self) -> Result<(Rational, PowerSeries<S>, PowerSeries<S>), SeriesError> {
        let d = &o.offset - &self.offset;
        if !d.is_integer() {
            return Err(SeriesError::OffsetMismatch(self.offset.to_string(), o.offset.to_string()));
        }
        let k: usize = d.abs().to_integer().try_into().map_err(|_| SeriesError::Exhausted)?;
        if d.is_negative() {
            Ok((o.offset.clone(), self.body.shift_up(k), o.body.clone()))
        } else {
            Ok((self.offset.clone(), self.body.clone(), o.body.shift_up(k)))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, SeriesError> {
        let (off, a, b) = self.align(o)?;
        Ok(FracSeries { offset: off, body: a.checked_add(&b)? })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, SeriesError> {
        let (off, a, b) = self.align(o)?;
        Ok(FracSeries { offset: off, body: a.checked_sub(&b)? })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, SeriesError> {
        Ok(FracSeries { offset: &self.offset + &o.offset, body: self.body.checked_mul(&o.body)? })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, SeriesError> {
        let o = o.normalized();
        Ok(FracSeries { offset: &self.offset - &o.offset, body: self.body.checked_div(&o.body)? })
    }

    pub fn add(&self, o: &Self) -> Self {
        self.checked_add(o).expect("incompatible offsets")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.checked_sub(o).expect("incompatible offsets")
    }

    pub fn scale(&self, c: &S) -> Self {
        FracSeries { offset: self.offset.clone(), body: self.body.scale(c) }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        FracSeries { offset: self.offset.clone(), body: self.body.scale_rat(r) }
    }

    pub fn pow(&self, n: u32) -> Self {
        FracSeries { offset: &self.offset * Rational::from_integer(n.into()), body: self.body.pow(n) }
    }

    /// x d/dx
    pub fn theta(&self) -> Self {
        let body = self.body.scale_rat(&self.offset) + self.body.theta();
        FracSeries { offset: self.offset.clone(), body }
    }

    /// x d/dx log f, an ordinary power series.
    pub fn log_derivative(&self) -> Result<PowerSeries<S>, SeriesError> {
        let n = self.normalized();
        let inner = n.body.theta().checked_div(&n.body)?;
        Ok(inner.add_constant(&S::from_rational(&n.offset)))
    }

    /// Absolute exponent and value of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<(Rational, S)> {
        self.body
            .first_nonzero()
            .map(|(n, c)| (&self.offset + Rational::from_integer(n.into()), c.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Coefficient of x^e for an absolute exponent e, if known.
    pub fn coeff_at(&self, e: &Rational) -> Option<S> {
        let d = e - &self.offset;
        if !d.is_integer() {
            return Some(S::zero());
        }
        if d.is_negative() {
            return Some(S::zero());
        }
        let k: usize = d.to_integer().try_into().ok()?;
        self.body.get(k).cloned()
    }

    pub fn with_body_trunc(&self, t: usize) -> Self {
        FracSeries { offset: self.offset.clone(), body: self.body.with_trunc(t) }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FracSeries<T> {
        FracSeries { offset: self.offset.clone(), body: self.body.map(f) }
    }
}

impl<S: Scalar> PartialEq for FracSeries<S> {
    fn eq(&self, o: &Self) -> bool {
        match self.checked_sub(o) {
            Ok(d) => d.is_zero(),
            Err(_) => self.is_zero() && o.is_zero(),
        }
    }
}

impl<S: Scalar> Mul<&FracSeries<S>> for &FracSeries<S> {
    type Output = FracSeries<S>;
    fn mul(self, o: &FracSeries<S>) -> FracSeries<S> {
        self.checked_mul(o).expect("series in different variables")
    }
}

impl<S: Scalar> Neg for &FracSeries<S> {
    type Output = FracSeries<S>;
    fn neg(self) -> FracSeries<S> {
        FracSeries { offset: self.offset.clone(), body: -&self.body }
    }
}

impl<S: Scalar> fmt::Display for FracSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset.is_zero() {
            write!(f, "{}", self.body)
        } else {
            write!(f, "{}^({}) * [{}]", self.var(), self.offset, self.body)
        }
    }
}

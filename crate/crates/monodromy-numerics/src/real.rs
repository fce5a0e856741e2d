//! Binary fixed-point reals: value = m / 2^bits with an arbitrary-precision
//! mantissa. Operands of one computation share `bits`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use series_core::Rational;

/// Extra bits carried inside the elementary functions.
const GUARD: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Real {
    m: BigInt,
    bits: u32,
}

fn round_shr(x: BigInt, k: u32) -> BigInt {
    if k == 0 {
        return x;
    }
    (x + (BigInt::one() << (k - 1))) >> k
}

impl Real {
    pub fn zero(bits: u32) -> Self {
        Real { m: BigInt::zero(), bits }
    }

    pub fn one(bits: u32) -> Self {
        Real { m: BigInt::one() << bits, bits }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Real { m: BigInt::from(n) << bits, bits }
    }

    pub fn from_ratio(n: i64, d: i64, bits: u32) -> Self {
        Real::from_rational(&Rational::new(n.into(), d.into()), bits)
    }

    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let num = r.numer() << (bits + 1);
        let q = num / r.denom();
        Real { m: round_shr(q, 1), bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        let m = match bits.cmp(&self.bits) {
            Ordering::Greater => &self.m << (bits - self.bits),
            Ordering::Less => round_shr(self.m.clone(), self.bits - bits),
            Ordering::Equal => self.m.clone(),
        };
        Real { m, bits }
    }

    fn same(&self, o: &Self) {
        debug_assert_eq!(self.bits, o.bits, "mixed precisions");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same(o);
        Real { m: &self.m + &o.m, bits: self.bits }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.same(o);
        Real { m: &self.m - &o.m, bits: self.bits }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.same(o);
        Real { m: round_shr(&self.m * &o.m, self.bits), bits: self.bits }
    }

    pub fn div(&self, o: &Self) -> Self {
        self.same(o);
        assert!(!o.m.is_zero(), "division by zero");
        Real { m: (&self.m << self.bits) / &o.m, bits: self.bits }
    }

    pub fn mul_int(&self, n: i64) -> Self {
        Real { m: &self.m * n, bits: self.bits }
    }

    pub fn div_int(&self, n: i64) -> Self {
        Real { m: &self.m / n, bits: self.bits }
    }

    /// self * 2^k
    pub fn ldexp(&self, k: i64) -> Self {
        let m = if k >= 0 { &self.m << k as usize } else { round_shr(self.m.clone(), (-k) as u32) };
        Real { m, bits: self.bits }
    }

    pub fn neg(&self) -> Self {
        Real { m: -&self.m, bits: self.bits }
    }

    pub fn abs(&self) -> Self {
        Real { m: self.m.abs(), bits: self.bits }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.sign() == Sign::Minus
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "sqrt of a negative number");
        Real { m: (&self.m << self.bits).sqrt(), bits: self.bits }
    }

    pub fn powi(&self, mut n: u32) -> Self {
        let mut acc = Real::one(self.bits);
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

    /// Nearest integer.
    pub fn round(&self) -> BigInt {
        round_shr(self.m.clone(), self.bits)
    }

    /// 10^e for any integer e.
    pub fn pow10(e: i64, bits: u32) -> Self {
        let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
        let r = if e >= 0 { Rational::from_integer(p) } else { Rational::new(BigInt::one(), p) };
        Real::from_rational(&r, bits)
    }

    pub fn pi(bits: u32) -> Self {
        let w = bits + GUARD;
        let s = atan_inv(5, w) * 16 - atan_inv(239, w) * 4;
        Real { m: s, bits: w }.with_bits(bits)
    }

    pub fn ln2(bits: u32) -> Self {
        let w = bits + GUARD;
        Real { m: atanh_inv(3, w) * 2, bits: w }.with_bits(bits)
    }

    pub fn exp(&self) -> Self {
        let w = self.bits + GUARD;
        let x = self.with_bits(w);
        let ln2 = Real::ln2(w);
        let n = x.div(&ln2).round();
        let n_i = n.to_i64().expect("exponent out of range");
        let r = x.sub(&ln2.mul_int(n_i));
        // halve 16 times, sum the series, square back
        let s = 16;
        let t = r.ldexp(-(s as i64));
        let mut sum = Real::one(w);
        let mut term = Real::one(w);
        let mut k = 1;
        loop {
            term = term.mul(&t).div_int(k);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
            k += 1;
        }
        for _ in 0..s {
            sum = sum.mul(&sum);
        }
        sum.ldexp(n_i).with_bits(self.bits)
    }

    pub fn ln(&self) -> Self {
        assert!(!self.is_negative() && !self.is_zero(), "ln of a non-positive number");
        let w = self.bits + GUARD;
        let x = self.with_bits(w);
        // x = 2^e y with 1 <= y < 2
        let e = x.m.bits() as i64 - 1 - w as i64;
        let y = x.ldexp(-e);
        let one = Real::one(w);
        let z = y.sub(&one).div(&y.add(&one));
        let z2 = z.mul(&z);
        let mut sum = z.clone();
        let mut p = z;
        let mut k = 1;
        loop {
            p = p.mul(&z2);
            let term = p.div_int(2 * k + 1);
            if term.is_zero() {
                break;
            }
            sum = sum.add(&term);
            k += 1;
        }
        sum.mul_int(2).add(&Real::ln2(w).mul_int(e)).with_bits(self.bits)
    }

    /// self^y for self > 0.
    pub fn powr(&self, y: &Real) -> Self {
        self.ln().mul(y).exp()
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.m.bits() as i64 - 60;
        if shift <= 0 {
            return self.m.to_f64().unwrap_or(0.0) / 2f64.powi(self.bits as i32);
        }
        let top = (&self.m >> shift as usize).to_f64().unwrap_or(0.0);
        top * 2f64.powi((shift - self.bits as i64) as i32)
    }

    /// log10 |self|, approximately; -inf for zero.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let shift = self.m.bits() as i64 - 60;
        let (top, e) = if shift > 0 { (&self.m >> shift as usize, shift) } else { (self.m.clone(), 0) };
        top.abs().to_f64().unwrap_or(1.0).log10() + (e - self.bits as i64) as f64 * std::f64::consts::LOG10_2
    }

    /// Scientific notation with `digits` significant digits.
    pub fn to_sci(&self, digits: usize) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let digits = digits.max(1);
        let mut e = self.log10_abs().floor() as i64;
        let n = loop {
            let scaled = self.abs().mul(&Real::pow10(digits as i64 - 1 - e, self.bits)).round();
            let len = scaled.to_string().len();
            if len > digits {
                e += 1;
            } else if len < digits && e > -100000 {
                e -= 1;
            } else {
                break scaled;
            }
        };
        let s = n.to_string();
        let sign = if self.is_negative() { "-" } else { "" };
        let (head, tail) = s.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{e}")
        } else {
            format!("{sign}{head}.{tail}e{e}")
        }
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Real {
    fn cmp(&self, o: &Self) -> Ordering {
        self.same(o);
        self.m.cmp(&o.m)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(((self.bits as f64) * std::f64::consts::LOG10_2) as usize))
    }
}

/// atan(1/n) * 2^bits
fn atan_inv(n: i64, bits: u32) -> BigInt {
    let n2 = BigInt::from(n * n);
    let mut term = (BigInt::one() << bits) / n;
    let mut sum = term.clone();
    let mut k = 1i64;
    loop {
        term /= &n2;
        if term.is_zero() {
            break;
        }
        let t = &term / (2 * k + 1);
        if k % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        k += 1;
    }
    sum
}

/// atanh(1/n) * 2^bits
fn atanh_inv(n: i64, bits: u32) -> BigInt {
    let n2 = BigInt::from(n * n);
    let mut term = (BigInt::one() << bits) / n;
    let mut sum = term.clone();
    let mut k = 1i64;
    loop {
        term /= &n2;
        if term.is_zero() {
            break;
        }
        sum += &term / (2 * k + 1);
        k += 1;
    }
    sum
}

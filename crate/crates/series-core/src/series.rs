use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::SeriesError;
use crate::scalar::{Rational, Scalar};

/// A power series in one named variable, known exactly through degree `trunc`.
///
/// Everything above `trunc` is unknown, so two series compare equal when they
/// agree up to the smaller of their truncation orders.
#[derive(Clone, Debug)]
pub struct PowerSeries<S> {
    var: String,
    coeffs: Vec<S>,
    trunc: usize,
}

impl<S: Scalar> PowerSeries<S> {
    pub fn new(var: &str, mut coeffs: Vec<S>, trunc: usize) -> Self {
        coeffs.resize(trunc + 1, S::zero());
        PowerSeries { var: var.to_string(), coeffs, trunc }
    }

    pub fn zero(var: &str, trunc: usize) -> Self {
        Self::new(var, Vec::new(), trunc)
    }

    pub fn constant(var: &str, c: S, trunc: usize) -> Self {
        Self::new(var, vec![c], trunc)
    }

    pub fn one(var: &str, trunc: usize) -> Self {
        Self::constant(var, S::one(), trunc)
    }

    /// c x^k
    pub fn monomial(var: &str, k: usize, c: S, trunc: usize) -> Self {
        let mut s = Self::zero(var, trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series x itself.
    pub fn x(var: &str, trunc: usize) -> Self {
        Self::monomial(var, 1, S::one(), trunc)
    }

    pub fn from_ints(var: &str, ints: &[i64], trunc: usize) -> Self {
        Self::new(var, ints.iter().map(|&n| S::from_int(n)).collect(), trunc)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of x^n. Panics above the truncation order, where the
    /// coefficient is unknown.
    pub fn coeff(&self, n: usize) -> &S {
        assert!(n <= self.trunc, "coefficient {n} is beyond truncation {}", self.trunc);
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&S> {
        self.coeffs.get(n)
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn with_trunc(&self, t: usize) -> Self {
        let t = t.min(self.trunc);
        PowerSeries { var: self.var.clone(), coeffs: self.coeffs[..=t].to_vec(), trunc: t }
    }

    pub fn renamed(&self, var: &str) -> Self {
        PowerSeries { var: var.to_string(), coeffs: self.coeffs.clone(), trunc: self.trunc }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> PowerSeries<T> {
        PowerSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(f).collect(), trunc: self.trunc }
    }

    fn check_var(&self, o: &Self) -> Result<(), SeriesError> {
        if self.var == o.var {
            Ok(())
        } else {
            Err(SeriesError::VariableMismatch(self.var.clone(), o.var.clone()))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, SeriesError> {
        self.check_var(o)?;
        let t = self.trunc.min(o.trunc);
        let coeffs = (0..=t).map(|n| self.coeffs[n].plus(&o.coeffs[n])).collect();
        Ok(PowerSeries { var: self.var.clone(), coeffs, trunc: t })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, SeriesError> {
        self.check_var(o)?;
        let t = self.trunc.min(o.trunc);
        let coeffs = (0..=t).map(|n| self.coeffs[n].minus(&o.coeffs[n])).collect();
        Ok(PowerSeries { var: self.var.clone(), coeffs, trunc: t })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, SeriesError> {
        self.check_var(o)?;
        let t = self.trunc.min(o.trunc);
        let mut coeffs = vec![S::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(t + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs, trunc: t })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, SeriesError> {
        self.check_var(o)?;
        self.checked_mul(&o.inverse()?)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.map(|a| a.scaled(r))
    }

    pub fn add_constant(&self, c: &S) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = s.coeffs[0].plus(c);
        s
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.var, self.trunc);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].try_inv().ok_or(SeriesError::NotInvertible)?;
        let t = self.trunc;
        let mut g = vec![S::zero(); t + 1];
        g[0] = inv0.clone();
        for n in 1..=t {
            let mut acc = S::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.plus(&self.coeffs[k].times(&g[n - k]));
                }
            }
            g[n] = acc.times(&inv0).negated();
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs: g, trunc: t })
    }

    /// d/dx. The result is known one degree less.
    pub fn derive(&self) -> Result<Self, SeriesError> {
        if self.trunc == 0 {
            return Err(SeriesError::Exhausted);
        }
        let coeffs = (1..=self.trunc).map(|n| self.coeffs[n].scaled(&Rational::from_integer(n.into()))).collect();
        Ok(PowerSeries { var: self.var.clone(), coeffs, trunc: self.trunc - 1 })
    }

    /// x d/dx
    pub fn theta(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scaled(&Rational::from_integer(n.into())))
            .collect();
        PowerSeries { var: self.var.clone(), coeffs, trunc: self.trunc }
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.trunc + 2);
        coeffs.push(S::zero());
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scaled(&Rational::new(1.into(), (n as i64 + 1).into())));
        }
        PowerSeries { var: self.var.clone(), coeffs, trunc: self.trunc + 1 }
    }

    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTerm { op: "log", expected: "1" });
        }
        if self.trunc == 0 {
            return Ok(Self::zero(&self.var, 0));
        }
        Ok(self.derive()?.checked_div(&self.with_trunc(self.trunc - 1))?.integrate())
    }

    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTerm { op: "exp", expected: "0" });
        }
        let t = self.trunc;
        let mut g = vec![S::zero(); t + 1];
        g[0] = S::one();
        // n g_n = sum_k k f_k g_{n-k}
        for n in 1..=t {
            let mut acc = S::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.plus(&self.coeffs[k].times(&g[n - k]).scaled(&Rational::from_integer(k.into())));
                }
            }
            g[n] = acc.scaled(&Rational::new(1.into(), (n as i64).into()));
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs: g, trunc: t })
    }

    /// f^alpha for rational alpha, for f with constant term 1.
    pub fn pow_rational(&self, alpha: &Rational) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTerm { op: "rational power", expected: "1" });
        }
        let t = self.trunc;
        let mut g = vec![S::zero(); t + 1];
        g[0] = S::one();
        // from f g' = alpha f' g:  m g_m = sum_{k=1}^m (alpha k - (m - k)) f_k g_{m-k}
        for m in 1..=t {
            let mut acc = S::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = alpha * Rational::from_integer(k.into()) - Rational::from_integer((m - k).into());
                acc = acc.plus(&self.coeffs[k].times(&g[m - k]).scaled(&w));
            }
            g[m] = acc.scaled(&Rational::new(1.into(), (m as i64).into()));
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs: g, trunc: t })
    }

    pub fn nth_root(&self, n: u32) -> Result<Self, SeriesError> {
        if n == 0 {
            return Err(SeriesError::NotInvertible);
        }
        self.pow_rational(&Rational::new(1.into(), (n as i64).into()))
    }

    /// Multiply by x^k; the product is known k degrees further.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { var: self.var.clone(), coeffs, trunc: self.trunc + k }
    }

    /// Divide by x^k, which must divide the series.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        if k > self.trunc {
            return Err(SeriesError::Exhausted);
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotInvertible);
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs: self.coeffs[k..].to_vec(), trunc: self.trunc - k })
    }

    /// f(c x)
    pub fn dilate(&self, c: &S) -> Self {
        let mut p = S::one();
        let mut coeffs = Vec::with_capacity(self.trunc + 1);
        for a in &self.coeffs {
            coeffs.push(a.times(&p));
            p = p.times(c);
        }
        PowerSeries { var: self.var.clone(), coeffs, trunc: self.trunc }
    }

    /// f(x^k), known through degree k * trunc + k - 1.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let t = k * (self.trunc + 1) - 1;
        let mut coeffs = vec![S::zero(); t + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            coeffs[n * k] = c.clone();
        }
        PowerSeries { var: self.var.clone(), coeffs, trunc: t }
    }

    /// outer(inner). The inner series must vanish at 0; the result lives in the
    /// inner variable and is known through min(T_inner, m (T_outer + 1) - 1)
    /// where m is the valuation of the inner series.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTerm { op: "compose", expected: "0" });
        }
        let t = match inner.valuation() {
            None => inner.trunc,
            Some(m) => inner.trunc.min(m * (self.trunc + 1) - 1),
        };
        let inner = inner.with_trunc(t);
        let m = inner.valuation().unwrap_or(t + 1);
        let top = if m == 0 { 0 } else { (t / m).min(self.trunc) };
        // Horner from the top coefficient down
        let mut acc = PowerSeries::constant(&inner.var, self.coeffs[top].clone(), t);
        for k in (0..top).rev() {
            acc = (&acc * &inner).add_constant(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// Compositional inverse by Newton iteration.
    pub fn reverse(&self) -> Result<Self, SeriesError> {
        if self.trunc == 0 || !self.coeffs[0].is_zero() {
            return Err(SeriesError::NotReversible);
        }
        let inv1 = self.coeffs[1].try_inv().ok_or(SeriesError::NotReversible)?;
        let target = self.trunc;
        let df = self.derive()?;
        let mut g = PowerSeries::monomial(&self.var, 1, inv1, 1);
        let mut prec = 1;
        while prec < target {
            prec = (2 * prec).min(target);
            let g_ext = PowerSeries::new(&self.var, g.coeffs.clone(), prec);
            // residual f(g) - x has valuation > prec / 2, so the division by
            // f'(g) only needs f' to degree prec - 1
            let resid = self.with_trunc(prec).compose(&g_ext)? - PowerSeries::x(&self.var, prec);
            let v = resid.valuation().unwrap_or(prec).min(prec);
            let denom = df.with_trunc(prec - v).compose(&g_ext.with_trunc(prec - v))?;
            let step = resid.shift_down(v)?.checked_div(&denom)?.shift_up(v);
            g = g_ext - step;
        }
        Ok(g)
    }

    pub fn first_nonzero(&self) -> Option<(usize, &S)> {
        self.valuation().map(|n| (n, &self.coeffs[n]))
    }
}

impl PowerSeries<Rational> {
    pub fn from_rats(var: &str, rats: &[Rational], trunc: usize) -> Self {
        Self::new(var, rats.to_vec(), trunc)
    }

    pub fn to_cyclotomic(&self) -> PowerSeries<crate::CycScalar> {
        self.map(|r| crate::CycScalar::rational(r.clone()))
    }
}

impl<S: Scalar> PartialEq for PowerSeries<S> {
    fn eq(&self, o: &Self) -> bool {
        let t = self.trunc.min(o.trunc);
        self.var == o.var && self.coeffs[..=t] == o.coeffs[..=t]
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<S: Scalar> $tr<&PowerSeries<S>> for &PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $m(self, o: &PowerSeries<S>) -> PowerSeries<S> {
                self.$checked(o).expect("series in different variables")
            }
        }
        impl<S: Scalar> $tr<PowerSeries<S>> for PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $m(self, o: PowerSeries<S>) -> PowerSeries<S> {
                (&self).$m(&o)
            }
        }
        impl<S: Scalar> $tr<&PowerSeries<S>> for PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $m(self, o: &PowerSeries<S>) -> PowerSeries<S> {
                (&self).$m(o)
            }
        }
        impl<S: Scalar> $tr<PowerSeries<S>> for &PowerSeries<S> {
            type Output = PowerSeries<S>;
            fn $m(self, o: PowerSeries<S>) -> PowerSeries<S> {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<S: Scalar> Neg for &PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn neg(self) -> PowerSeries<S> {
        self.map(|c| c.negated())
    }
}

impl<S: Scalar> Neg for PowerSeries<S> {
    type Output = PowerSeries<S>;
    fn neg(self) -> PowerSeries<S> {
        -&self
    }
}

impl<S: Scalar> fmt::Display for PowerSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}){}", self.var)?,
                _ => write!(f, "({c}){}^{n}", self.var)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.trunc + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type Q = PowerSeries<Rational>;

    fn s(ints: &[i64], t: usize) -> Q {
        Q::from_ints("x", ints, t)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&s(&[1, 1], 6) * &s(&[1, -1], 6), s(&[1, 0, -1], 6));
    }

    #[test]
    fn geometric_series() {
        let g = s(&[1, -1], 8).inverse().unwrap();
        assert_eq!(g, s(&[1; 9], 8));
    }

    #[test]
    fn truncation_is_min() {
        let p = &s(&[1, 2, 3], 2) * &s(&[1, 1, 1, 1, 1], 4);
        assert_eq!(p.trunc(), 2);
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = s(&[1], 3);
        let b = Q::from_ints("y", &[1], 3);
        assert!(matches!(a.checked_add(&b), Err(SeriesError::VariableMismatch(..))));
    }

    #[test]
    fn euler_product_pentagonal() {
        let t = 26;
        let mut p = Q::one("q", t);
        for n in 1..=t {
            p = &p * &Q::monomial("q", n, rat(-1, 1), t).add_constant(&rat(1, 1));
        }
        let mut expect = vec![0i64; t + 1];
        for (k, sign) in [(0usize, 1i64), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1), (22, 1), (26, 1)] {
            expect[k] = sign;
        }
        assert_eq!(p, Q::from_ints("q", &expect, t));
    }

    #[test]
    fn compose_examples() {
        let f = s(&[3, 1, 4, 1, 5], 4);
        assert_eq!(f.compose(&Q::x("x", 4)).unwrap(), f);
        let geo = s(&[1, -1], 10).inverse().unwrap();
        let x2 = Q::monomial("x", 2, rat(1, 1), 10);
        assert_eq!(geo.compose(&x2).unwrap(), s(&[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1], 10));
        assert!(f.compose(&s(&[1, 1], 4)).is_err());
    }

    #[test]
    fn compose_truncation_rule() {
        // outer known to degree 2, inner has valuation 3: result known to 8
        let outer = s(&[1, 1, 1], 2);
        let inner = Q::monomial("x", 3, rat(1, 1), 20);
        let c = outer.compose(&inner).unwrap();
        assert_eq!(c.trunc(), 8);
        assert_eq!(c, s(&[1, 0, 0, 1, 0, 0, 1, 0, 0], 8));
    }

    #[test]
    fn reverse_catalan() {
        // x + x^2 reverts to sum (-1)^{n-1} Cat_{n-1} x^n
        let r = s(&[0, 1, 1], 9).reverse().unwrap();
        assert_eq!(r, s(&[0, 1, -1, 2, -5, 14, -42, 132, -429, 1430], 9));
        assert_eq!(s(&[0, 1], 5).reverse().unwrap(), s(&[0, 1], 5));
        assert!(s(&[0, 0, 1], 5).reverse().is_err());
    }

    #[test]
    fn calculus() {
        let x3 = Q::monomial("x", 3, rat(1, 1), 5);
        assert_eq!(x3.theta(), Q::monomial("x", 3, rat(3, 1), 5));
        let log = s(&[1, 1], 6).log().unwrap();
        let expect: Vec<Rational> = (0..=6).map(|n| if n == 0 { rat(0, 1) } else { rat(if n % 2 == 1 { 1 } else { -1 }, n) }).collect();
        assert_eq!(log, Q::from_rats("x", &expect, 6));
        let e = s(&[0, 1], 6).exp().unwrap();
        assert_eq!(*e.coeff(5), rat(1, 120));
        assert!(s(&[2, 1], 3).log().is_err());
        assert!(s(&[1, 1], 3).exp().is_err());
    }

    #[test]
    fn nth_root_squares_back() {
        let f = s(&[1, 48, 0, 7, -2], 12);
        let r = f.nth_root(2).unwrap();
        assert_eq!(&r * &r, f);
        let c = f.nth_root(3).unwrap();
        assert_eq!(c.pow(3), f);
    }

    #[test]
    fn shifts_and_dilate() {
        let f = s(&[1, 2, 3], 2);
        assert_eq!(f.shift_up(2).shift_down(2).unwrap(), f);
        assert_eq!(f.shift_up(2).trunc(), 4);
        assert!(f.shift_down(1).is_err());
        assert_eq!(f.dilate(&rat(2, 1)), s(&[1, 4, 12], 2));
        assert_eq!(f.substitute_power(2), s(&[1, 0, 2, 0, 3, 0], 5));
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", s(&[1, 0, -2], 2)), "1 + (-2)x^2 + O(x^3)");
    }
}

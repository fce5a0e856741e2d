use series_core::{PowerSeries, Rational, Scalar};

use crate::check::Check;
use crate::FjrwError;

/// A monomial c * prod y_i^{e_i} in the unknowns.
pub type Term = (Rational, Vec<u32>);

/// y_i' = sum of terms, with y_i(0) given. Every right-hand side is a
/// polynomial, so the coefficient of u^{n+1} in y_i only needs degrees <= n.
#[derive(Debug, Clone, PartialEq)]
pub struct OdeSystem {
    pub unknowns: Vec<String>,
    pub field: Vec<Vec<Term>>,
    pub initial: Vec<Rational>,
}

impl OdeSystem {
    pub fn new(unknowns: &[&str], field: Vec<Vec<Term>>, initial: Vec<Rational>) -> Self {
        assert_eq!(unknowns.len(), field.len());
        assert_eq!(unknowns.len(), initial.len());
        OdeSystem { unknowns: unknowns.iter().map(|s| s.to_string()).collect(), field, initial }
    }

    fn eval(&self, i: usize, ys: &[PowerSeries<Rational>], var: &str, trunc: usize) -> PowerSeries<Rational> {
        let mut acc = PowerSeries::zero(var, trunc);
        for (c, e) in &self.field[i] {
            let mut m = PowerSeries::constant(var, c.clone(), trunc);
            for (y, &k) in ys.iter().zip(e) {
                if k > 0 {
                    m = &m * &y.pow(k);
                }
            }
            acc = acc + m;
        }
        acc
    }

    /// Right-hand sides evaluated on the given series.
    pub fn rhs(&self, ys: &[PowerSeries<Rational>]) -> Vec<PowerSeries<Rational>> {
        let t = ys.iter().map(|y| y.trunc()).min().unwrap_or(0);
        let var = ys.first().map(|y| y.var().to_string()).unwrap_or_else(|| "u".into());
        (0..self.field.len()).map(|i| self.eval(i, ys, &var, t)).collect()
    }

    /// Coefficient recursion to order `order` in the variable `var`.
    pub fn solve(&self, var: &str, order: usize) -> Result<Vec<PowerSeries<Rational>>, FjrwError> {
        if order < 1 {
            return Err(FjrwError::BadOrder);
        }
        let n_unk = self.unknowns.len();
        let mut coeffs: Vec<Vec<Rational>> = self.initial.iter().map(|c| vec![c.clone()]).collect();
        for n in 0..order {
            let ys: Vec<PowerSeries<Rational>> = coeffs.iter().map(|c| PowerSeries::new(var, c.clone(), n)).collect();
            let next: Vec<Rational> = (0..n_unk)
                .map(|i| self.eval(i, &ys, var, n).coeff(n).clone() / Rational::from_integer(((n + 1) as i64).into()))
                .collect();
            for (c, x) in coeffs.iter_mut().zip(next) {
                c.push(x);
            }
        }
        Ok(coeffs.into_iter().map(|c| PowerSeries::new(var, c, order)).collect())
    }

    /// y_i' - F_i(y) for each unknown.
    pub fn residuals(&self, ys: &[PowerSeries<Rational>]) -> Result<Vec<Check>, FjrwError> {
        let rhs = self.rhs(ys);
        let mut out = Vec::new();
        for ((name, y), r) in self.unknowns.iter().zip(ys).zip(rhs) {
            let d = y.derive()?;
            out.push(Check::of(&format!("{name}' - F_{name}"), &(&d - &r)));
        }
        Ok(out)
    }

    pub fn is_zero_initial(&self) -> bool {
        self.initial.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::rat;

    #[test]
    fn exponential() {
        let ode = OdeSystem::new(&["y"], vec![vec![(rat(1, 1), vec![1])]], vec![rat(1, 1)]);
        let y = ode.solve("u", 6).unwrap().remove(0);
        assert_eq!(y, PowerSeries::x("u", 6).exp().unwrap());
    }

    #[test]
    fn riccati_tangent() {
        // y' = 1 + y^2, y(0) = 0 gives tan u = u + u^3/3 + 2u^5/15
        let ode = OdeSystem::new(&["y"], vec![vec![(rat(1, 1), vec![0]), (rat(1, 1), vec![2])]], vec![rat(0, 1)]);
        let y = ode.solve("u", 5).unwrap().remove(0);
        assert_eq!(y.coeffs(), &[rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 3), rat(0, 1), rat(2, 15)]);
        assert!(ode.residuals(&[y]).unwrap()[0].pass());
    }
}

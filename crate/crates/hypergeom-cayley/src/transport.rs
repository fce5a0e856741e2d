//! Holomorphic Cayley transport of quasi-modular q-expansions.
//!
//! A form of weight w is written as a polynomial in A, C and D = q d/dq log C
//! (at level 2: A^2, C^2 and q d/dq log C^2) by an exact linear solve, checked
//! against every available coefficient, and the same polynomial is then
//! evaluated on the elliptic images C(A), C(C) and d/dv log C(C).

use std::collections::HashMap;
use std::sync::Mutex;

use q_forms::{generators, FormDescriptor};
use series_core::{linalg, rat, scalar::frac_part, FracSeries, PowerSeries, Rational, Scalar};

use crate::cayley::cayley_expansions;
use crate::CayleyError;

type Monomial = (u32, u32, u32);

pub struct Transport {
    level: u32,
    order: usize,
    q_order: usize,
    gen_weight: u32,
    c_offset: Rational,
    q_a: FracSeries<Rational>,
    q_c: FracSeries<Rational>,
    q_d: FracSeries<Rational>,
    v_a: PowerSeries<Rational>,
    v_c: PowerSeries<Rational>,
    v_d: PowerSeries<Rational>,
    q_cache: Mutex<HashMap<Monomial, FracSeries<Rational>>>,
}

impl Transport {
    /// `order` is the v-order of the images, `q_order` the order of the
    /// q-expansions used to identify the polynomial.
    pub fn new(level: u32, order: usize, q_order: usize) -> Result<Self, CayleyError> {
        let g = generators(level, q_order)?;
        let q_a = g.a.series.clone();
        let q_c = g.c.series.clone();
        let q_d = FracSeries::from_series(q_c.log_derivative()?);
        let f = cayley_expansions(level, order + 1)?;
        let v_a = f.a_series().with_trunc(order);
        let v_d = f.c_series().log()?.derive()?.with_trunc(order);
        let v_c = f.c_series().with_trunc(order);
        Ok(Transport {
            level,
            order,
            q_order,
            gen_weight: if level == 3 { 1 } else { 2 },
            c_offset: q_c.offset().clone(),
            q_a,
            q_c,
            q_d,
            v_a,
            v_c,
            v_d,
            q_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    /// Monomials A^i C^j D^l of weight w.
    pub fn basis(&self, weight: u32) -> Vec<Monomial> {
        let gw = self.gen_weight;
        let mut out = Vec::new();
        for l in 0..=weight / 2 {
            let rest = weight - 2 * l;
            if rest % gw != 0 {
                continue;
            }
            let n = rest / gw;
            for j in 0..=n {
                out.push((n - j, j, l));
            }
        }
        out
    }

    fn q_monomial(&self, m: Monomial) -> FracSeries<Rational> {
        if let Some(s) = self.q_cache.lock().expect("cache poisoned").get(&m) {
            return s.clone();
        }
        let s = &(&self.q_a.pow(m.0) * &self.q_c.pow(m.1)) * &self.q_d.pow(m.2);
        self.q_cache.lock().expect("cache poisoned").insert(m, s.clone());
        s
    }

    fn v_monomial(&self, m: Monomial) -> PowerSeries<Rational> {
        &(&self.v_a.pow(m.0) * &self.v_c.pow(m.1)) * &self.v_d.pow(m.2)
    }

    /// Coefficients of `f` in the monomial basis of the given weight.
    pub fn decompose(&self, f: &FracSeries<Rational>, weight: &Rational) -> Result<Vec<(Monomial, Rational)>, CayleyError> {
        if !weight.is_integer() || weight < &rat(0, 1) {
            return Err(CayleyError::BadWeight(weight.to_string()));
        }
        let w: u32 = weight.to_integer().try_into().map_err(|_| CayleyError::BadWeight(weight.to_string()))?;
        if f.is_zero() {
            return Ok(Vec::new());
        }
        let class = frac_part(f.offset());
        let basis: Vec<Monomial> = self
            .basis(w)
            .into_iter()
            .filter(|m| frac_part(&(&self.c_offset * Rational::from_integer(m.1.into()))) == class)
            .collect();
        if basis.is_empty() {
            return Err(CayleyError::BadWeight(weight.to_string()));
        }
        let cols: Vec<FracSeries<Rational>> = basis.iter().map(|&m| self.q_monomial(m)).collect();
        let top = cols.iter().map(|c| c.abs_trunc()).fold(f.abs_trunc(), |a, b| if b < a { b } else { a });
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut e = class;
        while e <= top {
            rows.push(cols.iter().map(|c| c.coeff_at(&e).expect("within truncation")).collect::<Vec<_>>());
            rhs.push(f.coeff_at(&e).expect("within truncation"));
            e += Rational::one();
        }
        let sol = linalg::solve(rows, rhs).map_err(|err| CayleyError::NotInRing(weight.to_string(), err))?;
        Ok(basis.into_iter().zip(sol).filter(|(_, c)| !c.is_zero()).collect())
    }

    /// The holomorphic elliptic image in v.
    pub fn apply(&self, f: &FracSeries<Rational>, weight: &Rational) -> Result<PowerSeries<Rational>, CayleyError> {
        let mut out = PowerSeries::zero("v", self.order);
        for (m, c) in self.decompose(f, weight)? {
            out = out + self.v_monomial(m).scale_rat(&c);
        }
        Ok(out)
    }

    pub fn apply_form(&self, f: &FormDescriptor) -> Result<PowerSeries<Rational>, CayleyError> {
        self.apply(&f.series, &f.weight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use q_forms::{generators_with, Normalization};

    #[test]
    fn basis_sizes() {
        let t = Transport::new(3, 8, 20).unwrap();
        assert_eq!(t.basis(1).len(), 2);
        assert_eq!(t.basis(2).len(), 4);
        assert_eq!(t.basis(4).len(), 9);
        let t2 = Transport::new(2, 8, 20).unwrap();
        assert_eq!(t2.basis(2).len(), 3);
        assert_eq!(t2.basis(4).len(), 6);
        assert!(t2.basis(1).is_empty());
    }

    #[test]
    fn e3_is_six_d_minus_a_squared() {
        let t = Transport::new(3, 10, 25).unwrap();
        let g = generators(3, 25).unwrap();
        let mut parts = t.decompose(&g.e.series, &g.e.weight).unwrap();
        parts.sort();
        assert_eq!(parts, vec![((0, 0, 1), rat(6, 1)), ((2, 0, 0), rat(-1, 1))]);
        let f = cayley_expansions(3, 10).unwrap();
        assert_eq!(t.apply_form(&g.e).unwrap(), f.e_series().clone());
    }

    #[test]
    fn misnormalized_e3_transports_to_four_thirds() {
        let t = Transport::new(3, 10, 25).unwrap();
        let g = generators_with(3, 25, Normalization { e3_denominator: 3 }).unwrap();
        let f = cayley_expansions(3, 10).unwrap();
        assert_eq!(t.apply_form(&g.e).unwrap(), f.e_series().scale_rat(&rat(4, 3)));
    }

    #[test]
    fn b3_is_not_polynomial() {
        let t = Transport::new(3, 6, 25).unwrap();
        let g = generators(3, 25).unwrap();
        assert!(matches!(t.apply_form(&g.b), Err(CayleyError::NotInRing(..))));
    }
}

//! Polynomials in named coordinates whose coefficients are series.

use std::collections::BTreeMap;


use crate::error::SeriesError;
use crate::frac::FracSeries;
use crate::scalar::{Rational, Scalar};
use crate::series::PowerSeries;

pub trait PolyCoeff: Clone {
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
}

impl<S: Scalar> PolyCoeff for PowerSeries<S> {
    fn is_zero(&self) -> bool {
        PowerSeries::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
}

impl<S: Scalar> PolyCoeff for FracSeries<S> {
    fn is_zero(&self) -> bool {
        FracSeries::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<C> {
    coordinates: Vec<String>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: PolyCoeff> Polynomial<C> {
    pub fn new(coordinates: &[&str]) -> Self {
        Polynomial { coordinates: coordinates.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn with_coordinates(coordinates: Vec<String>) -> Self {
        Polynomial { coordinates, terms: BTreeMap::new() }
    }

    pub fn coordinates(&self) -> &[String] {
        &self.coordinates
    }

    pub fn coordinate_index(&self, name: &str) -> Option<usize> {
        self.coordinates.iter().position(|c| c == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&C> {
        self.terms.get(exps)
    }

    /// Adds c * x^exps, merging with an existing term.
    pub fn add_term(&mut self, exps: Vec<u32>, c: C) {
        assert_eq!(exps.len(), self.coordinates.len(), "exponent vector has the wrong length");
        let merged = match self.terms.remove(&exps) {
            Some(old) => old.plus(&c),
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(exps, merged);
        }
    }

    pub fn map_coeffs<D: PolyCoeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        let mut out = Polynomial::with_coordinates(self.coordinates.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: PolyCoeff, E>(&self, f: impl Fn(&C) -> Result<D, E>) -> Result<Polynomial<D>, E> {
        let mut out = Polynomial::with_coordinates(self.coordinates.clone());
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Applies a permutation of coordinates: coordinate i becomes perm[i].
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Polynomial::with_coordinates(self.coordinates.clone());
        for (e, c) in &self.terms {
            let mut ne = vec![0; e.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[perm[i]] = k;
            }
            out.add_term(ne, c.clone());
        }
        out
    }
}

/// Sparse polynomial with scalar coefficients, used to expand linear substitutions.
type ScalarPoly<S> = BTreeMap<Vec<u32>, S>;

fn scalar_poly_mul<S: Scalar>(a: &ScalarPoly<S>, b: &ScalarPoly<S>) -> ScalarPoly<S> {
    let mut out: ScalarPoly<S> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let v = ca.times(cb);
            let entry = out.entry(e).or_insert_with(S::zero);
            *entry = entry.plus(&v);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl<S: Scalar> Polynomial<PowerSeries<S>> {
    /// Substitutes old_i = sum_j m[i][j] new_j.
    pub fn linear_substitute(&self, new_coords: &[&str], m: &[Vec<S>]) -> Self {
        let n_new = new_coords.len();
        let forms: Vec<ScalarPoly<S>> = m
            .iter()
            .map(|row| {
                let mut p = BTreeMap::new();
                for (j, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        let mut e = vec![0; n_new];
                        e[j] = 1;
                        p.insert(e, c.clone());
                    }
                }
                p
            })
            .collect();
        let mut out = Polynomial::new(new_coords);
        for (exps, coeff) in &self.terms {
            let mut acc: ScalarPoly<S> = BTreeMap::from([(vec![0; n_new], S::one())]);
            for (i, &k) in exps.iter().enumerate() {
                for _ in 0..k {
                    acc = scalar_poly_mul(&acc, &forms[i]);
                }
            }
            for (e, c) in acc {
                out.add_term(e, coeff.scale(&c));
            }
        }
        out
    }

    /// Partial derivative in coordinate i.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Polynomial::with_coordinates(self.coordinates.clone());
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c.scale_rat(&Rational::from_integer(e[i].into())));
        }
        out
    }

    /// Derivative of every coefficient in the series variable.
    pub fn partial_series(&self) -> Result<Self, SeriesError> {
        self.try_map_coeffs(|c| c.derive())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Polynomial::with_coordinates(self.coordinates.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    /// Moves powers of coordinate i into the coefficients, for the coordinate
    /// that doubles as the series variable.
    pub fn absorb(&self, i: usize) -> Self {
        let mut coords = self.coordinates.clone();
        coords.remove(i);
        let mut out = Polynomial::with_coordinates(coords);
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(i);
            out.add_term(ne, c.shift_up(k as usize));
        }
        out
    }

    /// Smallest truncation order among the coefficients.
    pub fn trunc(&self) -> usize {
        self.terms.values().map(|c| c.trunc()).min().unwrap_or(usize::MAX)
    }

    pub fn with_trunc(&self, t: usize) -> Self {
        self.map_coeffs(|c| c.with_trunc(t))
    }

    /// Removes terms whose coefficient vanishes to its truncation order.
    pub fn pruned(&self) -> Self {
        self.map_coeffs(|c| c.clone())
    }

    /// True when every coefficient vanishes.
    pub fn is_zero_poly(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }
}

/// Integer sum helper used when building symmetric monomial sets.
pub fn exps(n: usize, pairs: &[(usize, u32)]) -> Vec<u32> {
    let mut e = vec![0; n];
    for &(i, k) in pairs {
        e[i] += k;
    }
    e
}

/// Rational number as a constant series.
pub fn const_series<S: Scalar>(var: &str, r: &Rational, trunc: usize) -> PowerSeries<S> {
    if r.is_zero() {
        PowerSeries::zero(var, trunc)
    } else {
        PowerSeries::constant(var, S::from_rational(r), trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type P = Polynomial<PowerSeries<Rational>>;

    fn c(n: i64, d: i64) -> PowerSeries<Rational> {
        PowerSeries::constant("u", rat(n, d), 4)
    }

    #[test]
    fn merge_and_cancel() {
        let mut p = P::new(&["a", "b"]);
        p.add_term(vec![1, 0], c(1, 1));
        p.add_term(vec![1, 0], c(-1, 1));
        assert!(p.is_empty());
    }

    #[test]
    fn substitution_expands_products() {
        // a*b with a = x + y, b = x - y gives x^2 - y^2
        let mut p = P::new(&["a", "b"]);
        p.add_term(vec![1, 1], c(1, 1));
        let q = p.linear_substitute(&["x", "y"], &[vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]]);
        assert_eq!(q.len(), 2);
        assert_eq!(q.coeff(&[2, 0]), Some(&c(1, 1)));
        assert_eq!(q.coeff(&[0, 2]), Some(&c(-1, 1)));
    }

    #[test]
    fn partials_and_absorb() {
        let mut p = P::new(&["a", "u"]);
        p.add_term(vec![2, 1], c(1, 2));
        let d = p.partial(0);
        assert_eq!(d.coeff(&[1, 1]), Some(&c(1, 1)));
        let ab = p.absorb(1);
        assert_eq!(ab.coordinates(), &["a".to_string()]);
        assert_eq!(*ab.coeff(&[2]).unwrap().coeff(1), rat(1, 2));
    }

    #[test]
    fn exps_helper() {
        assert_eq!(exps(4, &[(1, 2), (3, 1), (1, 1)]), vec![0, 3, 0, 1]);
    }
}

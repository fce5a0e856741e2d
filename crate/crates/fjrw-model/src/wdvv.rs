//! Associativity of the quantum product, checked on a prepotential at a
//! numerical point in the flat coordinates (the series variable stays formal).

use std::collections::HashMap;

use series_core::{Polynomial, PowerSeries, Scalar};

use crate::FjrwError;

#[derive(Debug, Clone, PartialEq)]
pub struct WdvvReport {
    pub checked: usize,
    /// (a, b, c, d) with F_abe eta^ef F_fcd != F_ace eta^ef F_fbd
    pub failures: Vec<[usize; 4]>,
    pub trunc: usize,
}

impl WdvvReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

fn eval_at<S: Scalar>(p: &Polynomial<PowerSeries<S>>, point: &[S], var: &str, trunc: usize) -> PowerSeries<S> {
    let mut acc = PowerSeries::zero(var, trunc);
    for (e, c) in p.terms() {
        let mut w = S::one();
        for (x, &k) in point.iter().zip(e) {
            for _ in 0..k {
                w = w.times(x);
            }
        }
        if !w.is_zero() {
            acc = acc + c.scale(&w).with_trunc(trunc);
        }
    }
    acc
}

/// `p` has its last coordinate equal to the series variable; `eta_inv` is the
/// inverse pairing in the order of the coordinates. `point` gives values of
/// every coordinate except the last.
pub fn wdvv_at_point<S: Scalar>(p: &Polynomial<PowerSeries<S>>, eta_inv: &[Vec<S>], point: &[S]) -> Result<WdvvReport, FjrwError> {
    let n = p.coordinates().len() - 1;
    let flat = p.absorb(n);
    let var = flat.terms().next().map(|(_, c)| c.var().to_string()).unwrap_or_else(|| "u".into());
    let trunc = flat.trunc().saturating_sub(3);
    let deriv = |q: &Polynomial<PowerSeries<S>>, i: usize| -> Result<Polynomial<PowerSeries<S>>, FjrwError> {
        if i == n {
            Ok(q.partial_series()?)
        } else {
            Ok(q.partial(i))
        }
    };
    let mut third: HashMap<[usize; 3], PowerSeries<S>> = HashMap::new();
    for a in 0..=n {
        let fa = deriv(&flat, a)?;
        for b in a..=n {
            let fab = deriv(&fa, b)?;
            for c in b..=n {
                let s = eval_at(&deriv(&fab, c)?, point, &var, trunc);
                third.insert([a, b, c], s);
            }
        }
    }
    let get = |a: usize, b: usize, c: usize| {
        let mut k = [a, b, c];
        k.sort();
        &third[&k]
    };
    let contract = |a: usize, b: usize, c: usize, d: usize| {
        let mut acc = PowerSeries::zero(&var, trunc);
        for (e, row) in eta_inv.iter().enumerate() {
            for (f, w) in row.iter().enumerate() {
                if !w.is_zero() {
                    acc = acc + (get(a, b, e) * get(f, c, d)).scale(w);
                }
            }
        }
        acc
    };
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in 0..=n {
        for b in a..=n {
            for c in 0..=n {
                for d in c..=n {
                    // the pair swap (a,b) <-> (c,d) gives the same equation
                    if (a, b) > (c, d) {
                        continue;
                    }
                    checked += 1;
                    if !(contract(a, b, c, d) - contract(a, c, b, d)).is_zero() {
                        failures.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    Ok(WdvvReport { checked, failures, trunc })
}

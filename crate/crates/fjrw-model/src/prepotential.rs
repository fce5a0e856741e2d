use series_core::poly::{exps, PolyCoeff};
use series_core::{rat, CycScalar, FracSeries, Polynomial, PowerSeries, Rational, Scalar};

use crate::blocks::solve_wdvv;
use crate::{Case, FjrwError};

/// Prepotential with u-series coefficients. The last coordinate is the
/// degree-one coordinate, kept explicit so the classical term u0^2 u/2 needs no
/// special casing; `absorb` folds it into the series variable.
pub type Prepotential = Polynomial<PowerSeries<Rational>>;

/// Coefficient rings the prepotential templates can be instantiated over.
pub trait TemplateCoeff: PolyCoeff {
    fn tc_mul(&self, o: &Self) -> Self;
    fn tc_add(&self, o: &Self) -> Self;
    fn tc_scale(&self, r: &Rational) -> Self;
    /// The constant r with the same variable and truncation as `self`.
    fn tc_const(&self, r: &Rational) -> Self;
}

impl<S: Scalar> TemplateCoeff for PowerSeries<S> {
    fn tc_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn tc_add(&self, o: &Self) -> Self {
        self + o
    }
    fn tc_scale(&self, r: &Rational) -> Self {
        self.scale_rat(r)
    }
    fn tc_const(&self, r: &Rational) -> Self {
        PowerSeries::constant(self.var(), S::from_rational(r), self.trunc())
    }
}

impl<S: Scalar> TemplateCoeff for FracSeries<S> {
    fn tc_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn tc_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn tc_scale(&self, r: &Rational) -> Self {
        self.scale_rat(r)
    }
    fn tc_const(&self, r: &Rational) -> Self {
        FracSeries::from_series(PowerSeries::constant(self.var(), S::from_rational(r), self.body().trunc()))
    }
}

fn coords(prefix: &str, n: usize) -> Vec<String> {
    let mut c: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
    c.push(prefix.to_string());
    c
}

fn mono(n: usize, pairs: &[(usize, u32)]) -> Vec<u32> {
    exps(n, pairs)
}

/// Genus-zero template for the cubic with blocks (f1, f2, f3) in coordinates
/// p0..p6 and p. The pairing term has coefficient 1, as forced by
/// eta(phi_i, phi_j) = delta_{i+j,7}.
pub fn cubic_template<C: TemplateCoeff>(prefix: &str, f1: &C, f2: &C, f3: &C) -> Polynomial<C> {
    let n = 8;
    let mut p = Polynomial::with_coordinates(coords(prefix, 7));
    let r = |a: i64, b: i64| rat(a, b);
    let mut add = |monos: &[&[(usize, u32)]], c: C| {
        for m in monos {
            p.add_term(mono(n, m), c.clone());
        }
    };
    let m = |a: &C, b: &C| a.tc_mul(b);
    let pw = |a: &C, k: u32| (1..k).fold(a.clone(), |acc, _| acc.tc_mul(a));

    add(&[&[(0, 2), (7, 1)]], f1.tc_const(&r(1, 2)));
    add(&[&[(0, 1), (1, 1), (6, 1)], &[(0, 1), (2, 1), (5, 1)], &[(0, 1), (3, 1), (4, 1)]], f1.tc_const(&r(1, 1)));
    add(&[&[(1, 1), (2, 1), (3, 1)]], f1.clone());
    add(&[&[(1, 3)], &[(2, 3)], &[(3, 3)]], f2.tc_scale(&r(1, 6)));
    add(
        &[&[(1, 1), (2, 1), (5, 1), (6, 1)], &[(1, 1), (3, 1), (4, 1), (6, 1)], &[(2, 1), (3, 1), (4, 1), (5, 1)]],
        f3.tc_scale(&r(3, 1)).tc_add(&m(f2, f2)).tc_scale(&r(1, 6)),
    );
    add(&[&[(1, 2), (4, 1), (5, 1)], &[(2, 2), (4, 1), (6, 1)], &[(3, 2), (5, 1), (6, 1)]], m(f1, f1).tc_scale(&r(1, 6)));
    add(&[&[(1, 1), (2, 1), (4, 2)], &[(1, 1), (3, 1), (5, 2)], &[(2, 1), (3, 1), (6, 2)]], m(f1, f2).tc_scale(&r(1, 6)));
    add(&[&[(1, 2), (6, 2)], &[(2, 2), (5, 2)], &[(3, 2), (4, 2)]], f3.tc_scale(&r(1, 4)));
    add(
        &[&[(1, 1), (4, 1), (5, 1), (6, 2)], &[(2, 1), (4, 1), (5, 2), (6, 1)], &[(3, 1), (4, 2), (5, 1), (6, 1)]],
        m(&m(f1, f1), f2).tc_scale(&r(1, 18)),
    );
    add(&[&[(1, 1), (4, 2), (5, 2)], &[(2, 1), (4, 2), (6, 2)], &[(3, 1), (5, 2), (6, 2)]], m(f1, &m(f2, f2)).tc_scale(&r(1, 36)));
    add(
        &[
            &[(1, 1), (6, 1), (4, 3)],
            &[(1, 1), (6, 1), (5, 3)],
            &[(2, 1), (5, 1), (4, 3)],
            &[(2, 1), (5, 1), (6, 3)],
            &[(3, 1), (4, 1), (5, 3)],
            &[(3, 1), (4, 1), (6, 3)],
        ],
        pw(f1, 3).tc_scale(&r(1, 54)),
    );
    add(&[&[(1, 1), (6, 4)], &[(2, 1), (5, 4)], &[(3, 1), (4, 4)]], pw(f2, 3).tc_scale(&r(1, 216)));
    add(&[&[(4, 2), (5, 2), (6, 2)]], pw(f1, 4).tc_scale(&r(2, 1)).tc_add(&m(f1, &pw(f2, 3))).tc_scale(&r(1, 216)));
    add(&[&[(4, 3), (5, 3)], &[(4, 3), (6, 3)], &[(5, 3), (6, 3)]], m(&pw(f1, 3), f2).tc_scale(&r(1, 324)));
    add(&[&[(4, 1), (5, 1), (6, 4)], &[(4, 1), (5, 4), (6, 1)], &[(4, 4), (5, 1), (6, 1)]], m(&m(f1, f1), &m(f2, f2)).tc_scale(&r(1, 216)));
    add(
        &[&[(4, 6)], &[(5, 6)], &[(6, 6)]],
        m(&pw(f1, 3), f2).tc_scale(&r(2, 1)).tc_add(&pw(f2, 4).tc_scale(&r(-1, 1))).tc_scale(&r(1, 6480)),
    );
    p
}

/// Genus-zero template for the pillowcase in coordinates p0..p4 and p, with
/// the u1^2 u3^2 monomial in the f3 group.
pub fn pillowcase_template<C: TemplateCoeff>(prefix: &str, f1: &C, f2: &C, f3: &C) -> Polynomial<C> {
    let n = 6;
    let mut p = Polynomial::with_coordinates(coords(prefix, 5));
    let r = |a: i64, b: i64| rat(a, b);
    let mut add = |m: &[(usize, u32)], c: C| p.add_term(mono(n, m), c);
    add(&[(0, 2), (5, 1)], f1.tc_const(&r(1, 2)));
    add(&[(0, 1), (1, 1), (3, 1)], f1.tc_const(&r(1, 1)));
    add(&[(0, 1), (2, 2)], f1.tc_const(&r(1, 2)));
    add(&[(0, 1), (4, 2)], f1.tc_const(&r(1, 2)));
    // f1 (u1^2 + u3^2)(u4^2 - u2^2) / 4
    for a in [1, 3] {
        add(&[(a, 2), (4, 2)], f1.tc_scale(&r(1, 4)));
        add(&[(a, 2), (2, 2)], f1.tc_scale(&r(-1, 4)));
    }
    // the f2 and f3 groups share monomials, so collect them first
    let quartic: [(usize, Rational, Rational); 4] =
        [(1, r(-1, 24), r(1, 24)), (2, r(1, 24), r(2, 24)), (3, r(-1, 24), r(1, 24)), (4, r(1, 24), r(2, 24))];
    for (i, c2, c3) in quartic {
        add(&[(i, 4)], f2.tc_scale(&c2).tc_add(&f3.tc_scale(&c3)));
    }
    add(&[(1, 2), (3, 2)], f2.tc_add(f3).tc_scale(&r(1, 4)));
    add(&[(2, 2), (4, 2)], f2.tc_scale(&r(1, 4)));
    add(&[(1, 1), (3, 1), (2, 2)], f3.tc_scale(&r(1, 2)));
    add(&[(1, 1), (3, 1), (4, 2)], f3.tc_scale(&r(1, 2)));
    p
}

pub fn fjrw_prepotential(case: Case, order: usize) -> Result<Prepotential, FjrwError> {
    let b = solve_wdvv(case, order)?;
    Ok(match case {
        Case::Cubic => cubic_template("u", b.f(1), b.f(2), b.f(3)),
        Case::Pillowcase => pillowcase_template("u", b.f(1), b.f(2), b.f(3)),
    })
}

/// Matrix m with u_i = sum_j m[i][j] v_j, coordinates (u0..u4, u) and (v0..v4, v).
pub fn pillowcase_basis_change() -> Vec<Vec<CycScalar>> {
    let z = CycScalar::zero;
    let h = CycScalar::sqrt2().scaled(&rat(1, 2));
    let e3 = CycScalar::exp_i_pi(3, 4).times(&h);
    let e5 = CycScalar::exp_i_pi(5, 4).times(&h);
    let mut m = vec![vec![z(); 6]; 6];
    m[0][0] = CycScalar::one();
    m[5][5] = CycScalar::one();
    m[1][1] = e3.clone();
    m[1][3] = e5.clone();
    m[3][1] = e5;
    m[3][3] = e3;
    m[2][2] = h.clone();
    m[2][4] = h.clone();
    m[4][2] = h.clone();
    m[4][4] = h.negated();
    m
}

/// m^T eta m for the pillowcase pairing.
pub fn transformed_pairing(eta: &[Vec<CycScalar>]) -> Vec<Vec<CycScalar>> {
    let m = pillowcase_basis_change();
    let n = m.len();
    let mut out = vec![vec![CycScalar::zero(); n]; n];
    for (a, row) in out.iter_mut().enumerate() {
        for (b, x) in row.iter_mut().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    *x = x.plus(&m[i][a].times(&eta[i][j]).times(&m[j][b]));
                }
            }
        }
    }
    out
}

/// The pillowcase prepotential in the v-coordinates, exact over Q(zeta_24).
pub fn pillowcase_v_form(order: usize) -> Result<Polynomial<PowerSeries<CycScalar>>, FjrwError> {
    let p = fjrw_prepotential(Case::Pillowcase, order)?;
    let cyc = p.map_coeffs(|c| c.to_cyclotomic());
    Ok(cyc.linear_substitute(&["v0", "v1", "v2", "v3", "v4", "v"], &pillowcase_basis_change()))
}

/// The 6 permutations of the pairs (1,6), (2,5), (3,4) as coordinate maps
/// on (u0..u6, u).
pub fn s3_action() -> Vec<Vec<usize>> {
    let perms = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    perms
        .iter()
        .map(|s| {
            let mut p: Vec<usize> = (0..8).collect();
            for i in 1..=3 {
                p[i] = s[i - 1];
                p[7 - i] = 7 - s[i - 1];
            }
            p
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_named_coefficients() {
        let b = solve_wdvv(Case::Cubic, 10).unwrap();
        let p = fjrw_prepotential(Case::Cubic, 10).unwrap();
        assert_eq!(p.coeff(&exps(8, &[(1, 1), (2, 1), (3, 1)])).unwrap(), b.f(1));
        let (f1, f2) = (b.f(1), b.f(2));
        let last = (&(f1.pow(3) * f2.clone()).scale_rat(&rat(2, 1)) - &f2.pow(4)).scale_rat(&rat(1, 9 * 720));
        assert_eq!(p.coeff(&exps(8, &[(4, 6)])).unwrap(), &last);
        assert_eq!(p.coeff(&exps(8, &[(0, 1), (2, 1), (5, 1)])).unwrap().coeff(0), &rat(1, 1));
    }

    #[test]
    fn transformed_pairing_is_diagonal() {
        let eta = crate::state::state_space(Case::Pillowcase).pairing;
        let t = transformed_pairing(&eta);
        for (a, row) in t.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                let expected = if (a, b) == (0, 5) || (a, b) == (5, 0) || (a == b && (1..=4).contains(&a)) { CycScalar::one() } else { CycScalar::zero() };
                assert_eq!(x, &expected, "entry {a},{b}");
            }
        }
    }

    #[test]
    fn v_form_coefficients() {
        let b = solve_wdvv(Case::Pillowcase, 8).unwrap();
        let v = pillowcase_v_form(8).unwrap();
        let c = |pairs: &[(usize, u32)]| v.coeff(&exps(6, pairs)).cloned();
        assert_eq!(c(&[(1, 1), (2, 1), (3, 1), (4, 1)]), Some((-b.f(1)).to_cyclotomic()));
        let quartic = (&b.f(2).scale_rat(&rat(2, 1)) + b.f(3)).scale_rat(&rat(1, 24)).to_cyclotomic();
        for i in 1..=4 {
            assert_eq!(c(&[(i, 4)]), Some(quartic.clone()));
        }
        assert_eq!(c(&[(1, 2), (3, 2)]), Some(b.f(3).scale_rat(&rat(1, 4)).to_cyclotomic()));
        assert_eq!(c(&[(0, 1), (2, 2)]).unwrap().coeff(0), &CycScalar::rational(rat(1, 2)));
        // nothing else survives: 1 + 4 + 4 + 6 + 1 monomials
        assert_eq!(v.pruned().len(), 16);
    }
}

use std::collections::BTreeSet;

use fjrw_model::blocks::ode_system;
use fjrw_model::prepotential::{fjrw_prepotential, pillowcase_v_form};
use fjrw_model::{fjrw_genus_one, solve_wdvv, Case};
use gw_model::{coefficient_weight, gw_building_blocks_with, gw_genus_one_with, gw_prepotential_with};
use hypergeom_cayley::Transport;
use q_forms::{Normalization, Residual};
use series_core::json::JsonScalar;
use series_core::{rat, CycScalar, FracSeries, Polynomial, PowerSeries, Rational, Scalar};

use crate::report::{IdentityReport, MatchReport};
use crate::CorrespondenceError;

/// Extra q-coefficients beyond the v-order, for the exact decomposition.
const Q_MARGIN: usize = 12;

fn level(case: Case) -> u32 {
    match case {
        Case::Cubic => 3,
        Case::Pillowcase => 2,
    }
}

/// Transports GW q-series of one model to the FJRW variable.
pub struct Matcher {
    pub case: Case,
    pub order: usize,
    pub norm: Normalization,
    transport: Transport,
}

impl Matcher {
    pub fn new(case: Case, order: usize, norm: Normalization) -> Result<Self, CorrespondenceError> {
        let transport = Transport::new(level(case), order, order + Q_MARGIN)?;
        Ok(Matcher { case, order, norm, transport })
    }

    fn q_order(&self) -> usize {
        self.transport.q_order()
    }

    /// Holomorphic images of the GW blocks, scaled so they sit next to the
    /// FJRW functions they should equal.
    pub fn transported_blocks(&self) -> Result<Vec<(String, PowerSeries<Rational>)>, CorrespondenceError> {
        let m = gw_building_blocks_with(self.case, self.q_order(), self.norm)?;
        let img = |i: usize, r: Rational| -> Result<PowerSeries<Rational>, CorrespondenceError> {
            let b = &m.blocks[i];
            Ok(self.transport.apply(&b.series.scale_rat(&r), &b.weight)?.renamed("u"))
        };
        Ok(match self.case {
            Case::Cubic => vec![
                ("C(3 M1)".into(), img(0, rat(3, 1))?),
                ("C(3 M2)".into(), img(1, rat(3, 1))?),
                ("C(3 M3)".into(), img(2, rat(3, 1))?),
            ],
            Case::Pillowcase => vec![
                ("C(2 X)".into(), img(0, rat(2, 1))?),
                ("C(2 Y)".into(), img(1, rat(2, 1))?),
                ("C(2 Z)".into(), img(2, rat(2, 1))?),
            ],
        })
    }
}

pub fn match_building_blocks(case: Case, order: usize, norm: Normalization) -> Result<MatchReport, CorrespondenceError> {
    let m = Matcher::new(case, order, norm)?;
    let img = m.transported_blocks()?;
    let b = solve_wdvv(case, order)?;
    let (f1, f2, f3) = (b.f(1), b.f(2), b.f(3));
    let rhs: Vec<(&str, PowerSeries<Rational>)> = match case {
        Case::Cubic => vec![("f1", f1.clone()), ("f2", f2.clone()), ("f3", f3.clone())],
        Case::Pillowcase => vec![("-f1", f1.scale_rat(&rat(-1, 1))), ("2 f2 + f3", &f2.scale_rat(&rat(2, 1)) + f3), ("f3", f3.clone())],
    };
    let identities = img
        .iter()
        .zip(&rhs)
        .map(|((l, lhs), (r, rhs))| IdentityReport::compare(&format!("{l} = {r}"), lhs, rhs))
        .collect();
    Ok(MatchReport { name: format!("{} building blocks", case.name()), identities })
}

/// The transported GW triple, arranged as FJRW unknowns, solves the FJRW system.
pub fn match_ode_systems(case: Case, order: usize, norm: Normalization) -> Result<MatchReport, CorrespondenceError> {
    let m = Matcher::new(case, order, norm)?;
    let img: Vec<PowerSeries<Rational>> = m.transported_blocks()?.into_iter().map(|(_, s)| s).collect();
    let ys = match case {
        Case::Cubic => img,
        Case::Pillowcase => {
            let f3 = img[2].clone();
            let f2 = (&img[1] - &f3).scale_rat(&rat(1, 2));
            vec![img[0].scale_rat(&rat(-1, 1)), f2, f3]
        }
    };
    let sys = ode_system(case);
    let rhs = sys.rhs(&ys);
    let mut identities = Vec::new();
    for ((name, y), r) in sys.unknowns.iter().zip(&ys).zip(&rhs) {
        identities.push(IdentityReport::compare(&format!("{name}' = F_{name}"), &y.derive()?, r));
    }
    for (i, (y, c)) in ys.iter().zip(&sys.initial).enumerate() {
        let init = PowerSeries::constant(y.var(), c.clone(), 0);
        identities.push(IdentityReport::compare(&format!("{}(0)", sys.unknowns[i]), &y.with_trunc(0), &init));
    }
    Ok(MatchReport { name: format!("{} transported system", case.name()), identities })
}

/// The GW triples, arranged as FJRW unknowns, solve the FJRW systems with
/// d/du replaced by q d/dq. This is the Ramanujan system in other variables,
/// so a mis-normalized E fails here at q^0.
pub fn q_side_systems(case: Case, order: usize, norm: Normalization) -> Result<Vec<Residual>, CorrespondenceError> {
    let m = gw_building_blocks_with(case, order, norm)?;
    let s = |i: usize| &m.blocks[i].series;
    let ys: Vec<FracSeries<Rational>> = match case {
        Case::Cubic => (0..3).map(|i| s(i).scale_rat(&rat(3, 1))).collect(),
        Case::Pillowcase => vec![s(0).scale_rat(&rat(-2, 1)), s(1).sub(s(2)), s(2).scale_rat(&rat(2, 1))],
    };
    let sys = ode_system(case);
    let mut out = Vec::new();
    for (i, name) in sys.unknowns.iter().enumerate() {
        let mut rhs: Option<FracSeries<Rational>> = None;
        for (c, e) in &sys.field[i] {
            let mut t: Option<FracSeries<Rational>> = None;
            for (y, &k) in ys.iter().zip(e) {
                if k > 0 {
                    let p = y.pow(k);
                    t = Some(match t {
                        None => p,
                        Some(t) => &t * &p,
                    });
                }
            }
            let t = t.expect("no constant terms in the field").scale_rat(c);
            rhs = Some(match rhs {
                None => t,
                Some(r) => r.add(&t),
            });
        }
        let r = ys[i].theta().sub(&rhs.expect("empty field"));
        out.push(Residual::of(&format!("q d/dq {name} - F_{name}"), &r));
    }
    Ok(out)
}

fn compare_polys<S: JsonScalar>(name: &str, lhs: &Polynomial<PowerSeries<S>>, rhs: &Polynomial<PowerSeries<S>>, coords: &[String], trunc: usize) -> MatchReport {
    let keys: BTreeSet<Vec<u32>> = lhs.terms().chain(rhs.terms()).map(|(e, _)| e.clone()).collect();
    let zero = PowerSeries::zero("u", trunc);
    let identities = keys
        .into_iter()
        .map(|e| {
            let label: Vec<String> = e
                .iter()
                .zip(coords)
                .filter(|(k, _)| **k > 0)
                .map(|(k, c)| if *k == 1 { c.clone() } else { format!("{c}^{k}") })
                .collect();
            let l = lhs.coeff(&e).unwrap_or(&zero);
            let r = rhs.coeff(&e).unwrap_or(&zero);
            IdentityReport::compare(&format!("[{}]", label.join(" ")), l, r)
        })
        .collect();
    MatchReport { name: name.into(), identities }
}

/// GW prepotential, coefficientwise transported and rewritten in the FJRW
/// coordinates, against the FJRW prepotential.
pub fn match_prepotential(case: Case, order: usize, norm: Normalization) -> Result<MatchReport, CorrespondenceError> {
    let m = Matcher::new(case, order, norm)?;
    let gw = gw_prepotential_with(case, m.q_order(), norm)?;
    let mut img: Polynomial<PowerSeries<Rational>> = Polynomial::with_coordinates(gw.coordinates().to_vec());
    for (e, c) in gw.terms() {
        let w = coefficient_weight(case, e);
        img.add_term(e.clone(), m.transport.apply(c, &w)?.renamed("u"));
    }
    let name = format!("{} prepotential", case.name());
    Ok(match case {
        Case::Cubic => {
            let coords: Vec<String> = img.coordinates().iter().map(|c| c.replacen('t', "u", 1)).collect();
            let mut lhs = Polynomial::with_coordinates(coords.clone());
            for (e, c) in img.terms() {
                lhs.add_term(e.clone(), c.clone());
            }
            let rhs = fjrw_prepotential(case, order)?;
            compare_polys(&name, &lhs, &rhs, &coords, order)
        }
        Case::Pillowcase => {
            // t_i = v_i, t = v/2, and an overall factor 2
            let n = img.coordinates().len();
            let mut diag = vec![vec![CycScalar::zero(); n]; n];
            for (i, row) in diag.iter_mut().enumerate() {
                row[i] = CycScalar::one();
            }
            diag[n - 1][n - 1] = CycScalar::rational(rat(1, 2));
            let coords = ["v0", "v1", "v2", "v3", "v4", "v"];
            let lhs = img
                .map_coeffs(|c| c.to_cyclotomic().scale_rat(&rat(2, 1)))
                .linear_substitute(&coords, &diag);
            let rhs = pillowcase_v_form(order)?;
            let names: Vec<String> = coords.iter().map(|s| s.to_string()).collect();
            compare_polys(&name, &lhs, &rhs, &names, order)
        }
    })
}

/// C_hol(<<P>>_{1,1}) = 3 <<phi>>_{1,1} for the cubic.
pub fn match_genus_one(case: Case, order: usize, norm: Normalization) -> Result<MatchReport, CorrespondenceError> {
    let m = Matcher::new(case, order, norm)?;
    let gw = gw_genus_one_with(case, m.q_order(), norm)?;
    let lhs = m.transport.apply(&gw, &rat(2, 1))?.renamed("u");
    let rhs = fjrw_genus_one(case, order)?.scale_rat(&rat(3, 1));
    Ok(MatchReport {
        name: format!("{} genus one", case.name()),
        identities: vec![IdentityReport::compare("C(<<P>>_{1,1}) = 3 <<phi>>_{1,1}", &lhs, &rhs)],
    })
}

//! Orbifold GW side: building blocks as q-series, genus-zero prepotentials and
//! the genus-one one-point function.

use fjrw_model::{cubic_template, Case};
use q_forms::{generators_with, FormDescriptor, Normalization, QFormError};
use serde_json::{json, Value};
use series_core::json::{frac_to_json, polynomial_to_json};
use series_core::poly::exps;
use series_core::{rat, FracSeries, Polynomial, PowerSeries, Rational, SeriesError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GwError {
    #[error("no closed form for case {0}")]
    Unsupported(&'static str),
    #[error("re-indexing factor must be positive")]
    BadFactor,
    #[error(transparent)]
    QForm(#[from] QFormError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// GW prepotential: coefficients are q-series, the last coordinate is the
/// degree-one coordinate t.
pub type GwPrepotential = Polynomial<FracSeries<Rational>>;

#[derive(Debug, Clone, PartialEq)]
pub struct GwModel {
    pub case: Case,
    pub order: usize,
    pub blocks: Vec<FormDescriptor>,
    pub coordinates: Vec<String>,
}

impl GwModel {
    pub fn block(&self, name: &str) -> Option<&FormDescriptor> {
        self.blocks.iter().find(|b| b.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.name(),
            "order": self.order,
            "coordinates": self.coordinates,
            "blocks": self.blocks.iter().map(FormDescriptor::to_json).collect::<Vec<_>>(),
        })
    }
}

fn level(case: Case) -> u32 {
    match case {
        Case::Cubic => 3,
        Case::Pillowcase => 2,
    }
}

fn coordinates(case: Case) -> Vec<String> {
    let n = if case == Case::Cubic { 7 } else { 5 };
    let mut c: Vec<String> = (0..n).map(|i| format!("t{i}")).collect();
    c.push("t".into());
    c
}

pub fn gw_building_blocks(case: Case, order: usize) -> Result<GwModel, GwError> {
    gw_building_blocks_with(case, order, Normalization::default())
}

/// Cubic: M1 = C3/3, M2 = A3/3, M3 = -E3/9. Pillowcase: X = C2^2/8,
/// Y = -(3E + A2^2)/16, Z = (A2^2 - E)/16.
pub fn gw_building_blocks_with(case: Case, order: usize, norm: Normalization) -> Result<GwModel, GwError> {
    let g = generators_with(level(case), order, norm)?;
    let (a, c, e) = (&g.a.series, &g.c.series, &g.e.series);
    let d = |name: &str, w: i64, s: FracSeries<Rational>| FormDescriptor::cusp(name, level(case), rat(w, 1), s);
    let blocks = match case {
        Case::Cubic => vec![d("M1", 1, c.scale_rat(&rat(1, 3))), d("M2", 1, a.scale_rat(&rat(1, 3))), d("M3", 2, e.scale_rat(&rat(-1, 9)))],
        Case::Pillowcase => vec![
            d("X", 2, c.scale_rat(&rat(1, 8))),
            d("Y", 2, e.scale_rat(&rat(3, 1)).add(a).scale_rat(&rat(-1, 16))),
            d("Z", 2, a.sub(e).scale_rat(&rat(1, 16))),
        ],
    };
    Ok(GwModel { case, order, blocks, coordinates: coordinates(case) })
}

pub fn gw_prepotential(case: Case, order: usize) -> Result<GwPrepotential, GwError> {
    gw_prepotential_with(case, order, Normalization::default())
}

/// Cubic: the FJRW template with blocks (3M1, 3M2, 3M3). Pillowcase:
/// t0^2 t/2 + t0 sum t_i^2/4 + X t1t2t3t4 + Y/4! sum t_i^4 + Z/(2!2!) sum_{i<j} t_i^2 t_j^2.
pub fn gw_prepotential_with(case: Case, order: usize, norm: Normalization) -> Result<GwPrepotential, GwError> {
    let m = gw_building_blocks_with(case, order, norm)?;
    let s = |i: usize| &m.blocks[i].series;
    Ok(match case {
        Case::Cubic => {
            let three = rat(3, 1);
            cubic_template("t", &s(0).scale_rat(&three), &s(1).scale_rat(&three), &s(2).scale_rat(&three))
        }
        Case::Pillowcase => {
            let mut p = Polynomial::with_coordinates(coordinates(case));
            let konst = |r: Rational| FracSeries::from_series(PowerSeries::constant("q", r, order));
            p.add_term(exps(6, &[(0, 2), (5, 1)]), konst(rat(1, 2)));
            for i in 1..=4 {
                p.add_term(exps(6, &[(0, 1), (i, 2)]), konst(rat(1, 4)));
                p.add_term(exps(6, &[(i, 4)]), s(1).scale_rat(&rat(1, 24)));
                for j in i + 1..=4 {
                    p.add_term(exps(6, &[(i, 2), (j, 2)]), s(2).scale_rat(&rat(1, 4)));
                }
            }
            p.add_term(exps(6, &[(1, 1), (2, 1), (3, 1), (4, 1)]), s(0).clone());
            p
        }
    })
}

/// Modular weight of the coefficient of a prepotential monomial: 0 for the
/// classical terms; for the cubic (a + 2b)/3 with a, b the total degree in
/// t1..t3 and t4..t6; 2 for every quartic pillowcase term.
pub fn coefficient_weight(case: Case, exponents: &[u32]) -> Rational {
    if exponents[0] > 0 {
        return rat(0, 1);
    }
    match case {
        Case::Cubic => {
            let a: u32 = exponents[1..4].iter().sum();
            let b: u32 = exponents[4..7].iter().sum();
            rat((a + 2 * b) as i64, 3)
        }
        Case::Pillowcase => rat(2, 1),
    }
}

pub fn gw_genus_one(case: Case, order: usize) -> Result<FracSeries<Rational>, GwError> {
    gw_genus_one_with(case, order, Normalization::default())
}

/// <<P>>_{1,1} = (-2 E3 + A3^2) / 12.
pub fn gw_genus_one_with(case: Case, order: usize, norm: Normalization) -> Result<FracSeries<Rational>, GwError> {
    if case != Case::Cubic {
        return Err(GwError::Unsupported(case.name()));
    }
    let g = generators_with(3, order, norm)?;
    let a = &g.a.series;
    Ok(g.e.series.scale_rat(&rat(-2, 1)).add(&(a * a)).scale_rat(&rat(1, 12)))
}

/// Re-indexes a q-series in the enumerative variable Q with q = Q^r
/// (t = 2 pi i tau / r).
pub fn reindex(f: &FracSeries<Rational>, r: u32) -> Result<FracSeries<Rational>, GwError> {
    if r == 0 {
        return Err(GwError::BadFactor);
    }
    let body = f.body().substitute_power(r as usize).renamed("Q");
    Ok(FracSeries::new(f.offset() * Rational::from_integer(r.into()), body))
}

pub fn prepotential_to_json(p: &GwPrepotential) -> Value {
    polynomial_to_json(p, frac_to_json)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_blocks() {
        let m = gw_building_blocks(Case::Cubic, 6).unwrap();
        let m1 = &m.block("M1").unwrap().series;
        assert_eq!(m1.offset(), &rat(1, 3));
        assert_eq!(m1.body().coeffs()[..3], [rat(1, 1), rat(1, 1), rat(2, 1)]);
        let m3 = &m.block("M3").unwrap().series;
        assert_eq!(m3.coeff_at(&rat(0, 1)), Some(rat(-1, 9)));
        assert_eq!(m3.coeff_at(&rat(1, 1)), Some(rat(6, 9)));
    }

    #[test]
    fn pillowcase_blocks() {
        let m = gw_building_blocks(Case::Pillowcase, 6).unwrap();
        let x = &m.block("X").unwrap().series;
        assert_eq!(x.offset(), &rat(1, 2));
        assert_eq!(x.body().coeffs()[..2], [rat(1, 1), rat(4, 1)]);
        let z = &m.block("Z").unwrap().series;
        assert_eq!(z.coeff_at(&rat(0, 1)), Some(rat(0, 1)));
        assert_eq!(z.coeff_at(&rat(1, 1)), Some(rat(2, 1)));
    }

    #[test]
    fn prepotential_named_coefficients() {
        let g = q_forms::generators(3, 8).unwrap();
        let p = gw_prepotential(Case::Cubic, 8).unwrap();
        assert_eq!(p.coeff(&exps(8, &[(1, 1), (2, 1), (3, 1)])), Some(&g.c.series));
        let q = gw_prepotential(Case::Pillowcase, 8).unwrap();
        let m = gw_building_blocks(Case::Pillowcase, 8).unwrap();
        assert_eq!(q.coeff(&exps(6, &[(1, 1), (2, 1), (3, 1), (4, 1)])), Some(&m.block("X").unwrap().series));
        assert_eq!(q.coeff(&exps(6, &[(1, 4)])), Some(&m.block("Y").unwrap().series.scale_rat(&rat(1, 24))));
    }

    #[test]
    fn genus_one_head() {
        let g = gw_genus_one(Case::Cubic, 6).unwrap();
        assert_eq!(g.coeff_at(&rat(0, 1)), Some(rat(-1, 12)));
        assert_eq!(g.coeff_at(&rat(1, 1)), Some(rat(2, 1)));
        assert!(gw_genus_one(Case::Pillowcase, 6).is_err());
    }

    #[test]
    fn reindexing() {
        let m = gw_building_blocks(Case::Cubic, 4).unwrap();
        let r = reindex(&m.block("M1").unwrap().series, 3).unwrap();
        assert_eq!(r.offset(), &rat(1, 1));
        assert_eq!(r.coeff_at(&rat(4, 1)), Some(rat(1, 1)));
        assert_eq!(r.coeff_at(&rat(2, 1)), Some(rat(0, 1)));
    }
}

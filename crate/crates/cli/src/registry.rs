use fjrw_model::{derived_blocks, fjrw_genus_one, Case};
use gw_model::{gw_building_blocks_with, gw_genus_one_with};
use hypergeom_cayley::cayley_expansions;
use q_forms::{generators_with, hauptmodul_with, Normalization};
use series_core::{FracSeries, Rational};

use crate::{internal, CliError};

/// Every name `expand` accepts, apart from the per-model block names which
/// are listed by `fjrw_names`.
pub const Q_FORMS: [&str; 10] = ["A3", "B3", "C3", "E3", "A2sq", "B2sq", "C2sq", "E2gen", "alpha3", "alpha2"];
pub const CAYLEY_FORMS: [&str; 6] = ["A3", "C3", "E3", "A2sq", "C2sq", "E2gen"];
pub const GW_CUBIC: [&str; 4] = ["M1", "M2", "M3", "genus1"];
pub const GW_PILLOW: [&str; 3] = ["X", "Y", "Z"];
pub const FJRW_CUBIC: [&str; 7] = ["f1", "f2", "f3", "f4", "f5", "f6", "genus1"];
pub const FJRW_PILLOW: [&str; 10] = ["f1", "f2", "f3", "f4", "g1", "g2", "g3", "g4", "g5", "g6"];

pub fn all_names() -> Vec<String> {
    let mut v: Vec<String> = Q_FORMS.iter().map(|s| s.to_string()).collect();
    v.extend(CAYLEY_FORMS.iter().map(|s| format!("cayley:{s}")));
    v.extend(FJRW_CUBIC.iter().map(|s| format!("fjrw:cubic:{s}")));
    v.extend(FJRW_PILLOW.iter().map(|s| format!("fjrw:pillow:{s}")));
    v.extend(GW_CUBIC.iter().map(|s| format!("gw:cubic:{s}")));
    v.extend(GW_PILLOW.iter().map(|s| format!("gw:pillow:{s}")));
    v
}

fn case(s: &str) -> Option<Case> {
    match s {
        "cubic" => Some(Case::Cubic),
        "pillow" | "pillowcase" => Some(Case::Pillowcase),
        _ => None,
    }
}

/// Rejects unknown names before any work is done.
pub fn validate(name: &str) -> Result<(), CliError> {
    if all_names().iter().any(|n| n == name) {
        Ok(())
    } else {
        Err(CliError::UnknownForm(name.into()))
    }
}

pub fn compute(name: &str, order: usize, norm: Normalization) -> Result<FracSeries<Rational>, CliError> {
    validate(name)?;
    let unknown = || CliError::UnknownForm(name.into());
    let parts: Vec<&str> = name.split(':').collect();
    match parts.as_slice() {
        ["alpha3"] => Ok(FracSeries::from_series(hauptmodul_with(3, order, norm).map_err(internal)?)),
        ["alpha2"] => Ok(FracSeries::from_series(hauptmodul_with(2, order, norm).map_err(internal)?)),
        [f] => {
            let level = if f.ends_with('3') { 3 } else { 2 };
            let g = generators_with(level, order, norm).map_err(internal)?;
            let d = match f.chars().next() {
                Some('A') => &g.a,
                Some('B') => &g.b,
                Some('C') => &g.c,
                _ => &g.e,
            };
            Ok(d.series.clone())
        }
        ["cayley", f] => {
            let level = if f.ends_with('3') { 3 } else { 2 };
            let c = cayley_expansions(level, order).map_err(internal)?;
            let d = match f.chars().next() {
                Some('A') => &c.a,
                Some('C') => &c.c,
                _ => &c.e_hol,
            };
            Ok(d.series.clone())
        }
        ["fjrw", m, "genus1"] => {
            let s = fjrw_genus_one(case(m).ok_or_else(unknown)?, order).map_err(internal)?;
            Ok(FracSeries::from_series(s))
        }
        ["fjrw", m, f] => {
            let b = derived_blocks(case(m).ok_or_else(unknown)?, order).map_err(internal)?;
            b.series.get(*f).cloned().map(FracSeries::from_series).ok_or_else(unknown)
        }
        ["gw", m, "genus1"] => gw_genus_one_with(case(m).ok_or_else(unknown)?, order, norm).map_err(internal),
        ["gw", m, f] => {
            let g = gw_building_blocks_with(case(m).ok_or_else(unknown)?, order, norm).map_err(internal)?;
            g.block(f).map(|d| d.series.clone()).ok_or_else(unknown)
        }
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::rat;

    #[test]
    fn every_registered_name_computes() {
        for n in all_names() {
            let s = compute(&n, 4, Normalization::default()).unwrap_or_else(|e| panic!("{n}: {e}"));
            assert!(s.body().trunc() >= 4 || n.starts_with("cayley"), "{n}");
        }
    }

    #[test]
    fn unknown_names_are_usage_errors() {
        for n in ["D3", "cayley:B3", "fjrw:quartic:f1", "gw:cubic:X", ""] {
            assert!(matches!(compute(n, 3, Normalization::default()), Err(CliError::UnknownForm(_))), "{n}");
        }
    }

    #[test]
    fn cayley_c3_coefficient() {
        let s = compute("cayley:C3", 6, Normalization::default()).unwrap();
        assert_eq!(s.body().coeff(3), &rat(1, 162));
    }
}

use serde_json::{json, Value};

use correspondence::{match_building_blocks, match_genus_one, match_ode_systems, match_prepotential, q_side_systems, MatchReport};
use fjrw_model::wdvv::wdvv_at_point;
use fjrw_model::{derived_blocks, fjrw_prepotential, state_space, Case, FjrwBlocks};
use hypergeom_cayley::verify_elliptic_ramanujan;
use monodromy_numerics::{
    cayley_y_limits, conjugation_check, monodromy_suite, numeric_continuation_check, rational_constant_oracle, ContinuationForm, NumericReport,
    Precision,
};
use q_forms::{verify_ramanujan_with, verify_schwarz_relation, Normalization, Residual};
use series_core::{rat, Rational, Scalar};

use crate::{internal, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ramanujan,
    Wdvv,
    Correspondence,
    Monodromy,
    Prepotential,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "ramanujan" => Suite::Ramanujan,
            "wdvv" => Suite::Wdvv,
            "correspondence" => Suite::Correspondence,
            "monodromy" => Suite::Monodromy,
            "prepotential" => Suite::Prepotential,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub order: usize,
    pub precision: Precision,
    pub norm: Normalization,
    pub cases: Vec<Case>,
    pub levels: Vec<u32>,
}

/// One named group of checks with a uniform summary.
#[derive(Debug, Clone)]
pub struct Section {
    pub name: String,
    pub pass: bool,
    /// human-readable description of the first failing check
    pub first_failure: Option<String>,
    pub detail: Value,
}

impl Section {
    fn from_residuals(name: &str, rs: &[Residual]) -> Self {
        let first = rs.iter().filter_map(|r| r.first_nonzero.as_ref().map(|(e, c)| (e.clone(), c.clone(), r.identity.clone()))).min_by(|a, b| a.0.cmp(&b.0));
        Section {
            name: name.into(),
            pass: first.is_none(),
            first_failure: first.map(|(e, c, id)| format!("{id}: first nonzero coefficient {c} at order {e}")),
            detail: json!(rs.iter().map(Residual::to_json).collect::<Vec<_>>()),
        }
    }

    fn from_match(r: &MatchReport) -> Self {
        let first = r.failures().filter_map(|i| i.first_mismatch.as_ref().map(|m| (m.order, i.identity.clone(), m.lhs.clone(), m.rhs.clone()))).min_by_key(|x| x.0);
        Section {
            name: r.name.clone(),
            pass: r.pass(),
            first_failure: first.map(|(o, id, l, rr)| format!("{id}: mismatch at order {o} ({l} vs {rr})")),
            detail: r.to_json(),
        }
    }

    fn from_numeric(r: &NumericReport) -> Self {
        let first = r.checks.iter().find(|c| !c.pass);
        Section {
            name: r.name.clone(),
            pass: r.pass(),
            first_failure: first.map(|c| format!("{}: error {} exceeds {}", c.check, c.max_error, c.tolerance)),
            detail: r.to_json(),
        }
    }

    fn from_blocks(b: &FjrwBlocks) -> Self {
        let first = b.checks.iter().find(|c| !c.pass());
        Section {
            name: format!("{} auxiliary WDVV identities", b.case.name()),
            pass: b.pass(),
            first_failure: first.map(|c| format!("{}: first nonzero at order {:?}", c.identity, c.first_nonzero.as_ref().map(|x| x.0))),
            detail: json!(b.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub sections: Vec<Section>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.sections.iter().all(|s| s.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "pass": self.pass(),
            "first_failure": self.sections.iter().find_map(|s| s.first_failure.clone()),
            "sections": self.sections.iter().map(|s| json!({
                "name": s.name,
                "pass": s.pass,
                "first_failure": s.first_failure,
                "detail": s.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let tag = if s.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}\n", s.name));
            if let Some(f) = &s.first_failure {
                out.push_str(&format!("      {f}\n"));
            }
        }
        out.push_str(&format!("{}: {}", self.suite, if self.pass() { "pass" } else { "FAIL" }));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("section,pass,first_failure\n");
        for s in &self.sections {
            let f = s.first_failure.clone().unwrap_or_default().replace('"', "\"\"");
            out.push_str(&format!("\"{}\",{},\"{}\"\n", s.name, s.pass, f));
        }
        out.trim_end().to_string()
    }
}

fn ramanujan(cfg: &VerifyConfig) -> Result<Vec<Section>, CliError> {
    let mut out = Vec::new();
    for &level in &cfg.levels {
        let r = if level == 3 { 3 } else { 4 };
        let rep = verify_ramanujan_with(level, r, cfg.order, cfg.norm).map_err(internal)?;
        out.push(Section::from_residuals(&format!("Ramanujan system, level {level}"), &rep.residuals));
        let s = verify_schwarz_relation(level, cfg.order).map_err(internal)?;
        out.push(Section::from_residuals(&format!("Hauptmodul relation, level {level}"), &[s]));
        let e = verify_elliptic_ramanujan(level, cfg.order).map_err(internal)?;
        out.push(Section::from_residuals(&format!("elliptic expansions, level {level}"), &e));
    }
    Ok(out)
}

fn rational_eta(case: Case) -> Vec<Vec<Rational>> {
    state_space(case).pairing.iter().map(|r| r.iter().map(|c| c.to_rational().expect("rational pairing")).collect()).collect()
}

/// Full WDVV at a few fixed rational points; the order is capped since the
/// contraction is quadratic in the number of third derivatives.
fn wdvv(cfg: &VerifyConfig) -> Result<Vec<Section>, CliError> {
    let mut out = Vec::new();
    for &case in &cfg.cases {
        out.push(Section::from_blocks(&derived_blocks(case, cfg.order).map_err(internal)?));
        let order = cfg.order.min(12);
        let p = fjrw_prepotential(case, order).map_err(internal)?;
        let n = p.coordinates().len() - 1;
        let mut pass = true;
        let mut detail = Vec::new();
        for seed in [[1i64, 2, 3, -1, 2, 1, -3], [-2, 1, 0, 4, -1, 3, 2]] {
            let pt: Vec<Rational> = seed.iter().take(n).map(|&x| rat(x, 1)).collect();
            let r = wdvv_at_point(&p, &rational_eta(case), &pt).map_err(internal)?;
            pass &= r.pass();
            detail.push(json!({"point": seed[..n].to_vec(), "checked": r.checked, "failures": r.failures.len(), "trunc": r.trunc}));
        }
        out.push(Section {
            name: format!("{} prepotential WDVV at rational points (order {order})", case.name()),
            pass,
            first_failure: (!pass).then(|| "associativity fails".to_string()),
            detail: json!(detail),
        });
    }
    Ok(out)
}

fn correspondence(cfg: &VerifyConfig) -> Result<Vec<Section>, CliError> {
    let mut out = Vec::new();
    for &case in &cfg.cases {
        let q = q_side_systems(case, cfg.order, cfg.norm).map_err(internal)?;
        out.push(Section::from_residuals(&format!("{} GW blocks solve the WDVV system in q", case.name()), &q));
        out.push(Section::from_match(&match_building_blocks(case, cfg.order, cfg.norm).map_err(internal)?));
        out.push(Section::from_match(&match_ode_systems(case, cfg.order, cfg.norm).map_err(internal)?));
    }
    Ok(out)
}

fn prepotential(cfg: &VerifyConfig) -> Result<Vec<Section>, CliError> {
    let mut out = Vec::new();
    for &case in &cfg.cases {
        out.push(Section::from_match(&match_prepotential(case, cfg.order, cfg.norm).map_err(internal)?));
        if case == Case::Cubic {
            out.push(Section::from_match(&match_genus_one(case, cfg.order, cfg.norm).map_err(internal)?));
        }
    }
    Ok(out)
}

fn monodromy(cfg: &VerifyConfig) -> Result<Vec<Section>, CliError> {
    let p = cfg.precision;
    let mut out = Vec::new();
    for &level in &cfg.levels {
        out.push(Section::from_numeric(&monodromy_suite(level).map_err(internal)?));
        out.push(Section::from_numeric(&conjugation_check(level, p).map_err(internal)?));
        out.push(Section::from_numeric(&rational_constant_oracle(level, p).map_err(internal)?));
        out.push(Section::from_numeric(&cayley_y_limits(level, (&rat(1, 100), &rat(1, 200)), p).map_err(internal)?));
    }
    if cfg.levels.contains(&3) {
        let checks = [ContinuationForm::C3, ContinuationForm::A3]
            .into_iter()
            .map(|f| numeric_continuation_check(f, (&rat(0, 1), &rat(1, 100)), 40, p).map(|r| r.check))
            .collect::<Result<Vec<_>, _>>()
            .map_err(internal)?;
        out.push(Section::from_numeric(&NumericReport { name: "continuation at s = i/100, order 40".into(), checks }));
    }
    Ok(out)
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport, CliError> {
    let sections = match suite {
        Suite::Ramanujan => ramanujan(cfg)?,
        Suite::Wdvv => wdvv(cfg)?,
        Suite::Correspondence => correspondence(cfg)?,
        Suite::Monodromy => monodromy(cfg)?,
        Suite::Prepotential => prepotential(cfg)?,
        Suite::All => {
            let mut v = ramanujan(cfg)?;
            v.extend(wdvv(cfg)?);
            v.extend(correspondence(cfg)?);
            v.extend(prepotential(cfg)?);
            v.extend(monodromy(cfg)?);
            v
        }
    };
    let name = format!("{suite:?}").to_lowercase();
    Ok(SuiteReport { suite: name, sections })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(norm: Normalization) -> VerifyConfig {
        VerifyConfig { order: 10, precision: Precision::new(30).unwrap(), norm, cases: vec![Case::Cubic, Case::Pillowcase], levels: vec![3, 2] }
    }

    #[test]
    fn every_suite_passes_at_low_order() {
        for s in [Suite::Ramanujan, Suite::Wdvv, Suite::Correspondence, Suite::Prepotential, Suite::Monodromy] {
            let r = run(s, &cfg(Normalization::default())).unwrap();
            assert!(r.pass(), "{}", r.to_pretty());
        }
    }

    #[test]
    fn sabotaged_e3_fails_at_order_zero() {
        let r = run(Suite::Correspondence, &cfg(Normalization { e3_denominator: 3 })).unwrap();
        assert!(!r.pass());
        let f = r.to_json()["first_failure"].as_str().unwrap().to_string();
        assert!(f.contains("at order 0"), "{f}");
    }
}

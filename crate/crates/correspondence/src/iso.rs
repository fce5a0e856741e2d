use serde_json::{json, Value};
use series_core::json::{rational_to_json, JsonScalar};
use series_core::{rat, CycScalar, Rational, Scalar};

use fjrw_model::prepotential::transformed_pairing;
use fjrw_model::{state_space, Case};

use crate::CorrespondenceError;

/// One row of the table: scale * GW class maps to fjrw_scale * FJRW basis element.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoEntry {
    pub gw_label: String,
    pub gw_degree: Rational,
    pub fjrw_label: String,
    pub fjrw_scale: CycScalar,
    pub fjrw_degree: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateIso {
    pub case: Case,
    pub lambda: CycScalar,
    pub entries: Vec<IsoEntry>,
    /// pairing of the GW basis in the table's normalization
    pub gw_pairing: Vec<Vec<CycScalar>>,
    /// pairing of the FJRW basis the table maps to
    pub fjrw_pairing: Vec<Vec<CycScalar>>,
}

impl StateIso {
    /// eta^FJRW(G x, G y) for the images of the table's GW basis.
    pub fn pulled_back_pairing(&self) -> Vec<Vec<CycScalar>> {
        let n = self.entries.len();
        (0..n)
            .map(|a| (0..n).map(|b| self.entries[a].fjrw_scale.times(&self.entries[b].fjrw_scale).times(&self.fjrw_pairing[a][b])).collect())
            .collect()
    }

    pub fn check(&self) -> Result<(), CorrespondenceError> {
        for e in &self.entries {
            if e.gw_degree != e.fjrw_degree {
                return Err(CorrespondenceError::Degree(e.gw_label.clone()));
            }
        }
        let pulled = self.pulled_back_pairing();
        for (a, row) in pulled.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if x != &self.gw_pairing[a][b] {
                    return Err(CorrespondenceError::Pairing(self.entries[a].gw_label.clone(), self.entries[b].gw_label.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.name(),
            "lambda": self.lambda.to_json(),
            "map": self.entries.iter().map(|e| json!({
                "gw": e.gw_label,
                "fjrw": e.fjrw_label,
                "scale": e.fjrw_scale.to_json(),
                "degree": rational_to_json(&e.gw_degree),
            })).collect::<Vec<_>>(),
        })
    }
}

fn cyc(r: Rational) -> CycScalar {
    CycScalar::rational(r)
}

/// Orbifold pairing on (1, D_i^j, P): eta(1, P) = 1, eta(D_i^j, D_i^{a-j}) = 1/a.
fn orbifold_pairing(labels: &[(usize, u32, Rational)], a: u32) -> Vec<Vec<CycScalar>> {
    // entries (point index or 0 for 1/P, power j, scale)
    let n = labels.len();
    let mut m = vec![vec![CycScalar::zero(); n]; n];
    for (x, (pi, pj, ps)) in labels.iter().enumerate() {
        for (y, (qi, qj, qs)) in labels.iter().enumerate() {
            let v = if *pi == 0 && *qi == 0 {
                // 1 has j = 0, P has j = a
                if pj + qj == a {
                    rat(1, 1)
                } else {
                    rat(0, 1)
                }
            } else if pi == qi && pj + qj == a {
                rat(1, a as i64)
            } else {
                rat(0, 1)
            };
            m[x][y] = cyc(v * ps * qs);
        }
    }
    m
}

pub fn build_iso(case: Case) -> Result<StateIso, CorrespondenceError> {
    let iso = match case {
        Case::Cubic => {
            let lambda = CycScalar::sqrt3().scaled(&rat(1, 3));
            let inv = CycScalar::sqrt3();
            let s = state_space(case);
            // (orbifold point, power, scale): 1, D1, D2, D3, 3D3^2, 3D2^2, 3D1^2, P
            let basis: Vec<(usize, u32, Rational)> =
                vec![(0, 0, rat(1, 1)), (1, 1, rat(1, 1)), (2, 1, rat(1, 1)), (3, 1, rat(1, 1)), (3, 2, rat(3, 1)), (2, 2, rat(3, 1)), (1, 2, rat(3, 1)), (0, 3, rat(1, 1))];
            let labels = ["1", "D1", "D2", "D3", "3D3^2", "3D2^2", "3D1^2", "P"];
            let entries = basis
                .iter()
                .enumerate()
                .map(|(k, &(_, j, _))| IsoEntry {
                    gw_label: labels[k].into(),
                    gw_degree: rat(j as i64, 3),
                    fjrw_label: s.elements[k].label.clone(),
                    fjrw_scale: match k {
                        1..=3 => lambda.clone(),
                        4..=6 => inv.clone(),
                        _ => CycScalar::one(),
                    },
                    fjrw_degree: s.elements[k].degree.clone(),
                })
                .collect();
            StateIso { case, lambda, entries, gw_pairing: orbifold_pairing(&basis, 3), fjrw_pairing: s.pairing }
        }
        Case::Pillowcase => {
            let s = state_space(case);
            let half = rat(1, 2);
            // sqrt2 D_i has pairing 2 * (1/2) = 1; represent the scale through the pairing directly
            let basis: Vec<(usize, u32, Rational)> = vec![(0, 0, rat(1, 1)), (1, 1, rat(1, 1)), (2, 1, rat(1, 1)), (3, 1, rat(1, 1)), (4, 1, rat(1, 1)), (0, 2, rat(1, 1))];
            let mut gw_pairing = orbifold_pairing(&basis, 2);
            for (i, row) in gw_pairing.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    if (1..=4).contains(&i) && (1..=4).contains(&j) {
                        *x = x.times(&cyc(rat(2, 1)));
                    }
                }
            }
            let labels = ["1", "sqrt2 D1", "sqrt2 D2", "sqrt2 D3", "sqrt2 D4", "P"];
            let tilde = ["phi0", "phi~1", "phi~2", "phi~3", "phi~4", "phi5"];
            // each phi~_j mixes u-basis elements of one degree
            let deg = |k: usize| s.elements[if k == 0 { 0 } else if k == 5 { 5 } else { 1 }].degree.clone();
            let entries = (0..6)
                .map(|k| IsoEntry {
                    gw_label: labels[k].into(),
                    gw_degree: if k == 0 { rat(0, 1) } else if k == 5 { rat(1, 1) } else { half.clone() },
                    fjrw_label: tilde[k].into(),
                    fjrw_scale: CycScalar::one(),
                    fjrw_degree: deg(k),
                })
                .collect();
            StateIso { case, lambda: CycScalar::one(), entries, gw_pairing, fjrw_pairing: transformed_pairing(&s.pairing) }
        }
    };
    iso.check()?;
    Ok(iso)
}

use serde_json::{json, Value};
use series_core::json::{rational_to_json, JsonScalar};
use series_core::{rat, CycScalar, Rational, Scalar};

use crate::pair::{build_pair_data, reduced_pillowcase, Phases};
use crate::{Case, FjrwError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectorKind {
    Narrow,
    Broad,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateElement {
    pub label: String,
    pub theta: Phases,
    /// complex dimension of the fixed locus
    pub fix_dim: u32,
    pub degree: Rational,
    pub kind: SectorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateSpace {
    pub case: Case,
    pub weights: Vec<Rational>,
    pub elements: Vec<StateElement>,
    pub pairing: Vec<Vec<CycScalar>>,
}

/// N_h / 2 + sum (Theta_i - q_i)
pub fn degree(theta: &Phases, fix_dim: u32, weights: &[Rational]) -> Rational {
    theta.iter().zip(weights).fold(rat(fix_dim as i64, 2), |acc, (t, q)| acc + t - q)
}

fn element(label: String, theta: Phases, weights: &[Rational]) -> StateElement {
    let fix_dim = theta.iter().filter(|t| t.is_zero()).count() as u32;
    let kind = if fix_dim == 0 { SectorKind::Narrow } else { SectorKind::Broad };
    StateElement { degree: degree(&theta, fix_dim, weights), label, theta, fix_dim, kind }
}

fn antidiagonal_pairing(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<CycScalar>> {
    let mut m = vec![vec![CycScalar::zero(); n]; n];
    for &(i, j) in pairs {
        m[i][j] = CycScalar::one();
        m[j][i] = CycScalar::one();
    }
    m
}

pub fn state_space(case: Case) -> StateSpace {
    match case {
        Case::Cubic => {
            let w = build_pair_data(case).expect("cubic pair is Calabi-Yau").weights;
            // entries of h_i: 1 for omega, 2 for omega^2
            let table: [[i64; 3]; 8] = [[1, 1, 1], [2, 1, 1], [1, 2, 1], [1, 1, 2], [2, 2, 1], [2, 1, 2], [1, 2, 2], [2, 2, 2]];
            let elements = table.iter().enumerate().map(|(i, h)| element(format!("phi{i}"), h.iter().map(|&k| rat(k, 3)).collect(), &w)).collect();
            let pairs: Vec<(usize, usize)> = (0..4).map(|i| (i, 7 - i)).collect();
            StateSpace { case, weights: w, elements, pairing: antidiagonal_pairing(8, &pairs) }
        }
        Case::Pillowcase => {
            let (w, _) = reduced_pillowcase();
            // J, J sigma, J^2, J^3 sigma, 1, J^3
            let table: [[i64; 2]; 6] = [[1, 1], [1, 3], [2, 2], [3, 1], [0, 0], [3, 3]];
            let elements = table.iter().enumerate().map(|(i, h)| element(format!("phi{i}"), h.iter().map(|&k| rat(k, 4)).collect(), &w)).collect();
            StateSpace { case, weights: w, elements, pairing: antidiagonal_pairing(6, &[(0, 5), (1, 3), (2, 2), (4, 4)]) }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomResult {
    pub degree_ok: bool,
    pub selection_ok: bool,
    pub degree_lhs: Rational,
    pub degree_rhs: Rational,
}

impl AxiomResult {
    pub fn allowed(&self) -> bool {
        self.degree_ok && self.selection_ok
    }
}

impl StateSpace {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn central_charge(&self) -> Rational {
        self.weights.iter().fold(rat(0, 1), |a, q| a + rat(1, 1) - q * rat(2, 1))
    }

    pub fn index(&self, label: &str) -> Result<usize, FjrwError> {
        self.elements.iter().position(|e| e.label == label).ok_or_else(|| FjrwError::UnknownElement(label.into()))
    }

    pub fn pairing_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.pairing[i][j] == self.pairing[j][i]))
    }

    pub fn pairing_nondegenerate(&self) -> bool {
        // nondegenerate iff e_0 has a unique preimage
        let mut b = vec![CycScalar::zero(); self.len()];
        b[0] = CycScalar::one();
        series_core::linalg::solve(self.pairing.clone(), b).is_ok()
    }

    /// Paired elements have degrees summing to the central charge.
    pub fn pairing_respects_degree(&self) -> bool {
        let c = self.central_charge();
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| self.pairing[i][j].is_zero() || self.elements[i].degree.clone() + &self.elements[j].degree == c))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.name(),
            "weights": self.weights.iter().map(rational_to_json).collect::<Vec<_>>(),
            "elements": self.elements.iter().map(|e| json!({
                "label": e.label,
                "theta": e.theta.iter().map(rational_to_json).collect::<Vec<_>>(),
                "fix_dim": e.fix_dim,
                "degree": rational_to_json(&e.degree),
                "kind": if e.kind == SectorKind::Narrow { "narrow" } else { "broad" },
            })).collect::<Vec<_>>(),
            "pairing": self.pairing.iter().map(|row| row.iter().map(JsonScalar::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Degree Axiom and Selection Rule for a correlator with the given insertions
/// (indices into the state space) and psi powers.
pub fn axiom_checks(space: &StateSpace, genus: u32, insertions: &[usize], psi_powers: &[u32]) -> AxiomResult {
    let k = insertions.len() as i64;
    let g = genus as i64;
    let mut lhs = space.central_charge() * rat(g - 1, 1);
    for &i in insertions {
        lhs += &space.elements[i].degree;
    }
    for &l in psi_powers {
        lhs += rat(l as i64, 1);
    }
    let rhs = rat(3 * (g - 1) + k, 1);
    let selection_ok = space.weights.iter().enumerate().all(|(var, q)| {
        let s = insertions.iter().fold(q * rat(2 * g - 2 + k, 1), |acc, &i| acc - &space.elements[i].theta[var]);
        s.is_integer()
    });
    AxiomResult { degree_ok: lhs == rhs, selection_ok, degree_lhs: lhs, degree_rhs: rhs }
}

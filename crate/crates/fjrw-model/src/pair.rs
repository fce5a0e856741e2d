use serde_json::{json, Value};
use series_core::json::rational_to_json;
use series_core::{rat, scalar::frac_part, Rational};

use crate::{Case, FjrwError};

/// A group element, stored as its phases Theta in [0,1): h = exp(2 pi i Theta).
pub type Phases = Vec<Rational>;

/// (W, G) data for a Fermat polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct PairData {
    pub case: Case,
    /// degrees of the Fermat exponents of W
    pub exponents: Vec<u32>,
    pub weights: Vec<Rational>,
    pub generators: Vec<Phases>,
    pub group: Vec<Phases>,
    pub grading_element: Phases,
    pub central_charge: Rational,
}

fn mul(a: &Phases, b: &Phases) -> Phases {
    a.iter().zip(b).map(|(x, y)| frac_part(&(x + y))).collect()
}

fn closure(gens: &[Phases], n: usize) -> Vec<Phases> {
    let mut group = vec![vec![rat(0, 1); n]];
    let mut i = 0;
    while i < group.len() {
        for g in gens {
            let h = mul(&group[i], g);
            if !group.contains(&h) {
                group.push(h);
            }
        }
        i += 1;
    }
    group.sort();
    group
}

impl PairData {
    pub fn group_order(&self) -> usize {
        self.group.len()
    }

    pub fn weight_sum(&self) -> Rational {
        self.weights.iter().fold(rat(0, 1), |a, w| a + w)
    }

    pub fn contains(&self, h: &Phases) -> bool {
        self.group.contains(h)
    }

    pub fn to_json(&self) -> Value {
        let ph = |p: &Phases| Value::Array(p.iter().map(rational_to_json).collect());
        json!({
            "case": self.case.name(),
            "weights": self.weights.iter().map(rational_to_json).collect::<Vec<_>>(),
            "group_order": self.group_order(),
            "generators": self.generators.iter().map(ph).collect::<Vec<_>>(),
            "grading_element": ph(&self.grading_element),
            "central_charge": rational_to_json(&self.central_charge),
        })
    }
}

fn pair(case: Case, exponents: Vec<u32>, generators: Vec<Phases>) -> Result<PairData, FjrwError> {
    let weights: Vec<Rational> = exponents.iter().map(|&d| rat(1, d as i64)).collect();
    let group = closure(&generators, exponents.len());
    let grading_element = weights.clone();
    let central_charge = weights.iter().fold(rat(0, 1), |a, q| a + rat(1, 1) - q * rat(2, 1));
    let data = PairData { case, exponents, weights, generators, group, grading_element, central_charge };
    if data.weight_sum() != rat(1, 1) {
        return Err(FjrwError::NotCalabiYau(data.weight_sum().to_string()));
    }
    if !data.contains(&data.grading_element) {
        return Err(FjrwError::MissingGradingElement);
    }
    Ok(data)
}

/// Cubic: W = x1^3 + x2^3 + x3^3 with G = Aut(W). Pillowcase: W = x1^4 + x2^4 + x3^2
/// with G = G1 x Aut(x3^2), G1 = <(i, i), (1, -1)>.
pub fn build_pair_data(case: Case) -> Result<PairData, FjrwError> {
    match case {
        Case::Cubic => pair(
            case,
            vec![3, 3, 3],
            vec![vec![rat(1, 3), rat(0, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 3), rat(0, 1)], vec![rat(0, 1), rat(0, 1), rat(1, 3)]],
        ),
        Case::Pillowcase => pair(
            case,
            vec![4, 4, 2],
            vec![vec![rat(1, 4), rat(1, 4), rat(0, 1)], vec![rat(0, 1), rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(0, 1), rat(1, 2)]],
        ),
    }
}

/// The reduced pillowcase pair (x1^4 + x2^4, G1) carrying the state space.
pub fn reduced_pillowcase() -> (Vec<Rational>, Vec<Phases>) {
    let gens = vec![vec![rat(1, 4), rat(1, 4)], vec![rat(0, 1), rat(1, 2)]];
    (vec![rat(1, 4), rat(1, 4)], closure(&gens, 2))
}

use std::collections::BTreeMap;

use serde_json::{json, Value};
use series_core::json::series_to_json;
use series_core::{rat, PowerSeries, Rational};

use crate::check::Check;
use crate::ode::OdeSystem;
use crate::{Case, FjrwError};

/// Correlation functions of one model as u-series, keyed by name.
#[derive(Debug, Clone, PartialEq)]
pub struct FjrwBlocks {
    pub case: Case,
    pub order: usize,
    pub series: BTreeMap<String, PowerSeries<Rational>>,
    pub checks: Vec<Check>,
}

impl FjrwBlocks {
    pub fn get(&self, name: &str) -> &PowerSeries<Rational> {
        &self.series[name]
    }

    pub fn f(&self, i: usize) -> &PowerSeries<Rational> {
        self.get(&format!("f{i}"))
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.name(),
            "order": self.order,
            "series": self.series.iter().map(|(k, v)| (k.clone(), series_to_json(v))).collect::<serde_json::Map<_, _>>(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

fn t(c: Rational, e: [u32; 3]) -> (Rational, Vec<u32>) {
    (c, e.to_vec())
}

/// The cubic system with the 1/f2 quotient cleared, and the pillowcase system
/// with f3' substituted into the f2 equation.
pub fn ode_system(case: Case) -> OdeSystem {
    match case {
        Case::Cubic => OdeSystem::new(
            &["f1", "f2", "f3"],
            vec![
                vec![t(rat(1, 6), [1, 2, 0]), t(rat(-1, 2), [1, 0, 1])],
                vec![t(rat(1, 3), [3, 0, 0]), t(rat(-1, 6), [0, 3, 0]), t(rat(-1, 2), [0, 1, 1])],
                vec![t(rat(-1, 2), [0, 0, 2]), t(rat(1, 18), [0, 4, 0])],
            ],
            vec![rat(1, 1), rat(0, 1), rat(0, 1)],
        ),
        Case::Pillowcase => OdeSystem::new(
            &["f1", "f2", "f3"],
            vec![
                vec![t(rat(-2, 1), [1, 1, 0])],
                vec![t(rat(-1, 1), [2, 0, 0]), t(rat(1, 1), [0, 0, 2]), t(rat(-2, 1), [0, 1, 1])],
                vec![t(rat(1, 1), [2, 0, 0]), t(rat(-1, 1), [0, 0, 2])],
            ],
            vec![rat(-1, 4), rat(0, 1), rat(0, 1)],
        ),
    }
}

/// The three basic correlation functions f1, f2, f3 to order `order` in u.
pub fn solve_wdvv(case: Case, order: usize) -> Result<FjrwBlocks, FjrwError> {
    let ode = ode_system(case);
    let ys = ode.solve("u", order)?;
    let checks = ode.residuals(&ys)?;
    let series = ["f1", "f2", "f3"].iter().map(|s| s.to_string()).zip(ys).collect();
    Ok(FjrwBlocks { case, order, series, checks })
}

fn check(name: &str, lhs: PowerSeries<Rational>, rhs: PowerSeries<Rational>) -> Check {
    Check::of(name, &(&lhs - &rhs))
}

/// Adds the remaining correlation functions from their closed forms and checks
/// every auxiliary WDVV equation.
pub fn derived_blocks(case: Case, order: usize) -> Result<FjrwBlocks, FjrwError> {
    let mut b = solve_wdvv(case, order)?;
    let (f1, f2, f3) = (b.f(1).clone(), b.f(2).clone(), b.f(3).clone());
    let d = |s: &PowerSeries<Rational>| s.derive();
    let sc = |s: &PowerSeries<Rational>, n: i64, m: i64| s.scale_rat(&rat(n, m));
    match case {
        Case::Cubic => {
            let f4 = sc(&(&f1 * &f2), 1, 3);
            let f5 = sc(&(&f1 * &f1), 1, 3);
            let f6 = sc(&(&sc(&f3, 3, 1) + &(&f2 * &f2)), 1, 6);
            let checks = vec![
                check("f1 f4 = f2 f5", &f1 * &f4, &f2 * &f5),
                check("f1 f5 = f2' + f2 f6", (&f1 * &f5).with_trunc(order - 1), d(&f2)? + (&f2 * &f6)),
                check("2 f1 f6 = f1 f3 + f2 f4", sc(&(&f1 * &f6), 2, 1), &(&f1 * &f3) + &(&f2 * &f4)),
                check("f1 f5' = 2 f5 f1'", &f1 * &d(&f5)?, sc(&(&f5 * &d(&f1)?), 2, 1)),
                check("f1 f3' = 2 f6 f1'", &f1 * &d(&f3)?, sc(&(&f6 * &d(&f1)?), 2, 1)),
                check("f1 f6 = f1' + f1 f3", (&f1 * &f6).with_trunc(order - 1), d(&f1)? + (&f1 * &f3)),
            ];
            b.checks.extend(checks);
            for (k, v) in [("f4", f4), ("f5", f5), ("f6", f6)] {
                b.series.insert(k.into(), v);
            }
        }
        Case::Pillowcase => {
            let g1 = -&f1;
            let g2 = &f2 + &sc(&f3, 2, 1);
            let g3 = f3.clone();
            let g4 = &f3 - &f2;
            let g5 = PowerSeries::zero("u", order);
            let g6 = &f2 + &f3;
            let f4 = g2.clone();
            let two = |s: PowerSeries<Rational>| sc(&s, 2, 1);
            let m = |a: &PowerSeries<Rational>, b: &PowerSeries<Rational>| a * b;
            let checks = vec![
                check("f1' + 2 f1 f2 = 0", d(&f1)? + two(m(&f1, &f2)), PowerSeries::zero("u", order)),
                check("f2' + 2 f2 f3 + f3' = 0", d(&f2)? + two(m(&f2, &f3)) + d(&f3)?, PowerSeries::zero("u", order)),
                check("f3' + f3^2 = f1^2", d(&f3)? + m(&f3, &f3), m(&f1, &f1)),
                check("f4' + 2 f4 f2 + f2' = 2 f2^2", d(&f4)? + two(m(&f4, &f2)) + d(&f2)?, two(m(&f2, &f2))),
                check("f4' + 2 f4 f3 + f3' = 2 f3^2 + 2 f1^2", d(&f4)? + two(m(&f4, &f3)) + d(&f3)?, two(m(&f3, &f3)) + two(m(&f1, &f1))),
                check("g1' + 2 g2 g1 = 4 g1 g3", d(&g1)? + two(m(&g2, &g1)), sc(&m(&g1, &g3), 4, 1)),
                check("g2' + 2 g3 g2 + g3' = 2 g1^2 + 2 g3^2", d(&g2)? + two(m(&g3, &g2)) + d(&g3)?, two(m(&g1, &g1)) + two(m(&g3, &g3))),
                check("g3' + g3^2 = g1^2", d(&g3)? + m(&g3, &g3), m(&g1, &g1)),
                check("g4' + 2 g3 g4 + 2 g1 g5 = 2 g1^2", d(&g4)? + two(m(&g3, &g4)) + two(m(&g1, &g5)), two(m(&g1, &g1))),
                // printed with g5 g1 in the second term, which fails at u^3
                check("g1' + 2 g6 g1 + 2 g5 g3 + g5' = 2 g1 g3", d(&g1)? + two(m(&g6, &g1)) + two(m(&g5, &g3)) + d(&g5)?, two(m(&g1, &g3))),
                check("2 g6' = g4^2 - g6^2", two(d(&g6)?), m(&g4, &g4) - m(&g6, &g6)),
                check("g5' + 2 g5 g6 = g5 g6 + g5 g4", d(&g5)? + two(m(&g5, &g6)), m(&g5, &g6) + m(&g5, &g4)),
                check("g6' + 2 g1 g5 + 2 g3 g6 = 2 g3^2", d(&g6)? + two(m(&g1, &g5)) + two(m(&g3, &g6)), two(m(&g3, &g3))),
                check("g5' + g1 (g4 + g6) + 2 g3 g5 = 2 g1 g3", d(&g5)? + m(&g1, &(&g4 + &g6)) + two(m(&g3, &g5)), two(m(&g1, &g3))),
            ];
            b.checks.extend(checks);
            for (k, v) in [("g1", g1), ("g2", g2), ("g3", g3), ("g4", g4), ("g5", g5), ("g6", g6), ("f4", f4)] {
                b.series.insert(k.into(), v);
            }
        }
    }
    Ok(b)
}

/// The literal form of the one auxiliary pillowcase equation that fails as printed.
pub fn printed_g1_equation(order: usize) -> Result<Check, FjrwError> {
    let b = derived_blocks(Case::Pillowcase, order)?;
    let (g1, g3, g5) = (b.get("g1"), b.get("g3"), b.get("g5"));
    let two = rat(2, 1);
    let lhs = g1.derive()? + (g5 * g1).scale_rat(&two) + (g5 * g3).scale_rat(&two) + g5.derive()?;
    Ok(check("g1' + 2 g5 g1 + 2 g5 g3 + g5' = 2 g1 g3", lhs, (g1 * g3).scale_rat(&two)))
}

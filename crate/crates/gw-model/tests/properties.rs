// The WDVV systems on the GW side coincide with the Ramanujan identities:
// the GW block triples satisfy the FJRW ODEs with d/du replaced by q d/dq.

use fjrw_model::Case;
use gw_model::gw_building_blocks;
use proptest::prelude::*;
use series_core::{rat, FracSeries, Rational};

type S = FracSeries<Rational>;

fn cubic_residuals(order: usize) -> Vec<S> {
    let m = gw_building_blocks(Case::Cubic, order).unwrap();
    let three = rat(3, 1);
    let f1 = m.block("M1").unwrap().series.scale_rat(&three);
    let f2 = m.block("M2").unwrap().series.scale_rat(&three);
    let f3 = m.block("M3").unwrap().series.scale_rat(&three);
    let r = |a, b| rat(a, b);
    vec![
        f1.theta().sub(&(&f1 * &f2.pow(2)).scale_rat(&r(1, 6)).sub(&(&f1 * &f3).scale_rat(&r(1, 2)))),
        f2.theta().sub(&f1.pow(3).scale_rat(&r(1, 3)).sub(&f2.pow(3).scale_rat(&r(1, 6))).sub(&(&f2 * &f3).scale_rat(&r(1, 2)))),
        f3.theta().sub(&f3.pow(2).scale_rat(&r(-1, 2)).add(&f2.pow(4).scale_rat(&r(1, 18)))),
    ]
}

fn pillowcase_residuals(order: usize) -> Vec<S> {
    let m = gw_building_blocks(Case::Pillowcase, order).unwrap();
    let (x, y, z) = (&m.block("X").unwrap().series, &m.block("Y").unwrap().series, &m.block("Z").unwrap().series);
    // f1 = -2X, f3 = 2Z, f2 = Y - Z
    let f1 = x.scale_rat(&rat(-2, 1));
    let f3 = z.scale_rat(&rat(2, 1));
    let f2 = y.sub(z);
    let two = rat(2, 1);
    let d3 = f1.pow(2).sub(&f3.pow(2));
    vec![
        f1.theta().add(&(&f1 * &f2).scale_rat(&two)),
        f2.theta().add(&d3).add(&(&f2 * &f3).scale_rat(&two)),
        f3.theta().sub(&d3),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn gw_triples_solve_the_fjrw_systems(order in 1usize..40) {
        for r in cubic_residuals(order).into_iter().chain(pillowcase_residuals(order)) {
            prop_assert!(r.is_zero(), "{}", r);
        }
    }
}

#[test]
fn misnormalized_e3_breaks_the_cubic_system_at_order_zero() {
    use q_forms::Normalization;
    let m = gw_model::gw_building_blocks_with(Case::Cubic, 10, Normalization { e3_denominator: 3 }).unwrap();
    let f2 = m.block("M2").unwrap().series.scale_rat(&rat(3, 1));
    let f3 = m.block("M3").unwrap().series.scale_rat(&rat(3, 1));
    let res = f3.theta().sub(&f3.pow(2).scale_rat(&rat(-1, 2)).add(&f2.pow(4).scale_rat(&rat(1, 18))));
    assert_eq!(res.first_nonzero().map(|(e, _)| e), Some(rat(0, 1)));
}

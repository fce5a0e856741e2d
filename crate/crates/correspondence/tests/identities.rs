use correspondence::{build_iso, match_building_blocks, match_genus_one, match_ode_systems, match_prepotential, q_side_systems};
use fjrw_model::Case;
use q_forms::Normalization;
use series_core::rat;

fn bad() -> Normalization {
    Normalization { e3_denominator: 3 }
}

#[test]
fn blocks_match_to_order_30() {
    for case in [Case::Cubic, Case::Pillowcase] {
        let r = match_building_blocks(case, 30, Normalization::default()).unwrap();
        assert!(r.pass(), "{}", r.to_json());
        assert!(r.identities.iter().all(|i| i.verified_to_order == 30));
    }
}

#[test]
fn transported_triples_solve_the_fjrw_systems() {
    for case in [Case::Cubic, Case::Pillowcase] {
        let r = match_ode_systems(case, 20, Normalization::default()).unwrap();
        assert!(r.pass(), "{}", r.to_json());
    }
}

#[test]
fn misnormalized_e3_breaks_f3_first_at_v5() {
    let r = match_building_blocks(Case::Cubic, 12, bad()).unwrap();
    assert!(!r.pass());
    let fails: Vec<_> = r.failures().collect();
    assert_eq!(fails.len(), 1);
    assert!(fails[0].identity.contains("f3"));
    let m = fails[0].first_mismatch.as_ref().unwrap();
    // C(3 M3) is 4/3 of f3 = v^5/7290 + ...
    assert_eq!(m.order, 5);
    assert_eq!(m.rhs, series_core::json::rational_to_json(&rat(1, 7290)));
    assert_eq!(m.lhs, series_core::json::rational_to_json(&rat(4, 21870)));
}

#[test]
fn misnormalized_e3_breaks_the_system_and_genus_one() {
    assert!(!match_ode_systems(Case::Cubic, 12, bad()).unwrap().pass());
    assert!(!match_genus_one(Case::Cubic, 12, bad()).unwrap().pass());
    assert!(!match_prepotential(Case::Cubic, 12, bad()).unwrap().pass());
}

#[test]
fn prepotential_monomial_counts() {
    let c = match_prepotential(Case::Cubic, 12, Normalization::default()).unwrap();
    assert!(c.pass());
    assert_eq!(c.identities.len(), 45);
    let p = match_prepotential(Case::Pillowcase, 12, Normalization::default()).unwrap();
    assert!(p.pass(), "{}", p.to_json());
    assert_eq!(p.identities.len(), 16, "{:?}", p.identities.iter().map(|i| &i.identity).collect::<Vec<_>>());
}

#[test]
fn genus_one_to_order_24() {
    let r = match_genus_one(Case::Cubic, 24, Normalization::default()).unwrap();
    assert!(r.pass());
    assert!(match_genus_one(Case::Pillowcase, 6, Normalization::default()).is_err());
}

#[test]
fn iso_json_lists_every_generator() {
    let c = build_iso(Case::Cubic).unwrap().to_json();
    assert_eq!(c["map"].as_array().unwrap().len(), 8);
    let p = build_iso(Case::Pillowcase).unwrap().to_json();
    assert_eq!(p["map"].as_array().unwrap().len(), 6);
}

#[test]
fn q_side_systems_hold_and_fail_at_q0_when_sabotaged() {
    for case in [Case::Cubic, Case::Pillowcase] {
        assert!(q_side_systems(case, 30, Normalization::default()).unwrap().iter().all(|r| r.pass()));
    }
    let bad = q_side_systems(Case::Cubic, 10, bad()).unwrap();
    let first = bad.iter().filter_map(|r| r.first_nonzero.as_ref().map(|(e, _)| e.clone())).min();
    assert_eq!(first, Some(rat(0, 1)));
}

// Frozen values from a Picard-iteration oracle over exact fractions, written
// independently of the coefficient recursion used by the crate.

use fjrw_model::blocks::printed_g1_equation;
use fjrw_model::{axiom_checks, build_pair_data, derived_blocks, fjrw_genus_one, solve_wdvv, state_space, Case};
use series_core::{rat, PowerSeries, Rational};

fn sparse(trunc: usize, terms: &[(usize, i64, i64)]) -> PowerSeries<Rational> {
    let mut c = vec![rat(0, 1); trunc + 1];
    for &(n, a, b) in terms {
        c[n] = rat(a, b);
    }
    PowerSeries::from_rats("u", &c, trunc)
}

#[test]
fn cubic_series_match_oracle() {
    let b = solve_wdvv(Case::Cubic, 12).unwrap();
    assert_eq!(b.f(1), &sparse(12, &[(0, 1, 1), (3, 1, 162), (6, 1, 131220), (9, 1, 111602610), (12, 361, 3977517020400)]));
    assert_eq!(b.f(2), &sparse(12, &[(1, 1, 3), (7, 1, 306180)]));
    assert_eq!(b.f(3), &sparse(12, &[(5, 1, 7290), (11, 13, 8184191400)]));
}

#[test]
fn pillowcase_series_match_oracle() {
    let b = solve_wdvv(Case::Pillowcase, 11).unwrap();
    assert_eq!(
        b.f(1),
        &sparse(11, &[(0, -1, 4), (2, -1, 64), (4, -1, 3072), (6, -1, 245760), (8, -1, 9175040), (10, -13, 6606028800)])
    );
    assert_eq!(
        b.f(2),
        &sparse(11, &[(1, -1, 16), (3, 1, 768), (5, -1, 20480), (7, 13, 20643840), (9, -1, 110100480), (11, 149, 871995801600)])
    );
    assert_eq!(
        b.f(3),
        &sparse(11, &[(1, 1, 16), (3, 1, 768), (5, 1, 20480), (7, 13, 20643840), (9, 1, 110100480), (11, 149, 871995801600)])
    );
}

#[test]
fn genus_one_matches_oracle() {
    let g = fjrw_genus_one(Case::Cubic, 11).unwrap();
    assert_eq!(g, sparse(11, &[(2, 1, 324), (5, 1, 43740), (8, 1, 16533720), (11, 13, 49105148400)]));
}

#[test]
fn cubic_boundary_values() {
    let b = derived_blocks(Case::Cubic, 10).unwrap();
    assert_eq!(b.f(1).coeff(0), &rat(1, 1));
    assert_eq!(b.f(2).derive().unwrap().coeff(0), &rat(1, 3));
    assert_eq!(b.f(5).coeff(0), &rat(1, 3));
    for i in [2, 3, 4, 6] {
        assert_eq!(b.f(i).coeff(0), &rat(0, 1), "f{i}(0)");
    }
}

#[test]
fn pillowcase_boundary_values() {
    let b = derived_blocks(Case::Pillowcase, 10).unwrap();
    let lead = |s: &str| (b.get(s).coeff(0).clone(), b.get(s).coeff(1).clone());
    assert_eq!(lead("f1"), (rat(-1, 4), rat(0, 1)));
    assert_eq!(lead("f2"), (rat(0, 1), rat(-1, 16)));
    assert_eq!(lead("f3"), (rat(0, 1), rat(1, 16)));
    assert_eq!(lead("f4"), (rat(0, 1), rat(1, 16)));
    assert_eq!(lead("g1"), (rat(1, 4), rat(0, 1)));
    assert_eq!(lead("g2"), (rat(0, 1), rat(1, 16)));
    assert_eq!(lead("g3"), (rat(0, 1), rat(1, 16)));
    assert_eq!(lead("g4"), (rat(0, 1), rat(1, 8)));
    assert!(b.get("g5").is_zero());
    assert_eq!(b.get("g6").coeff(0), &rat(0, 1));
    assert_eq!(b.get("g6").coeff(1), &rat(0, 1));
    assert_eq!(b.get("g6").coeff(2), &rat(0, 1));
}

#[test]
fn auxiliary_wdvv_equations() {
    for case in [Case::Cubic, Case::Pillowcase] {
        let b = derived_blocks(case, 40).unwrap();
        let bad: Vec<_> = b.checks.iter().filter(|c| !c.pass()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
    assert!(!printed_g1_equation(10).unwrap().pass());
}

#[test]
fn pair_and_state_data() {
    let c = build_pair_data(Case::Cubic).unwrap();
    assert_eq!((c.weight_sum(), c.central_charge.clone()), (rat(1, 1), rat(1, 1)));
    let s = state_space(Case::Cubic);
    assert_eq!(s.elements[1].degree, rat(1, 3));
    let p = state_space(Case::Pillowcase);
    assert_eq!(p.elements[4].degree, rat(1, 2));
    assert!(axiom_checks(&s, 0, &[1, 2, 3], &[]).allowed());
}

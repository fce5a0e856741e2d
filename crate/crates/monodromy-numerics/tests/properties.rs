use monodromy_numerics::*;
use proptest::prelude::*;
use series_core::rat;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn exp_is_a_homomorphism(a in -400i64..400, b in -400i64..400) {
        let bits = 300;
        let x = Real::from_ratio(a, 37, bits);
        let y = Real::from_ratio(b, 41, bits);
        let lhs = x.add(&y).exp();
        let rhs = x.exp().mul(&y.exp());
        prop_assert!(lhs.sub(&rhs).abs() <= lhs.abs().mul(&Real::pow10(-70, bits)));
    }

    #[test]
    fn gamma_recurrence(n in 1i64..200, d in 2i64..50) {
        let p = Precision::new(30).unwrap();
        let s = Spouge::new(p);
        let b = s.bits();
        let x = Real::from_ratio(n, d, b);
        prop_assume!(n % d != 0);
        let lhs = s.gamma(&x.add(&Real::one(b))).unwrap();
        let rhs = x.mul(&s.gamma(&x).unwrap());
        prop_assert!(lhs.sub(&rhs).abs() <= lhs.abs().mul(&p.tolerance()));
    }

    #[test]
    fn small_samples_continue(re in -20i64..20, im in -20i64..20) {
        let r = numeric_continuation_check(ContinuationForm::C3, (&rat(re, 1000), &rat(im, 1000)), 30, Precision::new(30).unwrap()).unwrap();
        prop_assert!(r.pass());
    }

    #[test]
    fn unimodular_products(a in 0u32..3, b in 0u32..3, c in 0u32..3) {
        let m = monodromy_matrices(3).unwrap();
        let p = m.m_orb.pow(a) * m.m_zero.pow(b) * m.m_inf.pow(c);
        prop_assert_eq!(p.det(), 1);
    }
}

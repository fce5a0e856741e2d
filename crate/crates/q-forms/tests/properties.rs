use proptest::prelude::*;
use q_forms::{verify_ramanujan, verify_schwarz_relation};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn ramanujan_system_at_any_order(order in 1usize..45) {
        prop_assert!(verify_ramanujan(3, 3, order).unwrap().pass());
        prop_assert!(verify_ramanujan(2, 4, order).unwrap().pass());
    }

    #[test]
    fn schwarz_relation_at_any_order(order in 1usize..30) {
        prop_assert!(verify_schwarz_relation(3, order).unwrap().pass());
        prop_assert!(verify_schwarz_relation(2, order).unwrap().pass());
    }
}

#[test]
fn ramanujan_order_60() {
    for (n, r) in [(3, 3), (2, 4)] {
        let rep = verify_ramanujan(n, r, 60).unwrap();
        assert!(rep.pass(), "{:?}", rep.residuals);
        assert!(rep.residuals.iter().all(|x| x.checked_through >= series_core::rat(60, 1)));
    }
}

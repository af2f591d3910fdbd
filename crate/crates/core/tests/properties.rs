use proptest::prelude::*;

use euler_identities::euler::EulerCache;
use euler_identities::identities::report;
use euler_identities::identities::{check_with, sample_points, AtPoint, Residual, Statement};
use euler_identities::numeric::Rational;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn polynomial_statement() -> impl Strategy<Value = Statement> {
    prop_oneof![
        (0u32..7, 0u32..7).prop_map(|(m, n)| Statement::Wsp7 { m, n }),
        (0u32..7, 0u32..7).prop_map(|(m, n)| Statement::Wsp9 { m, n }),
        (0u32..5, 1u32..5, 1u32..4, 0u32..3)
            .prop_map(|(m, n, q, k)| Statement::Thm1 { m, n, q, k: 2 * k + 1 }),
        (0u32..6, 0u32..6, small_rational()).prop_map(|(m, n, a)| Statement::Sun { m, n, a }),
        (0u32..4, 1u32..4, 1u32..4, 0u32..5).prop_map(|(m, n, s, k)| Statement::Thm2 { m, n, s, k }),
        (0u32..8).prop_flat_map(|m| (Just(m), 0..=m)).prop_map(|(m, k)| Statement::Thm3 { m, k }),
        (0u32..10, 1u32..8).prop_map(|(n, q)| Statement::FerSim3 { n, q }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symbolic_residual_is_zero_and_matches_points(stmt in polynomial_statement(), t in small_rational()) {
        let cache = EulerCache::global();
        let r = check_with(&stmt, cache, false).unwrap();
        prop_assert!(r.pass);
        let Residual::Poly(p) = &r.residual else { panic!("not symbolic") };
        let at = stmt.sides(&AtPoint { cache, t: t.clone() }).unwrap().residual();
        prop_assert_eq!(p.eval(&t), at);
        let pointwise = check_with(&stmt, cache, true).unwrap();
        prop_assert!(pointwise.pass);
    }

    #[test]
    fn sample_points_are_distinct(count in 1usize..60) {
        let mut pts = sample_points(count);
        pts.sort();
        pts.dedup();
        prop_assert_eq!(pts.len(), count);
    }

    #[test]
    fn reports_round_trip_through_json(stmt in polynomial_statement(), pointwise in any::<bool>()) {
        let r = check_with(&stmt, EulerCache::global(), pointwise).unwrap();
        let text = report::to_json(std::slice::from_ref(&r));
        let back = report::from_json(&text).unwrap();
        prop_assert_eq!(back, vec![r]);
    }

    #[test]
    fn witt_reports_pass(n in 0u32..9, a in small_rational(), p in prop::sample::select(vec![3u64, 5, 7, 11]), precision in 1u32..4) {
        prop_assume!(!(a.denom() % p == 0.into()));
        let r = check_with(
            &Statement::Witt { n, a, p, precision, naive: true, budget: 2000 },
            EulerCache::global(),
            false,
        ).unwrap();
        prop_assert!(r.pass, "{}", r.params_text());
    }
}

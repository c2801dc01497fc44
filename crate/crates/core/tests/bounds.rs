use proptest::prelude::*;
use twostep::bounds::{
    cap_size_tail, f_const, facet_tail, lower_bound_facets, outside_prob_bound, upper_bound_facets,
    BoundsInput, BoundsReport,
};

proptest! {
    #[test]
    fn probabilities_lie_in_unit_interval(
        d in 2usize..=8,
        m in 8u64..100_000,
        p in 0.0f64..=1.0,
        eps in 1e-6f64..0.999,
        t in 0u64..50,
    ) {
        let n = m * 3;
        for v in [
            facet_tail(d, m as f64, n as f64, p, eps).unwrap(),
            outside_prob_bound(d, m, p, eps).unwrap(),
            cap_size_tail(n, d, p, t).unwrap(),
        ] {
            prop_assert!((0.0..=1.0).contains(&v), "{v}");
        }
    }

    #[test]
    fn lower_bound_is_monotone(d in 2usize..=6, m in 1.0f64..1e6, n in 1.0f64..1e6, p in 0.0f64..=1.0, k in 1.0f64..10.0) {
        let base = lower_bound_facets(d, m, n, p).unwrap();
        prop_assert!(lower_bound_facets(d, m * k, n, p).unwrap() >= base);
        prop_assert!(lower_bound_facets(d, m, n * k, p).unwrap() >= base);
    }

    #[test]
    fn upper_dominates_lower_in_scan(d in 2usize..=6, m in 10.0f64..1e6, frac in 0.0f64..1.0) {
        let q = frac / (8.0 * (d - 1) as f64);
        let p = 1.0 - q;
        let n = f_const(d).unwrap() * m;
        prop_assert!(upper_bound_facets(d, m, n, p).unwrap() >= lower_bound_facets(d, m, n, p).unwrap());
    }

    #[test]
    fn report_probabilities_are_clamped(d in 2usize..=6, m in 10u64..10_000, p in 0.01f64..=1.0) {
        let r = BoundsReport::evaluate(&BoundsInput { d, m, p, ..BoundsInput::default() });
        for v in [r.facet_tail, r.outside_prob_bound, r.cap_size_tail].into_iter().flatten() {
            prop_assert!((0.0..=1.0).contains(&v));
        }
    }
}

use adiageo::geometry::DEFAULT_GRID;
use adiageo::models::{ClassicalModel, Gho, GhoLinear};
use adiageo::oracle::numeric_metric;
use proptest::prelude::*;

fn gho() -> impl Strategy<Value = Vec<f64>> {
    (0.6f64..1.6, -1.2f64..1.2, 0.4f64..2.5).prop_map(|(w, y, z)| vec![(w * w + y * y) / z, y, z])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn metric_is_positive_semidefinite(x in gho(), w in -1.5f64..1.5, action in 0.2f64..4.0) {
        for (model, p) in [(&Gho as &dyn ClassicalModel, x.clone()), (&GhoLinear, [vec![w], x].concat())] {
            let g = model.metric_closed(action, &p).unwrap();
            let eig = g.components().clone().symmetric_eigenvalues();
            let scale = eig.amax();
            prop_assert!(eig.iter().all(|&e| e >= -1e-12 * scale));
        }
    }

    #[test]
    fn metric_scales_as_action_squared(x in gho(), action in 0.2f64..4.0) {
        let g1 = Gho.metric_closed(1.0, &x).unwrap();
        let g = Gho.metric_closed(action, &x).unwrap();
        let scaled = g1.components() * (action * action);
        prop_assert!(g.max_deviation(&scaled) <= 1e-12 * scaled.amax());
    }

    #[test]
    fn sampled_metric_matches_closed(x in gho(), action in 0.2f64..4.0) {
        let g = numeric_metric(&Gho, action, &x, DEFAULT_GRID).unwrap();
        let c = Gho.metric_closed(action, &x).unwrap();
        prop_assert!(g.max_deviation(c.components()) <= 1e-12 * c.components().amax());
    }
}

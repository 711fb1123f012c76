use proptest::prelude::*;
use qcap::numerics::random::{random_density, random_hermitian, random_unitary};
use qcap::numerics::{
    binary_entropy, convex_envelope, hermitian_eig, von_neumann_entropy, PiecewiseLinearCurve,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn binary_entropy_symmetric(x in 0.0f64..=1.0) {
        let a = binary_entropy(x).unwrap();
        prop_assert!((a - binary_entropy(1.0 - x).unwrap()).abs() < 1e-12);
        prop_assert!(a <= 1.0 + 1e-15);
    }

    #[test]
    fn entropy_unitary_invariant_and_additive(seed in 0u64..100_000, n in 2usize..=4, m in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_density::<f64, _>(&mut rng, n);
        let b = random_density::<f64, _>(&mut rng, m);
        let u = random_unitary(&mut rng, n);
        let sa = von_neumann_entropy(&a).unwrap();
        prop_assert!((von_neumann_entropy(&a.conjugate(&u)).unwrap() - sa).abs() < 1e-9);
        let sb = von_neumann_entropy(&b).unwrap();
        prop_assert!((von_neumann_entropy(&a.tensor(&b)).unwrap() - sa - sb).abs() < 1e-9);
    }

    #[test]
    fn eigenvalues_sum_to_trace(seed in 0u64..100_000, n in 1usize..=12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_hermitian::<f64, _>(&mut rng, n);
        let spec = hermitian_eig(&m).unwrap();
        let sum: f64 = spec.eigenvalues.iter().sum();
        prop_assert!((sum - m.trace().re).abs() < 1e-10);
        prop_assert!(spec.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn envelope_is_convex_and_below(values in proptest::collection::vec(-5.0f64..5.0, 2..40)) {
        let knots: Vec<f64> = (0..values.len()).map(|i| i as f64 * 0.1).collect();
        let curve = PiecewiseLinearCurve::new(knots.clone(), values.clone()).unwrap();
        let env = convex_envelope(&curve).unwrap();
        prop_assert!(env.is_convex(1e-9));
        for (&x, &y) in knots.iter().zip(&values) {
            prop_assert!(env.eval(x).unwrap() <= y + 1e-12);
        }
    }
}

#[test]
fn envelope_of_simple_bounds_on_a_fine_grid() {
    let h = |p: f64| {
        if p == 0.0 {
            0.0
        } else {
            -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
        }
    };
    let knots: Vec<f64> = (0..1000).map(|i| 0.3 * i as f64 / 999.0).collect();
    let curve =
        PiecewiseLinearCurve::from_fn(knots.clone(), |p| (1.0 - h(p)).min(1.0 - 4.0 * p)).unwrap();
    let env = convex_envelope(&curve).unwrap();
    assert!(env.is_convex(1e-12));
    for &p in &knots {
        let e = env.eval(p).unwrap();
        assert!(e <= 1.0 - h(p) + 1e-12 && e <= 1.0 - 4.0 * p + 1e-12);
    }
}

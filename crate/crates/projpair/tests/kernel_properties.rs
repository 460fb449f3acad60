//! Property tests for the linear-algebra substrate.

use num_complex::Complex64;
use proptest::prelude::*;

use projpair::subspace::SubspaceBasis;
use projpair::svd::orthonormalize;
use projpair::{herm_eig, operator_norm, projector_from_basis, unitary_exp, ComplexMatrix};

fn complex_entry() -> impl Strategy<Value = Complex64> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn square_matrix(max_n: usize) -> impl Strategy<Value = ComplexMatrix> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(complex_entry(), n * n)
            .prop_map(move |entries| ComplexMatrix::new(n, n, entries).unwrap())
    })
}

fn hermitian_matrix(max_n: usize) -> impl Strategy<Value = ComplexMatrix> {
    square_matrix(max_n).prop_map(|a| a.hermitian_part())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn operator_norm_at_most_hs_norm(a in square_matrix(6)) {
        prop_assert!(operator_norm(&a) <= a.hs_norm() + 1e-10);
    }

    #[test]
    fn eigendecomposition_reconstructs(a in hermitian_matrix(8)) {
        let spectrum = herm_eig(&a, 1e-9).unwrap();
        let residual = (&spectrum.reconstruct() - &a).hs_norm();
        prop_assert!(residual <= 1e-9 * a.hs_norm().max(1.0));
        // ascending eigenvalues
        for w in spectrum.eigenvalues.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn exponential_group_law(x in hermitian_matrix(5), s in -2.0..2.0f64, t in -2.0..2.0f64) {
        let a = unitary_exp(&x, s, 1e-9).unwrap();
        let b = unitary_exp(&x, t, 1e-9).unwrap();
        let ab = a.matmul(&b);
        let direct = unitary_exp(&x, s + t, 1e-9).unwrap();
        prop_assert!((&ab - &direct).hs_norm() <= 1e-9 * (x.rows() as f64).max(1.0) * x.hs_norm().exp().min(1e3));
    }

    #[test]
    fn projectors_from_random_bases_are_projections(
        seedcols in (1u64..1000, 1usize..4, 4usize..8)
    ) {
        let (seed, k, n) = seedcols;
        let mut rng = projpair::rng::SplitMix64::new(seed);
        let raw: Vec<Vec<Complex64>> = (0..k.min(n)).map(|_| rng.next_complex_vector(n)).collect();
        let cols = orthonormalize(raw);
        let basis = SubspaceBasis::new(ComplexMatrix::from_columns(n, &cols), 1e-9).unwrap();
        let p = projector_from_basis(&basis);
        prop_assert!(p.asymmetry() <= 1e-10);
        prop_assert!((&p.matmul(&p) - &p).hs_norm() <= 1e-10);
        prop_assert!((p.trace().re - cols.len() as f64).abs() <= 1e-9);
    }
}

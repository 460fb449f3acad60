//! Singular values and related rank machinery, built on the one Hermitian
//! eigensolver: the right factor comes from `herm_eig(A* A)`, left vectors by
//! back-substitution `u = A v / sigma`.
//!
//! Squaring costs accuracy near zero: a true zero singular value of a matrix
//! with unit norm comes back from the `A* A` route as roughly
//! `sqrt(n * eps) ~ 1e-7`. Rank decisions therefore use a relative cutoff of
//! `1e-6` (`RANK_CUTOFF`), comfortably above that floor and far below every
//! nonzero singular value this crate manipulates (cosines of principal
//! angles of interest).

use crate::eig::herm_eig;
use crate::error::Result;
use crate::matrix::{vec_inner, vec_norm, vec_scale, vec_sub, ComplexMatrix};

/// Relative threshold below which a singular value is treated as zero.
pub const RANK_CUTOFF: f64 = 1e-6;

/// Thin singular value decomposition.
///
/// `singular_values` are descending; `right` holds all `cols` right-singular
/// vectors, `left` only the columns paired with singular values above the
/// rank cutoff.
#[derive(Debug, Clone)]
pub struct Svd {
    pub singular_values: Vec<f64>,
    pub left: ComplexMatrix,
    pub right: ComplexMatrix,
    pub rank: usize,
}

/// SVD through the Gram matrix route.
pub fn svd(a: &ComplexMatrix, tol: f64) -> Result<Svd> {
    let gram = a.adjoint().matmul(a);
    let spectrum = herm_eig(&gram, tol)?;

    let k = spectrum.eigenvalues.len();
    // herm_eig sorts ascending; singular values descend.
    let mut singular_values: Vec<f64> = spectrum
        .eigenvalues
        .iter()
        .rev()
        .map(|&lambda| lambda.max(0.0).sqrt())
        .collect();
    let mut right = ComplexMatrix::zeros(a.cols(), k);
    for j in 0..k {
        let col = spectrum.eigenvectors.column(k - 1 - j);
        right.set_column(j, &col);
    }

    let sigma_max = singular_values.first().copied().unwrap_or(0.0);
    let cutoff = RANK_CUTOFF * sigma_max;
    let rank = singular_values.iter().take_while(|&&s| s > cutoff).count();
    for s in singular_values.iter_mut().skip(rank) {
        *s = s.max(0.0);
    }

    // Left vectors for the kept part only. Applying A to the computed right
    // vectors annihilates their nullspace contamination, so the *subspace*
    // spanned here is far more accurate than the raw eigenvectors; a
    // Gram-Schmidt pass cleans the residual non-orthogonality.
    let mut kept = Vec::with_capacity(rank);
    for j in 0..rank {
        kept.push(a.mul_vec(&right.column(j)));
    }
    let left_cols = orthonormalize(kept);
    let left = ComplexMatrix::from_columns(a.rows(), &left_cols);

    Ok(Svd {
        singular_values,
        left,
        right,
        rank,
    })
}

/// Largest singular value.
pub fn operator_norm(a: &ComplexMatrix) -> f64 {
    if a.rows() == 0 || a.cols() == 0 || a.hs_norm() == 0.0 {
        return 0.0;
    }
    let gram = a.adjoint().matmul(a);
    let spectrum = herm_eig(&gram, crate::matrix::DEFAULT_TOL)
        .expect("gram matrix of finite input is Hermitian");
    spectrum
        .eigenvalues
        .last()
        .map(|&lambda| lambda.max(0.0).sqrt())
        .unwrap_or(0.0)
}

/// Numerical rank at the crate-wide cutoff.
pub fn rank(a: &ComplexMatrix, tol: f64) -> Result<usize> {
    Ok(svd(a, tol)?.rank)
}

/// Orthonormal basis of the column space.
pub fn range_basis(a: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    Ok(svd(a, tol)?.left)
}

/// Orthonormal basis of the nullspace.
pub fn nullspace_basis(a: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let decomposition = svd(a, tol)?;
    let k = decomposition.singular_values.len();
    let cols: Vec<Vec<_>> = (decomposition.rank..k)
        .map(|j| decomposition.right.column(j))
        .collect();
    Ok(ComplexMatrix::from_columns(a.cols(), &cols))
}

/// Modified Gram-Schmidt with two passes; drops vectors that collapse.
pub fn orthonormalize(vectors: Vec<Vec<num_complex::Complex64>>) -> Vec<Vec<num_complex::Complex64>> {
    let mut basis: Vec<Vec<num_complex::Complex64>> = Vec::with_capacity(vectors.len());
    for mut v in vectors {
        let original = vec_norm(&v);
        if original == 0.0 {
            continue;
        }
        for _ in 0..2 {
            for b in &basis {
                let coefficient = vec_inner(b, &v);
                v = vec_sub(&v, &vec_scale(b, coefficient));
            }
        }
        let remaining = vec_norm(&v);
        if remaining > 1e-10 * original.max(1.0) {
            basis.push(vec_scale(&v, num_complex::Complex64::new(1.0 / remaining, 0.0)));
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::DEFAULT_TOL;
    use crate::rng::SplitMix64;
    use num_complex::Complex64;

    fn random_matrix(rows: usize, cols: usize, seed: u64) -> ComplexMatrix {
        let mut rng = SplitMix64::new(seed);
        ComplexMatrix::from_fn(rows, cols, |_, _| {
            Complex64::new(rng.next_gaussian(), rng.next_gaussian())
        })
    }

    /// Power iteration on A*A — the independent oracle for the top singular value.
    fn power_iteration_norm(a: &ComplexMatrix, seed: u64) -> f64 {
        let gram = a.adjoint().matmul(a);
        let mut rng = SplitMix64::new(seed);
        let mut v = rng.next_unit_vector(a.cols());
        let mut lambda = 0.0;
        for _ in 0..5000 {
            let w = gram.mul_vec(&v);
            let norm = vec_norm(&w);
            if norm == 0.0 {
                return 0.0;
            }
            lambda = norm;
            v = w.into_iter().map(|z| z / norm).collect();
        }
        lambda.sqrt()
    }

    #[test]
    fn zero_matrix_has_zero_norm() {
        assert_eq!(operator_norm(&ComplexMatrix::zeros(4, 3)), 0.0);
    }

    #[test]
    fn projection_has_unit_norm() {
        let mut p = ComplexMatrix::zeros(5, 5);
        p[(2, 2)] = Complex64::ONE;
        p[(4, 4)] = Complex64::ONE;
        assert!((operator_norm(&p) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn operator_norm_matches_power_iteration() {
        let a = random_matrix(6, 6, 0xABCD);
        let direct = operator_norm(&a);
        let oracle = power_iteration_norm(&a, 17);
        assert!((direct - oracle).abs() < 1e-9, "{direct} vs {oracle}");
    }

    #[test]
    fn operator_norm_bounded_by_hs_norm() {
        for seed in 0..8 {
            let a = random_matrix(5, 7, seed);
            assert!(operator_norm(&a) <= a.hs_norm() + 1e-12);
        }
    }

    #[test]
    fn svd_reconstructs_input() {
        let a = random_matrix(6, 4, 3);
        let d = svd(&a, DEFAULT_TOL).unwrap();
        // A = U diag(s) V* over the kept rank.
        let mut us = d.left.clone();
        for j in 0..d.rank {
            for i in 0..us.rows() {
                us[(i, j)] *= d.singular_values[j];
            }
        }
        let mut vr = ComplexMatrix::zeros(a.cols(), d.rank);
        for j in 0..d.rank {
            vr.set_column(j, &d.right.column(j));
        }
        let rebuilt = us.matmul(&vr.adjoint());
        assert!((&rebuilt - &a).hs_norm() < 1e-9 * a.hs_norm());
    }

    #[test]
    fn rank_of_outer_product_is_one() {
        let mut rng = SplitMix64::new(5);
        let u = rng.next_unit_vector(6);
        let v = rng.next_unit_vector(6);
        let a = ComplexMatrix::from_fn(6, 6, |i, j| u[i] * v[j].conj());
        assert_eq!(rank(&a, DEFAULT_TOL).unwrap(), 1);
        let nullspace = nullspace_basis(&a, DEFAULT_TOL).unwrap();
        assert_eq!(nullspace.cols(), 5);
        // A maps its nullspace to ~0.
        for j in 0..5 {
            let image = a.mul_vec(&nullspace.column(j));
            assert!(vec_norm(&image) < 1e-8);
        }
    }

    #[test]
    fn orthonormalize_produces_orthonormal_columns() {
        let mut rng = SplitMix64::new(11);
        let vs: Vec<Vec<Complex64>> = (0..3).map(|_| rng.next_complex_vector(5)).collect();
        let basis = orthonormalize(vs);
        assert_eq!(basis.len(), 3);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((vec_inner(&basis[i], &basis[j]).norm() - expected).abs() < 1e-12);
            }
        }
    }
}

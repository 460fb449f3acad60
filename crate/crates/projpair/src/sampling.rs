//! Reproducible random projections and pairs, seeded through [`SplitMix64`].
//!
//! Used by the test suites and handy for experiments: equal-rank random
//! pairs are almost surely admissible (trivial H10/H01 corners), and
//! [`model_pair`] synthesizes a pair with prescribed Halmos data, which makes
//! ground truth available for free.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::matrix::{ComplexMatrix, DEFAULT_TOL};
use crate::pair::ProjectionPair;
use crate::rng::SplitMix64;
use crate::svd::orthonormalize;

/// Haar-like random unitary: Gram-Schmidt applied to a Gaussian matrix.
pub fn random_unitary(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = SplitMix64::new(seed);
    loop {
        let vs: Vec<Vec<Complex64>> = (0..n).map(|_| rng.next_complex_vector(n)).collect();
        let cols = orthonormalize(vs);
        if cols.len() == n {
            return ComplexMatrix::from_columns(n, &cols);
        }
    }
}

/// Random orthogonal projection of the given rank.
pub fn random_projection(n: usize, rank: usize, seed: u64) -> ComplexMatrix {
    assert!(rank <= n);
    let u = random_unitary(n, seed);
    let cols: Vec<Vec<Complex64>> = (0..rank).map(|j| u.column(j)).collect();
    let b = ComplexMatrix::from_columns(n, &cols);
    b.matmul(&b.adjoint())
}

/// Independent random projections of the given ranks.
pub fn random_pair(n: usize, rank_p: usize, rank_q: usize, seed: u64) -> ProjectionPair {
    let p = random_projection(n, rank_p, seed.wrapping_mul(2).wrapping_add(1));
    let q = random_projection(n, rank_q, seed.wrapping_mul(2).wrapping_add(2));
    ProjectionPair::new(p, q, DEFAULT_TOL).expect("constructed projections")
}

/// Equal-rank random pair: generic subspace dimensions make H10 and H01
/// trivial almost surely, so a unique minimal geodesic exists.
pub fn random_admissible_pair(n: usize, rank: usize, seed: u64) -> ProjectionPair {
    random_pair(n, rank, rank, seed)
}

/// Projector onto the unit vector at `angle` from e1 in the (e1, e2) plane.
pub fn plane_rotation_projector(n: usize, angle: f64) -> ComplexMatrix {
    let mut v = vec![Complex64::ZERO; n];
    v[0] = Complex64::new(angle.cos(), 0.0);
    v[1] = Complex64::new(angle.sin(), 0.0);
    ComplexMatrix::from_fn(n, n, |i, j| v[i] * v[j].conj())
}

/// Builds a pair with prescribed Halmos data — corner dimensions and generic
/// angles — hidden behind a random unitary change of basis. The angles must
/// lie strictly in (0, pi/2).
pub fn model_pair(
    dims: (usize, usize, usize, usize),
    angles: &[f64],
    seed: u64,
) -> ProjectionPair {
    let (dim11, dim00, dim10, dim01) = dims;
    assert!(angles.iter().all(|&t| t > 0.0 && t < FRAC_PI_2));
    let m = angles.len();
    let n = dim11 + dim00 + dim10 + dim01 + 2 * m;

    let mut p = ComplexMatrix::zeros(n, n);
    let mut q = ComplexMatrix::zeros(n, n);
    let mut offset = 0;
    for i in 0..dim11 {
        p[(offset + i, offset + i)] = Complex64::ONE;
        q[(offset + i, offset + i)] = Complex64::ONE;
    }
    offset += dim11 + dim00;
    for i in 0..dim10 {
        p[(offset + i, offset + i)] = Complex64::ONE;
    }
    offset += dim10;
    for i in 0..dim01 {
        q[(offset + i, offset + i)] = Complex64::ONE;
    }
    offset += dim01;
    for (i, &theta) in angles.iter().enumerate() {
        let (s, c) = theta.sin_cos();
        p[(offset + i, offset + i)] = Complex64::ONE;
        q[(offset + i, offset + i)] = Complex64::new(c * c, 0.0);
        q[(offset + i, offset + m + i)] = Complex64::new(c * s, 0.0);
        q[(offset + m + i, offset + i)] = Complex64::new(c * s, 0.0);
        q[(offset + m + i, offset + m + i)] = Complex64::new(s * s, 0.0);
    }

    let w = random_unitary(n, seed);
    let p = w.matmul(&p.matmul(&w.adjoint()));
    let q = w.matmul(&q.matmul(&w.adjoint()));
    ProjectionPair::new(p, q, DEFAULT_TOL).expect("conjugated model blocks")
}

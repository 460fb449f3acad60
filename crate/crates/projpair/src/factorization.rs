//! Canonical factorization of a product of two orthogonal projections.
//!
//! Any `T = PQ` with P, Q orthogonal projections can also be written as
//! `T = P0 Q0` with `P0` projecting onto the closure of `R(T)` and `Q0` onto
//! `N(T)^perp`. That pair is minimal: `||P0 f - Q0 f|| <= ||P f - Q f||` for
//! every vector f, hence also in operator norm.

use crate::error::{Error, Result};
use crate::matrix::{vec_norm, vec_sub, ComplexMatrix};
use crate::rng::SplitMix64;
use crate::svd::{operator_norm, orthonormalize, svd};

/// A product `T = P0 Q0` of two orthogonal projections.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub t: ComplexMatrix,
    pub p0: ComplexMatrix,
    pub q0: ComplexMatrix,
    pub canonical: bool,
}

/// Canonical factorization `T = P_{R(T)} P_{N(T)^perp}`.
///
/// The range basis comes from the SVD; the row-space basis is taken as
/// `T* u` over the kept left vectors, which keeps both subspaces accurate
/// even when T has small nonzero singular values. Fails with
/// [`Error::NotAProjectionProduct`] if `||P0 Q0 - T|| > tol`.
pub fn canonical_factorization(t: &ComplexMatrix, tol: f64) -> Result<Factorization> {
    let n = t.require_square()?;
    let decomposition = svd(t, crate::matrix::DEFAULT_TOL)?;

    let left = &decomposition.left;
    let p0 = if decomposition.rank == 0 {
        ComplexMatrix::zeros(n, n)
    } else {
        left.matmul(&left.adjoint())
    };

    let adjoint = t.adjoint();
    let row_cols: Vec<Vec<_>> = (0..decomposition.rank)
        .map(|j| adjoint.mul_vec(&left.column(j)))
        .collect();
    let row_basis = orthonormalize(row_cols);
    if row_basis.len() != decomposition.rank {
        return Err(Error::InternalConsistency {
            what: "row-space basis rank",
            residual: (decomposition.rank as f64) - row_basis.len() as f64,
        });
    }
    let q0 = if decomposition.rank == 0 {
        ComplexMatrix::zeros(n, n)
    } else {
        let b = ComplexMatrix::from_columns(n, &row_basis);
        b.matmul(&b.adjoint())
    };

    let residual = (&p0.matmul(&q0) - t).hs_norm();
    if residual > tol {
        return Err(Error::NotAProjectionProduct { residual, tol });
    }
    Ok(Factorization {
        t: t.clone(),
        p0,
        q0,
        canonical: true,
    })
}

/// Whether `(P, Q)` is already the canonical factorization of its product:
/// `rank(PQ) = rank(P) = rank(Q)`, i.e. `R(PQ)` is dense in `R(P)` and
/// `N(PQ) = N(Q)`.
pub fn is_canonical(p: &ComplexMatrix, q: &ComplexMatrix, tol: f64) -> Result<bool> {
    p.require_projection(tol)?;
    q.require_projection(tol)?;
    p.require_same_shape(q, "is_canonical")?;
    let t = p.matmul(q);
    let rank_t = svd(&t, crate::matrix::DEFAULT_TOL)?.rank;
    let rank_p = p.trace().re.round() as usize;
    let rank_q = q.trace().re.round() as usize;
    Ok(rank_t == rank_p && rank_t == rank_q)
}

/// Sampled comparison of a factorization against the canonical one.
#[derive(Debug, Clone)]
pub struct FactorizationComparison {
    /// `max over samples of ||P0 f - Q0 f|| - ||P f - Q f||`; at most ~0.
    pub max_violation: f64,
    /// `||P - Q|| - ||P0 - Q0||`; at least ~0.
    pub norm_gap: f64,
    pub samples: usize,
    pub seed: u64,
}

/// Draws `samples` unit vectors from SplitMix64 substreams of `seed` and
/// measures the pointwise minimality of the canonical pair of `T = PQ`,
/// plus the operator-norm gap.
pub fn factorization_compare(
    p: &ComplexMatrix,
    q: &ComplexMatrix,
    samples: usize,
    seed: u64,
) -> Result<FactorizationComparison> {
    p.require_projection(1e-8)?;
    q.require_projection(1e-8)?;
    p.require_same_shape(q, "factorization_compare")?;
    let n = p.rows();
    let t = p.matmul(q);
    let factorization = canonical_factorization(&t, 1e-8)?;

    let mut max_violation = f64::NEG_INFINITY;
    for k in 0..samples {
        let mut rng = SplitMix64::substream(seed, k as u64);
        let f = rng.next_unit_vector(n);
        let canonical_gap = vec_norm(&vec_sub(
            &factorization.p0.mul_vec(&f),
            &factorization.q0.mul_vec(&f),
        ));
        let given_gap = vec_norm(&vec_sub(&p.mul_vec(&f), &q.mul_vec(&f)));
        max_violation = max_violation.max(canonical_gap - given_gap);
    }
    if samples == 0 {
        max_violation = 0.0;
    }

    let norm_gap =
        operator_norm(&(p - q)) - operator_norm(&(&factorization.p0 - &factorization.q0));
    Ok(FactorizationComparison {
        max_violation,
        norm_gap,
        samples,
        seed,
    })
}

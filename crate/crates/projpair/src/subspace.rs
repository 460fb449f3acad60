//! Subspaces as orthonormal column bases, the projectors they induce, and
//! intersections of projection ranges.

use crate::eig::herm_eig;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// A subspace of an ambient space, carried by an orthonormal basis. Zero
/// columns encode the trivial subspace.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    basis: ComplexMatrix,
}

impl SubspaceBasis {
    /// Wraps a basis matrix, verifying `||B* B - I|| <= tol`.
    pub fn new(basis: ComplexMatrix, tol: f64) -> Result<Self> {
        let k = basis.cols();
        let residual = (&basis.adjoint().matmul(&basis) - &ComplexMatrix::identity(k)).hs_norm();
        if residual > tol * (k as f64).max(1.0) {
            return Err(Error::NotOrthonormal { residual, tol });
        }
        Ok(Self {
            ambient_dim: basis.rows(),
            basis,
        })
    }

    pub fn trivial(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: ComplexMatrix::zeros(ambient_dim, 0),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Subspace dimension (column count).
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &ComplexMatrix {
        &self.basis
    }
}

/// `P = B B*`: the orthogonal projection onto the span of the basis.
pub fn projector_from_basis(basis: &SubspaceBasis) -> ComplexMatrix {
    if basis.dim() == 0 {
        return ComplexMatrix::zeros(basis.ambient_dim(), basis.ambient_dim());
    }
    basis.basis().matmul(&basis.basis().adjoint())
}

/// Orthonormal basis of the range of a projection, from its eigenvectors at
/// eigenvalue 1. Cleaner than an SVD: the spectrum of a projection is {0, 1}.
pub fn projection_range_basis(p: &ComplexMatrix, tol: f64) -> Result<SubspaceBasis> {
    p.require_projection(tol)?;
    let spectrum = herm_eig(p, tol)?;
    let cols: Vec<Vec<_>> = spectrum
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, &lambda)| lambda > 0.5)
        .map(|(j, _)| spectrum.eigenvectors.column(j))
        .collect();
    SubspaceBasis::new(ComplexMatrix::from_columns(p.rows(), &cols), tol)
}

/// `R(P) ∩ R(Q)` as the eigenspace of `P + Q` at eigenvalue 2.
///
/// Eigenvalues within `tol` of 2 are included. Rejects inputs that fail the
/// projection test.
pub fn subspace_intersection(
    p: &ComplexMatrix,
    q: &ComplexMatrix,
    tol: f64,
) -> Result<SubspaceBasis> {
    p.require_projection(tol.max(crate::matrix::DEFAULT_TOL))?;
    q.require_projection(tol.max(crate::matrix::DEFAULT_TOL))?;
    p.require_same_shape(q, "subspace_intersection")?;

    let sum = p + q;
    let spectrum = herm_eig(&sum, crate::matrix::DEFAULT_TOL)?;
    let cols: Vec<Vec<_>> = spectrum
        .eigenvalues
        .iter()
        .enumerate()
        .filter(|(_, &lambda)| (lambda - 2.0).abs() <= tol)
        .map(|(j, _)| spectrum.eigenvectors.column(j))
        .collect();
    SubspaceBasis::new(ComplexMatrix::from_columns(p.rows(), &cols), tol)
}

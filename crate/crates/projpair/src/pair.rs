//! Halmos decomposition of a pair of orthogonal projections.
//!
//! C^n splits into four corner subspaces
//!
//! ```text
//! H11 = R(P) ∩ R(Q)   H00 = N(P) ∩ N(Q)   H10 = R(P) ∩ N(Q)   H01 = N(P) ∩ R(Q)
//! ```
//!
//! plus a generic part isometric to L x L on which the pair acts as a direct
//! sum of 2x2 rotation blocks: `P = [[1,0],[0,0]]` and
//! `Q = [[C^2, CS],[CS, S^2]]` with `C = diag(cos theta_k)`,
//! `S = diag(sin theta_k)` and angles strictly inside `(0, pi/2)`. Everything
//! here is read off the spectrum of the difference `P - Q`: the corner
//! subspaces are its eigenspaces at 0 and +-1, the angles are the arcsines
//! of its interior eigenvalues.

use crate::eig::{herm_eig, phase_normalize_columns};
use crate::error::{Error, Result};
use crate::matrix::{vec_norm, vec_scale, ComplexMatrix, DEFAULT_TOL};
use crate::subspace::{projection_range_basis, SubspaceBasis};
use crate::svd::{operator_norm, svd};

use num_complex::Complex64;

/// Eigenvalues of `P - Q` within this distance of {0, +1, -1} are assigned
/// to corner subspaces; everything else is generic. Configurable per call:
/// Fourier pairs push angles toward pi/2 as n grows.
pub const CORNER_TOL: f64 = 1e-8;

/// Internal sanity threshold for reassembled block forms. Deliberately
/// loose: pairs whose angles crowd against the corner thresholds (Fourier
/// pairs at large n) entangle the near-pi/2 angle cluster with the H10/H01
/// eigenvectors, and no finite-precision construction can separate them
/// cleanly. Well-conditioned pairs reassemble to ~1e-12; the documented
/// 1e-8 figure is asserted in tests on random pairs.
const BLOCK_TOL: f64 = 1e-3;

/// A validated pair of same-size orthogonal projections.
#[derive(Debug, Clone)]
pub struct ProjectionPair {
    p: ComplexMatrix,
    q: ComplexMatrix,
    dim: usize,
}

impl ProjectionPair {
    /// Validates both matrices as orthogonal projections of equal size.
    pub fn new(p: ComplexMatrix, q: ComplexMatrix, tol: f64) -> Result<Self> {
        p.require_projection(tol)?;
        q.require_projection(tol)?;
        p.require_same_shape(&q, "ProjectionPair")?;
        let dim = p.rows();
        Ok(Self { p, q, dim })
    }

    pub fn p(&self) -> &ComplexMatrix {
        &self.p
    }

    pub fn q(&self) -> &ComplexMatrix {
        &self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The pair with the roles of P and Q exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            p: self.q.clone(),
            q: self.p.clone(),
            dim: self.dim,
        }
    }
}

/// The Halmos decomposition data of a pair.
#[derive(Debug, Clone)]
pub struct HalmosDecomposition {
    pub dim11: usize,
    pub dim00: usize,
    pub dim10: usize,
    pub dim01: usize,
    pub basis11: SubspaceBasis,
    pub basis00: SubspaceBasis,
    pub basis10: SubspaceBasis,
    pub basis01: SubspaceBasis,
    /// First copy of L: unit vectors `e_k` spanning the P-range side of each
    /// 2-dimensional invariant subspace of the generic part.
    pub generic_p_basis: SubspaceBasis,
    /// Second copy of L: `f_k = (1-P) Q e_k` normalized; the cross term
    /// `f* Q e` is then a positive real, which fixes the sign of `sin theta`.
    pub generic_q_complement_basis: SubspaceBasis,
    /// Rotation angles of the generic part, ascending, strictly in (0, pi/2).
    pub angles: Vec<f64>,
}

impl HalmosDecomposition {
    pub fn generic_dim(&self) -> usize {
        self.angles.len()
    }

    pub fn corner_dims(&self) -> (usize, usize, usize, usize) {
        (self.dim11, self.dim00, self.dim10, self.dim01)
    }

    /// Unitary basis `[B11 | B00 | B10 | B01 | E | F]` in which the pair
    /// takes its block form.
    pub fn assembled_basis(&self) -> ComplexMatrix {
        ComplexMatrix::hstack(&[
            self.basis11.basis(),
            self.basis00.basis(),
            self.basis10.basis(),
            self.basis01.basis(),
            self.generic_p_basis.basis(),
            self.generic_q_complement_basis.basis(),
        ])
    }

    /// Block form of P in the assembled basis: `1 ⊕ 0 ⊕ 1 ⊕ 0 ⊕ [[1,0],[0,0]]`.
    pub fn expected_block_p(&self) -> ComplexMatrix {
        let n = self.ambient_dim();
        let m = self.generic_dim();
        let mut out = ComplexMatrix::zeros(n, n);
        let mut offset = 0;
        for i in 0..self.dim11 {
            out[(offset + i, offset + i)] = Complex64::ONE;
        }
        offset += self.dim11 + self.dim00;
        for i in 0..self.dim10 {
            out[(offset + i, offset + i)] = Complex64::ONE;
        }
        offset += self.dim10 + self.dim01;
        for i in 0..m {
            out[(offset + i, offset + i)] = Complex64::ONE;
        }
        out
    }

    /// Block form of Q: `1 ⊕ 0 ⊕ 0 ⊕ 1 ⊕ [[C^2, CS],[CS, S^2]]`.
    pub fn expected_block_q(&self) -> ComplexMatrix {
        let n = self.ambient_dim();
        let m = self.generic_dim();
        let mut out = ComplexMatrix::zeros(n, n);
        let mut offset = 0;
        for i in 0..self.dim11 {
            out[(offset + i, offset + i)] = Complex64::ONE;
        }
        offset += self.dim11 + self.dim00 + self.dim10;
        for i in 0..self.dim01 {
            out[(offset + i, offset + i)] = Complex64::ONE;
        }
        offset += self.dim01;
        for (i, &theta) in self.angles.iter().enumerate() {
            let (s, c) = theta.sin_cos();
            out[(offset + i, offset + i)] = Complex64::new(c * c, 0.0);
            out[(offset + i, offset + m + i)] = Complex64::new(c * s, 0.0);
            out[(offset + m + i, offset + i)] = Complex64::new(c * s, 0.0);
            out[(offset + m + i, offset + m + i)] = Complex64::new(s * s, 0.0);
        }
        out
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim11 + self.dim00 + self.dim10 + self.dim01 + 2 * self.generic_dim()
    }

    /// Clusters the angles into an [`AngleSpectrum`]; the pi/2 multiplicity
    /// is the total dimension of the H10/H01 corners.
    pub fn angle_spectrum(&self, cluster_tol: f64) -> AngleSpectrum {
        AngleSpectrum::from_sorted_angles(&self.angles, cluster_tol, self.dim10 + self.dim01)
    }
}

/// Distinct angles with multiplicities, plus the multiplicity of pi/2.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleSpectrum {
    pub gammas: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub halfpi_multiplicity: usize,
}

impl AngleSpectrum {
    /// Clusters a sorted angle list: a new gamma starts when the gap to the
    /// previous angle exceeds `cluster_tol`.
    pub fn from_sorted_angles(angles: &[f64], cluster_tol: f64, halfpi_multiplicity: usize) -> Self {
        let mut gammas: Vec<f64> = Vec::new();
        let mut multiplicities: Vec<usize> = Vec::new();
        for &a in angles {
            match gammas.last() {
                Some(&g) if a - g <= cluster_tol => *multiplicities.last_mut().unwrap() += 1,
                _ => {
                    gammas.push(a);
                    multiplicities.push(1);
                }
            }
        }
        Self {
            gammas,
            multiplicities,
            halfpi_multiplicity,
        }
    }

    pub fn min_gamma(&self) -> Option<f64> {
        self.gammas.first().copied()
    }
}

fn column_basis(n: usize, cols: &[Vec<Complex64>], tol: f64) -> Result<SubspaceBasis> {
    let mut m = ComplexMatrix::from_columns(n, cols);
    phase_normalize_columns(&mut m);
    SubspaceBasis::new(m, tol)
}

/// Computes the Halmos decomposition.
///
/// `corner_tol` decides how close an eigenvalue of `P - Q` must be to
/// {0, +1, -1} to be assigned to a corner subspace. The kernel of `P - Q` is
/// split into H11 and H00 by a secondary eigendecomposition of P restricted
/// to it.
pub fn halmos_decompose(pair: &ProjectionPair, corner_tol: f64) -> Result<HalmosDecomposition> {
    let n = pair.dim();
    let p = pair.p();
    let q = pair.q();
    let difference = p - q;
    let spectrum = herm_eig(&difference, DEFAULT_TOL)?;

    let mut kernel_cols: Vec<Vec<Complex64>> = Vec::new();
    let mut cols10: Vec<Vec<Complex64>> = Vec::new();
    let mut cols01: Vec<Vec<Complex64>> = Vec::new();
    let mut generic_positive: Vec<(f64, Vec<Complex64>)> = Vec::new();
    let mut negative_count = 0usize;

    for (j, &lambda) in spectrum.eigenvalues.iter().enumerate() {
        let excess = lambda.abs() - 1.0;
        if excess > corner_tol {
            return Err(Error::InternalConsistency {
                what: "eigenvalue of P - Q outside [-1, 1]",
                residual: excess,
            });
        }
        let column = spectrum.eigenvectors.column(j);
        if (lambda - 1.0).abs() <= corner_tol {
            cols10.push(column);
        } else if (lambda + 1.0).abs() <= corner_tol {
            cols01.push(column);
        } else if lambda.abs() <= corner_tol {
            kernel_cols.push(column);
        } else if lambda > 0.0 {
            generic_positive.push((lambda, column));
        } else {
            negative_count += 1;
        }
    }

    if generic_positive.len() != negative_count {
        return Err(Error::InternalConsistency {
            what: "generic spectrum of P - Q is not symmetric",
            residual: (generic_positive.len() as f64 - negative_count as f64).abs(),
        });
    }

    // Split N(P - Q) by P: there P and Q agree, so P restricts to a
    // projection whose range is H11 and whose kernel is H00.
    let mut cols11: Vec<Vec<Complex64>> = Vec::new();
    let mut cols00: Vec<Vec<Complex64>> = Vec::new();
    if !kernel_cols.is_empty() {
        let b0 = ComplexMatrix::from_columns(n, &kernel_cols);
        let restricted = b0.adjoint().matmul(&p.matmul(&b0));
        let sub = herm_eig(&restricted, DEFAULT_TOL)?;
        for (j, &mu) in sub.eigenvalues.iter().enumerate() {
            let lifted = b0.mul_vec(&sub.eigenvectors.column(j));
            if (mu - 1.0).abs() <= corner_tol.max(1e-7) {
                cols11.push(lifted);
            } else if mu.abs() <= corner_tol.max(1e-7) {
                cols00.push(lifted);
            } else {
                return Err(Error::InternalConsistency {
                    what: "P restricted to N(P - Q) is not a projection",
                    residual: mu.min(1.0 - mu).abs(),
                });
            }
        }
    }

    // Generic part, ascending by angle. e_k is the normalized P-image of the
    // eigenvector, f_k the normalized (1-P)-component of Q e_k; the latter
    // choice makes f* Q e real positive, pinning the block sign. The phase
    // of e_k is fixed *before* f_k is derived so the pair rotates together.
    generic_positive.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut angles = Vec::with_capacity(generic_positive.len());
    let mut cols_e: Vec<Vec<Complex64>> = Vec::new();
    let mut cols_f: Vec<Vec<Complex64>> = Vec::new();
    for (lambda, u) in &generic_positive {
        let theta = lambda.clamp(-1.0, 1.0).asin();
        let pu = p.mul_vec(u);
        let pu_norm = vec_norm(&pu);
        if pu_norm < 1e-8 {
            return Err(Error::InternalConsistency {
                what: "generic eigenvector has vanishing P-component",
                residual: pu_norm,
            });
        }
        let mut e = vec_scale(&pu, Complex64::new(1.0 / pu_norm, 0.0));
        if let Some(z) = e.iter().find(|z| z.norm() > 1e-12) {
            let phase = z.conj() / z.norm();
            e = vec_scale(&e, phase);
        }
        let qe = q.mul_vec(&e);
        let mut w = qe.clone();
        let pqe = p.mul_vec(&qe);
        for (wi, pi) in w.iter_mut().zip(&pqe) {
            *wi -= pi;
        }
        let w_norm = vec_norm(&w);
        if w_norm < 1e-12 {
            return Err(Error::InternalConsistency {
                what: "generic eigenvector has vanishing (1-P)Q-component",
                residual: w_norm,
            });
        }
        angles.push(theta);
        cols_e.push(e);
        cols_f.push(vec_scale(&w, Complex64::new(1.0 / w_norm, 0.0)));
    }

    // One global Gram-Schmidt pass over the assembled columns, corners
    // first. The raw vectors can contaminate each other near the corner
    // thresholds (eigenvector mixing inside near-degenerate clusters); the
    // pass restores a strictly orthonormal basis while preserving the block
    // order, the angle pairing, and (to first order) the cross-term phases.
    let counts = [
        cols11.len(),
        cols00.len(),
        cols10.len(),
        cols01.len(),
        cols_e.len(),
        cols_f.len(),
    ];
    let mut all_columns = Vec::with_capacity(counts.iter().sum());
    for group in [&cols11, &cols00, &cols10, &cols01, &cols_e, &cols_f] {
        all_columns.extend(group.iter().cloned());
    }
    let cleaned = crate::svd::orthonormalize(all_columns);
    if cleaned.len() != counts.iter().sum::<usize>() {
        return Err(Error::InternalConsistency {
            what: "Halmos basis lost rank under orthonormalization",
            residual: (counts.iter().sum::<usize>() - cleaned.len()) as f64,
        });
    }
    let mut cursor = 0;
    let mut take = |count: usize| {
        let slice = cleaned[cursor..cursor + count].to_vec();
        cursor += count;
        slice
    };
    let (g11, g00, g10, g01, ge, gf) = (
        take(counts[0]),
        take(counts[1]),
        take(counts[2]),
        take(counts[3]),
        take(counts[4]),
        take(counts[5]),
    );

    let basis_tol = 1e-7;
    let decomposition = HalmosDecomposition {
        dim11: counts[0],
        dim00: counts[1],
        dim10: counts[2],
        dim01: counts[3],
        basis11: column_basis(n, &g11, basis_tol)?,
        basis00: column_basis(n, &g00, basis_tol)?,
        basis10: column_basis(n, &g10, basis_tol)?,
        basis01: column_basis(n, &g01, basis_tol)?,
        // e was phase-normalized inline before f was derived from it;
        // re-normalizing phases here would break the positive cross term.
        generic_p_basis: SubspaceBasis::new(ComplexMatrix::from_columns(n, &ge), basis_tol)?,
        generic_q_complement_basis: SubspaceBasis::new(
            ComplexMatrix::from_columns(n, &gf),
            basis_tol,
        )?,
        angles,
    };

    if decomposition.ambient_dim() != n {
        return Err(Error::InternalConsistency {
            what: "Halmos dimensions do not sum to the ambient dimension",
            residual: (decomposition.ambient_dim() as f64 - n as f64).abs(),
        });
    }

    let assembled = decomposition.assembled_basis();
    let p_block = assembled.adjoint().matmul(&p.matmul(&assembled));
    let q_block = assembled.adjoint().matmul(&q.matmul(&assembled));
    let residual_p = (&p_block - &decomposition.expected_block_p()).hs_norm();
    let residual_q = (&q_block - &decomposition.expected_block_q()).hs_norm();
    let residual = residual_p.max(residual_q);
    if residual > BLOCK_TOL {
        return Err(Error::InternalConsistency {
            what: "Halmos block-form residual",
            residual,
        });
    }

    Ok(decomposition)
}

/// Principal angles between R(P) and R(Q), ascending in [0, pi/2].
///
/// Computed independently of [`halmos_decompose`]: the cosines are the
/// singular values of `Bp* Bq` for orthonormal range bases, clipped to
/// [0, 1]. Returns `min(rank P, rank Q)` angles; zeros come from H11,
/// right angles from range/nullspace overlap.
pub fn principal_angles(pair: &ProjectionPair) -> Result<Vec<f64>> {
    let bp = projection_range_basis(pair.p(), DEFAULT_TOL)?;
    let bq = projection_range_basis(pair.q(), DEFAULT_TOL)?;
    let count = bp.dim().min(bq.dim());
    if count == 0 {
        return Ok(Vec::new());
    }
    let m = bp.basis().adjoint().matmul(bq.basis());
    let decomposition = svd(&m, DEFAULT_TOL)?;
    Ok(decomposition
        .singular_values
        .iter()
        .take(count)
        .map(|&sigma| sigma.clamp(0.0, 1.0).acos())
        .collect())
}

/// Corner dimensions `(dim H11, dim H00, dim H10, dim H01)`.
pub fn position_dims(pair: &ProjectionPair) -> Result<(usize, usize, usize, usize)> {
    Ok(halmos_decompose(pair, CORNER_TOL)?.corner_dims())
}

/// Branch classification of the Krein-Krasnoselskii-Milman alternative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KkmBranch {
    /// `||P(1-Q)|| < 1 <= ||Q(1-P)||`
    First,
    /// `||Q(1-P)|| < 1 <= ||P(1-Q)||`
    Second,
    /// both factor norms reach 1
    Third,
    /// both factor norms below 1; possible only when `||P-Q|| < 1`
    GenericStrict,
}

impl KkmBranch {
    pub fn as_str(&self) -> &'static str {
        match self {
            KkmBranch::First => "first",
            KkmBranch::Second => "second",
            KkmBranch::Third => "third",
            KkmBranch::GenericStrict => "generic-strict",
        }
    }
}

/// Both sides of `||P - Q|| = max(||P(1-Q)||, ||Q(1-P)||)` plus the branch.
#[derive(Debug, Clone)]
pub struct KkmReport {
    pub lhs: f64,
    pub rhs: f64,
    pub norm_p_not_q: f64,
    pub norm_q_not_p: f64,
    pub residual: f64,
    pub branch: KkmBranch,
}

/// Evaluates the KKM formula and classifies the pair.
pub fn kkm_identity_check(pair: &ProjectionPair) -> KkmReport {
    let identity = ComplexMatrix::identity(pair.dim());
    let lhs = operator_norm(&(pair.p() - pair.q()));
    let norm_p_not_q = operator_norm(&pair.p().matmul(&(&identity - pair.q())));
    let norm_q_not_p = operator_norm(&pair.q().matmul(&(&identity - pair.p())));
    let rhs = norm_p_not_q.max(norm_q_not_p);
    let threshold = 1.0 - CORNER_TOL;
    let branch = match (norm_p_not_q < threshold, norm_q_not_p < threshold) {
        (true, false) => KkmBranch::First,
        (false, true) => KkmBranch::Second,
        (false, false) => KkmBranch::Third,
        (true, true) => KkmBranch::GenericStrict,
    };
    KkmReport {
        lhs,
        rhs,
        norm_p_not_q,
        norm_q_not_p,
        residual: (lhs - rhs).abs(),
        branch,
    }
}

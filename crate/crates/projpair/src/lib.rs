//! Finite-dimensional calculus of pairs of orthogonal projections.
//!
//! Given two orthogonal projections `P` and `Q` on C^n the crate computes
//! their Halmos decomposition (corner subspaces plus rotation angles of the
//! generic part), the minimal Grassmann geodesic joining them when it is
//! unique, and the uncertainty-style norm identities these produce for the
//! time-limiting / band-limiting pairs of the discrete Fourier transform.
//!
//! The numerical substrate is self-contained: a cyclic Jacobi eigensolver
//! for dense complex Hermitian matrices and everything derived from it.
//! See the book under `book/` for the concept guide and the CLI manual.

pub mod eig;
pub mod error;
pub mod factorization;
pub mod fourier;
pub mod geodesic;
pub mod io;
pub mod localization;
pub mod matrix;
pub mod pair;
pub mod report;
pub mod rng;
pub mod sampling;
pub mod subspace;
pub mod svd;

pub use num_complex::{self, Complex64};

pub use eig::{herm_eig, unitary_exp, HermitianSpectrum};
pub use error::{Error, Result};
pub use factorization::{
    canonical_factorization, factorization_compare, is_canonical, Factorization,
    FactorizationComparison,
};
pub use fourier::{
    build_dft, commutator, dft_eigenprojections, dft_log, even_projection,
    symmetric_identity_check, DftCalculus, DftEigenprojections, SymmetricIdentityReport,
};
pub use geodesic::{
    curve_length, geodesic_exponent, geodesic_point, grassmann_distance, reduced_min_modulus,
    GeodesicExponent,
};
pub use localization::{
    band_limiter, concentration_check, localization_report, time_limiter, uncertainty_sweep,
    ConcentrationReport, IndexSet, LocalizationPair, LocalizationReport,
};
pub use matrix::{ComplexMatrix, DEFAULT_TOL};
pub use pair::{
    halmos_decompose, kkm_identity_check, position_dims, principal_angles, AngleSpectrum,
    HalmosDecomposition, KkmBranch, KkmReport, ProjectionPair, CORNER_TOL,
};
pub use report::{
    dft_report, factorize_report, geodesic_report, render_sweep, DftReport, FactorizeReport,
    GeodesicReport, ReportFormat,
};
pub use subspace::{projector_from_basis, subspace_intersection, SubspaceBasis};
pub use svd::{operator_norm, svd, Svd};

//! The unitary DFT, its four spectral projections, and its logarithm.
//!
//! With the kernel `U[j,k] = exp(-2 pi i jk / n) / sqrt(n)` the matrix U is
//! unitary with `U^4 = I`, and `U^2` is the index-negation permutation
//! `j -> -j (mod n)`. The eigenprojections at 1, -1, i, -i are polynomials
//! in U, the Hermitian logarithm is
//!
//! ```text
//! H = -pi E_{-1} + (pi/2) E_i - (pi/2) E_{-i},   e^{iH} = U,  ||H|| = pi,
//! ```
//!
//! and `E_e = (1 + U^2)/2` projects onto the even (negation-invariant)
//! vectors. Expanding H through the projection polynomials gives
//!
//! ```text
//! H = (pi/4) { -1 + (1-i) U - U^2 + (1+i) U^3 },
//! ```
//!
//! which is Hermitian term by term (the U and U^3 coefficients are mutual
//! conjugates). For an index set symmetric under negation, `[U^2, P_I] = 0`
//! collapses the commutator to the factored form
//!
//! ```text
//! [H, P_I] = (pi/2) (E_e - i E_o) [U, P_I],     E_o = 1 - E_e,
//! ```
//!
//! and because `E_e - i E_o` is unitary and `[U, P] = U (P - Q)`, the norm
//! identity `||[H, P_I]|| = (pi/2) ||P_I - Q_I||` follows; see
//! [`symmetric_identity_check`].

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::localization::{band_limiter, time_limiter, IndexSet};
use crate::matrix::{ComplexMatrix, DEFAULT_TOL};
use crate::svd::operator_norm;

/// Internal sanity threshold for the algebraic identities of the calculus.
const CALC_TOL: f64 = 1e-8;

/// Unitary DFT matrix of size n.
///
/// Phases are computed from `jk mod n` exactly, so `U^4 = I` holds to a few
/// ulps even at n = 512.
pub fn build_dft(n: usize) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("DFT size must be at least 1".into()));
    }
    let scale = 1.0 / (n as f64).sqrt();
    Ok(ComplexMatrix::from_fn(n, n, |j, k| {
        let phase = -2.0 * PI * ((j * k) % n) as f64 / n as f64;
        Complex64::from_polar(scale, phase)
    }))
}

/// The four spectral projections of a unitary with `U^4 = I`.
#[derive(Debug, Clone)]
pub struct DftEigenprojections {
    pub e1: ComplexMatrix,
    pub eneg1: ComplexMatrix,
    pub ei: ComplexMatrix,
    pub enegi: ComplexMatrix,
}

impl DftEigenprojections {
    pub fn ranks(&self) -> (usize, usize, usize, usize) {
        let r = |m: &ComplexMatrix| m.trace().re.round() as usize;
        (r(&self.e1), r(&self.eneg1), r(&self.ei), r(&self.enegi))
    }
}

/// Eigenprojections from the polynomial formulas
///
/// ```text
/// E_{+1} = (1 + U + U^2 + U^3)/4      E_{-1} = (1 - U + U^2 - U^3)/4
/// E_{+i} = (1 - iU - U^2 + iU^3)/4    E_{-i} = (1 + iU - U^2 - iU^3)/4
/// ```
///
/// Rejects U unless `U^4 = I` within `tol`; verifies idempotency,
/// orthogonality, completeness, and reconstruction of U before returning.
pub fn dft_eigenprojections(u: &ComplexMatrix, tol: f64) -> Result<DftEigenprojections> {
    let n = u.require_square()?;
    let identity = ComplexMatrix::identity(n);
    let u2 = u.matmul(u);
    let u3 = u2.matmul(u);
    let u4 = u2.matmul(&u2);
    let residual = (&u4 - &identity).hs_norm();
    if residual > tol * (n as f64).sqrt().max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "U^4 differs from the identity by {residual:.3e}"
        )));
    }

    let i = Complex64::new(0.0, 1.0);
    let quarter = Complex64::new(0.25, 0.0);
    let combine = |c1: Complex64, c2: Complex64, c3: Complex64| {
        let mut sum = identity.clone();
        sum = &sum + &u.scale(c1);
        sum = &sum + &u2.scale(c2);
        sum = &sum + &u3.scale(c3);
        sum.scale(quarter)
    };
    let one = Complex64::ONE;
    let projections = DftEigenprojections {
        e1: combine(one, one, one),
        eneg1: combine(-one, one, -one),
        ei: combine(-i, -one, i),
        enegi: combine(i, -one, -i),
    };

    let all = [
        &projections.e1,
        &projections.eneg1,
        &projections.ei,
        &projections.enegi,
    ];
    let mut worst: f64 = 0.0;
    for (a, &ma) in all.iter().enumerate() {
        worst = worst.max(ma.asymmetry());
        for (b, &mb) in all.iter().enumerate() {
            let product = ma.matmul(mb);
            if a == b {
                worst = worst.max((&product - ma).hs_norm());
            } else {
                worst = worst.max(product.hs_norm());
            }
        }
    }
    let sum = &(&projections.e1 + &projections.eneg1) + &(&projections.ei + &projections.enegi);
    worst = worst.max((&sum - &identity).hs_norm());
    let rebuilt = &(&projections.e1 - &projections.eneg1)
        + &(&projections.ei.scale(i) - &projections.enegi.scale(i));
    worst = worst.max((&rebuilt - u).hs_norm());
    if worst > CALC_TOL * (n as f64).sqrt().max(1.0) {
        return Err(Error::InternalConsistency {
            what: "DFT eigenprojection algebra",
            residual: worst,
        });
    }
    Ok(projections)
}

/// The Hermitian logarithm `H = -pi E_{-1} + (pi/2) E_i - (pi/2) E_{-i}`.
pub fn dft_log(projections: &DftEigenprojections) -> ComplexMatrix {
    let a = projections.eneg1.scale_re(-PI);
    let b = projections.ei.scale_re(PI / 2.0);
    let c = projections.enegi.scale_re(-PI / 2.0);
    &(&a + &b) + &c
}

/// `E_e = (1 + U^2)/2`, the projection onto even vectors. Requires
/// `U^4 = I` within `tol` (so that `U^2` is a symmetry).
pub fn even_projection(u: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let n = u.require_square()?;
    let identity = ComplexMatrix::identity(n);
    let u2 = u.matmul(u);
    let residual = (&u2.matmul(&u2) - &identity).hs_norm();
    if residual > tol * (n as f64).sqrt().max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "U^4 differs from the identity by {residual:.3e}"
        )));
    }
    Ok((&identity + &u2).scale_re(0.5))
}

/// `[A, B] = AB - BA`.
pub fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.require_square()?;
    b.require_square()?;
    a.require_same_shape(b, "commutator")?;
    Ok(&a.matmul(b) - &b.matmul(a))
}

/// The full DFT calculus at size n: the unitary, its eigenprojections, the
/// logarithm, the parity operator `U^2`, and the even projection.
#[derive(Debug, Clone)]
pub struct DftCalculus {
    pub n: usize,
    pub u: ComplexMatrix,
    pub projections: DftEigenprojections,
    pub h: ComplexMatrix,
    pub parity: ComplexMatrix,
    pub ee: ComplexMatrix,
}

impl DftCalculus {
    pub fn new(n: usize) -> Result<Self> {
        let u = build_dft(n)?;
        let projections = dft_eigenprojections(&u, DEFAULT_TOL)?;
        let h = dft_log(&projections);
        let parity = u.matmul(&u);
        let ee = even_projection(&u, DEFAULT_TOL)?;

        ee.require_projection(CALC_TOL)?;
        let commute = (&ee.matmul(&u) - &u.matmul(&ee)).hs_norm();
        if commute > CALC_TOL {
            return Err(Error::InternalConsistency {
                what: "E_e commutes with U",
                residual: commute,
            });
        }
        Ok(Self {
            n,
            u,
            projections,
            h,
            parity,
            ee,
        })
    }

    /// `||e^{iH} - U||`, evaluated through the eigensolver. An independent
    /// check that H really is a logarithm of U.
    pub fn exp_log_residual(&self) -> Result<f64> {
        let exp = crate::eig::unitary_exp(&self.h, 1.0, DEFAULT_TOL)?;
        Ok(operator_norm(&(&exp - &self.u)))
    }

    /// `||H||`; equals pi whenever the -1 eigenspace is nonempty (n >= 2).
    pub fn log_norm(&self) -> f64 {
        operator_norm(&self.h)
    }
}

/// Both sides of the symmetric-set factorization of `[H, P_I]`.
#[derive(Debug, Clone)]
pub struct SymmetricIdentityReport {
    /// `|| [H,P_I] - (pi/2) (E_e - i E_o) [U,P_I] ||`
    pub residual_factored: f64,
    /// `|| [H,P_I] ||`
    pub lhs_norm: f64,
    /// `(pi/2) || P_I - Q_I ||`
    pub rhs_norm: f64,
    /// `|| E_e (P_I - Q_I) E_e ||`, the even-compression norm
    pub ee_sandwich_norm: f64,
}

/// Verifies `[H, P_I] = (pi/2) (E_e - i E_o) [U, P_I]` and the norm identity
/// `||[H, P_I]|| = (pi/2) ||P_I - Q_I||` for an index set symmetric under
/// negation mod n. Non-symmetric sets are rejected.
pub fn symmetric_identity_check(n: usize, set: &IndexSet) -> Result<SymmetricIdentityReport> {
    if let Some(index) = set.symmetry_defect() {
        return Err(Error::SymmetryRequired { n, index });
    }
    let calc = DftCalculus::new(n)?;
    let p = time_limiter(set);
    let q = band_limiter(set, &calc.u)?;

    let bracket_h = commutator(&calc.h, &p)?;
    let bracket_u = commutator(&calc.u, &p)?;
    // E_e - i E_o = (1-i)/2 + (1+i)/2 U^2.
    let eo = &ComplexMatrix::identity(n) - &calc.ee;
    let phase_mix = &calc.ee + &eo.scale(Complex64::new(0.0, -1.0));
    let factored = phase_mix.matmul(&bracket_u).scale_re(PI / 2.0);

    let residual_factored = operator_norm(&(&bracket_h - &factored));
    let lhs_norm = operator_norm(&bracket_h);
    let rhs_norm = PI / 2.0 * operator_norm(&(&p - &q));
    let ee_sandwich_norm = operator_norm(&calc.ee.matmul(&(&p - &q).matmul(&calc.ee)));

    Ok(SymmetricIdentityReport {
        residual_factored,
        lhs_norm,
        rhs_norm,
        ee_sandwich_norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eig::herm_eig;
    use crate::localization::IndexSet;

    fn calc(n: usize) -> DftCalculus {
        DftCalculus::new(n).unwrap()
    }

    #[test]
    fn rejects_size_zero() {
        assert!(build_dft(0).is_err());
    }

    #[test]
    fn dft_size_one_is_trivial() {
        let c = calc(1);
        assert!((c.u[(0, 0)] - Complex64::ONE).norm() < 1e-15);
        let (r1, rn1, ri, rni) = c.projections.ranks();
        assert_eq!((r1, rn1, ri, rni), (1, 0, 0, 0));
        assert!(c.h.hs_norm() < 1e-12);
    }

    #[test]
    fn dft_size_two_matches_hadamard() {
        let c = calc(2);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for (j, k, expected) in [(0, 0, s), (0, 1, s), (1, 0, s), (1, 1, -s)] {
            assert!((c.u[(j, k)] - Complex64::new(expected, 0.0)).norm() < 1e-12);
        }
        assert!(c.exp_log_residual().unwrap() < 1e-10);
    }

    #[test]
    fn dft_is_unitary_with_fourth_power_identity() {
        let u = build_dft(8).unwrap();
        let identity = ComplexMatrix::identity(8);
        assert!((&u.adjoint().matmul(&u) - &identity).hs_norm() < 1e-12);
        let u2 = u.matmul(&u);
        assert!((&u2.matmul(&u2) - &identity).hs_norm() < 1e-12);
    }

    #[test]
    fn parity_is_index_negation_permutation() {
        let c = calc(6);
        for j in 0..6 {
            for k in 0..6 {
                let expected = if j == (6 - k) % 6 { 1.0 } else { 0.0 };
                assert!(
                    (c.parity[(j, k)] - Complex64::new(expected, 0.0)).norm() < 1e-12,
                    "parity[{j},{k}]"
                );
            }
        }
    }

    /// Independent oracle: eigenprojections recovered from the Hermitian
    /// matrices Re(U) and Im(U), whose eigenvalues at +-1 isolate the four
    /// eigenspaces of U.
    fn oracle_eigenprojection(u: &ComplexMatrix, target: Complex64) -> ComplexMatrix {
        let n = u.rows();
        let half = Complex64::new(0.5, 0.0);
        let m = if target.im == 0.0 {
            // Re(U) has eigenvalue +-1 exactly on E_{+-1}.
            (&u.adjoint() + u).scale(half)
        } else {
            // Im(U) has eigenvalue +-1 exactly on E_{+-i}.
            (&(u - &u.adjoint())).scale(Complex64::new(0.0, -0.5))
        };
        let goal = if target.im == 0.0 { target.re } else { target.im };
        let spectrum = herm_eig(&m, DEFAULT_TOL).unwrap();
        let cols: Vec<Vec<Complex64>> = spectrum
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, &lambda)| (lambda - goal).abs() < 1e-6)
            .map(|(j, _)| spectrum.eigenvectors.column(j))
            .collect();
        let b = ComplexMatrix::from_columns(n, &cols);
        b.matmul(&b.adjoint())
    }

    #[test]
    fn polynomial_projections_match_eigendecomposition_oracle() {
        let c = calc(4);
        let i = Complex64::new(0.0, 1.0);
        for (built, target) in [
            (&c.projections.e1, Complex64::ONE),
            (&c.projections.eneg1, -Complex64::ONE),
            (&c.projections.ei, i),
            (&c.projections.enegi, -i),
        ] {
            let oracle = oracle_eigenprojection(&c.u, target);
            assert!(
                (built - &oracle).hs_norm() < 1e-10,
                "projection at {target} disagrees with oracle"
            );
            assert!((built.trace().re - oracle.trace().re).abs() < 1e-10);
        }
    }

    #[test]
    fn ranks_sum_to_dimension() {
        for n in [1usize, 2, 3, 4, 5, 8, 12, 16] {
            let c = calc(n);
            let (r1, rn1, ri, rni) = c.projections.ranks();
            assert_eq!(r1 + rn1 + ri + rni, n, "rank sum at n={n}");
        }
    }

    #[test]
    fn log_norm_is_pi_from_two_up() {
        for n in [2usize, 3, 16] {
            let c = calc(n);
            let (_, rn1, _, _) = c.projections.ranks();
            assert!(rn1 > 0);
            assert!((c.log_norm() - PI).abs() < 1e-10, "n={n}");
        }
    }

    #[test]
    fn exp_of_log_reproduces_dft() {
        for n in [1usize, 2, 3, 5, 8, 16] {
            let c = calc(n);
            assert!(c.exp_log_residual().unwrap() < 1e-9, "n={n}");
        }
    }

    #[test]
    fn even_projection_rank_counts_negation_orbits() {
        // n = 4: fixed points {0, 2} and one pair {1, 3} -> rank 3.
        let c4 = calc(4);
        assert!((c4.ee.trace().re - 3.0).abs() < 1e-10);
        // n = 5: fixed point {0}, pairs {1,4} and {2,3} -> rank 3.
        let c5 = calc(5);
        assert!((c5.ee.trace().re - 3.0).abs() < 1e-10);
    }

    #[test]
    fn commutator_with_identity_vanishes() {
        let c = calc(8);
        let identity = ComplexMatrix::identity(8);
        assert!(commutator(&c.h, &identity).unwrap().hs_norm() < 1e-12);
        let full = time_limiter(&IndexSet::full(8));
        assert!(commutator(&c.h, &full).unwrap().hs_norm() < 1e-12);
    }

    #[test]
    fn commutator_rejects_shape_mismatch() {
        let a = ComplexMatrix::identity(2);
        let b = ComplexMatrix::identity(3);
        assert!(commutator(&a, &b).is_err());
    }

    #[test]
    fn parity_commutes_with_p_exactly_for_symmetric_sets() {
        let c = calc(8);
        let symmetric = IndexSet::new(8, vec![0, 1, 7]).unwrap();
        let p = time_limiter(&symmetric);
        assert!(commutator(&c.parity, &p).unwrap().hs_norm() < 1e-12);

        let asymmetric = IndexSet::new(8, vec![1]).unwrap();
        let p = time_limiter(&asymmetric);
        assert!(operator_norm(&commutator(&c.parity, &p).unwrap()) > 0.99);
    }

    #[test]
    fn fourier_intertwines_the_commutators() {
        let c = calc(8);
        for members in [vec![0usize, 1], vec![2, 5, 6]] {
            let set = IndexSet::new(8, members).unwrap();
            let p = time_limiter(&set);
            let q = band_limiter(&set, &c.u).unwrap();
            let lhs = c
                .u
                .adjoint()
                .matmul(&commutator(&c.h, &p).unwrap().matmul(&c.u));
            let rhs = commutator(&c.h, &q).unwrap();
            assert!((&lhs - &rhs).hs_norm() < 1e-9);
        }
    }

    #[test]
    fn symmetric_identity_holds_for_symmetric_sets() {
        for members in [vec![0usize], vec![0, 1, 7], vec![0, 4]] {
            let set = IndexSet::new(8, members.clone()).unwrap();
            let report = symmetric_identity_check(8, &set).unwrap();
            assert!(
                report.residual_factored < 1e-9,
                "factored residual {} for {members:?}",
                report.residual_factored
            );
            assert!(
                (report.lhs_norm - report.rhs_norm).abs() < 1e-9,
                "norm mismatch for {members:?}"
            );
        }
    }

    #[test]
    fn symmetric_identity_on_empty_set_is_all_zero() {
        let set = IndexSet::empty(8);
        let report = symmetric_identity_check(8, &set).unwrap();
        assert_eq!(report.lhs_norm, 0.0);
        assert_eq!(report.rhs_norm, 0.0);
        assert!(report.residual_factored < 1e-15);
        assert_eq!(report.ee_sandwich_norm, 0.0);
    }

    #[test]
    fn symmetric_identity_rejects_asymmetric_sets() {
        let set = IndexSet::new(8, vec![1, 2]).unwrap();
        match symmetric_identity_check(8, &set) {
            Err(Error::SymmetryRequired { index, .. }) => assert!(index == 1 || index == 2),
            other => panic!("expected SymmetryRequired, got {other:?}"),
        }
    }
}

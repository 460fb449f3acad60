//! Minimal geodesics of the Grassmann manifold joining two projections.
//!
//! A unique minimal geodesic from P to Q exists exactly when
//! `R(P) ∩ N(Q) = N(P) ∩ R(Q) = {0}`. Its exponent X is Hermitian,
//! co-diagonal with respect to both endpoints, vanishes on the corner
//! subspaces and acts as `[[0, i Theta],[-i Theta, 0]]` on the generic part,
//! where Theta carries the Halmos angles. The curve is
//! `delta(t) = e^{itX} P e^{-itX}`, its Finsler length over [0,1] is `||X||`,
//! and the Grassmann distance is the largest principal angle with pi/2
//! contributions from nontrivial corners.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::eig::{herm_eig, HermitianSpectrum};
use crate::error::{Error, Result};
use crate::matrix::{ComplexMatrix, DEFAULT_TOL};
use crate::pair::{halmos_decompose, AngleSpectrum, ProjectionPair};
use crate::svd::operator_norm;

/// Construction-time sanity bound on the endpoint residual.
const ENDPOINT_TOL: f64 = 1e-6;

/// The exponent of the unique minimal geodesic between the projections of a
/// pair, together with the data needed to evaluate the geodesic cheaply.
#[derive(Debug, Clone)]
pub struct GeodesicExponent {
    x: ComplexMatrix,
    norm: f64,
    pair: ProjectionPair,
    angles: Vec<f64>,
    spectrum: HermitianSpectrum,
}

impl GeodesicExponent {
    /// The Hermitian exponent X.
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.x
    }

    /// `||X||` in radians, reported from the Halmos angles so the two
    /// modules stay mutually consistent.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn pair(&self) -> &ProjectionPair {
        &self.pair
    }

    /// Halmos angles of the pair, ascending; the positive spectrum of X.
    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    /// Full ambient spectrum of X, ascending.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.spectrum.eigenvalues
    }

    /// Distinct positive eigenvalues with multiplicities. The pi/2
    /// multiplicity is zero: pairs with angle pi/2 admit no unique geodesic
    /// and never construct an exponent.
    pub fn angle_spectrum(&self, cluster_tol: f64) -> AngleSpectrum {
        AngleSpectrum::from_sorted_angles(&self.angles, cluster_tol, 0)
    }
}

/// Builds the geodesic exponent of a pair.
///
/// `corner_tol` classifies the corner subspaces. Fails with
/// [`Error::NoUniqueGeodesic`] carrying the offending dimensions when
/// `R(P) ∩ N(Q)` or `N(P) ∩ R(Q)` is nontrivial.
pub fn geodesic_exponent(pair: &ProjectionPair, corner_tol: f64) -> Result<GeodesicExponent> {
    let h = halmos_decompose(pair, corner_tol)?;
    if h.dim10 > 0 || h.dim01 > 0 {
        return Err(Error::NoUniqueGeodesic {
            dim10: h.dim10,
            dim01: h.dim01,
        });
    }

    let n = pair.dim();
    let mut x = ComplexMatrix::zeros(n, n);
    let e = h.generic_p_basis.basis();
    let f = h.generic_q_complement_basis.basis();
    for (k, &theta) in h.angles.iter().enumerate() {
        let i_theta = Complex64::new(0.0, theta);
        for row in 0..n {
            for col in 0..n {
                let ef = e[(row, k)] * f[(col, k)].conj();
                let fe = f[(row, k)] * e[(col, k)].conj();
                x[(row, col)] += i_theta * (ef - fe);
            }
        }
    }

    let spectrum = herm_eig(&x, DEFAULT_TOL)?;
    let norm = h.angles.last().copied().unwrap_or(0.0);

    let exponent = GeodesicExponent {
        x,
        norm,
        pair: pair.clone(),
        angles: h.angles,
        spectrum,
    };

    let endpoint_residual = (&geodesic_point(&exponent, 1.0) - pair.q()).hs_norm();
    if endpoint_residual > ENDPOINT_TOL {
        return Err(Error::InternalConsistency {
            what: "geodesic endpoint",
            residual: endpoint_residual,
        });
    }
    Ok(exponent)
}

/// The geodesic point `delta(t) = e^{itX} P e^{-itX}`, an orthogonal
/// projection for every t.
pub fn geodesic_point(exponent: &GeodesicExponent, t: f64) -> ComplexMatrix {
    let u = exponent.spectrum.unitary_exp(t);
    u.matmul(&exponent.pair.p().matmul(&u.adjoint()))
}

/// Grassmann (Finsler) distance between the projections of a pair: the
/// largest principal angle, counting the H10/H01 corners as pi/2. Equals
/// `||X||` whenever the geodesic exponent exists.
pub fn grassmann_distance(pair: &ProjectionPair) -> Result<f64> {
    let h = halmos_decompose(pair, crate::pair::CORNER_TOL)?;
    if h.dim10 > 0 || h.dim01 > 0 {
        return Ok(FRAC_PI_2);
    }
    Ok(h.angles.last().copied().unwrap_or(0.0))
}

/// Chordal estimate of the Finsler length of a projection-valued curve:
/// the sum of operator norms of successive increments. Underestimates and
/// converges monotonically as the mesh refines.
pub fn curve_length(samples: &[ComplexMatrix], times: &[f64]) -> Result<f64> {
    if samples.len() < 2 || samples.len() != times.len() {
        return Err(Error::BadCurveSamples);
    }
    if times.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::BadCurveSamples);
    }
    for sample in samples {
        sample.require_projection(1e-7)?;
    }
    let mut length = 0.0;
    for pair in samples.windows(2) {
        length += operator_norm(&(&pair[1] - &pair[0]));
    }
    Ok(length)
}

/// Reduced minimum modulus of a Hermitian matrix: the smallest absolute
/// value among eigenvalues exceeding `tol * ||A||` in magnitude. Fails with
/// [`Error::Undefined`] when no eigenvalue survives (A = 0).
pub fn reduced_min_modulus(a: &ComplexMatrix, tol: f64) -> Result<f64> {
    let spectrum = herm_eig(a, DEFAULT_TOL)?;
    let scale = spectrum
        .eigenvalues
        .iter()
        .fold(0.0_f64, |acc, &x| acc.max(x.abs()));
    let cutoff = tol * scale;
    spectrum
        .eigenvalues
        .iter()
        .map(|&x| x.abs())
        .filter(|&x| x > cutoff && x > 0.0)
        .min_by(f64::total_cmp)
        .ok_or(Error::Undefined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::{plane_rotation_projector, random_admissible_pair, random_projection};
    use std::f64::consts::PI;

    fn rotation_pair(theta: f64) -> ProjectionPair {
        ProjectionPair::new(
            ComplexMatrix::diag(&[1.0, 0.0]),
            plane_rotation_projector(2, theta),
            DEFAULT_TOL,
        )
        .unwrap()
    }

    #[test]
    fn equal_pair_has_zero_exponent() {
        let p = random_projection(5, 2, 71);
        let pair = ProjectionPair::new(p.clone(), p, DEFAULT_TOL).unwrap();
        let exponent = geodesic_exponent(&pair, crate::pair::CORNER_TOL).unwrap();
        assert_eq!(exponent.norm(), 0.0);
        assert!(exponent.matrix().hs_norm() < 1e-12);
    }

    #[test]
    fn rotation_pair_exponent() {
        let pair = rotation_pair(PI / 3.0);
        let exponent = geodesic_exponent(&pair, crate::pair::CORNER_TOL).unwrap();
        assert!((exponent.norm() - PI / 3.0).abs() < 1e-10);
        let endpoint = geodesic_point(&exponent, 1.0);
        assert!((&endpoint - pair.q()).hs_norm() < 1e-10);
    }

    #[test]
    fn complementary_pair_has_no_unique_geodesic() {
        let pair = ProjectionPair::new(
            ComplexMatrix::diag(&[1.0, 0.0]),
            ComplexMatrix::diag(&[0.0, 1.0]),
            DEFAULT_TOL,
        )
        .unwrap();
        match geodesic_exponent(&pair, crate::pair::CORNER_TOL) {
            Err(Error::NoUniqueGeodesic { dim10, dim01 }) => {
                assert_eq!((dim10, dim01), (1, 1));
            }
            other => panic!("expected NoUniqueGeodesic, got {other:?}"),
        }
    }

    #[test]
    fn geodesic_point_hits_both_endpoints() {
        let pair = random_admissible_pair(8, 3, 5);
        let exponent = geodesic_exponent(&pair, crate::pair::CORNER_TOL).unwrap();
        assert!((&geodesic_point(&exponent, 0.0) - pair.p()).hs_norm() < 1e-10);
        assert!((&geodesic_point(&exponent, 1.0) - pair.q()).hs_norm() < 1e-9);
        // Every point on the curve is a projection.
        let mid = geodesic_point(&exponent, 0.37);
        mid.require_projection(1e-9).unwrap();
    }

    #[test]
    fn midpoint_is_equidistant() {
        let pair = random_admissible_pair(8, 4, 6);
        let exponent = geodesic_exponent(&pair, crate::pair::CORNER_TOL).unwrap();
        let mid = geodesic_point(&exponent, 0.5);
        let d_left = grassmann_distance(
            &ProjectionPair::new(pair.p().clone(), mid.clone(), 1e-8).unwrap(),
        )
        .unwrap();
        let d_right =
            grassmann_distance(&ProjectionPair::new(mid, pair.q().clone(), 1e-8).unwrap())
                .unwrap();
        assert!((d_left - exponent.norm() / 2.0).abs() < 1e-8);
        assert!((d_right - exponent.norm() / 2.0).abs() < 1e-8);
    }

    #[test]
    fn co_diagonality_with_respect_to_both_endpoints() {
        let pair = random_admissible_pair(10, 4, 7);
        let exponent = geodesic_exponent(&pair, crate::pair::CORNER_TOL).unwrap();
        let x = exponent.matrix();
        let identity = ComplexMatrix::identity(pair.dim());
        let comp_p = &identity - pair.p();
        let comp_q = &identity - pair.q();
        let total = operator_norm(&pair.p().matmul(&x.matmul(pair.p())))
            + operator_norm(&comp_p.matmul(&x.matmul(&comp_p)))
            + operator_norm(&pair.q().matmul(&x.matmul(pair.q())))
            + operator_norm(&comp_q.matmul(&x.matmul(&comp_q)));
        assert!(total < 1e-8, "co-diagonality defect {total}");
    }

    #[test]
    fn spectrum_is_symmetric_about_zero() {
        let pair = random_admissible_pair(9, 3, 8);
        let exponent = geodesic_exponent(&pair, crate::pair::CORNER_TOL).unwrap();
        let eigenvalues = exponent.eigenvalues();
        let n = eigenvalues.len();
        for i in 0..n {
            assert!((eigenvalues[i] + eigenvalues[n - 1 - i]).abs() < 1e-9);
        }
    }

    #[test]
    fn distance_matches_arcsin_of_difference_norm() {
        let pair = random_admissible_pair(10, 5, 9);
        let d = grassmann_distance(&pair).unwrap();
        let diff_norm = operator_norm(&(pair.p() - pair.q()));
        assert!((diff_norm - d.sin()).abs() < 1e-8);
    }

    #[test]
    fn distance_of_rotation_pair() {
        assert!((grassmann_distance(&rotation_pair(PI / 3.0)).unwrap() - PI / 3.0).abs() < 1e-10);
        let equal = rotation_pair(1e-15);
        assert!(grassmann_distance(&equal).unwrap() < 1e-6);
    }

    #[test]
    fn curve_length_of_constant_curve_is_zero() {
        let p = random_projection(4, 2, 10);
        let samples = vec![p.clone(), p.clone(), p];
        let times = vec![0.0, 0.5, 1.0];
        assert_eq!(curve_length(&samples, &times).unwrap(), 0.0);
    }

    #[test]
    fn curve_length_rejects_bad_input() {
        let p = random_projection(4, 2, 11);
        assert!(matches!(
            curve_length(&[p.clone()], &[0.0]),
            Err(Error::BadCurveSamples)
        ));
        assert!(matches!(
            curve_length(&[p.clone(), p.clone()], &[0.5, 0.5]),
            Err(Error::BadCurveSamples)
        ));
    }

    #[test]
    fn geodesic_length_approaches_norm_of_exponent() {
        let pair = rotation_pair(PI / 3.0);
        let exponent = geodesic_exponent(&pair, crate::pair::CORNER_TOL).unwrap();
        let count = 65;
        let times: Vec<f64> = (0..count).map(|k| k as f64 / (count - 1) as f64).collect();
        let samples: Vec<ComplexMatrix> =
            times.iter().map(|&t| geodesic_point(&exponent, t)).collect();
        let length = curve_length(&samples, &times).unwrap();
        assert!((length - PI / 3.0).abs() < 1e-3, "length {length}");
    }

    #[test]
    fn reduced_min_modulus_basics() {
        let a = ComplexMatrix::diag(&[0.0, 0.3, 1.0]);
        assert!((reduced_min_modulus(&a, 1e-9).unwrap() - 0.3).abs() < 1e-12);

        let p = random_projection(5, 2, 13);
        assert!((reduced_min_modulus(&p, 1e-9).unwrap() - 1.0).abs() < 1e-9);

        let zero = ComplexMatrix::zeros(3, 3);
        assert!(matches!(reduced_min_modulus(&zero, 1e-9), Err(Error::Undefined)));
    }

    #[test]
    fn reduced_min_modulus_of_exponent_is_smallest_angle() {
        let pair = random_admissible_pair(8, 3, 14);
        let exponent = geodesic_exponent(&pair, crate::pair::CORNER_TOL).unwrap();
        let gamma = reduced_min_modulus(exponent.matrix(), 1e-9).unwrap();
        assert!((gamma - exponent.angles()[0]).abs() < 1e-9);
    }
}

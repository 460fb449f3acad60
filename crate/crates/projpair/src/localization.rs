//! Discrete time- and band-limiting pairs and their uncertainty reports.
//!
//! For an index set I the time limiter `P_I` keeps the coordinates in I;
//! the band limiter is its conjugate `Q_J = U* P_J U` by the unitary DFT.
//! Under this normalization the continuous identity
//! `||P_I Q_J||_HS = sqrt(|I||J|)` becomes the exact trace identity
//! `Tr(P_I Q_J P_I) = |I| |J| / n`, and the concentration inequality
//! `||P Q|| >= 1 - eps_I - eps_J` holds with the epsilons taken as squared
//! off-support masses.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::fourier::{build_dft, commutator, DftCalculus};
use crate::matrix::{vec_norm, ComplexMatrix, DEFAULT_TOL};
use crate::pair::{halmos_decompose, ProjectionPair, CORNER_TOL};
use crate::svd::operator_norm;

/// Internal coherence threshold for report identities.
const REPORT_TOL: f64 = 1e-7;

/// Sorted distinct indices inside `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    n: usize,
    members: Vec<usize>,
}

impl IndexSet {
    /// Sorts and deduplicates; rejects indices at or beyond n.
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        if let Some(&index) = members.iter().find(|&&j| j >= n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Self { n, members })
    }

    /// Half-open interval `start..end`.
    pub fn interval(n: usize, start: usize, end: usize) -> Result<Self> {
        if start > end {
            return Err(Error::InvalidIndexSet(format!(
                "interval start {start} exceeds end {end}"
            )));
        }
        Self::new(n, (start..end).collect())
    }

    pub fn empty(n: usize) -> Self {
        Self { n, members: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            members: (0..n).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, j: usize) -> bool {
        self.members.binary_search(&j).is_ok()
    }

    /// First member whose negation partner `-j mod n` is missing, if any.
    pub fn symmetry_defect(&self) -> Option<usize> {
        self.members
            .iter()
            .copied()
            .find(|&j| !self.contains((self.n - j) % self.n))
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    /// Closure under `j -> -j mod n`.
    pub fn symmetrized(&self) -> Self {
        let mut members = self.members.clone();
        members.extend(self.members.iter().map(|&j| (self.n - j) % self.n));
        Self::new(self.n, members).expect("indices stay in range")
    }
}

/// Diagonal projection with ones exactly at the members of I.
pub fn time_limiter(set: &IndexSet) -> ComplexMatrix {
    let n = set.ambient();
    let mut p = ComplexMatrix::zeros(n, n);
    for &j in set.members() {
        p[(j, j)] = Complex64::ONE;
    }
    p
}

/// `Q_J = U* P_J U`: the band limiter induced by the unitary `u`.
pub fn band_limiter(set: &IndexSet, u: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = u.require_square()?;
    if n != set.ambient() {
        return Err(Error::ShapeMismatch {
            op: "band_limiter",
            left: format!("{}x{}", n, n),
            right: format!("index set over {}", set.ambient()),
        });
    }
    let p = time_limiter(set);
    Ok(u.adjoint().matmul(&p.matmul(u)))
}

/// A time/band limiting pair over the DFT of size n.
#[derive(Debug, Clone)]
pub struct LocalizationPair {
    pub n: usize,
    pub set_i: IndexSet,
    pub set_j: IndexSet,
    pub p: ComplexMatrix,
    pub q: ComplexMatrix,
}

impl LocalizationPair {
    pub fn new(n: usize, set_i: IndexSet, set_j: IndexSet) -> Result<Self> {
        if set_i.ambient() != n || set_j.ambient() != n {
            return Err(Error::InvalidIndexSet(format!(
                "index sets over {} and {} do not match dimension {n}",
                set_i.ambient(),
                set_j.ambient()
            )));
        }
        let u = build_dft(n)?;
        let p = time_limiter(&set_i);
        let q = band_limiter(&set_j, &u)?;
        Ok(Self { n, set_i, set_j, p, q })
    }

    pub fn projection_pair(&self) -> Result<ProjectionPair> {
        ProjectionPair::new(self.p.clone(), self.q.clone(), DEFAULT_TOL)
    }
}

/// Per-pair localization record: angle spectrum, norms, trace identities,
/// corner dimensions, distance, and (for I = J) the commutator norm.
#[derive(Debug, Clone)]
pub struct LocalizationReport {
    pub n: usize,
    pub set_i: IndexSet,
    pub set_j: IndexSet,
    /// Halmos angles of the pair, ascending.
    pub gammas: Vec<f64>,
    /// `||P_I Q_J||`
    pub norm_pq: f64,
    /// `Tr(P_I Q_J P_I)`
    pub hs_sq: f64,
    /// `|I| |J| / n`
    pub expected_hs_sq: f64,
    /// `(dim H11, dim H00, dim H10, dim H01)`
    pub corner_dims: [usize; 4],
    /// Grassmann distance of the pair.
    pub distance: f64,
    /// `||[H, P_I]||` when I = J, absent otherwise.
    pub commutator_norm: Option<f64>,
    /// `||P_I Q_J P_I||`, the top localization eigenvalue.
    pub lambda1: f64,
}

/// Builds the full report for the pair `(P_I, Q_J)` at size n.
///
/// The norm identities `lambda1 = ||PQ||^2`,
/// `Tr(PQP) = sum cos^2 gamma + dim H11` and (for trivial H11)
/// `cos(gamma_min) = ||PQ||` are verified before the report is returned.
pub fn localization_report(n: usize, set_i: &IndexSet, set_j: &IndexSet) -> Result<LocalizationReport> {
    let pair_data = LocalizationPair::new(n, set_i.clone(), set_j.clone())?;
    let pair = pair_data.projection_pair()?;
    let h = halmos_decompose(&pair, CORNER_TOL)?;

    let pq = pair_data.p.matmul(&pair_data.q);
    let pqp = pq.matmul(&pair_data.p);
    let norm_pq = operator_norm(&pq);
    let lambda1 = operator_norm(&pqp);
    let hs_sq = pqp.trace().re;
    let expected_hs_sq = (set_i.len() * set_j.len()) as f64 / n as f64;

    let distance = if h.dim10 > 0 || h.dim01 > 0 {
        FRAC_PI_2
    } else {
        h.angles.last().copied().unwrap_or(0.0)
    };

    let commutator_norm = if set_i == set_j {
        let calc = DftCalculus::new(n)?;
        Some(operator_norm(&commutator(&calc.h, &pair_data.p)?))
    } else {
        None
    };

    let report = LocalizationReport {
        n,
        set_i: set_i.clone(),
        set_j: set_j.clone(),
        gammas: h.angles.clone(),
        norm_pq,
        hs_sq,
        expected_hs_sq,
        corner_dims: [h.dim11, h.dim00, h.dim10, h.dim01],
        distance,
        commutator_norm,
        lambda1,
    };

    let lambda_defect = (report.lambda1 - report.norm_pq * report.norm_pq).abs();
    if lambda_defect > REPORT_TOL {
        return Err(Error::InternalConsistency {
            what: "lambda1 = ||PQ||^2",
            residual: lambda_defect,
        });
    }
    let angle_sum: f64 = report.gammas.iter().map(|&g| g.cos().powi(2)).sum();
    let hs_defect = (report.hs_sq - (angle_sum + h.dim11 as f64)).abs();
    // Angles absorbed into the H10/H01 corners carry cos^2 up to 2*CORNER_TOL each.
    if hs_defect > REPORT_TOL.max(4.0 * CORNER_TOL * (h.dim10 + h.dim01 + 1) as f64) {
        return Err(Error::InternalConsistency {
            what: "Tr(PQP) = sum cos^2 gamma + dim H11",
            residual: hs_defect,
        });
    }
    if h.dim11 == 0 {
        let expected = report.gammas.first().map(|&g| g.cos()).unwrap_or(0.0);
        // With corner angles snapped to pi/2 the norm can only exceed this.
        if (report.norm_pq - expected).abs() > REPORT_TOL && report.norm_pq + REPORT_TOL < expected
        {
            return Err(Error::InternalConsistency {
                what: "cos(gamma_min) = ||PQ||",
                residual: (report.norm_pq - expected).abs(),
            });
        }
    }

    Ok(report)
}

/// Concentration data for one unit vector.
#[derive(Debug, Clone)]
pub struct ConcentrationReport {
    /// Off-support mass `||(1 - P_I) f||^2`.
    pub eps_i: f64,
    /// Off-band mass `||(1 - P_J) U f||^2`.
    pub eps_j: f64,
    /// `1 - eps_i - eps_j`
    pub bound: f64,
    /// `||P_I Q_J||`
    pub norm_pq: f64,
    /// `norm_pq >= bound - tol`; always true, a false flag is a bug.
    pub satisfied: bool,
    /// Discrete Donoho-Stark product bound `n * max(0, bound)^2 <= |I| |J|`.
    pub ds_product_bound: f64,
}

/// Checks the concentration inequality for a unit vector `f`.
pub fn concentration_check(
    n: usize,
    set_i: &IndexSet,
    set_j: &IndexSet,
    f: &[Complex64],
) -> Result<ConcentrationReport> {
    if f.len() != n {
        return Err(Error::ShapeMismatch {
            op: "concentration_check",
            left: format!("vector of length {}", f.len()),
            right: format!("dimension {n}"),
        });
    }
    let norm = vec_norm(f);
    if (norm - 1.0).abs() > 1e-8 {
        return Err(Error::NotUnitVector { norm });
    }
    let pair_data = LocalizationPair::new(n, set_i.clone(), set_j.clone())?;
    let u = build_dft(n)?;

    let mut eps_i = 0.0;
    for (j, z) in f.iter().enumerate() {
        if !set_i.contains(j) {
            eps_i += z.norm_sqr();
        }
    }
    let transformed = u.mul_vec(f);
    let mut eps_j = 0.0;
    for (j, z) in transformed.iter().enumerate() {
        if !set_j.contains(j) {
            eps_j += z.norm_sqr();
        }
    }

    let bound = 1.0 - eps_i - eps_j;
    let norm_pq = operator_norm(&pair_data.p.matmul(&pair_data.q));
    let satisfied = norm_pq >= bound - 1e-9;
    let ds_product_bound = n as f64 * bound.max(0.0).powi(2);

    Ok(ConcentrationReport {
        eps_i,
        eps_j,
        bound,
        norm_pq,
        satisfied,
        ds_product_bound,
    })
}

/// One localization report per size, `I = J = {0, .., floor(fill * n) - 1}`,
/// rows ascending in n.
pub fn uncertainty_sweep(ns: &[usize], fill: f64) -> Result<Vec<LocalizationReport>> {
    if !(0.0..1.0).contains(&fill) || fill <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "fill fraction must lie strictly between 0 and 1, got {fill}"
        )));
    }
    let mut sizes = ns.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in &sizes {
        if n < 4 {
            return Err(Error::InvalidArgument(format!(
                "sweep sizes must be at least 4, got {n}"
            )));
        }
        let count = (fill * n as f64).floor() as usize;
        if count == 0 {
            return Err(Error::InvalidArgument(format!(
                "fill {fill} leaves an empty index set at n = {n}"
            )));
        }
        let set = IndexSet::interval(n, 0, count)?;
        rows.push(localization_report(n, &set, &set)?);
    }
    Ok(rows)
}

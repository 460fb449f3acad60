//! Deterministic report rendering: structured text and CSV, numbers with 12
//! significant digits, fixed field order, newline-terminated records.
//!
//! Lists inside a field (index sets, angle spectra, corner dimensions) are
//! semicolon-joined so they survive the CSV comma. Angles are radians.

use crate::error::Result;
use crate::factorization::{canonical_factorization, factorization_compare, is_canonical};
use crate::fourier::DftCalculus;
use crate::geodesic::{geodesic_exponent, geodesic_point};
use crate::localization::{IndexSet, LocalizationPair, LocalizationReport};
use crate::matrix::ComplexMatrix;
use crate::svd::operator_norm;

/// Output flavor for every CLI report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    StructuredText,
    Csv,
}

/// Fixed-width scientific notation with 12 significant digits.
pub fn format_significant(x: f64) -> String {
    format!("{x:.11e}")
}

fn join_f64(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| format_significant(v))
        .collect::<Vec<_>>()
        .join(";")
}

fn join_usize(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

fn join_indices(set: &IndexSet) -> String {
    join_usize(set.members())
}

impl LocalizationReport {
    pub const CSV_HEADER: &'static str =
        "n,set_i,set_j,gammas,norm_pq,hs_sq,expected_hs_sq,corner_dims,distance,commutator_norm";

    pub fn structured_text(&self) -> String {
        let mut out = String::from("record = localization-report\n");
        out.push_str(&format!("n = {}\n", self.n));
        out.push_str(&format!("set_i = {}\n", join_indices(&self.set_i)));
        out.push_str(&format!("set_j = {}\n", join_indices(&self.set_j)));
        out.push_str(&format!("gammas = {}\n", join_f64(&self.gammas)));
        out.push_str(&format!("norm_pq = {}\n", format_significant(self.norm_pq)));
        out.push_str(&format!("hs_sq = {}\n", format_significant(self.hs_sq)));
        out.push_str(&format!(
            "expected_hs_sq = {}\n",
            format_significant(self.expected_hs_sq)
        ));
        out.push_str(&format!("corner_dims = {}\n", join_usize(&self.corner_dims)));
        out.push_str(&format!("distance = {}\n", format_significant(self.distance)));
        if let Some(c) = self.commutator_norm {
            out.push_str(&format!("commutator_norm = {}\n", format_significant(c)));
        }
        out
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            self.n,
            join_indices(&self.set_i),
            join_indices(&self.set_j),
            join_f64(&self.gammas),
            format_significant(self.norm_pq),
            format_significant(self.hs_sq),
            format_significant(self.expected_hs_sq),
            join_usize(&self.corner_dims),
            format_significant(self.distance),
            self.commutator_norm.map(format_significant).unwrap_or_default(),
        )
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::StructuredText => self.structured_text(),
            ReportFormat::Csv => format!("{}\n{}", Self::CSV_HEADER, self.csv_row()),
        }
    }
}

/// Renders a sweep as one record per size.
pub fn render_sweep(rows: &[LocalizationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::StructuredText => rows
            .iter()
            .map(LocalizationReport::structured_text)
            .collect::<Vec<_>>()
            .join("\n"),
        ReportFormat::Csv => {
            let mut out = String::from(LocalizationReport::CSV_HEADER);
            out.push('\n');
            for row in rows {
                out.push_str(&row.csv_row());
            }
            out
        }
    }
}

/// Geodesic data for the Fourier pair of two index sets.
#[derive(Debug, Clone)]
pub struct GeodesicReport {
    pub n: usize,
    pub set_i: IndexSet,
    pub set_j: IndexSet,
    /// `||X||` in radians.
    pub norm_x: f64,
    /// `||e^{iX} P e^{-iX} - Q||`
    pub endpoint_residual: f64,
    /// Full ambient spectrum of X, ascending.
    pub spectrum: Vec<f64>,
}

pub fn geodesic_report(
    n: usize,
    set_i: &IndexSet,
    set_j: &IndexSet,
    corner_tol: f64,
) -> Result<GeodesicReport> {
    let pair_data = LocalizationPair::new(n, set_i.clone(), set_j.clone())?;
    let pair = pair_data.projection_pair()?;
    let exponent = geodesic_exponent(&pair, corner_tol)?;
    let endpoint_residual = operator_norm(&(&geodesic_point(&exponent, 1.0) - pair.q()));
    Ok(GeodesicReport {
        n,
        set_i: set_i.clone(),
        set_j: set_j.clone(),
        norm_x: exponent.norm(),
        endpoint_residual,
        spectrum: exponent.eigenvalues().to_vec(),
    })
}

impl GeodesicReport {
    pub const CSV_HEADER: &'static str = "n,set_i,set_j,norm_x,endpoint_residual,spectrum";

    pub fn structured_text(&self) -> String {
        let mut out = String::from("record = geodesic-report\n");
        out.push_str(&format!("n = {}\n", self.n));
        out.push_str(&format!("set_i = {}\n", join_indices(&self.set_i)));
        out.push_str(&format!("set_j = {}\n", join_indices(&self.set_j)));
        out.push_str(&format!("norm_x = {}\n", format_significant(self.norm_x)));
        out.push_str(&format!(
            "endpoint_residual = {}\n",
            format_significant(self.endpoint_residual)
        ));
        out.push_str(&format!("spectrum = {}\n", join_f64(&self.spectrum)));
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::StructuredText => self.structured_text(),
            ReportFormat::Csv => format!(
                "{}\n{},{},{},{},{},{}\n",
                Self::CSV_HEADER,
                self.n,
                join_indices(&self.set_i),
                join_indices(&self.set_j),
                format_significant(self.norm_x),
                format_significant(self.endpoint_residual),
                join_f64(&self.spectrum),
            ),
        }
    }
}

/// Spectral bookkeeping of the DFT calculus at one size.
#[derive(Debug, Clone)]
pub struct DftReport {
    pub n: usize,
    pub rank_e1: usize,
    pub rank_eneg1: usize,
    pub rank_ei: usize,
    pub rank_enegi: usize,
    /// `||H||`
    pub norm_h: f64,
    /// `||e^{iH} - U||`
    pub exp_residual: f64,
}

pub fn dft_report(n: usize) -> Result<DftReport> {
    let calc = DftCalculus::new(n)?;
    let (rank_e1, rank_eneg1, rank_ei, rank_enegi) = calc.projections.ranks();
    Ok(DftReport {
        n,
        rank_e1,
        rank_eneg1,
        rank_ei,
        rank_enegi,
        norm_h: calc.log_norm(),
        exp_residual: calc.exp_log_residual()?,
    })
}

impl DftReport {
    pub const CSV_HEADER: &'static str =
        "n,rank_e1,rank_eneg1,rank_ei,rank_enegi,norm_h,exp_residual";

    pub fn structured_text(&self) -> String {
        let mut out = String::from("record = dft-report\n");
        out.push_str(&format!("n = {}\n", self.n));
        out.push_str(&format!("rank_e1 = {}\n", self.rank_e1));
        out.push_str(&format!("rank_eneg1 = {}\n", self.rank_eneg1));
        out.push_str(&format!("rank_ei = {}\n", self.rank_ei));
        out.push_str(&format!("rank_enegi = {}\n", self.rank_enegi));
        out.push_str(&format!("norm_h = {}\n", format_significant(self.norm_h)));
        out.push_str(&format!(
            "exp_residual = {}\n",
            format_significant(self.exp_residual)
        ));
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::StructuredText => self.structured_text(),
            ReportFormat::Csv => format!(
                "{}\n{},{},{},{},{},{},{}\n",
                Self::CSV_HEADER,
                self.n,
                self.rank_e1,
                self.rank_eneg1,
                self.rank_ei,
                self.rank_enegi,
                format_significant(self.norm_h),
                format_significant(self.exp_residual),
            ),
        }
    }
}

/// Canonical-factorization comparison of a pair of projection matrices.
#[derive(Debug, Clone)]
pub struct FactorizeReport {
    pub dim: usize,
    pub rank_t: usize,
    pub max_violation: f64,
    pub norm_gap: f64,
    pub canonical_passes: bool,
    pub samples: usize,
    pub seed: u64,
}

pub fn factorize_report(
    p: &ComplexMatrix,
    q: &ComplexMatrix,
    samples: usize,
    seed: u64,
) -> Result<FactorizeReport> {
    let comparison = factorization_compare(p, q, samples, seed)?;
    let t = p.matmul(q);
    let factorization = canonical_factorization(&t, 1e-8)?;
    let canonical_passes = is_canonical(&factorization.p0, &factorization.q0, 1e-8)?;
    let rank_t = factorization.p0.trace().re.round() as usize;
    Ok(FactorizeReport {
        dim: p.rows(),
        rank_t,
        max_violation: comparison.max_violation,
        norm_gap: comparison.norm_gap,
        canonical_passes,
        samples,
        seed,
    })
}

impl FactorizeReport {
    pub const CSV_HEADER: &'static str =
        "dim,rank_t,max_violation,norm_gap,canonical_passes,samples,seed";

    pub fn structured_text(&self) -> String {
        let mut out = String::from("record = factorize-report\n");
        out.push_str(&format!("dim = {}\n", self.dim));
        out.push_str(&format!("rank_t = {}\n", self.rank_t));
        out.push_str(&format!(
            "max_violation = {}\n",
            format_significant(self.max_violation)
        ));
        out.push_str(&format!("norm_gap = {}\n", format_significant(self.norm_gap)));
        out.push_str(&format!("canonical_passes = {}\n", self.canonical_passes));
        out.push_str(&format!("samples = {}\n", self.samples));
        out.push_str(&format!("seed = {}\n", self.seed));
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::StructuredText => self.structured_text(),
            ReportFormat::Csv => format!(
                "{}\n{},{},{},{},{},{},{}\n",
                Self::CSV_HEADER,
                self.dim,
                self.rank_t,
                format_significant(self.max_violation),
                format_significant(self.norm_gap),
                self.canonical_passes,
                self.samples,
                self.seed,
            ),
        }
    }
}

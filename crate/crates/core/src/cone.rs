//! Distance and projection to the PSD cone, and negative-spectrum
//! diagnostics.
//!
//! For a symmetric M with negative eigenvalues -l_1 <= ... <= -l_t < 0, the
//! Frobenius distance to the PSD cone is exactly `sqrt(l_1^2 + .. + l_t^2)`,
//! attained by zeroing the negative eigenvalues in the eigenbasis. Members of
//! the k-PSD closure additionally have at most `n - k` negative eigenvalues
//! (eigenvalue interlacing), which yields the scaled bound
//! `dist <= sqrt(n - k) * l_1`.

use crate::error::{Error, Result};
use crate::symmat::SymMatrix;

/// Eigenvalues above this (relative) threshold are treated as non-negative,
/// so eigensolver noise cannot create phantom distance.
const NEGATIVE_EIGENVALUE_REL_TOL: f64 = 1e-12;

/// Distance to the PSD cone together with the negative spectrum behind it.
#[derive(Debug, Clone)]
pub struct ConeDistanceReport {
    /// `sqrt` of the summed squares of the negative eigenvalues.
    pub distance: f64,
    /// The negative eigenvalues, sorted increasing (most negative first).
    pub negative_eigenvalues: Vec<f64>,
    /// Number of negative eigenvalues.
    pub negative_count: usize,
}

impl ConeDistanceReport {
    /// Magnitude of the most negative eigenvalue, if any.
    pub fn lambda1(&self) -> Option<f64> {
        self.negative_eigenvalues.first().map(|v| -v)
    }
}

/// Frobenius distance from `m` to the PSD cone, via the negative spectrum.
///
/// Eigenvalues within `1e-12 * max(1, ||M||_F)` of zero are clamped to zero
/// before the distance formula.
pub fn dist_to_psd(m: &SymMatrix) -> Result<ConeDistanceReport> {
    let eig = m.eigendecompose()?;
    let threshold = -NEGATIVE_EIGENVALUE_REL_TOL * m.frobenius_norm().max(1.0);
    // Values are sorted non-increasing, so negatives sit at the tail.
    let mut negative: Vec<f64> = eig
        .values()
        .iter()
        .copied()
        .filter(|&v| v <= threshold)
        .collect();
    negative.reverse();
    let distance = negative.iter().map(|v| v * v).sum::<f64>().sqrt();
    Ok(ConeDistanceReport {
        distance,
        negative_count: negative.len(),
        negative_eigenvalues: negative,
    })
}

/// Nearest PSD matrix in Frobenius norm: the negative eigenvalues are zeroed
/// in the eigenbasis of `m`.
pub fn project_psd(m: &SymMatrix) -> Result<SymMatrix> {
    let eig = m.eigendecompose()?;
    let clamped: Vec<f64> = eig.values().iter().map(|&v| v.max(0.0)).collect();
    Ok(eig.recompose_with(&clamped))
}

/// True iff `m` has at most `n - k` negative eigenvalues — a property every
/// member of the (n, k) closure must satisfy, used as a falsification test.
pub fn check_negative_count_bound(m: &SymMatrix, k: usize) -> Result<bool> {
    let n = m.dim();
    assert!(k >= 2 && k <= n, "k must be in 2..=n");
    let report = dist_to_psd(m)?;
    Ok(report.negative_count <= n - k)
}

/// The scaled smallest-eigenvalue distance bound `sqrt(n - k) * l_1`.
///
/// For closure members this upper-bounds `dist_to_psd`. Errors if `m` has no
/// negative eigenvalue or if `k` is out of range.
pub fn dist_bound_from_lambda1(m: &SymMatrix, k: usize) -> Result<f64> {
    let n = m.dim();
    if k < 2 || k > n {
        return Err(Error::Domain(format!("k = {k} not in 2..={n}")));
    }
    let report = dist_to_psd(m)?;
    let lambda1 = report
        .lambda1()
        .ok_or_else(|| Error::Domain("matrix is PSD: no negative eigenvalue".into()))?;
    Ok(((n - k) as f64).sqrt() * lambda1)
}

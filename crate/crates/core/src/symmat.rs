//! Dense symmetric matrices, principal submatrices, and a from-scratch
//! symmetric eigensolver.
//!
//! [`SymMatrix`] stores one value per unordered index pair (packed upper
//! triangle), so symmetry holds exactly by construction rather than by
//! numerical accident. The eigensolver is cyclic Jacobi: unconditionally
//! stable on symmetric input and accurate to near machine precision for the
//! dimensions this crate targets (n up to a few hundred).

use crate::error::{Error, Result};
use crate::rng::Xoshiro256PlusPlus;

/// Default relative tolerance for PSD checks: two orders of magnitude above
/// the eigensolver's residual, so solver noise never flips a verdict.
pub const DEFAULT_PSD_TOL: f64 = 1e-9;

/// Off-diagonal Frobenius mass threshold, relative to the input norm, at
/// which a Jacobi sweep is declared converged.
const JACOBI_REL_THRESHOLD: f64 = 1e-14;

/// Sweep cap for the Jacobi iteration; hitting it signals pathological
/// (non-finite) input rather than a hard problem instance.
const JACOBI_MAX_SWEEPS: usize = 100;

/// Relative asymmetry tolerated when reading a matrix from text.
const READ_ASYMMETRY_TOL: f64 = 1e-12;

/// A k-subset of `{0, .., n-1}`, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KSet {
    indices: Vec<usize>,
}

impl KSet {
    /// Builds a k-set over a ground set of size `n`. The input is sorted;
    /// duplicates, out-of-range indices, and sizes outside `2..=n` are
    /// rejected.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        if indices.len() < 2 || indices.len() > n {
            return Err(Error::InvalidKSet(format!(
                "size {} not in 2..={}",
                indices.len(),
                n
            )));
        }
        indices.sort_unstable();
        for w in indices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidKSet(format!("duplicate index {}", w[0])));
            }
        }
        if let Some(&last) = indices.last() {
            if last >= n {
                return Err(Error::IndexOutOfRange { index: last, n });
            }
        }
        Ok(KSet { indices })
    }

    /// The full index set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        KSet {
            indices: (0..n).collect(),
        }
    }

    /// Parses 1-based indices, as used in the text formats.
    pub fn from_one_based(indices: &[usize], n: usize) -> Result<Self> {
        let mut zero_based = Vec::with_capacity(indices.len());
        for &i in indices {
            if i == 0 {
                return Err(Error::InvalidKSet("indices are 1-based; got 0".into()));
            }
            zero_based.push(i - 1);
        }
        KSet::new(zero_based, n)
    }

    pub fn k(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// 1-based rendering for files and reports.
    pub fn one_based(&self) -> Vec<usize> {
        self.indices.iter().map(|&i| i + 1).collect()
    }
}

/// Lexicographic enumeration of all k-subsets of `{0, .., n-1}`.
pub struct KSetEnumerator {
    n: usize,
    k: usize,
    current: Option<Vec<usize>>,
}

impl KSetEnumerator {
    pub fn new(n: usize, k: usize) -> Self {
        let current = if k <= n && k > 0 {
            Some((0..k).collect())
        } else {
            None
        };
        KSetEnumerator { n, k, current }
    }
}

impl Iterator for KSetEnumerator {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.as_mut()?;
        let out = cur.clone();
        // Advance: find the rightmost index that can still move up.
        let mut i = self.k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] < self.n - self.k + i {
                cur[i] += 1;
                for j in i + 1..self.k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// `C(n, k)`, or `None` once the value exceeds `cap`.
pub fn binomial_capped(n: u64, k: u64, cap: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        // c = C(n - k + i, i); nondecreasing in i, so early exit is sound.
        c = c * (n - k + i) as u128 / i as u128;
        if c > cap as u128 {
            return None;
        }
    }
    Some(c as u64)
}

/// A dense real symmetric matrix with packed upper-triangle storage.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    /// Row-major packed upper triangle: row i holds entries j = i..n.
    data: Vec<f64>,
}

impl SymMatrix {
    fn packed_len(n: usize) -> usize {
        n * (n + 1) / 2
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        debug_assert!(hi < self.n);
        lo * self.n - lo * (lo + 1) / 2 + hi
    }

    /// The n-by-n zero matrix.
    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "dimension must be positive");
        SymMatrix {
            n,
            data: vec![0.0; Self::packed_len(n)],
        }
    }

    /// The n-by-n identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Diagonal matrix from the given values.
    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    /// Builds a matrix by evaluating `f(i, j)` on the upper triangle
    /// (`i <= j`).
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds from a full row-major `n * n` slice, requiring the input to be
    /// numerically symmetric within `tol * max(1, ||M||_F)`; entries are then
    /// symmetrized by averaging.
    pub fn from_dense(n: usize, entries: &[f64], tol: f64) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: entries.len(),
            });
        }
        for (pos, &v) in entries.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite {
                    row: pos / n,
                    col: pos % n,
                });
            }
        }
        let norm = entries.iter().map(|v| v * v).sum::<f64>().sqrt();
        let allowed = tol * norm.max(1.0);
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                let a = entries[i * n + j];
                let b = entries[j * n + i];
                if (a - b).abs() > allowed {
                    return Err(Error::Asymmetric {
                        row: i,
                        col: j,
                        delta: (a - b).abs(),
                    });
                }
                m.set(i, j, 0.5 * (a + b));
            }
        }
        Ok(m)
    }

    /// Random matrix with i.i.d. standard normal entries on the packed upper
    /// triangle (diagonal included), filled in row-major order.
    pub fn gaussian(n: usize, rng: &mut Xoshiro256PlusPlus) -> Self {
        let mut m = Self::zeros(n);
        rng.fill_normals(&mut m.data);
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[self.idx(i, j)]
    }

    /// Sets the `(i, j)` (and hence `(j, i)`) entry. Non-finite values are
    /// rejected eagerly so they cannot poison later eigensolves.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        assert!(value.is_finite(), "matrix entries must be finite");
        let idx = self.idx(i, j);
        self.data[idx] = value;
    }

    /// Frobenius norm over all n^2 logical entries.
    pub fn frobenius_norm(&self) -> f64 {
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let v = self.get(i, j);
                sum += if i == j { v * v } else { 2.0 * v * v };
            }
        }
        sum.sqrt()
    }

    /// Frobenius norm of `self - other`.
    pub fn frobenius_distance(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let mut sum = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let d = self.get(i, j) - other.get(i, j);
                sum += if i == j { d * d } else { 2.0 * d * d };
            }
        }
        sum.sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// `self` scaled entrywise by `factor`.
    pub fn scaled(&self, factor: f64) -> SymMatrix {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= factor;
        }
        out
    }

    /// `self + shift * I`.
    pub fn shifted_identity(&self, shift: f64) -> SymMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            let v = out.get(i, i) + shift;
            out.set(i, i, v);
        }
        out
    }

    /// `self` scaled to unit Frobenius norm. Panics on the zero matrix.
    pub fn normalized(&self) -> SymMatrix {
        let norm = self.frobenius_norm();
        assert!(norm > 0.0, "cannot normalize the zero matrix");
        self.scaled(1.0 / norm)
    }

    /// `x^T M x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.n, "vector dimension mismatch");
        let mut total = 0.0;
        for i in 0..self.n {
            if x[i] == 0.0 {
                continue;
            }
            let mut row = self.get(i, i) * x[i];
            for j in 0..self.n {
                if j != i && x[j] != 0.0 {
                    row += self.get(i, j) * x[j];
                }
            }
            total += x[i] * row;
        }
        total
    }

    /// The principal submatrix `M_J`: rows and columns restricted to `J`.
    pub fn principal_submatrix(&self, set: &KSet) -> Result<SymMatrix> {
        let idx = set.indices();
        if let Some(&max) = idx.last() {
            if max >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: max,
                    n: self.n,
                });
            }
        }
        let k = idx.len();
        let mut sub = SymMatrix::zeros(k);
        for a in 0..k {
            for b in a..k {
                sub.set(a, b, self.get(idx[a], idx[b]));
            }
        }
        Ok(sub)
    }

    /// True iff the smallest eigenvalue is at least `-tol * max(1, ||M||_F)`.
    ///
    /// Cyclic Jacobi converges for every finite symmetric matrix, which
    /// construction guarantees, so the internal eigensolve cannot fail here.
    pub fn is_psd(&self, tol: f64) -> bool {
        let eig = self
            .eigendecompose()
            .expect("Jacobi converges on finite symmetric input");
        let threshold = -tol * self.frobenius_norm().max(1.0);
        eig.min_value() >= threshold
    }

    /// Checks the eigenvalue interlacing inequalities between `self` and its
    /// principal submatrix `M_J`, within additive slack
    /// `1e-9 * max(1, ||M||_F)`. The submatrix eigenvalues must sit between
    /// the matching outer eigenvalues; a failure indicts the eigensolver,
    /// not the matrix.
    pub fn interlace_check(&self, set: &KSet) -> bool {
        let sub = self
            .principal_submatrix(set)
            .expect("k-set must be valid for this matrix");
        let full = self
            .eigendecompose()
            .expect("Jacobi converges on finite symmetric input");
        let part = sub
            .eigendecompose()
            .expect("Jacobi converges on finite symmetric input");
        let slack = 1e-9 * self.frobenius_norm().max(1.0);
        let n = self.n;
        let k = set.k();
        let lam = full.values();
        let mu = part.values();
        (0..k).all(|i| lam[n - k + i] - slack <= mu[i] && mu[i] <= lam[i] + slack)
    }

    /// Full eigendecomposition by cyclic Jacobi rotations.
    ///
    /// Eigenvalues come back sorted non-increasing, ties broken by the
    /// pre-sort diagonal position, so repeated calls are bit-identical.
    /// Eigenvector signs are fixed so each vector's largest-magnitude
    /// component is positive.
    pub fn eigendecompose(&self) -> Result<EigenDecomposition> {
        let n = self.n;
        let norm = self.frobenius_norm();
        if norm == 0.0 {
            // Zero matrix: eigenbasis is taken to be the standard basis.
            let vectors = (0..n)
                .map(|i| {
                    let mut e = vec![0.0; n];
                    e[i] = 1.0;
                    e
                })
                .collect();
            return Ok(EigenDecomposition {
                values: vec![0.0; n],
                vectors,
            });
        }

        // Working copies: full dense A and accumulated rotations V.
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                a[i * n + j] = self.get(i, j);
            }
        }
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }

        let threshold = JACOBI_REL_THRESHOLD * norm;
        let mut converged = false;
        for _ in 0..JACOBI_MAX_SWEEPS {
            let mut off = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    off += 2.0 * a[p * n + q] * a[p * n + q];
                }
            }
            if off.sqrt() <= threshold {
                converged = true;
                break;
            }
            for p in 0..n - 1 {
                for q in p + 1..n {
                    let apq = a[p * n + q];
                    if apq == 0.0 {
                        continue;
                    }
                    let app = a[p * n + p];
                    let aqq = a[q * n + q];
                    let theta = 0.5 * (aqq - app) / apq;
                    let t = if theta.abs() > 1e150 {
                        // Avoid overflow in theta^2; limit of the formula.
                        0.5 / theta
                    } else {
                        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                        sign / (theta.abs() + (1.0 + theta * theta).sqrt())
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);

                    a[p * n + p] = app - t * apq;
                    a[q * n + q] = aqq + t * apq;
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    for r in 0..n {
                        if r != p && r != q {
                            let arp = a[r * n + p];
                            let arq = a[r * n + q];
                            let new_rp = arp - s * (arq + tau * arp);
                            let new_rq = arq + s * (arp - tau * arq);
                            a[r * n + p] = new_rp;
                            a[p * n + r] = new_rp;
                            a[r * n + q] = new_rq;
                            a[q * n + r] = new_rq;
                        }
                    }
                    for r in 0..n {
                        let vrp = v[r * n + p];
                        let vrq = v[r * n + q];
                        v[r * n + p] = vrp - s * (vrq + tau * vrp);
                        v[r * n + q] = vrq + s * (vrp - tau * vrq);
                    }
                }
            }
        }
        if !converged {
            // One last check in case the final sweep finished the job.
            let mut off = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    off += 2.0 * a[p * n + q] * a[p * n + q];
                }
            }
            if off.sqrt() > threshold {
                return Err(Error::NoConvergence {
                    sweeps: JACOBI_MAX_SWEEPS,
                });
            }
        }

        // Stable sort on (eigenvalue descending, original position ascending).
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));

        let mut values = Vec::with_capacity(n);
        let mut vectors = Vec::with_capacity(n);
        for &col in &order {
            values.push(a[col * n + col]);
            let mut vec_col: Vec<f64> = (0..n).map(|r| v[r * n + col]).collect();
            // Canonical sign: largest-magnitude component positive.
            let mut lead = 0;
            for (r, &x) in vec_col.iter().enumerate() {
                if x.abs() > vec_col[lead].abs() {
                    lead = r;
                }
            }
            if vec_col[lead] < 0.0 {
                for x in &mut vec_col {
                    *x = -*x;
                }
            }
            vectors.push(vec_col);
        }
        Ok(EigenDecomposition { values, vectors })
    }
}

/// Sorted eigendecomposition of a [`SymMatrix`].
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    values: Vec<f64>,
    vectors: Vec<Vec<f64>>,
}

impl EigenDecomposition {
    /// Eigenvalues, sorted non-increasing.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Orthonormal eigenvectors; `vectors()[i]` pairs with `values()[i]`.
    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i]
    }

    /// Smallest eigenvalue.
    pub fn min_value(&self) -> f64 {
        *self.values.last().expect("decomposition is never empty")
    }

    /// Rebuilds `sum_i d_i v_i v_i^T` for the given diagonal `d`, reusing
    /// this decomposition's eigenvectors.
    pub fn recompose_with(&self, diag: &[f64]) -> SymMatrix {
        let n = self.vectors.len();
        assert_eq!(diag.len(), n, "diagonal length mismatch");
        SymMatrix::from_fn(n, |i, j| {
            (0..n)
                .map(|t| diag[t] * self.vectors[t][i] * self.vectors[t][j])
                .sum()
        })
    }

    /// Rebuilds the original matrix from the decomposition.
    pub fn recompose(&self) -> SymMatrix {
        self.recompose_with(&self.values)
    }
}

/// Renders a matrix in the text format: first line `n`, then `n` rows of `n`
/// space-separated values at 17 significant digits (lossless round-trip).
pub fn format_matrix(m: &SymMatrix) -> String {
    let n = m.dim();
    let mut out = String::new();
    out.push_str(&format!("{n}\n"));
    for i in 0..n {
        for j in 0..n {
            if j > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{:.16e}", m.get(i, j)));
        }
        out.push('\n');
    }
    out
}

/// Parses the matrix text format. Asymmetry beyond
/// `1e-12 * max(1, ||M||_F)` is an error; smaller asymmetry is averaged away.
pub fn parse_matrix(text: &str) -> Result<SymMatrix> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension line: {header:?}")))?;
    if n == 0 {
        return Err(Error::Parse("dimension must be positive".into()));
    }
    let mut entries = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {}", row + 1)))?;
        let mut count = 0;
        for tok in line.split_whitespace() {
            let v: f64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad value {tok:?} in row {}", row + 1)))?;
            entries.push(v);
            count += 1;
        }
        if count != n {
            return Err(Error::Parse(format!(
                "row {} has {count} values, expected {n}",
                row + 1
            )));
        }
    }
    SymMatrix::from_dense(n, &entries, READ_ASYMMETRY_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gab(a: f64, b: f64, n: usize) -> SymMatrix {
        SymMatrix::from_fn(n, |i, j| if i == j { b } else { -a })
    }

    #[test]
    fn frobenius_norm_zero_matrix() {
        assert_eq!(SymMatrix::zeros(3).frobenius_norm(), 0.0);
    }

    #[test]
    fn frobenius_norm_identity() {
        assert_eq!(SymMatrix::identity(4).frobenius_norm(), 2.0);
    }

    #[test]
    fn frobenius_norm_gab() {
        // G(1,1,3): 3 diagonal ones, 6 off-diagonal (-1)s => sqrt(9) = 3.
        assert!((gab(1.0, 1.0, 3).frobenius_norm() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn principal_submatrix_of_diagonal() {
        let m = SymMatrix::from_diagonal(&[1.0, 2.0, 3.0]);
        let j = KSet::new(vec![0, 2], 3).unwrap();
        let sub = m.principal_submatrix(&j).unwrap();
        assert_eq!(sub.dim(), 2);
        assert_eq!(sub.get(0, 0), 1.0);
        assert_eq!(sub.get(1, 1), 3.0);
        assert_eq!(sub.get(0, 1), 0.0);
    }

    #[test]
    fn principal_submatrix_of_gab_is_gab() {
        let m = gab(1.0, 1.0, 4);
        for pair in [[0usize, 1], [0, 3], [1, 2], [2, 3]] {
            let j = KSet::new(pair.to_vec(), 4).unwrap();
            let sub = m.principal_submatrix(&j).unwrap();
            assert_eq!(sub.get(0, 0), 1.0);
            assert_eq!(sub.get(1, 1), 1.0);
            assert_eq!(sub.get(0, 1), -1.0);
        }
    }

    #[test]
    fn principal_submatrix_full_set_is_identity_op() {
        let mut rng = Xoshiro256PlusPlus::new(9);
        let m = SymMatrix::gaussian(5, &mut rng);
        let sub = m.principal_submatrix(&KSet::full(5)).unwrap();
        assert_eq!(sub, m);
    }

    #[test]
    fn principal_submatrix_out_of_range() {
        let m = SymMatrix::identity(3);
        let j = KSet::new(vec![0, 4], 5).unwrap();
        assert!(matches!(
            m.principal_submatrix(&j),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn eigendecompose_diagonal() {
        let m = SymMatrix::from_diagonal(&[3.0, 1.0, 2.0]);
        let eig = m.eigendecompose().unwrap();
        assert_eq!(eig.values(), &[3.0, 2.0, 1.0]);
        // Vectors are the standard basis, permuted to match the sort.
        assert_eq!(eig.vector(0), &[1.0, 0.0, 0.0]);
        assert_eq!(eig.vector(1), &[0.0, 0.0, 1.0]);
        assert_eq!(eig.vector(2), &[0.0, 1.0, 0.0]);
    }

    #[test]
    fn eigendecompose_gab113() {
        // Lonely eigenvalue b - (n-1)a = -1, repeated b + a = 2 twice.
        let eig = gab(1.0, 1.0, 3).eigendecompose().unwrap();
        let vals = eig.values();
        assert!((vals[0] - 2.0).abs() < 1e-10);
        assert!((vals[1] - 2.0).abs() < 1e-10);
        assert!((vals[2] + 1.0).abs() < 1e-10);
        // Eigenvector of -1 is the normalized all-ones vector.
        let v = eig.vector(2);
        let unit = 1.0 / 3f64.sqrt();
        for &x in v {
            assert!((x - unit).abs() < 1e-10);
        }
    }

    #[test]
    fn eigendecompose_random_reconstruction() {
        let mut rng = Xoshiro256PlusPlus::new(17);
        let m = SymMatrix::gaussian(6, &mut rng);
        let eig = m.eigendecompose().unwrap();
        let rebuilt = eig.recompose();
        let residual = m.frobenius_distance(&rebuilt);
        assert!(
            residual <= 1e-10 * m.frobenius_norm().max(1.0),
            "residual {residual}"
        );
    }

    #[test]
    fn eigendecomposition_invariants_hold() {
        let mut rng = Xoshiro256PlusPlus::new(23);
        for _ in 0..20 {
            let n = 2 + rng.index(9);
            let m = SymMatrix::gaussian(n, &mut rng);
            let eig = m.eigendecompose().unwrap();
            // Orthonormality.
            for i in 0..n {
                for j in i..n {
                    let dot: f64 = (0..n).map(|t| eig.vector(i)[t] * eig.vector(j)[t]).sum();
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((dot - expect).abs() < 1e-10, "gram ({i},{j}) = {dot}");
                }
            }
            // Trace and Frobenius identities.
            let tr: f64 = eig.values().iter().sum();
            assert!((tr - m.trace()).abs() <= 1e-10 * m.trace().abs().max(1.0));
            let sumsq: f64 = eig.values().iter().map(|v| v * v).sum();
            let fro2 = m.frobenius_norm().powi(2);
            assert!((sumsq - fro2).abs() <= 1e-10 * fro2.max(1.0));
        }
    }

    #[test]
    fn is_psd_examples() {
        assert!(SymMatrix::identity(5).is_psd(0.0));
        assert!(!gab(1.0, 1.0, 3).is_psd(1e-10));
        // [[1,-1],[-1,1]] has eigenvalues 0 and 2.
        let m = gab(1.0, 1.0, 2);
        assert!(m.is_psd(1e-10));
    }

    #[test]
    fn interlace_full_set_trivial() {
        let mut rng = Xoshiro256PlusPlus::new(31);
        let m = SymMatrix::gaussian(5, &mut rng);
        assert!(m.interlace_check(&KSet::full(5)));
    }

    #[test]
    fn interlace_diagonal_case() {
        let m = SymMatrix::from_diagonal(&[5.0, 3.0, 1.0]);
        let j = KSet::new(vec![0, 2], 3).unwrap();
        assert!(m.interlace_check(&j));
    }

    #[test]
    fn interlace_random_pairs() {
        let mut rng = Xoshiro256PlusPlus::new(37);
        for _ in 0..100 {
            let n = 3 + rng.index(8);
            let m = SymMatrix::gaussian(n, &mut rng);
            let k = 2 + rng.index(n - 1);
            let j = KSet::new(rng.kset(n, k), n).unwrap();
            assert!(m.interlace_check(&j));
        }
    }

    #[test]
    fn kset_rejects_bad_input() {
        assert!(KSet::new(vec![0], 5).is_err());
        assert!(KSet::new(vec![0, 0], 5).is_err());
        assert!(KSet::new(vec![0, 5], 5).is_err());
        assert!(KSet::new(vec![3, 1], 5).unwrap().indices() == [1, 3]);
    }

    #[test]
    fn enumerator_lexicographic() {
        let sets: Vec<_> = KSetEnumerator::new(4, 2).collect();
        assert_eq!(
            sets,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_capped(4, 2, 1000), Some(6));
        assert_eq!(binomial_capped(40, 5, 2_000_000), Some(658_008));
        assert_eq!(binomial_capped(40, 20, 2_000_000), None);
        assert_eq!(binomial_capped(5, 0, 10), Some(1));
        assert_eq!(binomial_capped(5, 6, 10), Some(0));
    }

    #[test]
    fn matrix_text_round_trip() {
        let mut rng = Xoshiro256PlusPlus::new(41);
        let m = SymMatrix::gaussian(4, &mut rng);
        let text = format_matrix(&m);
        let back = parse_matrix(&text).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.get(i, j), back.get(i, j));
            }
        }
    }

    #[test]
    fn parse_rejects_asymmetry() {
        let text = "2\n1.0 2.0\n0.5 1.0\n";
        assert!(matches!(parse_matrix(text), Err(Error::Asymmetric { .. })));
    }

    #[test]
    fn parse_symmetrizes_tiny_asymmetry() {
        let text = "2\n1.0 2.0000000000000004\n2.0 1.0\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m.get(0, 1), m.get(1, 0));
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("x\n").is_err());
        assert!(parse_matrix("2\n1.0 2.0\n").is_err());
        assert!(parse_matrix("2\n1.0\n2.0 1.0\n").is_err());
        assert!(parse_matrix("2\n1.0 nope\n2.0 1.0\n").is_err());
    }

    #[test]
    fn quadratic_form_matches_definition() {
        let m = gab(1.0, 1.0, 3);
        let x = [1.0, 1.0, 1.0];
        // x^T G x = sum b - offdiag contributions = 3 - 6 = -3.
        assert!((m.quadratic_form(&x) + 3.0).abs() < 1e-12);
    }
}

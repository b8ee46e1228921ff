//! Generators of interesting closure members and the sparsified-eigenvector
//! certificate.
//!
//! Three constructions live here:
//!
//! - The two-parameter family `G(a, b, n) = (a+b) I - a 11^T` (diagonal `b`,
//!   off-diagonal `-a`). Its spectrum is closed-form — `b - (n-1)a` once and
//!   `b + a` with multiplicity `n - 1` — which makes membership and distance
//!   closed-form too, and tuning `b = (k-1) a` at unit norm produces the
//!   extremal members that witness the algebraic lower bound.
//! - A random-sign construction: with `W` an m-by-n matrix of independent
//!   `+-1/sqrt(m)` entries, `M = -(1-d) I + W^T W` lands in the closure
//!   whenever `W` approximately preserves the norms of k-sparse vectors
//!   (restricted isometry), while the `n - m`-dimensional kernel of `W`
//!   contributes eigenvalues `-(1-d)` that push M a constant distance from
//!   the PSD cone when k grows linearly in n.
//! - The randomized sparsifier: given a unit eigenvector, keep the heavy
//!   coordinates and keep/rescale the light ones with probability
//!   `p = 1 - 2(n-k)/n`, producing a k-sparse test vector that stays close
//!   to the original. Feeding it through the membership quadratic form
//!   bounds the most negative eigenvalue of any unit-norm member by
//!   `96 (n-k) / n^{3/2}` in the dense regime `k >= 3n/4`, `n >= 97`.

use crate::cone::dist_to_psd;
use crate::error::{Error, Result};
use crate::rng::{split_seed, BitStream, Xoshiro256PlusPlus};
use crate::symmat::SymMatrix;

/// Default row count for the random-sign construction.
pub fn rip_default_rows(k: usize) -> usize {
    93 * k
}

/// Default isometry slack for the random-sign construction.
pub const RIP_DEFAULT_DELTA: f64 = 0.9;

/// Default number of sparsifier draws in [`lambda1_certificate`]: the
/// per-draw failure probability is bounded below 1, so hundreds of draws
/// make a successful draw near-certain.
pub const DEFAULT_LAMBDA1_TRIALS: u64 = 256;

/// Parameters of the constant-diagonal family `G(a, b, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GabSpec {
    /// Off-diagonal magnitude (entries are `-a`).
    pub a: f64,
    /// Diagonal value.
    pub b: f64,
    pub n: usize,
}

impl GabSpec {
    pub fn new(a: f64, b: f64, n: usize) -> Self {
        assert!(a >= 0.0 && b >= 0.0, "a and b must be nonnegative");
        assert!(n >= 2, "n must be at least 2");
        GabSpec { a, b, n }
    }
}

/// The matrix with diagonal `b` and off-diagonal `-a`.
pub fn gab_matrix(spec: &GabSpec) -> SymMatrix {
    SymMatrix::from_fn(spec.n, |i, j| if i == j { spec.b } else { -spec.a })
}

/// Closed-form spectrum: `(b - (n-1) a, b + a)` with multiplicities
/// `(1, n-1)`.
pub fn gab_eigenvalues(spec: &GabSpec) -> (f64, f64) {
    let nf = spec.n as f64;
    (spec.b - (nf - 1.0) * spec.a, spec.b + spec.a)
}

/// Membership of `G(a, b, n)` in the (n, k) closure: every k-by-k minor is
/// `G(a, b, k)`, so membership is exactly `b >= (k-1) a`.
pub fn gab_membership(spec: &GabSpec, k: usize) -> bool {
    assert!(k >= 2 && k <= spec.n, "k must be in 2..=n");
    spec.b >= (k as f64 - 1.0) * spec.a
}

/// Closed-form Frobenius distance to the PSD cone:
/// `max((n-1) a - b, 0)`.
pub fn gab_distance(spec: &GabSpec) -> f64 {
    let (lonely, _) = gab_eigenvalues(spec);
    (-lonely).max(0.0)
}

/// The unit-norm boundary member of the family at (n, k):
/// `a = 1 / sqrt((k-1)^2 n + n(n-1))`, `b = (k-1) a`. Its distance to the
/// PSD cone is `(n-k) * a`, the farthest this family reaches inside the
/// closure.
pub fn gab_extremal(n: usize, k: usize) -> SymMatrix {
    assert!(k >= 2 && k < n, "k must be in 2..n");
    let nf = n as f64;
    let kf = k as f64;
    let a = 1.0 / ((kf - 1.0) * (kf - 1.0) * nf + nf * (nf - 1.0)).sqrt();
    let b = (kf - 1.0) * a;
    gab_matrix(&GabSpec::new(a, b, n))
}

/// Parameters of the random-sign construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RipSpec {
    pub n: usize,
    pub k: usize,
    /// Rows of the sign matrix; the distance bound needs `m < n`.
    pub m: usize,
    /// Isometry slack in (0, 1).
    pub delta: f64,
    pub seed: u64,
}

impl RipSpec {
    /// The reference parameterization: `m = 93 k`, `delta = 0.9`.
    pub fn with_defaults(n: usize, k: usize, seed: u64) -> Self {
        RipSpec::new(n, k, rip_default_rows(k), RIP_DEFAULT_DELTA, seed)
    }

    pub fn new(n: usize, k: usize, m: usize, delta: f64, seed: u64) -> Self {
        assert!(k >= 2, "k must be at least 2");
        assert!(m < n, "need m < n for a nontrivial kernel");
        assert!(delta > 0.0 && delta < 1.0, "delta must be in (0, 1)");
        RipSpec { n, k, m, delta, seed }
    }
}

/// A random sign matrix with entries `+-1/sqrt(m)`.
///
/// Signs are stored exactly, so column inner products can be computed as an
/// integer sign count divided by `m`: a column's squared norm is exactly 1,
/// bit for bit.
#[derive(Debug, Clone)]
pub struct BernoulliMatrix {
    rows: usize,
    cols: usize,
    /// Row-major signs, one per entry.
    signs: Vec<i8>,
    scale: f64,
}

impl BernoulliMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry value `sign * 1/sqrt(m)`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.rows && j < self.cols);
        self.signs[i * self.cols + j] as f64 * self.scale
    }

    /// `<C^a, C^b>` of columns via the exact integer sign count:
    /// `(agreements - disagreements) / m`. For `a == b` this is exactly 1.
    pub fn column_dot(&self, a: usize, b: usize) -> f64 {
        assert!(a < self.cols && b < self.cols);
        let mut acc: i64 = 0;
        for row in 0..self.rows {
            acc += (self.signs[row * self.cols + a] * self.signs[row * self.cols + b]) as i64;
        }
        acc as f64 / self.rows as f64
    }
}

/// Draws the m-by-n `+-1/sqrt(m)` matrix: one fair bit per entry, consumed
/// in row-major order from the seeded bit stream.
pub fn rip_bernoulli(m: usize, n: usize, seed: u64) -> BernoulliMatrix {
    assert!(m >= 1 && n >= 1, "dimensions must be positive");
    let mut bits = BitStream::new(seed);
    let signs = (0..m * n)
        .map(|_| if bits.bit() { 1i8 } else { -1i8 })
        .collect();
    BernoulliMatrix {
        rows: m,
        cols: n,
        signs,
        scale: 1.0 / (m as f64).sqrt(),
    }
}

/// The probability bound that the sign matrix is a restricted isometry for
/// k-sparse vectors with slack `delta`:
/// `1 - 2 (12/delta)^k exp(-(delta^2/16 - delta^3/48) m)`.
/// May be negative (vacuous) for small m; returned as-is.
pub fn rip_success_probability(k: usize, delta: f64, m: usize) -> f64 {
    assert!(delta > 0.0 && delta < 1.0, "delta must be in (0, 1)");
    let exponent = (delta * delta / 16.0 - delta * delta * delta / 48.0) * m as f64;
    1.0 - 2.0 * (12.0 / delta).powi(k as i32) * (-exponent).exp()
}

/// Builds `M = -(1 - delta) I + W^T W` from a fresh sign matrix.
///
/// The diagonal is exactly `delta` (columns have unit norm); off-diagonal
/// entries are column inner products. The kernel of W contributes at least
/// `n - m` eigenvalues equal to `-(1 - delta)`. Whether M actually lands in
/// the closure is probabilistic; callers screen membership and retry with
/// fresh seeds.
pub fn rip_member_matrix(spec: &RipSpec) -> SymMatrix {
    let w = rip_bernoulli(spec.m, spec.n, spec.seed);
    SymMatrix::from_fn(spec.n, |i, j| {
        if i == j {
            spec.delta
        } else {
            w.column_dot(i, j)
        }
    })
}

/// The distance lower bound witnessed by the construction at `k = r n`,
/// `m = 93 k`, `delta = 0.9`: `sqrt(r - 93 r^2) / sqrt(162 r + 3)`.
/// Requires `0 < r < 1/93`.
pub fn rip_lower_bound(r: f64) -> Result<f64> {
    if r <= 0.0 || r >= 1.0 / 93.0 {
        return Err(Error::Domain(format!("r = {r} not in (0, 1/93)")));
    }
    Ok(((r - 93.0 * r * r) / (162.0 * r + 3.0)).sqrt())
}

/// Outcome of one sparsifier draw.
#[derive(Debug, Clone)]
pub struct SparsifierOutcome {
    /// The sparsified vector V.
    pub vector: Vec<f64>,
    /// Number of nonzero coordinates of V.
    pub support_size: usize,
    /// `<V, v>` against the input vector.
    pub inner_v1: f64,
    /// `sum_i mu_i <V, w^i>^2` against a known nonnegative eigenstructure;
    /// filled by the caller when that structure is available.
    pub positive_part: Option<f64>,
    /// Keep probability `p = 1 - 2(n-k)/n`.
    pub p: f64,
}

/// Randomly sparsifies a unit vector toward support size k.
///
/// Coordinates with `v_i^2 > 2/n` are kept as-is; the rest keep `v_i / p`
/// with probability `p = 1 - 2(n-k)/n` and drop to 0 otherwise (ties at
/// `v_i^2 = 2/n` take the randomized branch). One uniform draw is consumed
/// per randomized coordinate, in coordinate order.
///
/// Requires `n >= 97`, `k >= 3n/4`, and `||v||_2 = 1` within 1e-10 — the
/// regime where `p >= 1/2` and the concentration guarantees hold.
pub fn sparsify_vector(v: &[f64], k: usize, seed: u64) -> Result<SparsifierOutcome> {
    let n = v.len();
    if n < 97 {
        return Err(Error::Domain(format!("n = {n} < 97")));
    }
    if 4 * k < 3 * n {
        return Err(Error::Domain(format!("k = {k} < 3n/4 = {}", 3 * n / 4)));
    }
    if k > n {
        return Err(Error::Domain(format!("k = {k} > n = {n}")));
    }
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::Domain(format!("||v||_2 = {norm} is not 1")));
    }
    let nf = n as f64;
    let p = 1.0 - 2.0 * (n - k) as f64 / nf;
    let heavy = 2.0 / nf;
    let mut rng = Xoshiro256PlusPlus::new(seed);
    let mut vector = Vec::with_capacity(n);
    for &vi in v {
        if vi * vi > heavy {
            vector.push(vi);
        } else if rng.uniform() < p {
            vector.push(vi / p);
        } else {
            vector.push(0.0);
        }
    }
    let support_size = vector.iter().filter(|&&x| x != 0.0).count();
    let inner_v1 = vector.iter().zip(v).map(|(a, b)| a * b).sum();
    Ok(SparsifierOutcome {
        vector,
        support_size,
        inner_v1,
        positive_part: None,
        p,
    })
}

/// The scaled smallest-eigenvalue certificate for dense-regime members.
#[derive(Debug, Clone)]
pub struct Lambda1Certificate {
    /// Magnitude of the most negative eigenvalue.
    pub lambda1: f64,
    /// `96 (n-k) / n^{3/2}`.
    pub bound: f64,
    /// Whether `lambda1 <= bound`.
    pub holds: bool,
    /// Diagnostic: the most negative quadratic form `V^T M V` over the
    /// k-sparse draws (for a true member this stays nonnegative up to
    /// tolerance).
    pub best_quadratic_form: Option<f64>,
    /// Diagnostic: support size of the vector achieving it.
    pub best_support: Option<usize>,
    /// Diagnostic: how many draws were k-sparse.
    pub sparse_draws: u64,
}

/// Checks the dense-regime eigenvalue bound `lambda1 <= 96 (n-k)/n^{3/2}`
/// and re-enacts the sparsifier argument over `trials` seeded draws.
///
/// Requires `n >= 97`, `k >= 3n/4`, unit Frobenius norm, and at least one
/// negative eigenvalue.
pub fn lambda1_certificate(
    m: &SymMatrix,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<Lambda1Certificate> {
    let n = m.dim();
    if n < 97 {
        return Err(Error::Domain(format!("n = {n} < 97")));
    }
    if 4 * k < 3 * n || k > n {
        return Err(Error::Domain(format!("k = {k} outside 3n/4..=n")));
    }
    let norm = m.frobenius_norm();
    if (norm - 1.0).abs() > 1e-8 {
        return Err(Error::Domain(format!("||M||_F = {norm} is not 1")));
    }
    let report = dist_to_psd(m)?;
    let lambda1 = report
        .lambda1()
        .ok_or_else(|| Error::Domain("matrix is PSD: no negative eigenvalue".into()))?;
    let nf = n as f64;
    let bound = 96.0 * (n - k) as f64 / nf.powf(1.5);

    // Diagnostic replay: sparsify the eigenvector of the most negative
    // eigenvalue and track the worst quadratic form among k-sparse draws.
    let eig = m.eigendecompose()?;
    let v1 = eig.vector(n - 1);
    let mut best_quadratic_form = None;
    let mut best_support = None;
    let mut sparse_draws = 0u64;
    for t in 0..trials {
        let outcome = sparsify_vector(v1, k, split_seed(seed, t))?;
        if outcome.support_size <= k {
            sparse_draws += 1;
            let q = m.quadratic_form(&outcome.vector);
            if best_quadratic_form.map_or(true, |b| q < b) {
                best_quadratic_form = Some(q);
                best_support = Some(outcome.support_size);
            }
        }
    }
    Ok(Lambda1Certificate {
        lambda1,
        bound,
        holds: lambda1 <= bound,
        best_quadratic_form,
        best_support,
        sparse_draws,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::{member_exact, member_sampled};
    use crate::symmat::DEFAULT_PSD_TOL;

    #[test]
    fn gab_matrix_entries() {
        let id = gab_matrix(&GabSpec::new(0.0, 1.0, 3));
        assert_eq!(id, SymMatrix::identity(3));
        let g = gab_matrix(&GabSpec::new(1.0, 1.0, 3));
        assert_eq!(g.get(0, 0), 1.0);
        assert_eq!(g.get(0, 1), -1.0);
    }

    #[test]
    fn gab_frobenius_norm_closed_form() {
        let spec = GabSpec::new(0.7, 1.3, 5);
        let expect = (5.0 * 1.3 * 1.3 + 20.0 * 0.7 * 0.7f64).sqrt();
        assert!((gab_matrix(&spec).frobenius_norm() - expect).abs() < 1e-12);
    }

    #[test]
    fn gab_eigenvalues_match_solver() {
        for (a, b, n) in [(1.0, 1.0, 3usize), (0.0, 2.0, 4), (0.5, 2.0, 6), (2.0, 1.0, 5)] {
            let spec = GabSpec::new(a, b, n);
            let (lonely, repeated) = gab_eigenvalues(&spec);
            let eig = gab_matrix(&spec).eigendecompose().unwrap();
            let mut expected = vec![repeated; n - 1];
            expected.push(lonely);
            expected.sort_by(|x, y| y.total_cmp(x));
            for (got, want) in eig.values().iter().zip(&expected) {
                assert!((got - want).abs() < 1e-10, "{got} vs {want}");
            }
        }
    }

    #[test]
    fn gab_eigenvalues_reference_cases() {
        assert_eq!(gab_eigenvalues(&GabSpec::new(1.0, 1.0, 3)), (-1.0, 2.0));
        assert_eq!(gab_eigenvalues(&GabSpec::new(0.0, 2.5, 4)), (2.5, 2.5));
        // b = (n-1)a: PSD boundary, lonely eigenvalue 0, repeated n*a.
        let (lonely, repeated) = gab_eigenvalues(&GabSpec::new(1.0, 4.0, 5));
        assert_eq!(lonely, 0.0);
        assert_eq!(repeated, 5.0);
    }

    #[test]
    fn gab_membership_closed_form() {
        assert!(gab_membership(&GabSpec::new(1.0, 1.0, 4), 2));
        assert!(!gab_membership(&GabSpec::new(1.0, 1.0, 4), 3));
        for k in 2..=4 {
            assert!(gab_membership(&GabSpec::new(0.0, 1.0, 4), k));
        }
    }

    #[test]
    fn gab_membership_agrees_with_enumeration() {
        for (a, b, n) in [(1.0, 1.0, 5usize), (1.0, 2.0, 5), (0.3, 0.9, 6), (2.0, 0.0, 4)] {
            let spec = GabSpec::new(a, b, n);
            let m = gab_matrix(&spec);
            for k in 2..=n {
                let closed = gab_membership(&spec, k);
                let enumerated = member_exact(&m, k, DEFAULT_PSD_TOL).unwrap().member;
                assert_eq!(closed, enumerated, "a={a} b={b} n={n} k={k}");
            }
        }
    }

    #[test]
    fn gab_distance_examples() {
        assert_eq!(gab_distance(&GabSpec::new(1.0, 4.0, 5)), 0.0);
        assert_eq!(gab_distance(&GabSpec::new(1.0, 1.0, 3)), 1.0);
    }

    #[test]
    fn gab_distance_agrees_with_projection() {
        for (a, b, n) in [(1.0, 1.0, 3usize), (0.5, 0.1, 6), (0.0, 1.0, 4), (1.5, 2.0, 5)] {
            let spec = GabSpec::new(a, b, n);
            let closed = gab_distance(&spec);
            let measured = dist_to_psd(&gab_matrix(&spec)).unwrap().distance;
            assert!((closed - measured).abs() < 1e-9, "a={a} b={b} n={n}");
        }
    }

    #[test]
    fn gab_extremal_4_2() {
        let m = gab_extremal(4, 2);
        assert!((m.get(0, 0) - 0.25).abs() < 1e-15);
        assert!((m.get(0, 1) + 0.25).abs() < 1e-15);
        assert!((m.frobenius_norm() - 1.0).abs() < 1e-12);
        assert!((dist_to_psd(&m).unwrap().distance - 0.5).abs() < 1e-9);
        assert!(member_exact(&m, 2, DEFAULT_PSD_TOL).unwrap().member);
    }

    #[test]
    fn gab_extremal_10_9() {
        let m = gab_extremal(10, 9);
        assert!((m.frobenius_norm() - 1.0).abs() < 1e-12);
        let dist = dist_to_psd(&m).unwrap().distance;
        let expect = 1.0 / 730f64.sqrt();
        assert!((dist - expect).abs() < 1e-9, "{dist} vs {expect}");
    }

    #[test]
    fn bernoulli_columns_have_exact_unit_norm() {
        let w = rip_bernoulli(7, 5, 3);
        for c in 0..5 {
            assert_eq!(w.column_dot(c, c), 1.0);
        }
    }

    #[test]
    fn bernoulli_is_deterministic() {
        let w1 = rip_bernoulli(6, 9, 11);
        let w2 = rip_bernoulli(6, 9, 11);
        for i in 0..6 {
            for j in 0..9 {
                assert_eq!(w1.get(i, j).to_bits(), w2.get(i, j).to_bits());
            }
        }
    }

    #[test]
    fn bernoulli_entry_mean_over_seeds() {
        // Entry (0, 0) over many seeds: mean within 3 sigma of 0.
        let m = 4;
        let trials = 100_000;
        let mut sum = 0.0;
        for seed in 0..trials {
            sum += rip_bernoulli(m, 6, seed).get(0, 0);
        }
        let mean = sum / trials as f64;
        let sigma = (1.0 / m as f64).sqrt() / (trials as f64).sqrt();
        assert!(mean.abs() < 3.0 * sigma, "mean {mean}, sigma {sigma}");
    }

    #[test]
    fn rip_probability_reference_point() {
        // Exponent at delta = 0.9 is 0.0354375 exactly.
        assert!((0.9f64 * 0.9 / 16.0 - 0.9f64.powi(3) / 48.0 - 0.0354375).abs() < 1e-15);
        let p = rip_success_probability(2, 0.9, 186);
        assert!(p >= 0.51, "p = {p}");
        assert!(p < 0.52, "p = {p}");
        // Large m drives the bound to 1.
        assert!(rip_success_probability(2, 0.9, 100_000) > 0.999999);
    }

    #[test]
    fn rip_member_matrix_structure() {
        let spec = RipSpec::with_defaults(200, 2, 5);
        assert_eq!(spec.m, 186);
        let m = rip_member_matrix(&spec);
        for i in 0..200 {
            assert_eq!(m.get(i, i), 0.9);
        }
        // At least n - m eigenvalues at -(1 - delta).
        let eig = m.eigendecompose().unwrap();
        let near_kernel = eig
            .values()
            .iter()
            .filter(|&&v| v <= -(1.0 - spec.delta) + 1e-9)
            .count();
        assert!(near_kernel >= 200 - 186, "only {near_kernel} kernel modes");
        // Raw distance then dominates sqrt(n - m) (1 - delta).
        let dist = dist_to_psd(&m).unwrap().distance;
        assert!(dist >= (14f64).sqrt() * 0.1 - 1e-9, "dist {dist}");
    }

    #[test]
    fn rip_member_matrix_screens_at_k2() {
        // A couple of seeds; 2x2 minors fail only if |<C_i, C_j>| > 0.9,
        // which is astronomically unlikely at m = 186.
        for seed in 0..3 {
            let spec = RipSpec::with_defaults(200, 2, seed);
            let m = rip_member_matrix(&spec);
            assert!(member_exact(&m, 2, DEFAULT_PSD_TOL).unwrap().member);
        }
    }

    #[test]
    fn rip_lower_bound_reference_values() {
        // sqrt(0.0007 / 4.62) = 1/sqrt(6600).
        let v = rip_lower_bound(0.01).unwrap();
        assert!((v - 1.0 / 6600f64.sqrt()).abs() < 1e-15);
        assert!((v - 0.0123091).abs() < 1e-7, "{v}");
        let w = rip_lower_bound(1.0 / 186.0).unwrap();
        assert!((w - 0.0263523).abs() < 1e-7, "{w}");
        assert!(rip_lower_bound(1.0 / 93.0).is_err());
        assert!(rip_lower_bound(0.0).is_err());
        // r -> 0 drives the bound to 0.
        assert!(rip_lower_bound(1e-9).unwrap() < 1e-4);
    }

    #[test]
    fn sparsify_keeps_heavy_coordinates_deterministically() {
        let n = 100;
        let mut v = vec![0.0; n];
        v[0] = 1.0;
        let out = sparsify_vector(&v, 75, 9).unwrap();
        assert_eq!(out.vector[0], 1.0);
        assert_eq!(out.support_size, 1);
        assert_eq!(out.inner_v1, 1.0);
    }

    #[test]
    fn sparsify_uniform_vector_shape() {
        let n = 100;
        let k = 75;
        let v = vec![1.0 / (n as f64).sqrt(); n];
        let out = sparsify_vector(&v, k, 21).unwrap();
        assert_eq!(out.p, 0.5);
        for (&vi, &oi) in v.iter().zip(&out.vector) {
            assert!(oi == 0.0 || (oi - vi / 0.5).abs() < 1e-15);
        }
        assert_eq!(
            out.support_size,
            out.vector.iter().filter(|&&x| x != 0.0).count()
        );
    }

    #[test]
    fn sparsify_rejects_bad_inputs() {
        let v = vec![1.0; 4];
        assert!(sparsify_vector(&v, 3, 0).is_err()); // n < 97
        let n = 100;
        let unit = vec![1.0 / (n as f64).sqrt(); n];
        assert!(sparsify_vector(&unit, 50, 0).is_err()); // k < 3n/4
        let not_unit = vec![0.2; n];
        assert!(sparsify_vector(&not_unit, 80, 0).is_err());
    }

    #[test]
    fn lambda1_certificate_extremal_100_75() {
        let m = gab_extremal(100, 75);
        let cert = lambda1_certificate(&m, 75, 64, 3).unwrap();
        // lambda1 = 25 / sqrt(74^2 * 100 + 9900) = 25 / sqrt(557500).
        let expect = 25.0 / 557_500f64.sqrt();
        assert!((cert.lambda1 - expect).abs() < 1e-9, "{}", cert.lambda1);
        assert!((cert.bound - 2.4).abs() < 1e-12);
        assert!(cert.holds);
        // The member's quadratic form stays nonnegative on k-sparse draws.
        assert!(cert.sparse_draws > 0);
        if let Some(q) = cert.best_quadratic_form {
            assert!(q >= -1e-9, "member violated by sparse vector: {q}");
        }
    }

    #[test]
    fn lambda1_certificate_rejects_psd() {
        let m = SymMatrix::identity(100).scaled(0.1); // unit Frobenius norm
        assert!((m.frobenius_norm() - 1.0).abs() < 1e-12);
        assert!(lambda1_certificate(&m, 75, 8, 0).is_err());
    }

    #[test]
    fn lower1_never_exceeds_upper1_on_grid() {
        for n in 3..=40usize {
            for k in 2..n {
                let lower = (n - k) as f64
                    / (((k - 1) * (k - 1) * n + n * (n - 1)) as f64).sqrt();
                let upper = (n - k) as f64 / (n + k - 2) as f64;
                assert!(lower <= upper + 1e-15, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn sampled_screen_agrees_with_exact_on_rip_at_k2() {
        // Reference row count 93k would exceed n here; use m < n directly.
        let spec = RipSpec::new(60, 2, 55, 0.9, 1);
        let m = rip_member_matrix(&spec);
        let exact = member_exact(&m, 2, DEFAULT_PSD_TOL).unwrap().member;
        let sampled = member_sampled(&m, 2, 2000, 7).unwrap().member;
        if exact {
            assert!(sampled, "sampled screen must not reject a member");
        }
    }
}

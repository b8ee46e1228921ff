//! The minor-averaging operator, its exact distance identity, and the
//! sampled and design-based variants.
//!
//! Zeroing out all rows and columns of M outside a k-set I gives a PSD
//! matrix whenever `M_I` is PSD, so averaging those zero-padded copies over
//! every k-set maps closure members to PSD matrices. The average has closed
//! form: diagonal entries shrink by `k/n`, off-diagonal entries by
//! `k(k-1)/(n(n-1))`. Scaling the average by
//! `alpha = 2n(n-1) / (k(n+k-2))` equalizes those two factors in magnitude,
//! making `M - alpha*avg` a uniform +/- scaling of M itself:
//!
//! `|| M - alpha * avg ||_F = (n-k)/(n+k-2) * || M ||_F`, exactly.
//!
//! The sampled variant averages over a random sequence of k-sets; per-entry
//! coverage fractions concentrate around the closed-form factors, and
//! [`sample_size`] gives the number of draws that keeps every fraction
//! within `eps * gamma` of its mean with probability `1 - delta`, where
//! `gamma = k(n-k)/(2n(n-1))`.

use crate::designs::Design;
use crate::error::{Error, Result};
use crate::rng::Xoshiro256PlusPlus;
use crate::symmat::{KSet, KSetEnumerator, SymMatrix};

/// A sequence of sampled k-sets (duplicates allowed: multiset semantics,
/// matching the independent-sampling model).
#[derive(Debug, Clone)]
pub struct KSetSample {
    n: usize,
    k: usize,
    sets: Vec<KSet>,
    seed: u64,
}

impl KSetSample {
    /// Wraps an explicit list of sets; they must share the dimensions.
    pub fn from_sets(n: usize, k: usize, sets: Vec<KSet>, seed: u64) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Domain("a sample needs at least one set".into()));
        }
        for s in &sets {
            if s.k() != k {
                return Err(Error::InvalidKSet(format!(
                    "set size {} differs from k = {k}",
                    s.k()
                )));
            }
            if let Some(&max) = s.indices().last() {
                if max >= n {
                    return Err(Error::IndexOutOfRange { index: max, n });
                }
            }
        }
        Ok(KSetSample { n, k, sets, seed })
    }

    /// The exhaustive sample: every k-set exactly once, in lexicographic
    /// order. Reproduces the full average entry for entry.
    pub fn exhaustive(n: usize, k: usize) -> Result<Self> {
        let sets: Vec<KSet> = KSetEnumerator::new(n, k)
            .map(|idx| KSet::new(idx, n))
            .collect::<Result<_>>()?;
        Self::from_sets(n, k, sets, 0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[KSet] {
        &self.sets
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Per-entry coverage counts: how many sets contain each point and each
    /// unordered pair. Diagonal of the returned matrix holds point counts.
    fn coverage_counts(&self) -> Vec<u64> {
        let n = self.n;
        let mut counts = vec![0u64; n * n];
        for set in &self.sets {
            let idx = set.indices();
            for (pos, &a) in idx.iter().enumerate() {
                counts[a * n + a] += 1;
                for &b in &idx[pos + 1..] {
                    counts[a * n + b] += 1;
                }
            }
        }
        counts
    }
}

/// Exact per-entry coverage fractions of a sample, with the worst deviation
/// from the full-average factors expressed in units of gamma.
#[derive(Debug, Clone)]
pub struct FractionStats {
    /// `f_ii`: fraction of sets containing point i.
    pub f_diag: Vec<f64>,
    /// `f_ij` for i < j, in row-major upper-triangle order.
    pub f_offdiag: Vec<f64>,
    /// `gamma = k(n-k) / (2n(n-1))`.
    pub gamma: f64,
    /// `max |f - mean(f)| / gamma` over all entries (0 when gamma is 0,
    /// i.e. k = n, where every fraction is exact).
    pub epsilon_achieved: f64,
}

/// Scaling that equalizes the diagonal and off-diagonal averaging factors.
pub fn alpha(n: usize, k: usize) -> f64 {
    assert!(k >= 2 && k <= n, "k must be in 2..=n");
    let nf = n as f64;
    let kf = k as f64;
    2.0 * nf * (nf - 1.0) / (kf * (nf + kf - 2.0))
}

/// `gamma = k(n-k) / (2n(n-1))`, the concentration scale for coverage
/// fractions.
pub fn gamma(n: usize, k: usize) -> f64 {
    assert!(k >= 2 && k <= n, "k must be in 2..=n");
    let nf = n as f64;
    let kf = k as f64;
    kf * (nf - kf) / (2.0 * nf * (nf - 1.0))
}

/// The average of M over all zero-padded k-set copies, in closed form:
/// diagonal scaled by `k/n`, off-diagonal by `k(k-1)/(n(n-1))`.
pub fn full_average(m: &SymMatrix, k: usize) -> SymMatrix {
    let n = m.dim();
    assert!(k >= 2 && k <= n, "k must be in 2..=n");
    let nf = n as f64;
    let kf = k as f64;
    let diag = kf / nf;
    let off = kf * (kf - 1.0) / (nf * (nf - 1.0));
    SymMatrix::from_fn(n, |i, j| {
        let factor = if i == j { diag } else { off };
        factor * m.get(i, j)
    })
}

/// The average of M over the zero-padded copies for the sampled sets:
/// entrywise `f_ij * M_ij` where `f_ij` is the coverage fraction.
pub fn partial_average(m: &SymMatrix, sample: &KSetSample) -> SymMatrix {
    assert_eq!(m.dim(), sample.n(), "sample dimension mismatch");
    let n = m.dim();
    let counts = sample.coverage_counts();
    let total = sample.len() as f64;
    SymMatrix::from_fn(n, |i, j| counts[i * n + j] as f64 / total * m.get(i, j))
}

/// Draws `m` independent uniform k-sets from the generator seeded with
/// `seed`. Duplicates are retained.
pub fn sample_ksets(n: usize, k: usize, m: usize, seed: u64) -> KSetSample {
    assert!(k >= 2 && k <= n, "k must be in 2..=n");
    assert!(m >= 1, "at least one set");
    let mut rng = Xoshiro256PlusPlus::new(seed);
    let sets = (0..m)
        .map(|_| KSet::new(rng.kset(n, k), n).expect("sampled sets are valid"))
        .collect();
    KSetSample { n, k, sets, seed }
}

/// Number of samples that keeps every coverage fraction within
/// `eps * gamma` of its mean with probability at least `1 - delta`:
/// `ceil( 12 n (n-1)^2 / (eps^2 (n-k)^2 k) * ln(2 n^2 / delta) )`.
pub fn sample_size(n: usize, k: usize, eps: f64, delta: f64) -> Result<u64> {
    if k < 2 || k + 1 > n {
        return Err(Error::Domain(format!(
            "k = {k} must be in 2..={} (k = n divides by zero)",
            n.saturating_sub(1)
        )));
    }
    if eps <= 0.0 || delta <= 0.0 {
        return Err(Error::Domain("eps and delta must be positive".into()));
    }
    let nf = n as f64;
    let kf = k as f64;
    let lead = 12.0 * nf * (nf - 1.0) * (nf - 1.0) / (eps * eps * (nf - kf) * (nf - kf) * kf);
    let log = (2.0 * nf * nf / delta).ln();
    Ok((lead * log).ceil() as u64)
}

/// The sampled bound is informative only while
/// `(1 + eps) (n-k)/(n+k-2) <= 1`, i.e. `eps <= (2k-2)/(n-k)`.
pub fn sampling_nontrivial(n: usize, k: usize, eps: f64) -> bool {
    assert!(k >= 2 && k < n, "k must be in 2..n");
    eps <= (2.0 * k as f64 - 2.0) / ((n - k) as f64)
}

/// Exact coverage fractions of a sample and the worst deviation from the
/// full-average factors in units of gamma.
pub fn fraction_stats(sample: &KSetSample) -> FractionStats {
    let n = sample.n();
    let k = sample.k();
    let nf = n as f64;
    let kf = k as f64;
    let total = sample.len() as f64;
    let counts = sample.coverage_counts();
    let expect_diag = kf / nf;
    let expect_off = kf * (kf - 1.0) / (nf * (nf - 1.0));
    let g = gamma(n, k);

    let mut f_diag = Vec::with_capacity(n);
    let mut f_offdiag = Vec::with_capacity(n * (n - 1) / 2);
    let mut worst = 0.0f64;
    for i in 0..n {
        let f = counts[i * n + i] as f64 / total;
        worst = worst.max((f - expect_diag).abs());
        f_diag.push(f);
    }
    for i in 0..n {
        for j in i + 1..n {
            let f = counts[i * n + j] as f64 / total;
            worst = worst.max((f - expect_off).abs());
            f_offdiag.push(f);
        }
    }
    let epsilon_achieved = if g > 0.0 { worst / g } else { 0.0 };
    FractionStats {
        f_diag,
        f_offdiag,
        gamma: g,
        epsilon_achieved,
    }
}

/// A PSD witness for the distance of a closure member to the PSD cone.
#[derive(Debug, Clone)]
pub struct UpperBoundCertificate {
    /// `alpha * average(M)`; PSD whenever M is a member of the closure
    /// (resp. satisfies the sampled minors).
    pub witness: SymMatrix,
    /// `|| M - witness ||_F`, an upper bound on the distance for members.
    pub bound: f64,
}

/// Builds the scaled-average witness and its distance bound. With the full
/// average the bound equals `(n-k)/(n+k-2) * ||M||_F` exactly; with a sample
/// it inherits the coverage deviations.
pub fn upper_bound_certificate(
    m: &SymMatrix,
    k: usize,
    sample: Option<&KSetSample>,
) -> UpperBoundCertificate {
    let avg = match sample {
        Some(s) => {
            assert_eq!(s.k(), k, "sample block size mismatch");
            partial_average(m, s)
        }
        None => full_average(m, k),
    };
    let witness = avg.scaled(alpha(m.dim(), k));
    let bound = m.frobenius_distance(&witness);
    UpperBoundCertificate { witness, bound }
}

/// Averages M over the blocks of a 2-design and scales by
/// `alpha_D = 2b / (r + lambda)`, the block-design analogue of `alpha`.
///
/// The design identities make the residual a uniform +/- scaling of M, so
/// the bound again equals `(n-k)/(n+k-2) * ||M||_F`.
pub fn design_average(m: &SymMatrix, design: &Design) -> Result<UpperBoundCertificate> {
    if design.n() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: design.n(),
        });
    }
    let sample = KSetSample::from_sets(design.n(), design.k(), design.blocks().to_vec(), 0)?;
    let avg = partial_average(m, &sample);
    let alpha_d = 2.0 * design.b() as f64 / (design.r() + design.lambda()) as f64;
    let witness = avg.scaled(alpha_d);
    let bound = m.frobenius_distance(&witness);
    Ok(UpperBoundCertificate { witness, bound })
}

/// Renders a sample: line 1 is `n k m seed`, then one line of 1-based
/// indices per set.
pub fn format_sample(sample: &KSetSample) -> String {
    let mut out = format!(
        "{} {} {} {}\n",
        sample.n(),
        sample.k(),
        sample.len(),
        sample.seed()
    );
    for set in sample.sets() {
        let line: Vec<String> = set.one_based().iter().map(|i| i.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the sample text format.
pub fn parse_sample(text: &str) -> Result<KSetSample> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty sample file".into()))?;
    let fields: Vec<u64> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad header field {t:?}")))
        })
        .collect::<Result<_>>()?;
    if fields.len() != 4 {
        return Err(Error::Parse("header must be: n k m seed".into()));
    }
    let (n, k, m, seed) = (
        fields[0] as usize,
        fields[1] as usize,
        fields[2] as usize,
        fields[3],
    );
    let mut sets = Vec::with_capacity(m);
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let idx: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad index {t:?}")))
            })
            .collect::<Result<_>>()?;
        sets.push(KSet::from_one_based(&idx, n)?);
    }
    if sets.len() != m {
        return Err(Error::Parse(format!(
            "expected {m} sets, found {}",
            sets.len()
        )));
    }
    KSetSample::from_sets(n, k, sets, seed)
}

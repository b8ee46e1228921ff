//! Balanced incomplete block designs (2-designs) used as structured minor
//! selectors.
//!
//! A 2-design on `n` points with block size `k` covers every unordered pair
//! exactly `lambda` times and every point exactly `r` times, with `b` blocks
//! in total. Double counting forces `b k = n r` and
//! `lambda (n - 1) = r (k - 1)` — equivalently `lambda / r = (k-1) / (n-1)`,
//! which is exactly the ratio that makes averaging a matrix over the blocks
//! behave like averaging over all k-sets.

use crate::error::{Error, Result};
use crate::symmat::{binomial_capped, KSet, KSetEnumerator};

/// Cap on `C(n, k)` for the complete design (one block per k-set).
pub const COMPLETE_DESIGN_CAP: u64 = 2_000_000;

/// Largest prime order accepted by [`projective_plane`].
pub const MAX_PLANE_ORDER: u64 = 31;

/// A verified 2-design.
#[derive(Debug, Clone)]
pub struct Design {
    n: usize,
    k: usize,
    blocks: Vec<KSet>,
    b: u64,
    r: u64,
    lambda: u64,
}

impl Design {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[KSet] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// Replication number: blocks through each point.
    pub fn r(&self) -> u64 {
        self.r
    }

    /// Pair count: blocks through each unordered pair.
    pub fn lambda(&self) -> u64 {
        self.lambda
    }

    /// A design is symmetric when it has exactly `n` blocks.
    pub fn is_symmetric(&self) -> bool {
        self.b == self.n as u64
    }
}

/// Verifies that `blocks` form a 2-design on `n` points by exhaustive
/// counting, returning the design with its computed parameters.
pub fn verify_2design(blocks: &[KSet], n: usize) -> Result<Design> {
    if blocks.is_empty() {
        return Err(Error::InvalidDesign("no blocks".into()));
    }
    let k = blocks[0].k();
    let mut point_counts = vec![0u64; n];
    let mut pair_counts = vec![0u64; n * n];
    for (pos, block) in blocks.iter().enumerate() {
        if block.k() != k {
            return Err(Error::InvalidDesign(format!(
                "block {} has size {}, expected {k}",
                pos + 1,
                block.k()
            )));
        }
        let idx = block.indices();
        if let Some(&max) = idx.last() {
            if max >= n {
                return Err(Error::IndexOutOfRange { index: max, n });
            }
        }
        for (a_pos, &a) in idx.iter().enumerate() {
            point_counts[a] += 1;
            for &b in &idx[a_pos + 1..] {
                pair_counts[a * n + b] += 1;
            }
        }
    }
    let r = point_counts[0];
    if let Some(bad) = (0..n).find(|&p| point_counts[p] != r) {
        return Err(Error::InvalidDesign(format!(
            "point {} lies in {} blocks, point 1 in {r}",
            bad + 1,
            point_counts[bad]
        )));
    }
    let lambda = pair_counts[1]; // pair (0, 1)
    for a in 0..n {
        for b in a + 1..n {
            if pair_counts[a * n + b] != lambda {
                return Err(Error::InvalidDesign(format!(
                    "pair ({}, {}) covered {} times, pair (1, 2) {lambda} times",
                    a + 1,
                    b + 1,
                    pair_counts[a * n + b]
                )));
            }
        }
    }
    let b = blocks.len() as u64;
    // Double-counting identities; failures here would mean the counting
    // above is wrong, not the input.
    assert_eq!(b * k as u64, n as u64 * r, "b*k = n*r must hold");
    assert_eq!(
        lambda * (n as u64 - 1),
        r * (k as u64 - 1),
        "lambda*(n-1) = r*(k-1) must hold"
    );
    // Fisher's inequality applies to designs with k < n; the single-block
    // complete design at k = n is exempt.
    if k < n && b < n as u64 {
        return Err(Error::InvalidDesign(format!(
            "Fisher violation: b = {b} < n = {n}"
        )));
    }
    Ok(Design {
        n,
        k,
        blocks: blocks.to_vec(),
        b,
        r,
        lambda,
    })
}

/// The complete design: every k-set of `{1, .., n}` exactly once.
pub fn complete_design(n: usize, k: usize) -> Result<Design> {
    if k < 2 || k > n {
        return Err(Error::Domain(format!("k = {k} not in 2..={n}")));
    }
    binomial_capped(n as u64, k as u64, COMPLETE_DESIGN_CAP).ok_or(
        Error::EnumerationCapExceeded {
            n,
            k,
            cap: COMPLETE_DESIGN_CAP,
        },
    )?;
    let blocks: Vec<KSet> = KSetEnumerator::new(n, k)
        .map(|idx| KSet::new(idx, n))
        .collect::<Result<_>>()?;
    verify_2design(&blocks, n)
}

/// The Fano plane: the symmetric 2-design with parameters (7, 3, 1), listed
/// in its canonical block order.
pub fn fano() -> Design {
    let raw: [[usize; 3]; 7] = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ];
    let blocks: Vec<KSet> = raw
        .iter()
        .map(|b| KSet::from_one_based(b, 7).expect("canonical blocks are valid"))
        .collect();
    verify_2design(&blocks, 7).expect("the Fano plane is a 2-design")
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Projective points of order q: all nonzero triples over the prime field,
/// normalized so the first nonzero coordinate is 1, in ascending
/// lexicographic order.
fn projective_points(q: u64) -> Vec<[u64; 3]> {
    let mut points = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let coords = [x, y, z];
                let first = coords.iter().find(|&&c| c != 0);
                if first == Some(&1) {
                    points.push(coords);
                }
            }
        }
    }
    points
}

/// The projective plane of prime order `q`: a symmetric 2-design with
/// `n = q^2 + q + 1` points, block size `q + 1`, and `lambda = 1`.
///
/// Points are the normalized nonzero coordinate triples over the field of
/// order q; blocks are the lines `{(x, y, z) : a x + b y + c z = 0}`, one
/// per normalized coefficient triple `(a, b, c)`, in the same ordering.
pub fn projective_plane(q: u64) -> Result<Design> {
    if !is_prime(q) {
        return Err(Error::Domain(format!("order {q} is not prime")));
    }
    if q > MAX_PLANE_ORDER {
        return Err(Error::Domain(format!(
            "order {q} exceeds the cap {MAX_PLANE_ORDER}"
        )));
    }
    let points = projective_points(q);
    let n = points.len();
    debug_assert_eq!(n as u64, q * q + q + 1);
    let mut blocks = Vec::with_capacity(n);
    for line in &points {
        let members: Vec<usize> = points
            .iter()
            .enumerate()
            .filter(|(_, p)| (line[0] * p[0] + line[1] * p[1] + line[2] * p[2]) % q == 0)
            .map(|(i, _)| i)
            .collect();
        blocks.push(KSet::new(members, n)?);
    }
    verify_2design(&blocks, n)
}

/// Renders a design: line 1 is `n k b r lambda`, then one line of 1-based
/// point indices per block.
pub fn format_design(design: &Design) -> String {
    let mut out = format!(
        "{} {} {} {} {}\n",
        design.n(),
        design.k(),
        design.b(),
        design.r(),
        design.lambda()
    );
    for block in design.blocks() {
        let line: Vec<String> = block.one_based().iter().map(|i| i.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the design text format and re-verifies the counting invariants.
pub fn parse_design(text: &str) -> Result<Design> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty design file".into()))?;
    let fields: Vec<u64> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("bad header field {t:?}")))
        })
        .collect::<Result<_>>()?;
    if fields.len() != 5 {
        return Err(Error::Parse("header must be: n k b r lambda".into()));
    }
    let (n, k, b) = (fields[0] as usize, fields[1] as usize, fields[2]);
    let mut blocks = Vec::with_capacity(b as usize);
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
        blocks.push(KSet::from_one_based(&idx, n)?);
    }
    if blocks.len() as u64 != b {
        return Err(Error::Parse(format!(
            "expected {b} blocks, found {}",
            blocks.len()
        )));
    }
    let design = verify_2design(&blocks, n)?;
    if design.k() != k || design.r() != fields[3] || design.lambda() != fields[4] {
        return Err(Error::Parse(
            "header parameters disagree with the block list".into(),
        ));
    }
    Ok(design)
}

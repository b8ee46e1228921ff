//! Membership testing for the k-PSD closure, with k-sparse counterexample
//! certificates, plus a shift-based generator that lifts arbitrary symmetric
//! matrices onto the closure boundary.
//!
//! A symmetric matrix belongs to the (n, k) closure iff every k-by-k
//! principal submatrix is PSD — equivalently, iff `x^T M x >= 0` for every
//! k-sparse x. Exact membership enumerates all `C(n, k)` submatrices in
//! lexicographic order; sampled membership checks a seeded random subset and
//! is one-sided (a "member" verdict means only that no sampled minor was
//! violated).

use crate::error::{Error, Result};
use crate::rng::Xoshiro256PlusPlus;
use crate::symmat::{binomial_capped, KSet, KSetEnumerator, SymMatrix};

/// Exact enumeration is allowed while `C(n, k)` is at most this.
pub const ENUMERATION_CAP: u64 = 2_000_000;

/// Bisection iterations in [`lift_to_closure`]; 60 halvings of the initial
/// bracket guarantee 1e-8 absolute precision on the shift.
const LIFT_BISECTION_ITERS: usize = 60;

/// How a membership verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MembershipMode {
    /// Every `C(n, k)` principal submatrix was checked.
    Exact,
    /// Only sampled submatrices were checked (one-sided verdict).
    Sampled,
}

/// A k-sparse vector witnessing non-membership: `x^T M x < 0`.
#[derive(Debug, Clone)]
pub struct SparseCertificate {
    /// Dimension-n vector with support inside the violated k-set.
    pub vector: Vec<f64>,
    /// The strictly negative quadratic form value, exactly as evaluated.
    pub quadratic_form: f64,
}

/// Outcome of a membership test.
#[derive(Debug, Clone)]
pub struct MembershipVerdict {
    pub member: bool,
    pub mode: MembershipMode,
    /// Number of k-sets examined before the verdict.
    pub sets_checked: u64,
    /// Present iff `member` is false.
    pub certificate: Option<SparseCertificate>,
    /// The k-set with the most negative minimum eigenvalue found (the first
    /// violated set in scan order when the verdict is negative).
    pub worst_set: Option<KSet>,
}

/// Cholesky factorization attempt of a packed k-by-k minor plus a shift.
///
/// Success proves the shifted minor is positive definite, i.e. the minor's
/// smallest eigenvalue exceeds `-shift`, which is exactly the PSD acceptance
/// condition; failure falls through to the eigensolver, which both decides
/// the borderline cases and produces the certificate eigenvector. Rounding
/// can blur the factorization boundary by a few ulps of the entry scale,
/// well inside the eigensolver's own tolerance.
fn cholesky_accepts(minor: &SymMatrix, shift: f64) -> bool {
    let k = minor.dim();
    let mut a = vec![0.0; k * k];
    for i in 0..k {
        for j in i..k {
            let mut v = minor.get(i, j);
            if i == j {
                v += shift;
            }
            a[i * k + j] = v;
            a[j * k + i] = v;
        }
    }
    for col in 0..k {
        let mut pivot = a[col * k + col];
        for t in 0..col {
            pivot -= a[col * k + t] * a[col * k + t];
        }
        if pivot <= 0.0 {
            return false;
        }
        let root = pivot.sqrt();
        a[col * k + col] = root;
        for row in col + 1..k {
            let mut v = a[row * k + col];
            for t in 0..col {
                v -= a[row * k + t] * a[col * k + t];
            }
            a[row * k + col] = v / root;
        }
    }
    true
}

/// Result of examining one minor: pass, or the violating eigenvector.
enum MinorCheck {
    Pass,
    Violation { eigenvector: Vec<f64> },
}

/// Decides one principal submatrix against the relative PSD tolerance.
fn check_minor(m: &SymMatrix, indices: &[usize], tol: f64) -> Result<MinorCheck> {
    let k = indices.len();
    let mut minor = SymMatrix::zeros(k);
    let mut sumsq = 0.0;
    for a in 0..k {
        for b in a..k {
            let v = m.get(indices[a], indices[b]);
            minor.set(a, b, v);
            sumsq += if a == b { v * v } else { 2.0 * v * v };
        }
    }
    let threshold = tol * sumsq.sqrt().max(1.0);
    if cholesky_accepts(&minor, threshold) {
        return Ok(MinorCheck::Pass);
    }
    let eig = minor.eigendecompose()?;
    let min = eig.min_value();
    if min >= -threshold {
        return Ok(MinorCheck::Pass);
    }
    Ok(MinorCheck::Violation {
        eigenvector: eig.vector(k - 1).to_vec(),
    })
}

/// Embeds a minor eigenvector into dimension n and evaluates the witness.
fn build_certificate(
    m: &SymMatrix,
    indices: &[usize],
    eigenvector: &[f64],
) -> SparseCertificate {
    let mut x = vec![0.0; m.dim()];
    for (slot, &idx) in indices.iter().enumerate() {
        x[idx] = eigenvector[slot];
    }
    let quadratic_form = m.quadratic_form(&x);
    SparseCertificate {
        vector: x,
        quadratic_form,
    }
}

fn validate_k(m: &SymMatrix, k: usize) -> Result<()> {
    let n = m.dim();
    if k < 2 || k > n {
        return Err(Error::Domain(format!("k = {k} not in 2..={n}")));
    }
    Ok(())
}

/// Exact membership in the (n, k) closure.
///
/// Enumerates all k-sets in lexicographic order; the scan stops at the first
/// violated minor, whose minimum-eigenvalue eigenvector (embedded into
/// dimension n) becomes the certificate. Errors if `C(n, k)` exceeds
/// [`ENUMERATION_CAP`].
pub fn member_exact(m: &SymMatrix, k: usize, tol: f64) -> Result<MembershipVerdict> {
    validate_k(m, k)?;
    let n = m.dim();
    let total = binomial_capped(n as u64, k as u64, ENUMERATION_CAP).ok_or(
        Error::EnumerationCapExceeded {
            n,
            k,
            cap: ENUMERATION_CAP,
        },
    )?;
    let mut checked = 0u64;
    for indices in KSetEnumerator::new(n, k) {
        checked += 1;
        if let MinorCheck::Violation { eigenvector } = check_minor(m, &indices, tol)?
        {
            let certificate = build_certificate(m, &indices, &eigenvector);
            return Ok(MembershipVerdict {
                member: false,
                mode: MembershipMode::Exact,
                sets_checked: checked,
                worst_set: Some(KSet::new(indices, n)?),
                certificate: Some(certificate),
            });
        }
    }
    debug_assert_eq!(checked, total);
    Ok(MembershipVerdict {
        member: true,
        mode: MembershipMode::Exact,
        sets_checked: checked,
        certificate: None,
        worst_set: None,
    })
}

/// Membership against an explicit list of k-sets: all listed minors must be
/// PSD. This is the sampled-constraint cone membership; the scan stops at
/// the first violated set, in list order.
pub fn member_of_sets(m: &SymMatrix, sets: &[KSet], tol: f64) -> Result<MembershipVerdict> {
    let n = m.dim();
    let mut checked = 0u64;
    for set in sets {
        checked += 1;
        if let MinorCheck::Violation { eigenvector } = check_minor(m, set.indices(), tol)? {
            let certificate = build_certificate(m, set.indices(), &eigenvector);
            return Ok(MembershipVerdict {
                member: false,
                mode: MembershipMode::Sampled,
                sets_checked: checked,
                worst_set: Some(KSet::new(set.indices().to_vec(), n)?),
                certificate: Some(certificate),
            });
        }
    }
    Ok(MembershipVerdict {
        member: true,
        mode: MembershipMode::Sampled,
        sets_checked: checked,
        certificate: None,
        worst_set: None,
    })
}

/// Sampled membership screen: checks `trials` uniformly random k-sets.
///
/// One-sided: `member = true` only means no sampled minor was violated; it
/// never returns false for a true member.
pub fn member_sampled(
    m: &SymMatrix,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<MembershipVerdict> {
    validate_k(m, k)?;
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    let n = m.dim();
    let mut rng = Xoshiro256PlusPlus::new(seed);
    for t in 0..trials {
        let indices = rng.kset(n, k);
        if let MinorCheck::Violation { eigenvector } = check_minor(m, &indices, crate::symmat::DEFAULT_PSD_TOL)?
        {
            let certificate = build_certificate(m, &indices, &eigenvector);
            return Ok(MembershipVerdict {
                member: false,
                mode: MembershipMode::Sampled,
                sets_checked: t + 1,
                worst_set: Some(KSet::new(indices, n)?),
                certificate: Some(certificate),
            });
        }
    }
    Ok(MembershipVerdict {
        member: true,
        mode: MembershipMode::Sampled,
        sets_checked: trials,
        certificate: None,
        worst_set: None,
    })
}

/// Random search for a k-sparse vector with `x^T M x < 0`.
///
/// Samples k-sets, takes the minimum-eigenvalue eigenvector of each minor,
/// and returns the first that witnesses a strictly negative quadratic form.
/// Returns `None` when no violation is found within `trials`.
pub fn certificate_search(
    m: &SymMatrix,
    k: usize,
    trials: u64,
    seed: u64,
) -> Result<Option<SparseCertificate>> {
    validate_k(m, k)?;
    if trials == 0 {
        return Err(Error::Domain("trials must be at least 1".into()));
    }
    let n = m.dim();
    let mut rng = Xoshiro256PlusPlus::new(seed);
    for _ in 0..trials {
        let indices = rng.kset(n, k);
        if let MinorCheck::Violation { eigenvector } = check_minor(m, &indices, crate::symmat::DEFAULT_PSD_TOL)?
        {
            let certificate = build_certificate(m, &indices, &eigenvector);
            if certificate.quadratic_form < 0.0 {
                return Ok(Some(certificate));
            }
        }
    }
    Ok(None)
}

/// A matrix lifted onto the closure by a diagonal shift.
#[derive(Debug, Clone)]
pub struct Lift {
    /// The minimal shift `t` (within 1e-8) with `M + t I` in the closure.
    pub shift: f64,
    /// `M + shift * I`, certified by exact membership.
    pub lifted: SymMatrix,
}

/// Lifts `m` into the (n, k) closure by the minimal diagonal shift.
///
/// Bisects `t` over `[0, ||M||_F + 1]` against exact membership; 60
/// iterations pin the minimal shift within 1e-8, and the returned matrix is
/// the certified upper end of the bracket. A member comes back unchanged
/// with shift 0.
pub fn lift_to_closure(m: &SymMatrix, k: usize) -> Result<Lift> {
    validate_k(m, k)?;
    let tol = crate::symmat::DEFAULT_PSD_TOL;
    if member_exact(m, k, tol)?.member {
        return Ok(Lift {
            shift: 0.0,
            lifted: m.clone(),
        });
    }
    // Upper end: every minor's minimum eigenvalue is at least -||M||_F, so
    // this shift makes all minors strictly PSD.
    let mut lo = 0.0;
    let mut hi = m.frobenius_norm() + 1.0;
    debug_assert!(member_exact(&m.shifted_identity(hi), k, tol)?.member);
    for _ in 0..LIFT_BISECTION_ITERS {
        let mid = 0.5 * (lo + hi);
        if member_exact(&m.shifted_identity(mid), k, tol)?.member {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(Lift {
        shift: hi,
        lifted: m.shifted_identity(hi),
    })
}

/// Monotonicity probe: a certified member of the (n, k) closure must also
/// belong to the (n, k') closure for every smaller k'. Test-only.
pub fn member_monotone_check(m: &SymMatrix, k: usize, kprime: usize) -> Result<bool> {
    validate_k(m, k)?;
    if kprime < 2 || kprime > k {
        return Err(Error::Domain(format!("k' = {kprime} not in 2..={k}")));
    }
    Ok(member_exact(m, kprime, crate::symmat::DEFAULT_PSD_TOL)?.member)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmat::DEFAULT_PSD_TOL;

    fn gab(a: f64, b: f64, n: usize) -> SymMatrix {
        SymMatrix::from_fn(n, |i, j| if i == j { b } else { -a })
    }

    #[test]
    fn gab113_is_member_at_k2() {
        // b >= (k-1)a holds with equality at k = 2.
        let verdict = member_exact(&gab(1.0, 1.0, 3), 2, DEFAULT_PSD_TOL).unwrap();
        assert!(verdict.member);
        assert_eq!(verdict.mode, MembershipMode::Exact);
        assert_eq!(verdict.sets_checked, 3);
        assert!(verdict.certificate.is_none());
    }

    #[test]
    fn gab113_fails_at_k3_with_uniform_certificate() {
        let m = gab(1.0, 1.0, 3);
        let verdict = member_exact(&m, 3, DEFAULT_PSD_TOL).unwrap();
        assert!(!verdict.member);
        let cert = verdict.certificate.expect("non-member needs certificate");
        assert!(cert.quadratic_form < 0.0);
        // Certificate is the eigenvector of eigenvalue -1: all-ones / sqrt 3.
        let unit = 1.0 / 3f64.sqrt();
        for &x in &cert.vector {
            assert!((x - unit).abs() < 1e-9, "{x}");
        }
        // Witness value equals the eigenvalue for a unit eigenvector.
        assert!((cert.quadratic_form + 1.0).abs() < 1e-9);
        assert_eq!(verdict.worst_set.unwrap().indices(), [0, 1, 2]);
    }

    #[test]
    fn psd_matrices_are_members_for_all_k() {
        let m = SymMatrix::from_diagonal(&[0.5, 1.0, 2.0, 3.0]);
        for k in 2..=4 {
            assert!(member_exact(&m, k, DEFAULT_PSD_TOL).unwrap().member);
        }
    }

    #[test]
    fn cap_exceeded_reported() {
        let m = SymMatrix::identity(60);
        assert!(matches!(
            member_exact(&m, 30, DEFAULT_PSD_TOL),
            Err(Error::EnumerationCapExceeded { .. })
        ));
    }

    #[test]
    fn sampled_finds_the_only_violated_set() {
        // At n = k = 3 there is a single 3-set, so one trial decides.
        let verdict = member_sampled(&gab(1.0, 1.0, 3), 3, 1, 7).unwrap();
        assert!(!verdict.member);
        assert_eq!(verdict.sets_checked, 1);
        assert!(verdict.certificate.is_some());
    }

    #[test]
    fn sampled_accepts_identity() {
        let verdict = member_sampled(&SymMatrix::identity(8), 3, 200, 1).unwrap();
        assert!(verdict.member);
        assert_eq!(verdict.sets_checked, 200);
    }

    #[test]
    fn certificate_search_empty_on_psd() {
        assert!(certificate_search(&SymMatrix::identity(5), 3, 100, 3)
            .unwrap()
            .is_none());
    }

    #[test]
    fn certificate_search_finds_violation_in_gab114() {
        // Every 3x3 minor of G(1,1,4) is G(1,1,3) with eigenvalue -1.
        let found = certificate_search(&gab(1.0, 1.0, 4), 3, 50, 11)
            .unwrap()
            .expect("violation exists in every 3-set");
        assert!(found.quadratic_form < 0.0);
        let support = found.vector.iter().filter(|&&x| x != 0.0).count();
        assert!(support <= 3);
    }

    #[test]
    fn certificate_search_empty_on_certified_member() {
        let m = gab(1.0, 1.0, 3);
        assert!(member_exact(&m, 2, DEFAULT_PSD_TOL).unwrap().member);
        assert!(certificate_search(&m, 2, 300, 5).unwrap().is_none());
    }

    #[test]
    fn lift_of_psd_is_zero() {
        let lift = lift_to_closure(&SymMatrix::identity(4), 2).unwrap();
        assert_eq!(lift.shift, 0.0);
    }

    #[test]
    fn lift_gab103_at_k2_needs_unit_shift() {
        // diag 0, off-diagonal -1: each 2x2 minor [[t,-1],[-1,t]] needs t >= 1.
        let lift = lift_to_closure(&gab(1.0, 0.0, 3), 2).unwrap();
        assert!((lift.shift - 1.0).abs() < 1e-6, "shift {}", lift.shift);
        assert!(member_exact(&lift.lifted, 2, DEFAULT_PSD_TOL).unwrap().member);
    }

    #[test]
    fn lift_gab113_at_k3_is_spectral_shift() {
        let lift = lift_to_closure(&gab(1.0, 1.0, 3), 3).unwrap();
        assert!((lift.shift - 1.0).abs() < 1e-6, "shift {}", lift.shift);
    }

    #[test]
    fn lift_shift_is_minimal() {
        let m = gab(1.0, 0.0, 3);
        let lift = lift_to_closure(&m, 2).unwrap();
        let below = m.shifted_identity(lift.shift - 1e-6);
        assert!(!member_exact(&below, 2, DEFAULT_PSD_TOL).unwrap().member);
    }

    #[test]
    fn monotone_membership_examples() {
        // Extremal member at k = 4 stays a member at k' in {2, 3}.
        let a = 1.0;
        let b = 3.0 * a;
        let m = gab(a, b, 6);
        assert!(member_exact(&m, 4, DEFAULT_PSD_TOL).unwrap().member);
        assert!(member_monotone_check(&m, 4, 3).unwrap());
        assert!(member_monotone_check(&m, 4, 2).unwrap());
        assert!(member_monotone_check(&m, 4, 1).is_err());
    }

    #[test]
    fn closure_at_k_equals_n_is_psd_cone() {
        let mut rng = crate::rng::Xoshiro256PlusPlus::new(13);
        for _ in 0..20 {
            let n = 2 + rng.index(5);
            let m = SymMatrix::gaussian(n, &mut rng);
            let verdict = member_exact(&m, n, DEFAULT_PSD_TOL).unwrap();
            assert_eq!(verdict.member, m.is_psd(DEFAULT_PSD_TOL));
        }
    }
}

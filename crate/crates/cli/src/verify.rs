//! Reproducible verification runs for the distance bounds and their
//! supporting lemmas, emitting [`VerifyRow`]s.
//!
//! Each driver falsifies one bound family over constructed or lifted
//! members:
//!
//! - `theorem1`: the averaging upper bound `(n-k)/(n+k-2)` over exactly
//!   certified lifted members, plus the negative-count and scaled smallest-
//!   eigenvalue side bounds.
//! - `theorem2`: the dense-regime bound `96 ((n-k)/n)^{3/2}` and its
//!   eigenvalue engine `lambda_1 <= 96 (n-k)/n^{3/2}` (n >= 97, k >= 3n/4).
//! - `theorem3`: the extremal construction meets the algebraic lower bound
//!   with equality.
//! - `theorem4`: the restricted-isometry construction at linear sparsity
//!   `k = rn`, `r < 1/93`.
//! - `theorem5`: sampled-minor concentration — coverage fractions and the
//!   `(1+eps)` sampled averaging bound.
//! - `sparsifier`: Monte Carlo frequencies for the sparsified-eigenvector
//!   argument.
//!
//! Every run is deterministic in its seed: trial `t` draws from the stream
//! `split_seed(seed, t)` and streams never overlap across purposes.

use kpsd::averaging::{
    fraction_stats, sample_ksets, sample_size, sampling_nontrivial, upper_bound_certificate,
    KSetSample,
};
use kpsd::closure::{lift_to_closure, member_exact, member_of_sets, member_sampled};
use kpsd::cone::{dist_bound_from_lambda1, dist_to_psd};
use kpsd::constructions::{
    gab_extremal, lambda1_certificate, rip_lower_bound, rip_member_matrix,
    rip_success_probability, RipSpec, DEFAULT_LAMBDA1_TRIALS,
};
use kpsd::error::{Error, Result};
use kpsd::rng::{split_seed, Xoshiro256PlusPlus};
use kpsd::symmat::{binomial_capped, DEFAULT_PSD_TOL};
use kpsd::SymMatrix;

use crate::row::VerifyRow;

/// Additive slack on distance assertions, matching the eigensolver noise
/// floor with two orders of margin.
const DIST_SLACK: f64 = 1e-9;

/// Relative slack on the exact averaging identities.
const IDENTITY_SLACK: f64 = 1e-12;

/// Random k-set screens use this many draws when exact enumeration is out
/// of reach.
const SCREEN_TRIALS: u64 = 2000;

/// Stream namespaces; trial indices are offset by these so loops with
/// different purposes never share a generator.
const STREAM_MEMBERS: u64 = 1_000_000;
const STREAM_SCREEN: u64 = 2_000_000;
const STREAM_DIAG: u64 = 3_000_000;

/// The `(n-k)/(n+k-2)` averaging bound.
fn upper1_formula(n: usize, k: usize) -> f64 {
    (n - k) as f64 / (n + k - 2) as f64
}

/// The algebraic lower-bound formula `(n-k)/sqrt((k-1)^2 n + n(n-1))`.
fn lower1_formula(n: usize, k: usize) -> f64 {
    let nf = n as f64;
    let kf = k as f64;
    (nf - kf) / ((kf - 1.0) * (kf - 1.0) * nf + nf * (nf - 1.0)).sqrt()
}

/// A unit-norm, exactly certified member lifted from a Gaussian draw.
///
/// Entries are i.i.d. standard normal on the packed upper triangle; the
/// draw is lifted onto the closure by the minimal diagonal shift, scaled to
/// unit Frobenius norm, and re-certified.
pub fn random_certified_member(n: usize, k: usize, stream: u64) -> Result<(SymMatrix, f64)> {
    let mut rng = Xoshiro256PlusPlus::new(stream);
    let raw = SymMatrix::gaussian(n, &mut rng);
    let lift = lift_to_closure(&raw, k)?;
    let member = lift.lifted.normalized();
    if !member_exact(&member, k, DEFAULT_PSD_TOL)?.member {
        return Err(Error::Domain(
            "normalized lift failed re-certification".into(),
        ));
    }
    Ok((member, lift.shift))
}

/// Averaging upper bound over `trials` lifted members at one (n, k).
pub fn verify_theorem1(n: usize, k: usize, trials: u64, seed: u64) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    let formula = upper1_formula(n, k);
    for t in 0..trials {
        let (member, shift) = random_certified_member(n, k, split_seed(seed, t))?;
        let report = dist_to_psd(&member)?;
        rows.push(VerifyRow::upper(
            "theorem1",
            n,
            k,
            seed,
            report.distance,
            formula + DIST_SLACK,
            true,
            &format!("trial={t};formula={formula:e};shift={shift:e};member=1"),
        ));

        // The scaled full average achieves the formula exactly.
        let cert = upper_bound_certificate(&member, k, None);
        rows.push(VerifyRow::upper(
            "upper1_witness",
            n,
            k,
            seed,
            (cert.bound - formula).abs(),
            IDENTITY_SLACK,
            true,
            &format!("trial={t};witness_bound={:e}", cert.bound),
        ));

        // Members have at most n - k negative eigenvalues.
        rows.push(VerifyRow::upper(
            "prop_neg_count",
            n,
            k,
            seed,
            report.negative_count as f64,
            (n - k) as f64,
            true,
            &format!("trial={t}"),
        ));

        // And distance at most sqrt(n - k) * lambda_1.
        if report.negative_count > 0 {
            let bound = dist_bound_from_lambda1(&member, k)?;
            rows.push(VerifyRow::upper(
                "prop_smallest_eig",
                n,
                k,
                seed,
                report.distance,
                bound + DIST_SLACK,
                true,
                &format!("trial={t};lambda1={:e}", report.lambda1().unwrap()),
            ));
        } else {
            rows.push(VerifyRow::upper(
                "prop_smallest_eig",
                n,
                k,
                seed,
                0.0,
                0.0,
                false,
                &format!("trial={t};psd=1;vacuous=1"),
            ));
        }
    }
    Ok(rows)
}

/// Lifts a matrix onto the sampled-constraint cone `S_I` for a fixed sample
/// by the minimal diagonal shift (bisection, 60 halvings).
fn lift_to_sample(m: &SymMatrix, sample: &KSetSample) -> Result<(SymMatrix, f64)> {
    let tol = DEFAULT_PSD_TOL;
    if member_of_sets(m, sample.sets(), tol)?.member {
        return Ok((m.clone(), 0.0));
    }
    let mut lo = 0.0;
    let mut hi = m.frobenius_norm() + 1.0;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if member_of_sets(&m.shifted_identity(mid), sample.sets(), tol)?.member {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((m.shifted_identity(hi), hi))
}

/// Dense-regime bounds: the extremal family exactly, plus screened-only
/// lifted members (exact certification is enumeration-infeasible here, so
/// those rows are soft and tagged `screened=1`).
pub fn verify_theorem2(
    n: usize,
    k: usize,
    lifted: u64,
    screen_trials: u64,
    seed: u64,
) -> Result<Vec<VerifyRow>> {
    if n < 97 {
        return Err(Error::Domain(format!("n = {n} < 97")));
    }
    if 4 * k < 3 * n || k >= n {
        return Err(Error::Domain(format!("k = {k} outside 3n/4..n")));
    }
    let nf = n as f64;
    let dist_bound = 96.0 * ((n - k) as f64 / nf).powf(1.5);
    let vacuous = dist_bound >= 1.0;
    let mut rows = Vec::new();

    // Exact family: the extremal member.
    let extremal = gab_extremal(n, k);
    let cert = lambda1_certificate(&extremal, k, DEFAULT_LAMBDA1_TRIALS, split_seed(seed, STREAM_DIAG))?;
    rows.push(VerifyRow::upper(
        "theorem2_lambda1",
        n,
        k,
        seed,
        cert.lambda1,
        cert.bound,
        true,
        &format!(
            "family=extremal;sparse_draws={};best_quadratic_form={}",
            cert.sparse_draws,
            cert.best_quadratic_form
                .map_or("none".into(), |q| format!("{q:e}")),
        ),
    ));
    let dist = dist_to_psd(&extremal)?.distance;
    rows.push(VerifyRow::upper(
        "theorem2_dist",
        n,
        k,
        seed,
        dist,
        dist_bound,
        !vacuous,
        &format!("family=extremal;vacuous={}", u8::from(vacuous)),
    ));

    // Screened-only lifted members: certified only against a fixed random
    // sample of minors, so these rows report and never assert.
    for j in 0..lifted {
        let sample = sample_ksets(n, k, screen_trials as usize, split_seed(seed, STREAM_SCREEN + j));
        let mut rng = Xoshiro256PlusPlus::new(split_seed(seed, STREAM_MEMBERS + j));
        let raw = SymMatrix::gaussian(n, &mut rng);
        let (lifted_m, shift) = lift_to_sample(&raw, &sample)?;
        let member = lifted_m.normalized();
        let detail = format!("screened=1;member={j};shift={shift:e};screen_trials={screen_trials}");
        let report = dist_to_psd(&member)?;
        rows.push(VerifyRow::upper(
            "theorem2_dist",
            n,
            k,
            seed,
            report.distance,
            dist_bound,
            false,
            &format!("{detail};vacuous={}", u8::from(vacuous)),
        ));
        if report.negative_count > 0 {
            let cert = lambda1_certificate(
                &member,
                k,
                DEFAULT_LAMBDA1_TRIALS,
                split_seed(seed, STREAM_DIAG + 1 + j),
            )?;
            rows.push(VerifyRow::upper(
                "theorem2_lambda1",
                n,
                k,
                seed,
                cert.lambda1,
                cert.bound,
                false,
                &detail,
            ));
        }
    }
    Ok(rows)
}

/// Lower-bound equality of the extremal construction on a grid of (n, k).
pub fn verify_theorem3(
    pairs: &[(usize, usize)],
    screen_trials: u64,
    seed: u64,
) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    for &(n, k) in pairs {
        if k < 2 || k >= n {
            return Err(Error::Domain(format!("(n, k) = ({n}, {k}) needs 2 <= k < n")));
        }
        let m = gab_extremal(n, k);
        let formula = lower1_formula(n, k);

        rows.push(VerifyRow::upper(
            "theorem3_norm",
            n,
            k,
            seed,
            (m.frobenius_norm() - 1.0).abs(),
            IDENTITY_SLACK,
            true,
            "",
        ));

        let exact_feasible =
            binomial_capped(n as u64, k as u64, kpsd::closure::ENUMERATION_CAP).is_some();
        if exact_feasible {
            let verdict = member_exact(&m, k, DEFAULT_PSD_TOL)?;
            rows.push(VerifyRow::lower(
                "theorem3_member",
                n,
                k,
                seed,
                f64::from(u8::from(verdict.member)),
                1.0,
                true,
                &format!("mode=exact;sets_checked={}", verdict.sets_checked),
            ));
        } else {
            let verdict = member_sampled(&m, k, screen_trials, split_seed(seed, STREAM_SCREEN))?;
            rows.push(VerifyRow::lower(
                "theorem3_member",
                n,
                k,
                seed,
                f64::from(u8::from(verdict.member)),
                1.0,
                false,
                &format!("mode=sampled;screened=1;sets_checked={}", verdict.sets_checked),
            ));
        }

        let dist = dist_to_psd(&m)?.distance;
        rows.push(VerifyRow::upper(
            "theorem3_dist",
            n,
            k,
            seed,
            (dist - formula).abs(),
            DIST_SLACK,
            true,
            &format!("dist={dist:e};formula={formula:e}"),
        ));

        // In the small-k regime the simplified bound (n-k)/(sqrt(2) n) is
        // implied by the exact formula, so it can be asserted there.
        if k * k <= n {
            let simplified = (n - k) as f64 / (std::f64::consts::SQRT_2 * n as f64);
            rows.push(VerifyRow::lower(
                "table1_smallk",
                n,
                k,
                seed,
                dist,
                simplified,
                true,
                "regime=smallk",
            ));
        }
    }
    Ok(rows)
}

/// Restricted-isometry construction at one (n, k), retrying the random draw
/// until the membership screen passes or attempts run out.
pub fn verify_theorem4(
    n: usize,
    k: usize,
    max_attempts: u64,
    seed: u64,
) -> Result<Vec<VerifyRow>> {
    if k < 2 {
        return Err(Error::Domain("k must be at least 2".into()));
    }
    let r = k as f64 / n as f64;
    if r >= 1.0 / 93.0 {
        return Err(Error::Domain(format!(
            "k/n = {r} must be below 1/93 for this construction"
        )));
    }
    let m_rows = 93 * k;
    let delta = 0.9;
    let mut rows = Vec::new();

    // The isometry probability bound at the reference parameters.
    rows.push(VerifyRow::lower(
        "rip_probability",
        n,
        k,
        seed,
        rip_success_probability(k, delta, m_rows),
        0.51,
        true,
        &format!("m={m_rows};delta={delta}"),
    ));

    let exact_feasible = k == 2
        && binomial_capped(n as u64, 2, kpsd::closure::ENUMERATION_CAP).is_some();
    let mut success = None;
    let mut attempts_used = 0;
    for attempt in 0..max_attempts {
        attempts_used = attempt + 1;
        let spec = RipSpec::new(n, k, m_rows, delta, split_seed(seed, attempt));
        let candidate = rip_member_matrix(&spec);
        let member = if exact_feasible {
            member_exact(&candidate, k, DEFAULT_PSD_TOL)?.member
        } else {
            member_sampled(
                &candidate,
                k,
                SCREEN_TRIALS,
                split_seed(seed, STREAM_SCREEN + attempt),
            )?
            .member
        };
        if member {
            success = Some(candidate);
            break;
        }
    }

    let screen_tag = if exact_feasible { "exact" } else { "sampled" };
    match success {
        None => {
            // Probabilistic construction: exhaustion is reported, not fatal.
            rows.push(VerifyRow::lower(
                "theorem4_attempts",
                n,
                k,
                seed,
                0.0,
                1.0,
                false,
                &format!("exhausted=1;attempts={attempts_used};screen={screen_tag}"),
            ));
        }
        Some(matrix) => {
            rows.push(VerifyRow::upper(
                "theorem4_attempts",
                n,
                k,
                seed,
                attempts_used as f64,
                max_attempts as f64,
                false,
                &format!("screen={screen_tag}"),
            ));
            let report = dist_to_psd(&matrix)?;
            let raw_bound = ((n - m_rows) as f64).sqrt() * (1.0 - delta);
            rows.push(VerifyRow::lower(
                "lemma_rip1_raw",
                n,
                k,
                seed,
                report.distance,
                raw_bound - DIST_SLACK,
                exact_feasible,
                &format!("screen={screen_tag};kernel_dim={}", n - m_rows),
            ));
            let norm = matrix.frobenius_norm();
            rows.push(VerifyRow::lower(
                "theorem4_normalized",
                n,
                k,
                seed,
                report.distance / norm,
                rip_lower_bound(r)? - DIST_SLACK,
                exact_feasible,
                &format!("screen={screen_tag};r={r:e};norm={norm:e}"),
            ));
            // Norm-bound event: holds with probability >= 1/2 per draw, so
            // a single instance only reports.
            let norm_bound = 2.0 * n as f64 * delta * delta
                + 2.0 * (n * (n - 1)) as f64 / m_rows as f64;
            rows.push(VerifyRow::upper(
                "lemma_ripnorm_event",
                n,
                k,
                seed,
                norm * norm,
                norm_bound,
                false,
                "event=1",
            ));
        }
    }
    Ok(rows)
}

/// Sampled-minor concentration at one (n, k, eps, delta): coverage-fraction
/// events over `repetitions` fresh samples, and the `(1+eps)` averaging
/// bound for lifted members under each successful event.
pub fn verify_theorem5(
    n: usize,
    k: usize,
    epsilon: f64,
    delta: f64,
    repetitions: u64,
    members: u64,
    seed: u64,
) -> Result<Vec<VerifyRow>> {
    if k < 2 || k + 1 > n {
        return Err(Error::Domain(format!("k = {k} must be in 2..={}", n - 1)));
    }
    let m_draws = sample_size(n, k, epsilon, delta)?;
    let formula = upper1_formula(n, k);
    let mut rows = Vec::new();

    rows.push(VerifyRow::upper(
        "theorem5_nontrivial",
        n,
        k,
        seed,
        epsilon,
        (2 * k - 2) as f64 / (n - k) as f64,
        true,
        &format!("m={m_draws};nontrivial={}", u8::from(sampling_nontrivial(n, k, epsilon))),
    ));

    // Fixed panel of certified members, reused across repetitions.
    let mut panel = Vec::new();
    for j in 0..members {
        let (member, _) = random_certified_member(n, k, split_seed(seed, STREAM_MEMBERS + j))?;
        panel.push(member);
    }

    let mut event_count = 0u64;
    for rep in 0..repetitions {
        let sample = sample_ksets(n, k, m_draws as usize, split_seed(seed, rep));
        let stats = fraction_stats(&sample);
        let event = stats.epsilon_achieved <= epsilon;
        if event {
            event_count += 1;
        }
        rows.push(VerifyRow::upper(
            "theorem5_event",
            n,
            k,
            seed,
            stats.epsilon_achieved,
            epsilon,
            false,
            &format!("rep={rep};event=1;gamma={:e}", stats.gamma),
        ));
        if event {
            for (j, member) in panel.iter().enumerate() {
                let cert = upper_bound_certificate(member, k, Some(&sample));
                let bound = (1.0 + epsilon) * formula * member.frobenius_norm();
                rows.push(VerifyRow::upper(
                    "theorem5_bound",
                    n,
                    k,
                    seed,
                    cert.bound,
                    bound + DIST_SLACK,
                    true,
                    &format!("rep={rep};member={j}"),
                ));
                rows.push(VerifyRow::lower(
                    "lemma_partial_psd",
                    n,
                    k,
                    seed,
                    f64::from(u8::from(cert.witness.is_psd(DEFAULT_PSD_TOL))),
                    1.0,
                    true,
                    &format!("rep={rep};member={j}"),
                ));
            }
        }
    }

    rows.push(VerifyRow::lower(
        "theorem5_frequency",
        n,
        k,
        seed,
        event_count as f64 / repetitions as f64,
        1.0 - delta,
        true,
        &format!("events={event_count};repetitions={repetitions}"),
    ));

    // Exhaustive-sample control: fractions are exact and the bound carries
    // factor (1 + 0).
    if binomial_capped(n as u64, k as u64, kpsd::closure::ENUMERATION_CAP).is_some() {
        let exhaustive = KSetSample::exhaustive(n, k)?;
        let stats = fraction_stats(&exhaustive);
        rows.push(VerifyRow::upper(
            "theorem5_control",
            n,
            k,
            seed,
            stats.epsilon_achieved,
            IDENTITY_SLACK,
            true,
            "control=exhaustive",
        ));
        if let Some(member) = panel.first() {
            let cert = upper_bound_certificate(member, k, Some(&exhaustive));
            rows.push(VerifyRow::upper(
                "theorem5_control_bound",
                n,
                k,
                seed,
                cert.bound,
                formula * member.frobenius_norm() + IDENTITY_SLACK,
                true,
                "control=exhaustive",
            ));
        }
    }
    Ok(rows)
}

/// Monte Carlo frequencies for the sparsified-eigenvector argument at one
/// dense-regime (n, k), replayed on the extremal member whose eigenstructure
/// is known in closed form.
pub fn verify_sparsifier(n: usize, k: usize, trials: u64, seed: u64) -> Result<Vec<VerifyRow>> {
    if n < 97 {
        return Err(Error::Domain(format!("n = {n} < 97")));
    }
    if 4 * k < 3 * n || k >= n {
        return Err(Error::Domain(format!("k = {k} outside 3n/4..n")));
    }
    let nf = n as f64;
    let kf = k as f64;
    // Extremal member: negative eigenvector is 1/sqrt(n) * ones with
    // eigenvalue -(n-k)a, the positive eigenspace is its orthogonal
    // complement with constant eigenvalue k*a.
    let a = 1.0 / ((kf - 1.0) * (kf - 1.0) * nf + nf * (nf - 1.0)).sqrt();
    let mu = kf * a;
    let v1 = vec![1.0 / nf.sqrt(); n];
    let ortho_bound = 24.0 * (nf - kf) / nf.powf(1.5);

    let mut sparse_ok = 0u64;
    let mut inner_fail = 0u64;
    let mut ortho_fail = 0u64;
    let mut joint_ok = 0u64;
    for t in 0..trials {
        let outcome = kpsd::constructions::sparsify_vector(&v1, k, split_seed(seed, t))?;
        let norm_sq: f64 = outcome.vector.iter().map(|x| x * x).sum();
        let positive_part = mu * (norm_sq - outcome.inner_v1 * outcome.inner_v1).max(0.0);
        let is_sparse = outcome.support_size <= k;
        let inner_ok = outcome.inner_v1 >= 0.5;
        let ortho_ok = positive_part <= ortho_bound;
        if is_sparse {
            sparse_ok += 1;
        }
        if !inner_ok {
            inner_fail += 1;
        }
        if !ortho_ok {
            ortho_fail += 1;
        }
        if is_sparse && inner_ok && ortho_ok {
            joint_ok += 1;
        }
    }
    let tf = trials as f64;
    let detail = format!("trials={trials};family=extremal");
    let mut rows = vec![
        VerifyRow::lower(
            "lemma_sparse",
            n,
            k,
            seed,
            sparse_ok as f64 / tf,
            0.48,
            true,
            &detail,
        ),
        VerifyRow::upper(
            "lemma_parallel",
            n,
            k,
            seed,
            inner_fail as f64 / tf,
            16.0 / nf + 0.01,
            true,
            &detail,
        ),
        VerifyRow::upper(
            "lemma_ortho",
            n,
            k,
            seed,
            ortho_fail as f64 / tf,
            1.0 / 3.0 + 0.0167,
            true,
            &format!("{detail};bound={ortho_bound:e}"),
        ),
        VerifyRow::lower(
            "lemma_lambda_joint",
            n,
            k,
            seed,
            joint_ok as f64 / tf,
            0.05,
            true,
            &detail,
        ),
    ];

    // The eigenvalue bound itself, via the certificate machinery.
    let member = gab_extremal(n, k);
    let cert = lambda1_certificate(
        &member,
        k,
        DEFAULT_LAMBDA1_TRIALS,
        split_seed(seed, STREAM_DIAG),
    )?;
    rows.push(VerifyRow::upper(
        "lemma_lambda",
        n,
        k,
        seed,
        cert.lambda1,
        cert.bound,
        true,
        &format!(
            "sparse_draws={};best_quadratic_form={}",
            cert.sparse_draws,
            cert.best_quadratic_form
                .map_or("none".into(), |q| format!("{q:e}")),
        ),
    ));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::row::all_hard_satisfied;

    #[test]
    fn theorem1_small_run_all_hard_pass() {
        let rows = verify_theorem1(6, 3, 5, 42).unwrap();
        assert!(all_hard_satisfied(&rows), "{rows:#?}");
        assert_eq!(rows.iter().filter(|r| r.theorem == "theorem1").count(), 5);
    }

    #[test]
    fn theorem3_equality_rows() {
        let rows = verify_theorem3(&[(10, 9), (4, 2)], 100, 0).unwrap();
        assert!(all_hard_satisfied(&rows), "{rows:#?}");
        let dist_row = rows
            .iter()
            .find(|r| r.theorem == "theorem3_dist" && r.n == 10)
            .unwrap();
        assert!(dist_row.quantity <= 1e-9);
        // Tightness at (4, 2): both formulas evaluate to 1/2.
        assert!((lower1_formula(4, 2) - 0.5).abs() < 1e-15);
        assert!((upper1_formula(4, 2) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn theorem3_smallk_rows_only_in_regime() {
        let rows = verify_theorem3(&[(100, 5), (10, 9)], 50, 1).unwrap();
        assert!(rows
            .iter()
            .any(|r| r.theorem == "table1_smallk" && r.n == 100));
        assert!(!rows.iter().any(|r| r.theorem == "table1_smallk" && r.n == 10));
        assert!(all_hard_satisfied(&rows), "{rows:#?}");
    }

    #[test]
    fn theorem4_rejects_large_ratio() {
        assert!(verify_theorem4(100, 2, 3, 0).is_err()); // 2/100 > 1/93
    }

    #[test]
    fn theorem5_tiny_run() {
        let rows = verify_theorem5(8, 4, 0.5, 0.2, 2, 2, 3).unwrap();
        assert!(all_hard_satisfied(&rows), "{rows:#?}");
        assert!(rows.iter().any(|r| r.theorem == "theorem5_control"));
    }

    #[test]
    fn sparsifier_modest_run() {
        let rows = verify_sparsifier(100, 75, 500, 9).unwrap();
        assert!(all_hard_satisfied(&rows), "{rows:#?}");
        assert_eq!(rows.len(), 5);
    }

    #[test]
    fn rows_are_deterministic_per_seed() {
        let a = verify_theorem1(5, 2, 3, 7).unwrap();
        let b = verify_theorem1(5, 2, 3, 7).unwrap();
        let csv_a = crate::row::write_csv(&a);
        let csv_b = crate::row::write_csv(&b);
        assert_eq!(csv_a, csv_b);
        let c = verify_theorem1(5, 2, 3, 8).unwrap();
        assert_ne!(csv_a, crate::row::write_csv(&c));
    }
}

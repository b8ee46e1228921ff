//! Implementations behind the CLI subcommands, kept separate from argument
//! parsing so they can be exercised directly in tests.

use kpsd::averaging::{design_average, sample_ksets, upper_bound_certificate};
use kpsd::closure::{member_exact, member_sampled, MembershipMode, MembershipVerdict};
use kpsd::cone::dist_to_psd;
use kpsd::constructions::{
    gab_extremal, gab_matrix, rip_default_rows, rip_member_matrix, GabSpec, RipSpec,
    RIP_DEFAULT_DELTA,
};
use kpsd::designs::{complete_design, fano, format_design, projective_plane, Design};
use kpsd::error::{Error, Result};
use kpsd::symmat::{format_matrix, parse_matrix};

use crate::row::fmt_f64;

/// Prime orders offered for projective planes.
pub const PLANE_ORDERS: [u64; 11] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

pub fn construct_gab(a: f64, b: f64, n: usize) -> Result<String> {
    if a < 0.0 || b < 0.0 {
        return Err(Error::Domain("a and b must be nonnegative".into()));
    }
    if n < 2 {
        return Err(Error::Domain("n must be at least 2".into()));
    }
    Ok(format_matrix(&gab_matrix(&GabSpec::new(a, b, n))))
}

pub fn construct_gab_extremal(n: usize, k: usize) -> Result<String> {
    if k < 2 || k >= n {
        return Err(Error::Domain(format!("need 2 <= k < n, got ({n}, {k})")));
    }
    Ok(format_matrix(&gab_extremal(n, k)))
}

pub fn construct_rip(
    n: usize,
    k: usize,
    m: Option<usize>,
    delta: Option<f64>,
    seed: u64,
) -> Result<String> {
    let m = m.unwrap_or_else(|| rip_default_rows(k));
    let delta = delta.unwrap_or(RIP_DEFAULT_DELTA);
    if k < 2 {
        return Err(Error::Domain("k must be at least 2".into()));
    }
    if m >= n {
        return Err(Error::Domain(format!("need m < n, got m = {m}, n = {n}")));
    }
    if delta <= 0.0 || delta >= 1.0 {
        return Err(Error::Domain("delta must be in (0, 1)".into()));
    }
    Ok(format_matrix(&rip_member_matrix(&RipSpec::new(
        n, k, m, delta, seed,
    ))))
}

pub fn dist_report(matrix_text: &str) -> Result<String> {
    let m = parse_matrix(matrix_text)?;
    let report = dist_to_psd(&m)?;
    let mut out = String::new();
    out.push_str(&format!("n {}\n", m.dim()));
    out.push_str(&format!("frobenius_norm {}\n", fmt_f64(m.frobenius_norm())));
    out.push_str(&format!("distance {}\n", fmt_f64(report.distance)));
    out.push_str(&format!("negative_count {}\n", report.negative_count));
    if !report.negative_eigenvalues.is_empty() {
        let vals: Vec<String> = report
            .negative_eigenvalues
            .iter()
            .map(|v| fmt_f64(*v))
            .collect();
        out.push_str(&format!("negative_eigenvalues {}\n", vals.join(" ")));
    }
    Ok(out)
}

fn render_verdict(verdict: &MembershipVerdict) -> String {
    let mut out = String::new();
    out.push_str(&format!("member {}\n", verdict.member));
    out.push_str(&format!(
        "mode {}\n",
        match verdict.mode {
            MembershipMode::Exact => "exact",
            MembershipMode::Sampled => "sampled",
        }
    ));
    out.push_str(&format!("sets_checked {}\n", verdict.sets_checked));
    if let Some(set) = &verdict.worst_set {
        let idx: Vec<String> = set.one_based().iter().map(|i| i.to_string()).collect();
        out.push_str(&format!("worst_set {}\n", idx.join(" ")));
    }
    if let Some(cert) = &verdict.certificate {
        let entries: Vec<String> = cert.vector.iter().map(|v| fmt_f64(*v)).collect();
        out.push_str(&format!("certificate {}\n", entries.join(" ")));
        out.push_str(&format!("quadratic_form {}\n", fmt_f64(cert.quadratic_form)));
    }
    out
}

pub fn member_report(
    matrix_text: &str,
    k: usize,
    sample_trials: Option<u64>,
    seed: u64,
    tol: f64,
) -> Result<String> {
    let m = parse_matrix(matrix_text)?;
    let verdict = match sample_trials {
        Some(trials) => member_sampled(&m, k, trials, seed)?,
        None => member_exact(&m, k, tol)?,
    };
    Ok(render_verdict(&verdict))
}

fn named_design(name: &str) -> Result<Option<Design>> {
    if name == "fano" {
        return Ok(Some(fano()));
    }
    if let Some(order) = name.strip_prefix("pg") {
        let q: u64 = order
            .parse()
            .map_err(|_| Error::Parse(format!("bad plane order in {name:?}")))?;
        return Ok(Some(projective_plane(q)?));
    }
    Ok(None)
}

pub fn average_report(
    matrix_text: &str,
    k: usize,
    sample_trials: Option<u64>,
    design_name: Option<&str>,
    seed: u64,
) -> Result<String> {
    let m = parse_matrix(matrix_text)?;
    let n = m.dim();
    if k < 2 || k > n {
        return Err(Error::Domain(format!("k = {k} not in 2..={n}")));
    }
    let (cert, scaling, mode) = match (sample_trials, design_name) {
        (Some(_), Some(_)) => {
            return Err(Error::Domain(
                "--sample and --design are mutually exclusive".into(),
            ))
        }
        (Some(trials), None) => {
            if trials == 0 {
                return Err(Error::Domain("sample size must be positive".into()));
            }
            let sample = sample_ksets(n, k, trials as usize, seed);
            (
                upper_bound_certificate(&m, k, Some(&sample)),
                kpsd::averaging::alpha(n, k),
                format!("sampled;m={trials}"),
            )
        }
        (None, Some(name)) => {
            let design = match name {
                "complete" => complete_design(n, k)?,
                other => named_design(other)?
                    .ok_or_else(|| Error::Domain(format!("unknown design {other:?}")))?,
            };
            if design.k() != k {
                return Err(Error::Domain(format!(
                    "design {name:?} has block size {}, but --k is {k}",
                    design.k()
                )));
            }
            let alpha_d = 2.0 * design.b() as f64 / (design.r() + design.lambda()) as f64;
            (design_average(&m, &design)?, alpha_d, format!("design;name={name}"))
        }
        (None, None) => (
            upper_bound_certificate(&m, k, None),
            kpsd::averaging::alpha(n, k),
            "full".to_string(),
        ),
    };
    let formula = (n - k) as f64 / (n + k - 2) as f64 * m.frobenius_norm();
    let mut out = String::new();
    out.push_str(&format!("mode {mode}\n"));
    out.push_str(&format!("alpha {}\n", fmt_f64(scaling)));
    out.push_str(&format!("bound {}\n", fmt_f64(cert.bound)));
    out.push_str(&format!("full_average_formula {}\n", fmt_f64(formula)));
    out.push_str(&format!(
        "witness_psd {}\n",
        cert.witness.is_psd(kpsd::DEFAULT_PSD_TOL)
    ));
    Ok(out)
}

pub fn designs_list() -> String {
    let mut out = String::from("name n k b r lambda\n");
    let f = fano();
    out.push_str(&format!(
        "fano {} {} {} {} {}\n",
        f.n(),
        f.k(),
        f.b(),
        f.r(),
        f.lambda()
    ));
    for q in PLANE_ORDERS {
        let n = q * q + q + 1;
        out.push_str(&format!("pg{q} {n} {} {n} {} 1\n", q + 1, q + 1));
    }
    out.push_str("complete <n> <k> C(n,k) C(n-1,k-1) C(n-2,k-2)\n");
    out
}

pub fn designs_emit(name: &str, n: Option<usize>, k: Option<usize>) -> Result<String> {
    let design = match name {
        "complete" => {
            let n = n.ok_or_else(|| Error::Domain("complete design needs --n".into()))?;
            let k = k.ok_or_else(|| Error::Domain("complete design needs --k".into()))?;
            complete_design(n, k)?
        }
        other => named_design(other)?
            .ok_or_else(|| Error::Domain(format!("unknown design {other:?}")))?,
    };
    Ok(format_design(&design))
}

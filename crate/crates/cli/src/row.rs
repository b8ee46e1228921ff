//! Verification rows and their CSV rendering.
//!
//! Every experiment emits a flat list of rows, one measured quantity against
//! one bound each. A row's `satisfied` flag is always recomputable from
//! `quantity`, `bound`, and the direction recorded in `extra` (`dir=le` for
//! upper bounds, `dir=ge` for lower bounds and witnesses). Rows also carry
//! `hard=0|1`: hard rows are assertions and drive the process exit code,
//! soft rows report probabilistic events, screened-only members, and other
//! diagnostics that a single run must not fail on.

/// Direction of the comparison a row asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Satisfied iff `quantity <= bound`.
    UpperBound,
    /// Satisfied iff `quantity >= bound`.
    LowerBound,
}

impl Direction {
    fn tag(self) -> &'static str {
        match self {
            Direction::UpperBound => "le",
            Direction::LowerBound => "ge",
        }
    }
}

/// One verification measurement.
#[derive(Debug, Clone)]
pub struct VerifyRow {
    pub theorem: String,
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub quantity: f64,
    pub bound: f64,
    pub satisfied: bool,
    /// `dir=..;hard=..` plus free-form `key=value` pairs, `;`-separated.
    pub extra: String,
    /// Whether an unsatisfied row is an assertion failure.
    pub hard: bool,
}

impl VerifyRow {
    pub fn new(
        theorem: &str,
        n: usize,
        k: usize,
        seed: u64,
        quantity: f64,
        bound: f64,
        dir: Direction,
        hard: bool,
        detail: &str,
    ) -> Self {
        let satisfied = match dir {
            Direction::UpperBound => quantity <= bound,
            Direction::LowerBound => quantity >= bound,
        };
        let mut extra = format!("dir={};hard={}", dir.tag(), if hard { 1 } else { 0 });
        if !detail.is_empty() {
            extra.push(';');
            extra.push_str(detail);
        }
        VerifyRow {
            theorem: theorem.to_string(),
            n,
            k,
            seed,
            quantity,
            bound,
            satisfied,
            extra,
            hard,
        }
    }

    pub fn upper(
        theorem: &str,
        n: usize,
        k: usize,
        seed: u64,
        quantity: f64,
        bound: f64,
        hard: bool,
        detail: &str,
    ) -> Self {
        Self::new(
            theorem,
            n,
            k,
            seed,
            quantity,
            bound,
            Direction::UpperBound,
            hard,
            detail,
        )
    }

    pub fn lower(
        theorem: &str,
        n: usize,
        k: usize,
        seed: u64,
        quantity: f64,
        bound: f64,
        hard: bool,
        detail: &str,
    ) -> Self {
        Self::new(
            theorem,
            n,
            k,
            seed,
            quantity,
            bound,
            Direction::LowerBound,
            hard,
            detail,
        )
    }
}

/// Lossless float rendering: 17 significant digits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Renders rows as CSV with the fixed schema
/// `theorem,n,k,seed,quantity,bound,satisfied,extra`.
pub fn write_csv(rows: &[VerifyRow]) -> String {
    let mut out = String::from("theorem,n,k,seed,quantity,bound,satisfied,extra\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.theorem,
            r.n,
            r.k,
            r.seed,
            fmt_f64(r.quantity),
            fmt_f64(r.bound),
            r.satisfied,
            r.extra
        ));
    }
    out
}

/// True iff every hard row is satisfied.
pub fn all_hard_satisfied(rows: &[VerifyRow]) -> bool {
    rows.iter().all(|r| !r.hard || r.satisfied)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn satisfied_matches_direction() {
        let up = VerifyRow::upper("t", 4, 2, 0, 0.5, 0.6, true, "");
        assert!(up.satisfied);
        let up_bad = VerifyRow::upper("t", 4, 2, 0, 0.7, 0.6, true, "");
        assert!(!up_bad.satisfied);
        let low = VerifyRow::lower("t", 4, 2, 0, 0.7, 0.6, true, "");
        assert!(low.satisfied);
    }

    #[test]
    fn satisfied_recomputable_from_row_fields() {
        let rows = vec![
            VerifyRow::upper("a", 5, 2, 1, 1.0, 2.0, true, "x=1"),
            VerifyRow::lower("b", 5, 3, 1, 1.0, 2.0, false, ""),
        ];
        for r in &rows {
            let dir_le = r.extra.starts_with("dir=le");
            let recomputed = if dir_le {
                r.quantity <= r.bound
            } else {
                r.quantity >= r.bound
            };
            assert_eq!(recomputed, r.satisfied);
        }
    }

    #[test]
    fn csv_has_17_significant_digits() {
        assert_eq!(fmt_f64(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_f64(1.0 / 3.0), "3.3333333333333331e-1");
    }

    #[test]
    fn csv_schema() {
        let rows = vec![VerifyRow::upper("t1", 4, 2, 7, 0.5, 0.5, true, "f=2")];
        let csv = write_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "theorem,n,k,seed,quantity,bound,satisfied,extra");
        let row = lines.next().unwrap();
        assert!(row.starts_with("t1,4,2,7,"));
        assert!(row.ends_with("dir=le;hard=1;f=2"));
    }

    #[test]
    fn hard_row_gate() {
        let rows = vec![
            VerifyRow::upper("a", 4, 2, 0, 1.0, 0.5, false, ""),
            VerifyRow::upper("b", 4, 2, 0, 1.0, 0.5, true, ""),
        ];
        assert!(all_hard_satisfied(&rows[..1]));
        assert!(!all_hard_satisfied(&rows));
    }
}

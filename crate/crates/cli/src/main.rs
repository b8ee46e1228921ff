//! `kpsd` — command-line interface for the k-PSD closure laboratory.
//!
//! Exit codes: 0 on success, 1 when a verification run leaves a hard
//! assertion row unsatisfied, 2 on usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kpsd_cli::commands;
use kpsd_cli::row::{all_hard_satisfied, write_csv};
use kpsd_cli::verify;

#[derive(Parser)]
#[command(name = "kpsd", version, about = "Numerical laboratory for the k-PSD closure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a constructed matrix in the text format.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Distance to the PSD cone and the negative spectrum of a matrix file.
    Dist {
        /// Matrix file in the text format.
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closure membership of a matrix file, exact or sampled.
    Member {
        /// Minor order k.
        #[arg(long)]
        k: usize,
        /// Check all C(n, k) minors (the default).
        #[arg(long, conflicts_with = "sample")]
        exact: bool,
        /// Check this many uniformly sampled minors instead.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Relative PSD tolerance.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        file: PathBuf,
    },
    /// Scaled minor-averaging witness and distance bound for a matrix file.
    Average {
        /// Minor order k.
        #[arg(long)]
        k: usize,
        /// Average over this many sampled k-sets instead of all of them.
        #[arg(long)]
        sample: Option<u64>,
        /// Average over a named design: fano, pg<q>, or complete.
        #[arg(long, conflicts_with = "sample")]
        design: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        file: PathBuf,
    },
    /// List or emit 2-designs.
    Designs {
        #[command(subcommand)]
        what: DesignsCmd,
    },
    /// Run a verification experiment and emit CSV rows.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Constant matrix: diagonal b, off-diagonal -a.
    Gab {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Unit-norm boundary member of the constant family at (n, k).
    GabExtremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Random-sign construction -(1-delta) I + W^T W.
    Rip {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Rows of the sign matrix (default 93k).
        #[arg(long)]
        m: Option<usize>,
        /// Isometry slack (default 0.9).
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum DesignsCmd {
    /// List the named designs and their parameters.
    List {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a design in the text format.
    Emit {
        /// fano, pg<q>, or complete.
        #[arg(long)]
        name: String,
        /// Points (complete design only).
        #[arg(long)]
        n: Option<usize>,
        /// Block size (complete design only).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
#[allow(clippy::enum_variant_names)]
enum VerifyCmd {
    /// Averaging upper bound over lifted, exactly certified members.
    Theorem1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dense-regime bound (n >= 97, k >= 3n/4).
    Theorem2 {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 75)]
        k: usize,
        /// Screened-only lifted members to report on.
        #[arg(long, default_value_t = 2)]
        lifted: u64,
        /// Sampled minors per screened member.
        #[arg(long, default_value_t = 400)]
        screen_trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower-bound equality of the extremal construction.
    Theorem3 {
        #[arg(long)]
        n: usize,
        /// Single k; omit to sweep all 2 <= k < n.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 200)]
        screen_trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Restricted-isometry construction at linear sparsity (k/n < 1/93).
    Theorem4 {
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        max_attempts: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sampled-minor concentration and the (1+eps) averaging bound.
    Theorem5 {
        #[arg(long, default_value_t = 20)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        #[arg(long, default_value_t = 0.2)]
        delta: f64,
        #[arg(long, default_value_t = 20)]
        repetitions: u64,
        #[arg(long, default_value_t = 20)]
        members: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo frequencies for the sparsified-eigenvector argument.
    Sparsifier {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 75)]
        k: usize,
        #[arg(long, default_value_t = 10000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// Runs the parsed command; Ok(true) means all hard assertions held.
fn run(cli: Cli) -> Result<bool, String> {
    let io_err = |e: std::io::Error| format!("cannot write output: {e}");
    match cli.command {
        Command::Construct { what } => {
            let (text, out) = match what {
                ConstructCmd::Gab { a, b, n, out } => {
                    (commands::construct_gab(a, b, n).map_err(|e| e.to_string())?, out)
                }
                ConstructCmd::GabExtremal { n, k, out } => (
                    commands::construct_gab_extremal(n, k).map_err(|e| e.to_string())?,
                    out,
                ),
                ConstructCmd::Rip {
                    n,
                    k,
                    m,
                    delta,
                    seed,
                    out,
                } => (
                    commands::construct_rip(n, k, m, delta, seed).map_err(|e| e.to_string())?,
                    out,
                ),
            };
            emit(&text, out.as_ref()).map_err(io_err)?;
            Ok(true)
        }
        Command::Dist { file, out } => {
            let text = read_input(&file)?;
            let report = commands::dist_report(&text).map_err(|e| e.to_string())?;
            emit(&report, out.as_ref()).map_err(io_err)?;
            Ok(true)
        }
        Command::Member {
            k,
            exact: _,
            sample,
            seed,
            tol,
            out,
            file,
        } => {
            let text = read_input(&file)?;
            let report =
                commands::member_report(&text, k, sample, seed, tol).map_err(|e| e.to_string())?;
            emit(&report, out.as_ref()).map_err(io_err)?;
            Ok(true)
        }
        Command::Average {
            k,
            sample,
            design,
            seed,
            out,
            file,
        } => {
            let text = read_input(&file)?;
            let report = commands::average_report(&text, k, sample, design.as_deref(), seed)
                .map_err(|e| e.to_string())?;
            emit(&report, out.as_ref()).map_err(io_err)?;
            Ok(true)
        }
        Command::Designs { what } => {
            let (text, out) = match what {
                DesignsCmd::List { out } => (commands::designs_list(), out),
                DesignsCmd::Emit { name, n, k, out } => (
                    commands::designs_emit(&name, n, k).map_err(|e| e.to_string())?,
                    out,
                ),
            };
            emit(&text, out.as_ref()).map_err(io_err)?;
            Ok(true)
        }
        Command::Verify { what } => {
            let (rows, out) = match what {
                VerifyCmd::Theorem1 {
                    n,
                    k,
                    trials,
                    seed,
                    out,
                } => (
                    verify::verify_theorem1(n, k, trials, seed).map_err(|e| e.to_string())?,
                    out,
                ),
                VerifyCmd::Theorem2 {
                    n,
                    k,
                    lifted,
                    screen_trials,
                    seed,
                    out,
                } => (
                    verify::verify_theorem2(n, k, lifted, screen_trials, seed)
                        .map_err(|e| e.to_string())?,
                    out,
                ),
                VerifyCmd::Theorem3 {
                    n,
                    k,
                    screen_trials,
                    seed,
                    out,
                } => {
                    let pairs: Vec<(usize, usize)> = match k {
                        Some(k) => vec![(n, k)],
                        None => (2..n).map(|k| (n, k)).collect(),
                    };
                    (
                        verify::verify_theorem3(&pairs, screen_trials, seed)
                            .map_err(|e| e.to_string())?,
                        out,
                    )
                }
                VerifyCmd::Theorem4 {
                    n,
                    k,
                    max_attempts,
                    seed,
                    out,
                } => (
                    verify::verify_theorem4(n, k, max_attempts, seed).map_err(|e| e.to_string())?,
                    out,
                ),
                VerifyCmd::Theorem5 {
                    n,
                    k,
                    epsilon,
                    delta,
                    repetitions,
                    members,
                    seed,
                    out,
                } => (
                    verify::verify_theorem5(n, k, epsilon, delta, repetitions, members, seed)
                        .map_err(|e| e.to_string())?,
                    out,
                ),
                VerifyCmd::Sparsifier {
                    n,
                    k,
                    trials,
                    seed,
                    out,
                } => (
                    verify::verify_sparsifier(n, k, trials, seed).map_err(|e| e.to_string())?,
                    out,
                ),
            };
            emit(&write_csv(&rows), out.as_ref()).map_err(io_err)?;
            Ok(all_hard_satisfied(&rows))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits with status 2 on usage errors, 0 for --help/--version.
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

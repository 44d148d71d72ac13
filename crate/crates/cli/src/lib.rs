//! Experiment runner for `realqm`: each subcommand reproduces one
//! demonstration and emits CSV, JSON or an aligned text table.
//!
//! Exit codes: 0 on success, 2 for invalid flags or malformed input files,
//! 3 for I/O failures.

use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

mod experiments;
pub mod fixtures;
mod output;

pub use output::fmt_num;

#[derive(Debug, Parser)]
#[command(name = "realqm", version, about = "Real-number quantum mechanics experiments")]
pub struct Cli {
    /// Write records to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Record format (defaults: csv for sweeps, text for audit and ghosts).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Larmor precession of (|0⟩+|1⟩)/√2 under H = ħΩσ_z, ħ = 1.
    Larmor(LarmorArgs),
    /// Mach-Zehnder interferometer: composite verdicts and output probabilities.
    Mzi(MziArgs),
    /// Entanglement of the two-real-qubit encoding over cos β|0⟩ + e^{iα} sin β|1⟩.
    EntropyScan(EntropyScanArgs),
    /// Classify a real operator as Physical, AntiLinear or Extended.
    Audit(AuditArgs),
    /// Indefinite-metric Fock toy: norms, commutators, ghost emission.
    Ghosts(GhostsArgs),
    /// Where a phase lands in the local and global two-qubit encodings.
    LocalPhaseDemo(LocalPhaseArgs),
    /// Write the canonical matrix fixtures as JSON files.
    EmitFixtures(EmitFixturesArgs),
}

#[derive(Debug, Args)]
pub struct LarmorArgs {
    /// Precession frequency Ω (> 0).
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// Final time.
    #[arg(long, default_value_t = std::f64::consts::TAU)]
    pub tmax: f64,
    /// Number of intervals; steps + 1 records are emitted.
    #[arg(long, default_value_t = 100)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct MziArgs {
    /// Phase (radians) between the mirrors and the second beamsplitter.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phase: f64,
    /// Sweep the phase over N equally spaced points in [0, 2π].
    #[arg(long, value_name = "N", conflicts_with = "phase")]
    pub grid: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EntropyScanArgs {
    /// Points in α ∈ [0, π].
    #[arg(long, default_value_t = 9)]
    pub alpha_points: usize,
    /// Points in β ∈ [0, π/2].
    #[arg(long, default_value_t = 9)]
    pub beta_points: usize,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["matrix", "random"])))]
pub struct AuditArgs {
    /// Matrix file: a real nested array or {"dim": n, "entries": [[re, im], ...]}.
    #[arg(long, value_name = "PATH")]
    pub matrix: Option<PathBuf>,
    /// Audit seeded random linear, antilinear and mixed operators instead.
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    /// Residual tolerance relative to the Frobenius norm.
    #[arg(long, default_value_t = realqm::superselection::DEFAULT_AUDIT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct GhostsArgs {
    /// Occupation cutoff N per mode (4 ≤ N ≤ 24).
    #[arg(long, default_value_t = realqm::indefinite_metric::DEFAULT_CUTOFF)]
    pub cutoff: usize,
    /// Ghost-emission amplitude λ.
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub lambda: f64,
}

#[derive(Debug, Args)]
pub struct LocalPhaseArgs {
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
}

#[derive(Debug, Args)]
pub struct EmitFixturesArgs {
    /// Target directory; created if missing.
    pub dir: PathBuf,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl From<realqm::Error> for CliError {
    fn from(e: realqm::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

/// Records for the output stream plus human-readable notes for stderr.
#[derive(Debug, Clone, PartialEq)]
pub struct Emitted {
    pub body: String,
    pub notes: Vec<String>,
}

/// Runs the subcommand and returns what it would emit, without writing.
pub fn run(cli: &Cli) -> Result<Emitted, CliError> {
    match &cli.command {
        Command::Larmor(a) => {
            experiments::larmor(a, pick(cli.format, Format::Csv, &[Format::Csv, Format::Json])?)
        }
        Command::Mzi(a) => experiments::mzi(a, pick(cli.format, Format::Csv, &[Format::Csv, Format::Json])?),
        Command::EntropyScan(a) => {
            experiments::entropy_scan(a, pick(cli.format, Format::Csv, &[Format::Csv, Format::Json])?)
        }
        Command::Audit(a) => {
            experiments::audit(a, pick(cli.format, Format::Text, &[Format::Text, Format::Json])?)
        }
        Command::Ghosts(a) => {
            experiments::ghosts(a, pick(cli.format, Format::Text, &[Format::Text, Format::Json])?)
        }
        Command::LocalPhaseDemo(a) => {
            experiments::local_phase_demo(a, pick(cli.format, Format::Csv, &[Format::Csv, Format::Json])?)
        }
        Command::EmitFixtures(a) => {
            if cli.format.is_some() {
                return Err(CliError::Invalid(
                    "emit-fixtures always writes JSON; --format is not accepted".into(),
                ));
            }
            let written = fixtures::emit_matrix_fixtures(&a.dir)?;
            let body = written.iter().map(|p| format!("{}\n", p.display())).collect();
            Ok(Emitted { body, notes: vec![format!("wrote {} fixtures", written.len())] })
        }
    }
}

fn pick(requested: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
    let f = requested.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<_> = allowed
            .iter()
            .map(|a| a.to_possible_value().expect("no skipped variants").get_name().to_owned())
            .collect();
        Err(CliError::Invalid(format!(
            "--format {}: this subcommand supports {}",
            f.to_possible_value().expect("no skipped variants").get_name(),
            names.join(", ")
        )))
    }
}

/// Runs the subcommand, writes records and notes, and returns the exit code.
pub fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let result = run(cli).and_then(|emitted| {
        match &cli.output {
            Some(path) => std::fs::write(path, &emitted.body)
                .map_err(|source| CliError::Io { path: path.clone(), source })?,
            None => stdout
                .write_all(emitted.body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?,
        }
        Ok(emitted.notes)
    });
    match result {
        Ok(notes) => {
            for n in notes {
                let _ = writeln!(stderr, "note: {n}");
            }
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

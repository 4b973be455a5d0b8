//! Command-line front end: state generation, component evaluation, local
//! transformations, product-state decisions, and verification suites.
//!
//! Exit codes are a stable contract: 0 on success, 1 when a verification
//! suite fails, 2 on usage, parse, or file errors.

use crate::bitensors::compute_all;
use crate::detect::{decide, nearest_rank_one_gap, DEFAULT_DECISION_TOL};
use crate::error::Error;
use crate::files::{self, Report, StateDoc, VerdictDoc};
use crate::lorentz::{parity_spinor, spinor_transform, OmegaParams};
use crate::matrix::Mat4c;
use crate::states::{random_state, TwoParticleState};
use crate::verify;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "bitensor",
    version,
    about = "Covariant two-spinor invariants and product-state detection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

// Parsed once at startup; variant size imbalance is irrelevant.
#[allow(clippy::large_enum_variant)]
#[derive(Subcommand)]
enum Command {
    /// Write a state document for a named or randomly drawn state.
    Gen {
        /// State family to generate.
        #[arg(value_enum)]
        kind: GenKind,
        /// Seed for the random families; ignored by the fixed ones.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the nine covariant quantities of a state document.
    Invariants {
        /// Input state document.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply local transformations in each lab and write the new state.
    Transform {
        /// Input state document.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Upper-triangle parameters w01,w02,w03,w12,w13,w23 for lab A.
        #[arg(long, value_parser = parse_omega, allow_hyphen_values = true, default_value = "0,0,0,0,0,0")]
        omega_a: OmegaParams,
        /// Upper-triangle parameters w01,w02,w03,w12,w13,w23 for lab B.
        #[arg(long, value_parser = parse_omega, allow_hyphen_values = true, default_value = "0,0,0,0,0,0")]
        omega_b: OmegaParams,
        /// Compose a parity inversion after lab A's proper transformation.
        #[arg(long)]
        parity_a: bool,
        /// Compose a parity inversion after lab B's proper transformation.
        #[arg(long)]
        parity_b: bool,
    },
    /// Classify a state document as product or entangled.
    Decide {
        /// Input state document.
        #[arg(long = "in")]
        input: PathBuf,
        /// Decision tolerance on the largest component magnitude.
        #[arg(long, value_parser = parse_tolerance, allow_hyphen_values = true, default_value_t = DEFAULT_DECISION_TOL)]
        tol: f64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 if the suite fails.
    Verify {
        /// Suite to run.
        #[arg(value_enum)]
        suite: SuiteKind,
        /// Trials (per rank where applicable).
        #[arg(long, value_parser = parse_trials, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Transformation parameter scale for the covariance suite.
        #[arg(long, value_parser = parse_scale, default_value_t = 1.0)]
        omega_scale: f64,
        /// Decision tolerance for the theorem suite.
        #[arg(long, value_parser = parse_tolerance, allow_hyphen_values = true, default_value_t = DEFAULT_DECISION_TOL)]
        tol: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Random product state (rank 1).
    Product,
    /// Antisymmetric two-level state: psi_01 = -psi_10 = 1/sqrt(2).
    Bell01,
    /// Diagonal correlated state: psi_00 = psi_33 = 1/sqrt(2).
    Bell03,
    #[value(name = "random-rank-1")]
    RandomRank1,
    #[value(name = "random-rank-2")]
    RandomRank2,
    #[value(name = "random-rank-3")]
    RandomRank3,
    #[value(name = "random-rank-4")]
    RandomRank4,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteKind {
    Algebra,
    Covariance,
    Identities,
    Theorem,
}

fn parse_omega(text: &str) -> Result<OmegaParams, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 6 {
        return Err(format!(
            "expected 6 comma-separated values w01,w02,w03,w12,w13,w23 (got {})",
            parts.len()
        ));
    }
    let mut upper = [0.0f64; 6];
    for (slot, part) in upper.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|e| format!("bad omega entry {part:?}: {e}"))?;
    }
    OmegaParams::from_upper(upper).map_err(|e| e.to_string())
}

fn parse_tolerance(text: &str) -> Result<f64, String> {
    let v: f64 = text.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("tolerance must be positive and finite (got {v})"))
    }
}

fn parse_scale(text: &str) -> Result<f64, String> {
    let v: f64 = text.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 && v <= 10.0 {
        Ok(v)
    } else {
        Err(format!("omega scale must be in (0, 10] (got {v})"))
    }
}

fn parse_trials(text: &str) -> Result<usize, String> {
    let v: usize = text.parse().map_err(|e| format!("{e}"))?;
    if v >= 1 {
        Ok(v)
    } else {
        Err("trials must be at least 1".to_string())
    }
}

/// Parses arguments from the environment, runs one command, and returns the
/// process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version exit 0 through here; usage errors exit 2.
            let code = err.exit_code();
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(command: Command) -> Result<i32, Error> {
    match command {
        Command::Gen { kind, seed, out } => {
            let state = generate(kind, seed)?;
            emit(
                out.as_deref(),
                &files::to_json(&StateDoc::from_state(&state)),
            )?;
            Ok(0)
        }
        Command::Invariants { input, out } => {
            let state = files::read_state(&input)?;
            let report = Report::from_set(&compute_all(&state));
            emit(out.as_deref(), &files::to_json(&report))?;
            Ok(0)
        }
        Command::Transform {
            input,
            out,
            omega_a,
            omega_b,
            parity_a,
            parity_b,
        } => {
            let state = files::read_state(&input)?;
            let mut s_a = spinor_transform(&omega_a)?;
            if parity_a {
                s_a = parity_spinor().compose(&s_a);
            }
            let mut s_b = spinor_transform(&omega_b)?;
            if parity_b {
                s_b = parity_spinor().compose(&s_b);
            }
            let transformed = state.apply_local(&s_a, &s_b);
            emit(
                out.as_deref(),
                &files::to_json(&StateDoc::from_state(&transformed)),
            )?;
            Ok(0)
        }
        Command::Decide { input, tol, out } => {
            let state = files::read_state(&input)?;
            let verdict = decide(&state, tol)?;
            let doc = VerdictDoc::new(&verdict, nearest_rank_one_gap(&state));
            emit(out.as_deref(), &files::to_json(&doc))?;
            Ok(0)
        }
        Command::Verify {
            suite,
            trials,
            seed,
            omega_scale,
            tol,
        } => {
            let outcome = match suite {
                SuiteKind::Algebra => verify::algebra(),
                SuiteKind::Covariance => verify::covariance(trials, seed, omega_scale)?,
                SuiteKind::Identities => verify::identities(trials, seed)?,
                SuiteKind::Theorem => verify::theorem(trials, seed, tol)?,
            };
            println!("{outcome}");
            Ok(if outcome.passed { 0 } else { 1 })
        }
    }
}

fn generate(kind: GenKind, seed: u64) -> Result<TwoParticleState, Error> {
    let named = |entries: [(usize, usize, f64); 2]| {
        let mut psi = Mat4c::zero();
        for (r, c, v) in entries {
            psi[(r, c)] = Complex64::new(v, 0.0);
        }
        TwoParticleState::from_coefficients(psi)
    };
    let r = std::f64::consts::FRAC_1_SQRT_2;
    match kind {
        GenKind::Product => random_state(seed, 1),
        GenKind::Bell01 => named([(0, 1, r), (1, 0, -r)]),
        GenKind::Bell03 => named([(0, 0, r), (3, 3, r)]),
        GenKind::RandomRank1 => random_state(seed, 1),
        GenKind::RandomRank2 => random_state(seed, 2),
        GenKind::RandomRank3 => random_state(seed, 3),
        GenKind::RandomRank4 => random_state(seed, 4),
    }
}

fn emit(out: Option<&std::path::Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => files::write_text(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

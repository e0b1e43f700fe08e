//! `picard2`: JSON front end for the symmetric 2-group library.
//!
//! Exit codes: 0 success or true verdict, 1 false verdict, 2 input or
//! validation error, 3 internal guard (oracle candidate cap).

mod commands;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "picard2", version, about = "Symmetric 2-groups, 2-exactness and projective presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input document (`-` for standard input)
    #[arg(long = "in", global = true, default_value = "-")]
    input: String,

    /// Also write the JSON result to this file
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// What to print on standard output
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for oracle searches; never changes results
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Summary,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Faithful,
    Full,
    Esssurj,
    Chainhom,
    Htpy,
}

#[derive(Subcommand)]
enum Command {
    /// Isomorphism classes of objects of a complex
    Pi0,
    /// Automorphisms of the unit object of a complex
    Pi1,
    /// Discrete complex of a group, or discrete chain map of a hom
    Dis,
    /// Decide a property of a chain map or homotopy
    Check {
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
    /// Kernel of a chain map with inclusion and null homotopy
    Kernel,
    /// Cokernel of a chain map with projection and null homotopy
    Cokernel,
    /// 2-exactness of a triple (gamma, sigma, phi)
    Exact2,
    /// Extension conditions of a triple (gamma, sigma, phi)
    Extension,
    /// Projective presentation of a complex
    Present,
    /// Projective presentation of a 2-module
    PresentMod,
    /// Lift a map out of a discrete free complex
    Lift,
    /// Lift a map out of a discrete free 2-module
    LiftMod,
    /// Quotient ring of a strict 2-ring
    Pi0Ring,
    /// Quotient module of a 2-module
    Pi0Mod,
    /// Brute-force checks on explicit groupoid tables
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Decide a functor property by enumeration
    Predicate {
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
    /// Exhaustive search for a lift
    Lift,
    /// Axiom checks and predicate agreement for a chain map
    VerifyAll,
}

/// Result of a command: JSON document, one-line summary and exit code.
pub struct Outcome {
    pub json: serde_json::Value,
    pub summary: String,
    pub code: u8,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Guard(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Guard(_) => 3,
        }
    }
}

fn read_input(path: &str) -> Result<serde_json::Value, Failure> {
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{path}: malformed JSON: {e}")))
}

fn dispatch(cli: &Cli, doc: &serde_json::Value) -> Result<Outcome, Failure> {
    use commands as c;
    match &cli.command {
        Command::Pi0 => c::pi0(doc),
        Command::Pi1 => c::pi1(doc),
        Command::Dis => c::dis(doc),
        Command::Check { predicate } => c::check(doc, *predicate),
        Command::Kernel => c::kernel(doc),
        Command::Cokernel => c::cokernel(doc),
        Command::Exact2 => c::exact2(doc),
        Command::Extension => c::extension(doc),
        Command::Present => c::present(doc),
        Command::PresentMod => c::present_mod(doc),
        Command::Lift => c::lift(doc),
        Command::LiftMod => c::lift_mod(doc),
        Command::Pi0Ring => c::pi0_ring(doc),
        Command::Pi0Mod => c::pi0_mod(doc),
        Command::Oracle { command } => match command {
            OracleCommand::Predicate { predicate } => c::oracle_predicate(doc, *predicate),
            OracleCommand::Lift => c::oracle_lift(doc, cli.jobs),
            OracleCommand::VerifyAll => c::oracle_verify_all(doc),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = read_input(&cli.input).and_then(|doc| dispatch(&cli, &doc));
    match outcome {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n";
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            let shown = match cli.format {
                Format::Json => text,
                Format::Summary => out.summary + "\n",
            };
            // A closed pipe is not worth a panic.
            let _ = std::io::stdout().write_all(shown.as_bytes());
            ExitCode::from(out.code)
        }
        Err(f) => {
            match &f {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Guard(msg) => eprintln!("guard: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}

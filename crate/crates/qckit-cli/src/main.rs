//! Command-line front end for the qckit quasi-cyclic code toolkit.
//!
//! One job per invocation: parse a code description (a TOML file or inline
//! flags), run the requested derivation, and print a machine-parseable
//! report with a stable key order. Identical inputs produce byte-identical
//! reports; timing goes to stderr only.
//!
//! Exit codes: 0 success, 2 validation failure, 3 budget exceeded,
//! 4 config error.

mod commands;
mod config;
mod report;
mod repro;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use config::{parse_field_spec, parse_kind, parse_weight, CliError, CodeDescription, TwoGeneratorSpec};

#[derive(Parser)]
#[command(name = "qckit", version, about = "Quasi-cyclic code toolkit: orthogonality checks, duals, distances, quantum derivations, golden-file reproduction, and parameter search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Self-orthogonality and dual-containment verdicts for a code
    Check(CheckArgs),
    /// Dual of a two-generator code under one inner product
    Dual(DualArgs),
    /// Exhaustive minimum distance of a code
    Distance(DistanceArgs),
    /// Quantum stabilizer parameters derived from a two-generator code
    Stabilizer(StabilizerArgs),
    /// Quantum synchronizable code built from factor exponents
    Sync(SyncArgs),
    /// Search a parameter range for self-orthogonal codes
    Search(SearchArgs),
    /// Replay committed cases and compare against golden reports
    Repro(ReproArgs),
}

/// A code given either by a description file or inline two-generator flags.
#[derive(Args)]
struct CodeSource {
    /// Description file (TOML)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Field spec p or p^gamma (inline description)
    #[arg(long)]
    field: Option<String>,
    /// Block length m (inline description)
    #[arg(long)]
    m: Option<usize>,
    /// First generator polynomial (inline description)
    #[arg(long)]
    g1: Option<String>,
    /// Second generator polynomial (inline description)
    #[arg(long)]
    g2: Option<String>,
    /// First multiplier polynomial (inline description)
    #[arg(long)]
    v1: Option<String>,
    /// Second multiplier polynomial (inline description)
    #[arg(long)]
    v2: Option<String>,
}

impl CodeSource {
    fn description(&self) -> Result<CodeDescription, CliError> {
        let inline_flags = [
            self.field.is_some(),
            self.m.is_some(),
            self.g1.is_some(),
            self.g2.is_some(),
            self.v1.is_some(),
            self.v2.is_some(),
        ];
        let any_inline = inline_flags.iter().any(|&b| b);
        if let Some(path) = &self.input {
            if any_inline {
                return Err(CliError::Config(
                    "give --input or the inline flags (--field, --m, --g1, --g2, --v1, --v2), not both".into(),
                ));
            }
            return config::load_toml(path);
        }
        if !inline_flags.iter().all(|&b| b) {
            return Err(CliError::Config(
                "an inline description needs all of --field, --m, --g1, --g2, --v1, --v2".into(),
            ));
        }
        let ctx = parse_field_spec(self.field.as_deref().expect("checked"))?;
        Ok(CodeDescription {
            q: ctx.q(),
            gamma: ctx.gamma(),
            m: self.m.expect("checked"),
            layout: config::Layout::Block,
            generators: Vec::new(),
            two_generator: Some(TwoGeneratorSpec {
                g1: self.g1.clone().expect("checked"),
                g2: self.g2.clone().expect("checked"),
                v1: self.v1.clone().expect("checked"),
                v2: self.v2.clone().expect("checked"),
            }),
        })
    }
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Inner product kind E|H|S; omit to test all applicable kinds
    #[arg(long)]
    kind: Option<String>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DualArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Inner product kind E|H|S
    #[arg(long)]
    kind: String,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Weight kind: hamming (default) or symplectic
    #[arg(long, default_value = "hamming")]
    weight: String,
    /// Enumeration budget in codewords
    #[arg(long)]
    budget: Option<u64>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StabilizerArgs {
    #[command(flatten)]
    source: CodeSource,
    /// Inner product kind E|H|S
    #[arg(long)]
    kind: String,
    /// Enumeration budget in codewords
    #[arg(long)]
    budget: Option<u64>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SyncArgs {
    /// Synchronizable-code description file (TOML)
    #[arg(long)]
    input: PathBuf,
    /// Enumeration budget for the component distances
    #[arg(long)]
    budget: Option<u64>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Search description file (TOML)
    #[arg(long)]
    input: PathBuf,
    /// Seed override for sampled search
    #[arg(long)]
    seed: Option<u64>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReproArgs {
    /// Replay every committed case (the default when no --case is given)
    #[arg(long)]
    all: bool,
    /// Replay only the named case(s)
    #[arg(long)]
    case: Vec<String>,
    /// Rewrite the golden reports instead of comparing
    #[arg(long)]
    bless: bool,
    /// List the committed case ids
    #[arg(long)]
    list: bool,
    /// Repro directory holding cases/ and golden/ (default: committed)
    #[arg(long)]
    dir: Option<PathBuf>,
}

fn emit(text: String, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Check(args) => {
            let desc = args.source.description()?;
            let kind = args.kind.as_deref().map(parse_kind).transpose()?;
            let report = commands::check_report(&desc, kind)?;
            emit(report.render(), args.out.as_ref())
        }
        Command::Dual(args) => {
            let desc = args.source.description()?;
            let kind = parse_kind(&args.kind)?;
            let report = commands::dual_report(&desc, kind)?;
            emit(report.render(), args.out.as_ref())
        }
        Command::Distance(args) => {
            let desc = args.source.description()?;
            let weight = parse_weight(&args.weight)?;
            let report = commands::distance_report(&desc, weight, args.budget)?;
            emit(report.render(), args.out.as_ref())
        }
        Command::Stabilizer(args) => {
            let desc = args.source.description()?;
            let kind = parse_kind(&args.kind)?;
            let report = commands::stabilizer_report(&desc, kind, args.budget)?;
            emit(report.render(), args.out.as_ref())
        }
        Command::Sync(args) => {
            let desc: config::SyncDescription = config::load_toml(&args.input)?;
            let report = commands::sync_report(&desc, args.budget)?;
            emit(report.render(), args.out.as_ref())
        }
        Command::Search(args) => {
            let desc: config::SearchDescription = config::load_toml(&args.input)?;
            let report = commands::search_report(&desc, args.seed)?;
            emit(report.render(), args.out.as_ref())
        }
        Command::Repro(args) => {
            if args.all && !args.case.is_empty() {
                return Err(CliError::Config("give --all or --case, not both".into()));
            }
            let opts = repro::ReproOptions {
                dir: args.dir.clone().unwrap_or_else(repro::default_dir),
                cases: args.case,
                bless: args.bless,
                list: args.list,
            };
            let outcome = repro::run(&opts)?;
            print!("{}", outcome.stdout);
            if !outcome.failures.is_empty() {
                for failure in &outcome.failures {
                    eprintln!("{failure}");
                }
                return Err(CliError::Validation(format!(
                    "{} case(s) differ from their golden reports",
                    outcome.failures.len()
                )));
            }
            Ok(())
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version land here too; only real parse errors are
            // config errors (exit 4).
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let started = Instant::now();
    let result = run(cli);
    eprintln!("# timing: {} ms", started.elapsed().as_millis());
    if let Err(e) = result {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    }
}

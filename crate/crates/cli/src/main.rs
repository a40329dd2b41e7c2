use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use alexhodge::census::{census, CensusRowDocument};
use alexhodge::io::parse_spec;
use alexhodge::milnor::{milnor_dim, milnor_dim_bruteforce};
use alexhodge::report::{build_report, format_table, CheckStatus, InvariantReport};
use alexhodge::SpecError;
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_VALIDATION: u8 = 1;
const EXIT_IDENTITY: u8 = 2;
const EXIT_USAGE: u8 = 3;

/// Alexander polynomials and spectral pairs of hypersurface complements and
/// boundary manifolds.
#[derive(Parser, Debug)]
#[command(name = "alexhodge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the full invariant report for a hypersurface document.
    Compute {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the cross-checks only; exit 0 iff none fail.
    Verify { file: PathBuf },
    /// Enumerate weak combinatorial data of line arrangements.
    Census {
        #[arg(long)]
        lines: u32,
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        oracle: Oracle,
    },
}

#[derive(Subcommand, Debug)]
enum Oracle {
    /// Print `dim M(n,d)_m` by closed form and by enumeration.
    MilnorDim { n: u32, d: u32, m: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Structured,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Compute { file, format } => {
            let report = load_report(&file)?;
            match format {
                Format::Table => print!("{report}"),
                Format::Structured => println!("{}", report.to_json()),
            }
            check_outcome(&report)
        }
        Command::Verify { file } => {
            let report = load_report(&file)?;
            for c in &report.checks {
                let tag = match c.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skipped => "SKIP",
                };
                println!("{tag} {} {}", c.name, c.detail);
            }
            check_outcome(&report)
        }
        Command::Census {
            lines,
            max_rows,
            format,
        } => run_census(lines, max_rows, format),
        Command::Oracle {
            oracle: Oracle::MilnorDim { n, d, m },
        } => {
            let closed = milnor_dim(n, d, m);
            let brute = milnor_dim_bruteforce(n, d, m)
                .map_err(|e| Failure::new(EXIT_VALIDATION, e.to_string()))?;
            println!("{closed} {brute}");
            if closed == brute {
                Ok(())
            } else {
                Err(Failure::new(
                    EXIT_IDENTITY,
                    "closed form and enumeration disagree",
                ))
            }
        }
    }
}

fn load_report(file: &PathBuf) -> Result<InvariantReport, Failure> {
    let text = fs::read_to_string(file)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot read {}: {e}", file.display())))?;
    let parsed = parse_spec(&text).map_err(|e| match e {
        SpecError::Validation(v) => Failure::new(
            EXIT_VALIDATION,
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("\n"),
        ),
        other => Failure::new(EXIT_VALIDATION, other.to_string()),
    })?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    build_report(&parsed.spec).map_err(|e| Failure::new(EXIT_VALIDATION, e.to_string()))
}

fn check_outcome(report: &InvariantReport) -> Result<(), Failure> {
    let names = |it: &mut dyn Iterator<Item = &alexhodge::Check>| {
        it.map(|c| c.name).collect::<Vec<_>>().join(", ")
    };
    let identity = names(&mut report.identity_failures());
    if !identity.is_empty() {
        return Err(Failure::new(
            EXIT_IDENTITY,
            format!("identity check failed: {identity}"),
        ));
    }
    let input = names(&mut report.input_failures());
    if !input.is_empty() {
        return Err(Failure::new(
            EXIT_VALIDATION,
            format!("inconsistent input: {input}"),
        ));
    }
    Ok(())
}

fn run_census(d: u32, max_rows: Option<usize>, format: Format) -> Result<(), Failure> {
    if d < 2 {
        return Err(Failure::new(EXIT_USAGE, "--lines must be at least 2"));
    }
    let rows = census(d, max_rows).map_err(|e| Failure::new(EXIT_IDENTITY, e.to_string()))?;
    match format {
        Format::Structured => {
            let docs: Vec<CensusRowDocument> = rows.iter().map(CensusRowDocument::from).collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&docs).expect("census rows always serialize")
            );
        }
        Format::Table => {
            for r in &rows {
                let mults: Vec<String> = r.multiplicities.iter().map(u32::to_string).collect();
                print!("d = {}, multiplicities ({})", r.d, mults.join(","));
                print!(", mu = {}, delta_M = {}", r.mu, r.delta_m);
                if r.possibly_unrealizable {
                    print!(", possibly-unrealizable");
                }
                println!(", checks {}", if r.checks_passed { "pass" } else { "FAIL" });
                print!("{}", format_table(&r.table, "  "));
            }
        }
    }
    if rows.iter().all(|r| r.checks_passed) {
        Ok(())
    } else {
        Err(Failure::new(
            EXIT_IDENTITY,
            "census rows failed their checks",
        ))
    }
}

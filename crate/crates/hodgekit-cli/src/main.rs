//! `hodgekit`: period-domain combinatorics from the command line.
//!
//! Every command takes the weight and the Hodge numbers (either the full
//! sequence `h^{n,0},…,h^{0,n}` or its leading half), prints a text report or,
//! with `--format json`, one JSON object tagged `"schema": "hodgekit/1"`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 failed verification, 3 an oracle
//! guard was exceeded.

mod commands;

use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hodgekit::hodge::HodgeNumbers;
use hodgekit::HodgeError;

#[derive(Debug, Parser)]
#[command(name = "hodgekit", version, about = "Combinatorics of period domains and their Hodge triples")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Disable ANSI colors (also honored: the NO_COLOR environment variable).
    #[arg(long, global = true)]
    no_color: bool,
    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Weight and Hodge numbers of the polarized Hodge structure.
#[derive(Debug, Clone, Args)]
struct Domain {
    /// Weight n of the Hodge structure.
    weight: usize,
    /// Comma-separated Hodge numbers: the full sequence (n+1 values) or the
    /// leading half h^{n,0},…,h^{n−m,m}.
    #[arg(value_name = "HODGE")]
    hodge: String,
}

impl Domain {
    fn numbers(&self) -> hodgekit::Result<HodgeNumbers> {
        let values = parse_list(&self.hodge, "Hodge number")?;
        HodgeNumbers::parse_any(self.weight, &values)
    }
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> hodgekit::Result<Vec<T>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|_| HodgeError::InvalidInput(format!("'{s}' is not a valid {what}")))
        })
        .collect()
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Group type, real form, dimension and signature sequences.
    Describe(Domain),
    /// Basis vectors spanning each Hodge summand at the base point.
    BasePoint(Domain),
    /// Block decomposition of the graded pieces g^{-p,p}.
    Blocks {
        #[command(flatten)]
        domain: Domain,
        /// Only this level p (default: all levels).
        #[arg(long, allow_hyphen_values = true)]
        p: Option<i64>,
        /// Also draw the block grid.
        #[arg(long)]
        grid: bool,
    },
    /// Hodge triples of g^{-p,p} ⊕ g^{0,0} ⊕ g^{p,-p}.
    Triples {
        #[command(flatten)]
        domain: Domain,
        #[arg(long)]
        p: i64,
    },
    /// Hodge bracket of two standard triples, confirmed by matrix commutators.
    Bracket {
        #[command(flatten)]
        domain: Domain,
        /// First triple, e.g. H10 or Hc41.
        #[arg(long)]
        t1: String,
        /// Second triple.
        #[arg(long)]
        t2: String,
    },
    /// Abelian subspace of a Hodge path, or the grouping of an odd level.
    Abelian {
        #[command(flatten)]
        domain: Domain,
        /// Hodge sequence j_1,…,j_m.
        #[arg(long, conflicts_with = "p")]
        path: Option<String>,
        /// Even weight: columns of F_{m−1} given to the last A-block.
        #[arg(long, requires = "path")]
        a_cols: Option<usize>,
        /// Odd dimension: basis index c of the short root −e_c to include.
        #[arg(long, requires = "path")]
        y: Option<usize>,
        /// Group the blocks of g^{-p,p} (p odd) into commuting chains.
        #[arg(long)]
        p: Option<i64>,
    },
    /// Largest path-generated abelian subspace, with the exhaustive oracle.
    MaxAbelian {
        #[command(flatten)]
        domain: Domain,
        /// Fail (exit 3) instead of skipping when the oracle guard is exceeded.
        #[arg(long)]
        oracle: bool,
    },
    /// Run every consistency check over a sweep of Hodge numbers.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_weight: usize,
        #[arg(long, default_value_t = 2)]
        max_h: u32,
        /// Treat findings (known disagreements with printed results) as failures.
        #[arg(long)]
        strict: bool,
    },
}

/// A finished report and the exit status it implies.
pub struct Report {
    pub command: &'static str,
    pub text: String,
    pub json: serde_json::Value,
    pub status: u8,
}

fn run(cli: &Cli, color: bool) -> hodgekit::Result<Report> {
    match &cli.command {
        Command::Describe(d) => commands::describe(&d.numbers()?),
        Command::BasePoint(d) => commands::base_point(&d.numbers()?),
        Command::Blocks { domain, p, grid } => commands::blocks(&domain.numbers()?, *p, *grid, color),
        Command::Triples { domain, p } => commands::triples(&domain.numbers()?, *p),
        Command::Bracket { domain, t1, t2 } => commands::bracket(&domain.numbers()?, t1, t2),
        Command::Abelian {
            domain,
            path,
            a_cols,
            y,
            p,
        } => {
            let hn = domain.numbers()?;
            match (path, p) {
                (Some(path), _) => commands::abelian(&hn, &parse_list(path, "path entry")?, *a_cols, *y),
                (None, Some(p)) => commands::grouping(&hn, *p),
                (None, None) => Err(HodgeError::InvalidInput("abelian needs --path or --p".into())),
            }
        }
        Command::MaxAbelian { domain, oracle } => commands::max_abelian(&domain.numbers()?, *oracle),
        Command::Verify {
            max_weight,
            max_h,
            strict,
        } => Ok(commands::verify(*max_weight, *max_h, *strict, color)),
    }
}

fn exit_code(e: &HodgeError) -> u8 {
    match e {
        HodgeError::GuardExceeded { .. } => 3,
        _ => 1,
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let color = !cli.no_color
        && std::env::var_os("NO_COLOR").map_or(true, |v| v.is_empty())
        && cli.out.is_none()
        && cli.format == Format::Text
        && std::io::stdout().is_terminal();
    let (body, status) = match run(&cli, color) {
        Ok(report) => {
            let body = match cli.format {
                Format::Text => report.text,
                Format::Json => {
                    let v = serde_json::json!({
                        "schema": "hodgekit/1",
                        "command": report.command,
                        "result": report.json,
                    });
                    serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
                }
            };
            (body, report.status)
        }
        Err(e) => {
            let code = exit_code(&e);
            match cli.format {
                Format::Text => eprintln!("error: {e}"),
                Format::Json => {
                    let v = serde_json::json!({
                        "schema": "hodgekit/1",
                        "error": e.to_string(),
                        "exit_code": code,
                    });
                    eprintln!("{}", serde_json::to_string(&v).expect("values serialize"));
                }
            }
            return ExitCode::from(code);
        }
    };
    if let Err(e) = emit(&cli, &body) {
        eprintln!("error: cannot write the report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(status)
}

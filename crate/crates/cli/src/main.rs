use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use tamari::diagonal::Mode;
use tamari::equation::{a_series, b_series};
use tamari::verify::{Params, Suite};
use tamari::{Budget, Error, Grid};
use tamari_cli::expr::Expr;
use tamari_cli::tables::{build, Source, TableName, TableOptions};

const EXIT_IO: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(
    name = "tamari",
    version,
    about = "Tamari intervals, diagonal faces and their generating functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Maximum number of elements or intervals an enumeration may visit.
    #[arg(long, global = true, env = "TAMARI_BUDGET", default_value_t = tamari::DEFAULT_BUDGET)]
    budget: u64,
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// No progress lines on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceArg {
    Enum,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesName {
    A,
    B,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the tables.
    Table {
        /// a, b, internal, m-intervals, m-stats, refined-ell, refined-pq or face-dims
        #[arg(value_parser = parse_table)]
        name: TableName,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_m: Option<usize>,
        #[arg(long, value_enum, default_value_t = SourceArg::Enum)]
        source: SourceArg,
        /// refined-ell: one row per (n, ell), columns k.
        #[arg(long)]
        by_k: bool,
        /// Binomial transform in k (refined-ell --by-k, refined-pq).
        #[arg(long)]
        binomial: bool,
        /// refined-pq: synchronized intervals by des(s).
        #[arg(long)]
        synchronized: bool,
    },
    /// Run a verification suite; exit status 4 if a check fails.
    Verify {
        /// order-oracle, canopy, dyck, catalytic, polynomial, pde, telescoped,
        /// chu-vandermonde, euler, fusy-humbert, decompositions or internal-cross
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, value_parser = parse_mode)]
        mode: Option<Mode>,
    },
    /// Evaluate a(n,k), b(n,k), intervals(n), sync(n) or m-intervals(m,n).
    Eval {
        #[arg(required = true, num_args = 1..)]
        expr: Vec<String>,
    },
    /// Coefficients of A or B from the algebraic equation, rows n and columns k.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u32).range(1..=200))]
        order: u32,
    },
}

fn parse_table(s: &str) -> Result<TableName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    Mode::parse(s).ok_or_else(|| format!("unknown mode {s:?} (min-min, max-min, min-max, max-max)"))
}

enum Failure {
    Lib(Error),
    Io(io::Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn render(grid: &Grid, format: Format) -> String {
    match format {
        Format::Csv => grid.to_csv(),
        Format::Json => format!("{:#}\n", grid.to_json()),
    }
}

fn series_grid(name: SeriesName, order: usize) -> Result<Grid, Error> {
    let s = match name {
        SeriesName::A => a_series(order)?,
        SeriesName::B => b_series(order)?,
    };
    let mut grid = Grid::new("n\\k", (0..order).map(|k| k.to_string()).collect());
    if matches!(name, SeriesName::A) {
        grid = grid.with_sums(true, false);
    }
    for n in 1..=order {
        let ints = s
            .coeff(n)
            .to_integers()
            .ok_or_else(|| Error::InvalidArgument(format!("non-integral coefficient at t^{n}")))?;
        let mut cells: Vec<Option<BigInt>> = ints.into_iter().map(Some).collect();
        cells.resize(n, Some(BigInt::from(0)));
        grid.push_row(n, cells);
    }
    Ok(grid)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    let budget = Budget::new(g.budget)?;
    let threads = g.threads.max(1);
    let quiet = g.quiet;
    let mut progress = |line: &str| {
        if !quiet {
            eprintln!("{line}");
        }
    };
    let mut verify_failed = false;
    let output = match cli.command {
        Command::Table {
            name,
            max_n,
            max_m,
            source,
            by_k,
            binomial,
            synchronized,
        } => {
            let opts = TableOptions {
                max_n,
                max_m,
                source: match source {
                    SourceArg::Enum => Source::Enumeration,
                    SourceArg::Formula => Source::Formula,
                },
                by_k,
                binomial,
                synchronized,
                budget,
                threads,
            };
            render(&build(name, &opts, &mut progress)?, g.format)
        }
        Command::Verify { suite, size, mode } => {
            let params = Params {
                size,
                mode,
                budget,
                threads,
            };
            let report = suite.run(&params)?;
            verify_failed = !report.passed;
            match g.format {
                Format::Json => format!("{:#}\n", report.to_json()),
                Format::Csv => {
                    let mut text = String::new();
                    for c in &report.checks {
                        let status = if c.passed { "PASS" } else { "FAIL" };
                        text.push_str(&format!("{status} {}", c.name));
                        if !c.passed {
                            text.push_str(&format!(": {}", c.detail));
                        }
                        text.push('\n');
                    }
                    text.push_str(&format!(
                        "{} {}\n",
                        suite,
                        if report.passed { "passed" } else { "FAILED" }
                    ));
                    text
                }
            }
        }
        Command::Eval { expr } => {
            let e = Expr::parse(&expr.join(" ")).unwrap_or_else(|err| {
                Cli::command()
                    .find_subcommand_mut("eval")
                    .expect("eval subcommand")
                    .error(clap::error::ErrorKind::ValueValidation, err)
                    .exit()
            });
            let value = e.eval()?;
            match g.format {
                Format::Csv => format!("{value}\n"),
                Format::Json => format!("{}\n", json!({"expr": e.to_string(), "value": value.to_string()})),
            }
        }
        Command::Series { name, order } => render(&series_grid(name, order as usize)?, g.format),
    };
    match &g.out {
        Some(path) => fs::write(path, output)?,
        None => io::stdout().lock().write_all(output.as_bytes())?,
    }
    if verify_failed {
        Err(Failure::Verify)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Io(e)) => {
            eprintln!("tamari: {e}");
            ExitCode::from(EXIT_IO)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("tamari: {e}");
            let code = match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                Error::Parse { .. } | Error::InvalidArgument(_) | Error::NonPositive(_) => EXIT_USAGE,
                _ => EXIT_IO,
            };
            ExitCode::from(code)
        }
    }
}

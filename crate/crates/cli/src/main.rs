use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jcoef::hilbert::TableKind;
use jcoef::{FitConfig, MonomialIdeal, PowerCache};
use jcoef_cli::commands::{self, CommandResult, Failure, TableFormat, EXIT_INPUT};
use jcoef_cli::idealfile;

/// Generalized Hilbert coefficients and first coefficient ideals of
/// monomial ideals.
///
/// Exit status: 0 success or true, 1 input error, 2 unstable or
/// inconclusive computation, 3 false.
#[derive(Debug, Parser)]
#[command(name = "jcoef", version)]
struct Cli {
    /// Extra rows and columns checked beyond a fitted window
    #[arg(long, global = true, default_value_t = 2)]
    margin: usize,
    /// Largest diagonal origin tried before giving up
    #[arg(long, global = true, default_value_t = 12)]
    max_origin: usize,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Output format; csv applies to `table` only
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for `selfcheck`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print power-cache statistics to stderr when done
    #[arg(long, global = true)]
    cache_stats: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    H10,
    H11,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generalized Hilbert coefficients, multiplicity sequence and analytic spread
    Coeffs { file: PathBuf },
    /// Bigraded Hilbert function on the grid [0, imax] x [0, jmax]
    Table {
        file: PathBuf,
        #[arg(long, default_value_t = 5)]
        imax: usize,
        #[arg(long, default_value_t = 5)]
        jmax: usize,
        #[arg(long, value_enum, default_value_t = Kind::H11)]
        kind: Kind,
    },
    /// First coefficient ideal, searched up to a degree bound
    Fci {
        file: PathBuf,
        /// Degree bound for candidates (default: largest generator degree + number of variables)
        #[arg(long)]
        dbound: Option<u32>,
    },
    /// Whether J lies in the first coefficient ideal of I
    Contains { file_i: PathBuf, file_j: PathBuf },
    /// Compare j0 and j1 of I and J after localizing
    Compare {
        file_i: PathBuf,
        file_j: PathBuf,
        /// Compare at every monomial prime containing I, not only the maximal ideal
        #[arg(long)]
        localize: bool,
    },
    /// Whether J is a reduction of I
    IsReduction {
        file_j: PathBuf,
        file_i: PathBuf,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// Localize at the monomial prime generated by the given variables
    Localize {
        file: PathBuf,
        /// Variables of the prime, comma or space separated
        #[arg(long)]
        prime: String,
    },
    /// Randomized internal consistency checks
    Selfcheck {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

fn load(path: &Path) -> Result<MonomialIdeal, Failure> {
    let parsed = idealfile::load(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.ideal)
}

fn json_only(format: Option<Format>, command: &str) -> Result<(), Failure> {
    match format {
        Some(Format::Csv) => Err(Failure::Input(format!("`{command}` has no csv output"))),
        _ => Ok(()),
    }
}

fn run(cli: &Cli, cfg: &FitConfig) -> CommandResult {
    match &cli.command {
        Command::Coeffs { file } => {
            json_only(cli.format, "coeffs")?;
            commands::coeffs(&load(file)?, cfg)
        }
        Command::Table { file, imax, jmax, kind } => {
            let kind = match kind {
                Kind::H10 => TableKind::H10,
                Kind::H11 => TableKind::H11,
            };
            let format = match cli.format {
                Some(Format::Json) => TableFormat::Json,
                _ => TableFormat::Csv,
            };
            commands::table(&load(file)?, kind, *imax, *jmax, format, cfg)
        }
        Command::Fci { file, dbound } => {
            json_only(cli.format, "fci")?;
            commands::fci(&load(file)?, *dbound, cfg)
        }
        Command::Contains { file_i, file_j } => {
            json_only(cli.format, "contains")?;
            commands::contains(&load(file_i)?, &load(file_j)?, cfg)
        }
        Command::Compare { file_i, file_j, localize } => {
            json_only(cli.format, "compare")?;
            commands::compare(&load(file_i)?, &load(file_j)?, *localize, cfg)
        }
        Command::IsReduction { file_j, file_i, nmax } => {
            json_only(cli.format, "is-reduction")?;
            commands::reduction(&load(file_j)?, &load(file_i)?, *nmax)
        }
        Command::Localize { file, prime } => {
            json_only(cli.format, "localize")?;
            commands::localize_at(&load(file)?, prime)
        }
        Command::Selfcheck { count } => {
            json_only(cli.format, "selfcheck")?;
            commands::selfcheck(cli.seed, *count, cfg)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            e.print().ok();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_INPUT);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool is configured once");
    }
    let cfg = FitConfig {
        margin: cli.margin,
        max_origin: cli.max_origin,
        parallel: cli.jobs != Some(1),
    };
    let code = match run(&cli, &cfg) {
        Ok(out) => {
            print!("{}", out.stdout);
            std::io::stdout().flush().ok();
            for note in &out.stderr {
                eprintln!("{note}");
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    if cli.cache_stats {
        let stats = PowerCache::global().stats();
        eprintln!("{}", serde_json::to_string(&stats).expect("stats serialize"));
    }
    ExitCode::from(code)
}

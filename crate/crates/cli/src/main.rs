use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gdterwilliger::oracle::DEFAULT_VERTEX_CAP;
use gdterwilliger::GdParams;
use gdterwilliger_cli::analysis::{self, DEFAULT_MAX_DIM};
use gdterwilliger_cli::check::{self, VerifyOptions};
use gdterwilliger_cli::sweep::{self, Grid, SweepOptions};
use gdterwilliger_cli::{dump, CliError, CliResult, Format};

#[derive(Parser)]
#[command(name = "gdterwilliger", version, about = "Terwilliger algebras of products of group divisible schemes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form structure of one parameter choice.
    Analyze {
        /// Factors as `lxm`, comma separated, e.g. `2x3,3x3`.
        #[arg(long)]
        params: String,
        /// 0 for the rationals, otherwise a prime.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u64,
        /// Include wall-clock timing (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the closed forms against explicit matrices.
    Verify {
        #[arg(long)]
        params: String,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Product pairs to check (all pairs if there are no more).
        #[arg(long, default_value_t = 10_000)]
        pairs: usize,
        /// Skip the quartic triple-regularity count above this many vertices.
        #[arg(long, default_value_t = 64)]
        count_limit: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: VerifyFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every cell of a grid file `{"params": [...], "chars": [...]}`.
    Sweep {
        #[arg(long)]
        grid: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Cell cache; defaults to $GDTERWILLIGER_CACHE_DIR, then
        /// `.gdterwilliger-cache` beside the output.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: u64,
    },
    /// Write adjacency and dual idempotent matrices as CSV.
    Dump {
        #[arg(long)]
        params: String,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: usize,
        /// Also write every basis element.
        #[arg(long)]
        basis: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(format!("writing {}", path.display()), e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io("writing stdout", e))
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Analyze {
            params,
            characteristic,
            format,
            max_dim,
            timing,
            out,
        } => {
            let params = GdParams::parse(&params, characteristic)?;
            let report = analysis::analyze(&params, max_dim, timing)?;
            emit(out.as_deref(), &analysis::render(&report, format))
        }
        Command::Verify {
            params,
            characteristic,
            max_vertices,
            seed,
            pairs,
            count_limit,
            format,
            out,
        } => {
            let params = GdParams::parse(&params, characteristic)?;
            let opts = VerifyOptions {
                max_vertices,
                seed,
                pairs,
                count_limit,
            };
            let report = check::run(&params, &opts)?;
            let text = match format {
                VerifyFormat::Text => report.to_text(),
                VerifyFormat::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
            };
            emit(out.as_deref(), &text)?;
            let failed: Vec<&str> = report.failures().iter().map(|c| c.name.as_str()).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Verification(failed.join(", ")))
            }
        }
        Command::Sweep {
            grid,
            out,
            format,
            jobs,
            cache_dir,
            no_cache,
            max_dim,
        } => {
            let grid = Grid::load(&grid)?;
            sweep::check_output_path(&out)?;
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let cache_dir = (!no_cache).then(|| sweep::resolve_cache_dir(cache_dir, &out));
            let opts = SweepOptions {
                jobs,
                max_dim,
                cache_dir,
            };
            let (reports, summary) = sweep::run(&grid, &opts)?;
            emit(Some(&out), &sweep::render(&reports, format))?;
            eprintln!(
                "{} cells: {} computed, {} from cache",
                summary.cells, summary.computed, summary.cached
            );
            Ok(())
        }
        Command::Dump {
            params,
            characteristic,
            max_vertices,
            basis,
            out,
        } => {
            let params = GdParams::parse(&params, characteristic)?;
            emit(out.as_deref(), &dump::dump(&params, max_vertices, basis)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use traceconst::cauchy::DEFAULT_QUADRATURE;
use traceconst::chords::DEFAULT_S_GRID;
use traceconst::constants::DEFAULT_A_GRID;

mod commands;
mod config;
mod error;
mod shapes;
mod svg;
mod table;

use config::RunConfig;
use error::CliError;
use table::Format;

/// Sharp trace-inequality constants of planar convex bodies.
#[derive(Parser, Debug)]
#[command(name = "traceconst", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Directory for CSV/JSON tables and SVG plots.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    /// Arc-split grid size of the outer optimization.
    #[arg(long, global = true, default_value_t = DEFAULT_A_GRID)]
    a_grid: usize,
    /// Boundary-position grid size of the inner minimization.
    #[arg(long, global = true, default_value_t = DEFAULT_S_GRID)]
    s_grid: usize,
    /// Quadrature points on the circle of directions.
    #[arg(long, global = true, default_value_t = DEFAULT_QUADRATURE)]
    quad: usize,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Both constants of one body, against the disk lower bounds.
    #[command(group(ArgGroup::new("body").required(true).args(["shape", "input"])))]
    Constants {
        /// disk, square, triangle, stadium:R:d or regular:k
        #[arg(long)]
        shape: Option<String>,
        /// Polygon file: "x y" lines or a JSON array of pairs.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Mean-value constant of stadiums over d/R in [0, 2].
    StadiumSweep,
    /// Perimeter via crossings and projections, and the convexity gap.
    CauchyCheck {
        /// Polygon files; defaults to built-in convex and nonconvex examples.
        #[arg(long)]
        input: Vec<PathBuf>,
    },
    /// Lower-bound checks on seeded random convex bodies.
    RandomBodies {
        #[arg(long, default_value_t = 200)]
        count: usize,
    },
    /// Ball constant in dimensions 2..=dim, in both closed forms.
    BallConstant {
        #[arg(long, default_value_t = 10)]
        dim: u32,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    if let Some(n) = config::thread_cap()? {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(CliError::input)?;
    }
    let cfg = RunConfig {
        output_dir: cli.out,
        a_grid: cli.a_grid,
        s_grid: cli.s_grid,
        quadrature_points: cli.quad,
        seed: cli.seed,
        format: cli.format,
    };
    cfg.validate()?;
    match cli.command {
        Command::Constants { shape, input } => commands::constants(&cfg, shape.as_deref(), input.as_deref()),
        Command::StadiumSweep => commands::stadium_sweep(&cfg),
        Command::CauchyCheck { input } => commands::cauchy_check(&cfg, &input),
        Command::RandomBodies { count } => commands::random_bodies(&cfg, count),
        Command::BallConstant { dim } => commands::ball_constant(&cfg, dim),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("traceconst: {err}");
            err.exit_code()
        }
    }
}

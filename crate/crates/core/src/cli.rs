//! Command-line surface: `ops`, `run`, `atlas`, `random-demo`.
//!
//! Exit status 0 on success, 1 on usage/validation/parse errors, 2 on
//! resource errors (atlas width over the ceiling). Output is byte-identical
//! across invocations unless `--timestamps` is given.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::atlas;
use crate::digitspace::DigitString;
use crate::dynamics;
use crate::error::{Error, Result};
use crate::operators::{parse_operator_spec, OperatorSpec};
use crate::randomops::{self, WalkMode};
use crate::render;

#[derive(Parser)]
#[command(
    name = "digit-atlas",
    version,
    about = "Iterated digit-string operators: trajectories, exhaustive atlases, random-walk demos"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List operator kinds and their parameter schemas
    Ops(OpsArgs),
    /// Iterate an operator from a seed state and print the trajectory
    Run(RunArgs),
    /// Exhaustively analyze an operator over all 10^width states
    Atlas(AtlasArgs),
    /// Random-successor demos: fixed pseudorandom function vs fresh draws
    RandomDemo(RandomDemoArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct FormatArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Stamp the output with the generation time (off by default so output
    /// is byte-identical across runs)
    #[arg(long)]
    timestamps: bool,
}

impl FormatArgs {
    fn timestamp(&self) -> Option<String> {
        self.timestamps.then(|| chrono::Utc::now().to_rfc3339())
    }
}

#[derive(Args)]
struct OpArgs {
    /// Inline operator spec, a single JSON object
    #[arg(long, value_name = "SPEC")]
    op: Option<String>,
    /// Read the operator spec from a file; inline --op wins if both are given
    #[arg(long, value_name = "PATH")]
    op_file: Option<PathBuf>,
}

impl OpArgs {
    fn load(&self) -> Result<OperatorSpec> {
        let text = match (&self.op, &self.op_file) {
            (Some(inline), _) => inline.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)?,
            (None, None) => {
                return Err(Error::Validation(
                    "an operator spec is required: pass --op or --op-file".into(),
                ))
            }
        };
        parse_operator_spec(text.trim())
    }
}

#[derive(Args)]
struct OpsArgs {
    #[command(flatten)]
    fmt: FormatArgs,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    op: OpArgs,
    /// Seed state as a decimal integer, zero-padded to the operator width
    #[arg(long)]
    seed: u64,
    /// Maximum operator applications (default: 10^width + 1, which always
    /// suffices)
    #[arg(long)]
    max_steps: Option<u64>,
    #[command(flatten)]
    fmt: FormatArgs,
}

#[derive(Args)]
struct AtlasArgs {
    #[command(flatten)]
    op: OpArgs,
    /// Worker threads for table construction (default: machine parallelism)
    #[arg(long)]
    threads: Option<usize>,
    /// Raise the atlas width ceiling (default 7, hard cap 9)
    #[arg(long)]
    width_ceiling: Option<u8>,
    /// Write the condensed cycle-structure DOT digraph to this path
    #[arg(long, value_name = "PATH")]
    dot: Option<PathBuf>,
    /// Write the full state-graph DOT digraph (width <= 3) to this path
    #[arg(long, value_name = "PATH")]
    dot_full: Option<PathBuf>,
    #[command(flatten)]
    fmt: FormatArgs,
}

#[derive(Args)]
struct RandomDemoArgs {
    /// fixed: iterate a seeded pseudorandom operator; fresh: independent
    /// draws each step
    #[arg(long, value_enum)]
    mode: DemoMode,
    /// State-space width
    #[arg(long)]
    width: u8,
    /// Base seed; walk i uses seed base+i
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of walks
    #[arg(long, default_value_t = 1)]
    walks: u64,
    /// Per-walk step budget (default: 10^width + 1)
    #[arg(long)]
    max_steps: Option<u64>,
    #[command(flatten)]
    fmt: FormatArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoMode {
    Fixed,
    Fresh,
}

/// Parses and runs one invocation, printing to stdout/stderr and returning
/// the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(output) => {
            print!("{output}");
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::WidthTooLarge { .. } => 2,
                _ => 1,
            }
        }
    }
}

fn execute(cli: Cli) -> Result<String> {
    match cli.command {
        Cmd::Ops(args) => {
            let ts = args.fmt.timestamp();
            Ok(match args.fmt.format {
                Format::Text => render::ops_text(),
                Format::Json => render::ops_json(ts.as_deref()),
                Format::Csv => render::ops_csv(ts.as_deref()),
            })
        }
        Cmd::Run(args) => {
            let spec = args.op.load()?;
            let seed = DigitString::from_integer(args.seed, spec.width()).map_err(|e| {
                Error::Validation(format!("--seed: seed exceeds width: {e}"))
            })?;
            let traj = dynamics::iterate(&spec, seed, args.max_steps)?;
            let ts = args.fmt.timestamp();
            Ok(match args.fmt.format {
                Format::Text => match ts {
                    Some(ts) => format!("generated_at={ts}\n{}", render::trajectory_text(&traj)),
                    None => render::trajectory_text(&traj),
                },
                Format::Json => render::trajectory_json(&traj, ts.as_deref()),
                Format::Csv => render::trajectory_csv(&traj, ts.as_deref()),
            })
        }
        Cmd::Atlas(args) => {
            let spec = args.op.load()?;
            let ceiling = args.width_ceiling.unwrap_or(atlas::DEFAULT_WIDTH_CEILING);
            let table = match args.threads {
                Some(n) => {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(n.max(1))
                        .build()
                        .map_err(|e| Error::Validation(format!("--threads: {e}")))?;
                    pool.install(|| atlas::build_successors_with_ceiling(&spec, ceiling))?
                }
                None => atlas::build_successors_with_ceiling(&spec, ceiling)?,
            };
            let report = atlas::analyze(&table, &spec);
            if let Some(path) = &args.dot {
                std::fs::write(path, atlas::to_dot_condensed(&report))?;
            }
            if let Some(path) = &args.dot_full {
                std::fs::write(path, atlas::to_dot_full(&table)?)?;
            }
            let ts = args.fmt.timestamp();
            Ok(match args.fmt.format {
                Format::Text => match ts {
                    Some(ts) => format!("generated_at={ts}\n{}", render::atlas_text(&report)),
                    None => render::atlas_text(&report),
                },
                Format::Json => render::atlas_json(&report, ts.as_deref()),
                Format::Csv => render::atlas_csv(&report, ts.as_deref()),
            })
        }
        Cmd::RandomDemo(args) => {
            let mode = match args.mode {
                DemoMode::Fixed => WalkMode::Fixed,
                DemoMode::Fresh => WalkMode::Fresh,
            };
            let sweep = randomops::run_sweep(mode, args.seed, args.width, args.walks, args.max_steps)?;
            let ts = args.fmt.timestamp();
            Ok(match args.fmt.format {
                Format::Text => match ts {
                    Some(ts) => format!("generated_at={ts}\n{}", render::walks_text(&sweep)),
                    None => render::walks_text(&sweep),
                },
                Format::Json => render::walks_json(&sweep, ts.as_deref()),
                Format::Csv => render::walks_csv(&sweep, ts.as_deref()),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> std::result::Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("digit-atlas").chain(args.iter().copied()))
    }

    #[test]
    fn run_requires_a_seed() {
        assert!(parse(&["run", "--op", "{}"]).is_err());
        assert!(parse(&["run", "--op", "{}", "--seed", "5"]).is_ok());
    }

    #[test]
    fn atlas_rejects_a_seed_flag() {
        assert!(parse(&["atlas", "--op", "{}", "--seed", "5"]).is_err());
        assert!(parse(&["atlas", "--op", "{}", "--threads", "2"]).is_ok());
    }

    #[test]
    fn inline_spec_wins_over_file() {
        let args = OpArgs {
            op: Some(r#"{"kind":"kaprekar","width":3}"#.into()),
            op_file: Some(PathBuf::from("/nonexistent/op.json")),
        };
        let spec = args.load().unwrap();
        assert_eq!(spec.width(), 3);
    }

    #[test]
    fn missing_spec_is_a_validation_error() {
        let args = OpArgs { op: None, op_file: None };
        assert!(matches!(args.load(), Err(Error::Validation(_))));
    }

    #[test]
    fn execute_run_produces_the_chain() {
        let cli = parse(&[
            "run",
            "--op",
            r#"{"kind":"reverse_diff","width":3}"#,
            "--seed",
            "125",
        ])
        .unwrap();
        let out = execute(cli).unwrap();
        assert!(out.starts_with("125\n396\n297\n495\n099\n891\n693\ncycle re-enters at 297\n"));
        assert!(out.ends_with("preperiod=2 period=5 outcome=reached_cycle\n"));
    }

    #[test]
    fn execute_reports_seed_out_of_range() {
        let cli = parse(&[
            "run",
            "--op",
            r#"{"kind":"kaprekar","width":4}"#,
            "--seed",
            "99999",
        ])
        .unwrap();
        let err = execute(cli).unwrap_err();
        assert!(err.to_string().contains("seed exceeds width"), "got: {err}");
    }
}

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use proximity::benchmark::{default_scene, Algorithm, Scene};
use proximity::geometry::Axis;

use crate::commands::{
    cmd_bench, cmd_dist, cmd_plot, cmd_verify, summary_lines, BenchRequest, DistRequest,
};
use crate::error::CliError;
use crate::scene_file::{export_default_scene, load_scene};

#[derive(Debug, Parser)]
#[command(
    name = "proximity",
    version,
    about = "Triangle distance queries and benchmark"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AxisArg {
    X,
    Y,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Axis {
        match a {
            AxisArg::X => Axis::X,
            AxisArg::Y => Axis::Y,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance between two scene objects, as JSON.
    Dist {
        /// Scene file; the built-in scene when omitted.
        #[arg(long)]
        scene: Option<PathBuf>,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// dyop, gjk, lincanny or oracle.
        #[arg(long)]
        algo: Algorithm,
        /// Approach axis; defaults to the scene's.
        #[arg(long, value_enum)]
        axis: Option<AxisArg>,
        /// Measure the poses as stored instead of placing `a` at the scene
        /// separation.
        #[arg(long)]
        no_place: bool,
    },
    /// Times every ordered pair of the scene with each algorithm.
    Bench {
        #[arg(long)]
        scene: Option<PathBuf>,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        repeats: u64,
        #[arg(long, value_delimiter = ',', default_value = "dyop,gjk,lincanny")]
        algos: Vec<Algorithm>,
        #[arg(long)]
        out_csv: PathBuf,
        #[arg(long)]
        out_json: PathBuf,
    },
    /// Checks DyOP against the exact distance on seeded random pairs.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Writes speed.csv and percentage.csv from a bench JSON report.
    Plot {
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Prints the built-in scene as a scene file.
    DefaultScene,
}

fn scene_or_default(path: Option<PathBuf>) -> Result<Scene, CliError> {
    match path {
        Some(p) => load_scene(&p),
        None => Ok(default_scene()),
    }
}

fn print_json<T: serde::Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("reports always serialize");
    println!("{text}");
}

fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Dist {
            scene,
            a,
            b,
            algo,
            axis,
            no_place,
        } => {
            let report = cmd_dist(DistRequest {
                scene: scene_or_default(scene)?,
                a,
                b,
                algorithm: algo,
                axis: axis.map(Axis::from),
                place: !no_place,
            })?;
            print_json(&report);
        }
        Command::Bench {
            scene,
            repeats,
            algos,
            out_csv,
            out_json,
        } => {
            let req = BenchRequest {
                scene: scene_or_default(scene)?,
                repeats: repeats as usize,
                algorithms: algos,
                out_csv,
                out_json,
            };
            let report = cmd_bench(&req)?;
            let mut out = std::io::stdout().lock();
            for line in summary_lines(&report) {
                let _ = writeln!(out, "{line}");
            }
            if report.mismatches > 0 {
                return Err(CliError::Mismatch(report.mismatches));
            }
        }
        Command::Verify { trials, seed, tol } => {
            let report = cmd_verify(trials as usize, seed, tol)?;
            print_json(&report);
            if report.conservative_violations > 0 {
                return Err(CliError::ConservativeViolation(
                    report.conservative_violations,
                ));
            }
        }
        Command::Plot { report, out } => {
            let files = cmd_plot(&report, &out)?;
            eprintln!(
                "wrote {} and {}",
                files.speed.display(),
                files.percentage.display()
            );
        }
        Command::DefaultScene => println!("{}", export_default_scene()),
    }
    Ok(())
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pcia::benchmarks::Benchmark;
use pcia::constrained::PROBLEM_NAMES;
use pcia::{lookup_problem, BenchmarkDescriptor, SearchSpace};
use pcia_harness::{
    run_experiment, ExperimentConfig, HarnessError, ResolvedProblem, TransformConfig,
};

#[derive(Parser)]
#[command(
    name = "pcia",
    version,
    about = "Run the path construction imitation optimizer on benchmark problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List registered problems with dimension, bounds and optimum.
    List,
    /// Run repeated seeded optimizations and report avg/std.
    Run(Box<RunArgs>),
    /// Check a config file and its referenced files without running.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    problem: Option<String>,
    #[arg(long)]
    repeats: Option<usize>,
    /// Base seed; repeat r uses seed + r.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    iters: Option<usize>,
    #[arg(long)]
    pop: Option<usize>,
    /// Dimension of a scalable F problem.
    #[arg(long)]
    dim: Option<usize>,
    /// Report CSV, appended to.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-run CSV.
    #[arg(long)]
    runs: Option<PathBuf>,
    #[arg(long)]
    trace_dir: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    rotation: Option<PathBuf>,
    #[arg(long)]
    shift: Option<PathBuf>,
    #[arg(long)]
    bias: Option<f64>,
    #[arg(long)]
    pc: Option<f64>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
    alpha: Option<u32>,
}

impl RunArgs {
    fn into_config(self) -> Result<ExperimentConfig, HarnessError> {
        let mut c = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => ExperimentConfig::default(),
        };
        if let Some(v) = self.problem {
            c.problem = v;
        }
        if let Some(v) = self.repeats {
            c.repeats = v;
        }
        if let Some(v) = self.seed {
            c.base_seed = v;
        }
        if let Some(v) = self.iters {
            c.pcia.max_iters = Some(v);
        }
        if let Some(v) = self.pop {
            c.pcia.pop_size = Some(v);
        }
        if let Some(v) = self.dim {
            c.dim = Some(v);
        }
        if let Some(v) = self.out {
            c.output.report = Some(v);
        }
        if let Some(v) = self.runs {
            c.output.runs = Some(v);
        }
        if let Some(v) = self.trace_dir {
            c.output.trace_dir = Some(v);
        }
        if self.rotation.is_some() || self.shift.is_some() || self.bias.is_some() {
            let t = c.transform.get_or_insert_with(TransformConfig::default);
            if let Some(v) = self.rotation {
                t.rotation = Some(v);
            }
            if let Some(v) = self.shift {
                t.shift = Some(v);
            }
            if let Some(v) = self.bias {
                t.bias = v;
            }
        }
        if let Some(v) = self.pc {
            c.penalty.pc = Some(v);
        }
        if let Some(v) = self.alpha {
            c.penalty.alpha = Some(v);
        }
        Ok(c)
    }
}

fn bounds(space: &SearchSpace) -> String {
    let (lo, hi) = (space.lower(), space.upper());
    if lo.iter().all(|&v| v == lo[0]) && hi.iter().all(|&v| v == hi[0]) {
        format!("[{}, {}]", lo[0], hi[0])
    } else {
        "per-coordinate".to_string()
    }
}

fn list() {
    println!(
        "{:<5} {:>4}  {:<18} {:>14}  sense",
        "name", "dim", "bounds", "optimum"
    );
    for b in Benchmark::ALL {
        let d = BenchmarkDescriptor::new(b);
        println!(
            "{:<5} {:>4}  {:<18} {:>14}  min",
            d.name(),
            d.dim(),
            bounds(d.space()),
            d.f_min()
        );
    }
    for name in PROBLEM_NAMES {
        let p = lookup_problem(name).expect("registered problem");
        let sense = match p.sense() {
            pcia::Sense::Minimize => "min",
            pcia::Sense::Maximize => "max",
        };
        println!(
            "{:<5} {:>4}  {:<18} {:>14.6}  {sense}",
            name,
            p.dim(),
            bounds(p.space()),
            p.best_known()
        );
    }
}

fn run(args: RunArgs) -> Result<(), HarnessError> {
    let config = args.into_config()?;
    let experiment = run_experiment(&config)?;
    println!("{}", experiment.report.summary());
    Ok(())
}

fn validate(path: PathBuf) -> Result<(), HarnessError> {
    let config = ExperimentConfig::load(&path)?;
    config.validate()?;
    let problem = ResolvedProblem::resolve(&config)?;
    println!(
        "{}: ok ({}, dim {}, {} repeats)",
        path.display(),
        problem.name(),
        problem.space().dim(),
        config.repeats
    );
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::List => {
            list();
            Ok(())
        }
        Command::Run(args) => run(*args),
        Command::Validate { config } => validate(config),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

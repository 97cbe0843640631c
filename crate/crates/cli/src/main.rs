//! Command-line driver. Exit codes: 0 success, 2 configuration error, 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bslab_cli::{
    load_config, run_figure1, run_qf_sweep, write_outputs, ExperimentConfig, Mode,
    DEFAULT_VIOLATION_TOL,
};

#[derive(Parser)]
#[command(
    name = "bslab",
    about = "Superadditivity scans and quasi-factorization sweeps for the BS-entropy",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Superadditivity scan: gap of the joint BS-entropy against a product reference.
    Figure1(Figure1Args),
    /// Quasi-factorization sweep: all three bounds on random state pairs.
    QfSweep(SweepArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Number of samples.
    #[arg(long, default_value_t = 10_000)]
    n: usize,
    /// Master seed; sample i uses RNG stream i.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Dimension of factor A.
    #[arg(long, default_value_t = 2)]
    dim_a: usize,
    /// Dimension of factor B.
    #[arg(long, default_value_t = 2)]
    dim_b: usize,
    /// Negative-gap threshold counted as a violation.
    #[arg(long, default_value_t = DEFAULT_VIOLATION_TOL)]
    tol: f64,
    /// Load the full configuration from a JSON file instead of flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args)]
struct Figure1Args {
    #[command(flatten)]
    common: CommonArgs,
    /// Joint-state recipe: general (fully random) or perturbed (product + epsilon).
    #[arg(long, default_value = "perturbed")]
    mode: String,
    /// Perturbation strength for perturbed mode.
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    /// CSV output path.
    #[arg(long, default_value = "figure1.csv")]
    out_csv: PathBuf,
    /// JSON report output path.
    #[arg(long, default_value = "figure1.json")]
    out_json: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// CSV output path.
    #[arg(long, default_value = "qf_sweep.csv")]
    out_csv: PathBuf,
    /// JSON report output path.
    #[arg(long, default_value = "qf_sweep.json")]
    out_json: PathBuf,
}

const EXIT_CONFIG: u8 = 2;
const EXIT_IO: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match build_config(&cli.command) {
        Ok(config) => config,
        Err(message) => {
            eprintln!("configuration error: {message}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    let output = match &cli.command {
        Command::Figure1(_) => run_figure1(&config),
        Command::QfSweep(_) => run_qf_sweep(&config),
    };
    let output = match output {
        Ok(output) => output,
        Err(message) => {
            eprintln!("configuration error: {message}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    if let Err(err) = write_outputs(&output, &config) {
        eprintln!("i/o error: {err}");
        return ExitCode::from(EXIT_IO);
    }
    let s = &output.report.summary;
    println!(
        "mode {}: {} samples, {} skipped, fraction_violations {:.4}, mean_gap {:.6e}",
        config.mode, s.n, s.skipped, s.fraction_violations, s.mean_gap
    );
    ExitCode::SUCCESS
}

fn build_config(command: &Command) -> Result<ExperimentConfig, String> {
    let config = match command {
        Command::Figure1(args) => {
            if let Some(path) = &args.common.config {
                let config = load_config(path)?;
                if config.mode == Mode::QfSweep {
                    return Err("config mode qf-sweep does not match subcommand figure1".into());
                }
                config
            } else {
                let mode = match args.mode.as_str() {
                    "general" => Mode::General,
                    "perturbed" => Mode::Perturbed,
                    other => {
                        return Err(format!(
                            "unknown mode '{other}' (expected general or perturbed)"
                        ))
                    }
                };
                ExperimentConfig {
                    mode,
                    n: args.common.n,
                    seed: args.common.seed,
                    d_a: args.common.dim_a,
                    d_b: args.common.dim_b,
                    epsilon: args.epsilon,
                    out_csv: args.out_csv.clone(),
                    out_json: args.out_json.clone(),
                    violation_tol: args.common.tol,
                }
            }
        }
        Command::QfSweep(args) => {
            if let Some(path) = &args.common.config {
                let config = load_config(path)?;
                if config.mode != Mode::QfSweep {
                    return Err(format!(
                        "config mode {} does not match subcommand qf-sweep",
                        config.mode
                    ));
                }
                config
            } else {
                ExperimentConfig {
                    mode: Mode::QfSweep,
                    n: args.common.n,
                    seed: args.common.seed,
                    d_a: args.common.dim_a,
                    d_b: args.common.dim_b,
                    epsilon: 0.0,
                    out_csv: args.out_csv.clone(),
                    out_json: args.out_json.clone(),
                    violation_tol: args.common.tol,
                }
            }
        }
    };
    config.validate()?;
    Ok(config)
}

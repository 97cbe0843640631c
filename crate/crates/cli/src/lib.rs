//! Experiment driver: seeded sampling scans over random states with CSV rows per
//! sample and a JSON summary report per run.
//!
//! Two experiments are provided. The superadditivity scan draws per-sample
//! references `sigma_A`, `sigma_B` and a joint state `rho_AB` (either fully
//! random or an `epsilon`-perturbation of a product) and records the gap
//! `D_BS(rho_AB||sigma_A (x) sigma_B) - D_BS(rho_A||sigma_A) - D_BS(rho_B||sigma_B)`;
//! negative gaps witness superadditivity failure. The quasi-factorization sweep
//! draws random `(rho_AB, sigma_AB)` pairs and evaluates all three bounds.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use bslab::qf::{evaluate_qf, superadditivity_terms, Theorem};
use bslab::states::{
    perturbed_product, sample_bipartite_ginibre, sample_ginibre_density, sample_rng,
};

/// Default threshold below which a negative gap counts as a violation.
pub const DEFAULT_VIOLATION_TOL: f64 = 1e-9;

/// Which experiment a run performs and how the joint state is drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Superadditivity scan with Hilbert-Schmidt random joint states.
    General,
    /// Superadditivity scan with perturbed product states.
    Perturbed,
    /// Quasi-factorization sweep over random state pairs.
    QfSweep,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::General => write!(f, "general"),
            Mode::Perturbed => write!(f, "perturbed"),
            Mode::QfSweep => write!(f, "qf-sweep"),
        }
    }
}

/// Full configuration of one experiment run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    /// Experiment mode.
    pub mode: Mode,
    /// Number of samples.
    pub n: usize,
    /// Master seed; sample `i` uses RNG stream `i` of this seed.
    pub seed: u64,
    /// Dimension of factor A.
    pub d_a: usize,
    /// Dimension of factor B.
    pub d_b: usize,
    /// Perturbation strength for perturbed mode.
    pub epsilon: f64,
    /// CSV output path.
    pub out_csv: PathBuf,
    /// JSON report output path.
    pub out_json: PathBuf,
    /// Negative-gap threshold counted as a violation.
    pub violation_tol: f64,
}

impl ExperimentConfig {
    /// Validate invariants shared by all modes.
    pub fn validate(&self) -> Result<(), String> {
        if self.n == 0 {
            return Err("n must be at least 1".into());
        }
        if self.d_a < 2 || self.d_b < 2 {
            return Err("subsystem dimensions must be at least 2".into());
        }
        if self.epsilon < 0.0 {
            return Err("epsilon must be nonnegative".into());
        }
        if !(self.violation_tol > 0.0) {
            return Err("violation tolerance must be positive".into());
        }
        Ok(())
    }
}

/// Aggregate statistics of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSummary {
    /// Requested sample count.
    pub n: usize,
    /// Samples that produced CSV rows; `n = rows + skipped`.
    pub rows: usize,
    /// Samples skipped after a numeric error (logged to stderr).
    pub skipped: usize,
    /// Violating samples divided by `n`.
    pub fraction_violations: f64,
    /// Largest amount by which any gap fell below zero, 0.0 if none did.
    pub max_violation: f64,
    /// Mean gap over recorded samples (over applicable rows for the sweep).
    pub mean_gap: f64,
    /// Fraction of (sample, theorem) rows with the hypothesis satisfied; sweep only.
    #[serde(skip_serializing_if = "Option::is_none")]
    #[serde(default)]
    pub applicable_fraction: Option<f64>,
}

/// Everything written to the JSON report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    /// Echo of the configuration that produced this run.
    pub config: ExperimentConfig,
    /// Aggregate statistics.
    pub summary: ExperimentSummary,
    /// Wall-clock duration of the sampling loop in seconds.
    pub wall_time_seconds: f64,
    /// Library version.
    pub version: String,
    /// Sampling recipe note: all states are Hilbert-Schmidt (Ginibre) random and
    /// the references are redrawn per sample.
    pub sampling_note: String,
}

/// Outcome of a run: the report plus both rendered artifacts.
#[derive(Debug, Clone)]
pub struct RunOutput {
    /// The JSON-serializable report.
    pub report: ExperimentReport,
    /// Rendered CSV document.
    pub csv: String,
    /// Rendered JSON document.
    pub json: String,
}

/// Format a float with 17 significant digits so parsing recovers the exact bits.
fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else {
        format!("{:.16e}", x)
    }
}

const SAMPLING_NOTE: &str = "All random states are Hilbert-Schmidt (Ginibre) samples; \
reference states are redrawn independently for every sample index.";

/// Run the superadditivity scan (general or perturbed mode).
pub fn run_figure1(config: &ExperimentConfig) -> Result<RunOutput, String> {
    config.validate()?;
    if config.mode == Mode::QfSweep {
        return Err("superadditivity scan requires mode general or perturbed".into());
    }
    let start = Instant::now();
    let mut csv = String::from("sample_id,bs_joint,bs_sum_marginals,gap\n");
    let mut rows = 0usize;
    let mut skipped = 0usize;
    let mut violations = 0usize;
    let mut gap_sum = 0.0;
    let mut max_violation = 0.0f64;

    for i in 0..config.n {
        // Fixed draw order per stream: sigma_A, sigma_B, then the joint state.
        let mut rng = sample_rng(config.seed, i as u64);
        let result = (|| {
            let sigma_a = sample_ginibre_density(config.d_a, &mut rng)?;
            let sigma_b = sample_ginibre_density(config.d_b, &mut rng)?;
            let rho = match config.mode {
                Mode::General => sample_bipartite_ginibre(config.d_a, config.d_b, &mut rng)?,
                Mode::Perturbed => {
                    let eta_a = sample_ginibre_density(config.d_a, &mut rng)?;
                    let eta_b = sample_ginibre_density(config.d_b, &mut rng)?;
                    let lambda = sample_bipartite_ginibre(config.d_a, config.d_b, &mut rng)?;
                    perturbed_product(&eta_a, &eta_b, &lambda, config.epsilon)?
                }
                Mode::QfSweep => unreachable!(),
            };
            superadditivity_terms(&rho, &sigma_a, &sigma_b)
        })();
        match result {
            Ok(terms) => {
                let gap = terms.gap();
                let sum = terms.marginal_a + terms.marginal_b;
                let _ = writeln!(
                    csv,
                    "{i},{},{},{}",
                    fmt_float(terms.joint),
                    fmt_float(sum),
                    fmt_float(gap)
                );
                rows += 1;
                gap_sum += gap;
                if gap < -config.violation_tol {
                    violations += 1;
                }
                max_violation = max_violation.max(-gap);
            }
            Err(err) => {
                eprintln!("sample {i} skipped: {err}");
                skipped += 1;
            }
        }
    }

    let summary = ExperimentSummary {
        n: config.n,
        rows,
        skipped,
        fraction_violations: violations as f64 / config.n as f64,
        max_violation: max_violation.max(0.0),
        mean_gap: if rows > 0 { gap_sum / rows as f64 } else { 0.0 },
        applicable_fraction: None,
    };
    finish_run(config, summary, csv, start)
}

/// Run the quasi-factorization sweep: three bound evaluations per sample.
pub fn run_qf_sweep(config: &ExperimentConfig) -> Result<RunOutput, String> {
    config.validate()?;
    if config.mode != Mode::QfSweep {
        return Err("quasi-factorization sweep requires mode qf-sweep".into());
    }
    let start = Instant::now();
    let mut csv =
        String::from("sample_id,theorem,applicable,mult,add,lhs,rhs,gap,h_norm,sigma_min\n");
    let mut recorded = 0usize;
    let mut rows = 0usize;
    let mut skipped = 0usize;
    let mut violating_samples = 0usize;
    let mut applicable_rows = 0usize;
    let mut gap_sum = 0.0;
    let mut gap_count = 0usize;
    let mut max_violation = 0.0f64;

    for i in 0..config.n {
        // Fixed draw order per stream: rho_AB, then sigma_AB.
        let mut rng = sample_rng(config.seed, i as u64);
        let result = (|| {
            let rho = sample_bipartite_ginibre(config.d_a, config.d_b, &mut rng)?;
            let sigma = sample_bipartite_ginibre(config.d_a, config.d_b, &mut rng)?;
            let mut reports = Vec::with_capacity(3);
            for theorem in [Theorem::T1, Theorem::T2, Theorem::Umegaki] {
                reports.push(evaluate_qf(&rho, &sigma, theorem)?);
            }
            Ok::<_, bslab::Error>(reports)
        })();
        match result {
            Ok(reports) => {
                let mut sample_violates = false;
                for r in &reports {
                    let _ = writeln!(
                        csv,
                        "{i},{},{},{},{},{},{},{},{},{}",
                        r.theorem,
                        r.applicable,
                        fmt_float(r.multiplicative.unwrap_or(f64::NAN)),
                        fmt_float(r.additive.unwrap_or(f64::NAN)),
                        fmt_float(r.lhs),
                        fmt_float(r.rhs.unwrap_or(f64::NAN)),
                        fmt_float(r.gap.unwrap_or(f64::NAN)),
                        fmt_float(r.h_norm),
                        fmt_float(r.sigma_min)
                    );
                    rows += 1;
                    if r.applicable {
                        applicable_rows += 1;
                        let gap = r.gap.expect("applicable reports carry a gap");
                        gap_sum += gap;
                        gap_count += 1;
                        // Ill-conditioned T1 rows are excluded from violation stats.
                        let excluded = r.theorem == Theorem::T1 && r.ill_conditioned;
                        if !excluded {
                            if gap < -config.violation_tol {
                                sample_violates = true;
                            }
                            max_violation = max_violation.max(-gap);
                        }
                    }
                }
                recorded += 1;
                if sample_violates {
                    violating_samples += 1;
                }
            }
            Err(err) => {
                eprintln!("sample {i} skipped: {err}");
                skipped += 1;
            }
        }
    }

    let summary = ExperimentSummary {
        n: config.n,
        rows: recorded,
        skipped,
        fraction_violations: violating_samples as f64 / config.n as f64,
        max_violation: max_violation.max(0.0),
        mean_gap: if gap_count > 0 {
            gap_sum / gap_count as f64
        } else {
            0.0
        },
        applicable_fraction: Some(if rows > 0 {
            applicable_rows as f64 / rows as f64
        } else {
            0.0
        }),
    };
    finish_run(config, summary, csv, start)
}

fn finish_run(
    config: &ExperimentConfig,
    summary: ExperimentSummary,
    csv: String,
    start: Instant,
) -> Result<RunOutput, String> {
    let report = ExperimentReport {
        config: config.clone(),
        summary,
        wall_time_seconds: start.elapsed().as_secs_f64(),
        version: bslab::VERSION.to_string(),
        sampling_note: SAMPLING_NOTE.to_string(),
    };
    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| format!("report serialization failed: {e}"))?;
    Ok(RunOutput {
        report,
        csv,
        json,
    })
}

/// Dispatch on the configured mode.
pub fn run(config: &ExperimentConfig) -> Result<RunOutput, String> {
    match config.mode {
        Mode::General | Mode::Perturbed => run_figure1(config),
        Mode::QfSweep => run_qf_sweep(config),
    }
}

/// Write both artifacts to the configured paths.
pub fn write_outputs(output: &RunOutput, config: &ExperimentConfig) -> std::io::Result<()> {
    std::fs::write(&config.out_csv, &output.csv)?;
    std::fs::write(&config.out_json, &output.json)?;
    Ok(())
}

/// Load a configuration from a JSON file.
pub fn load_config(path: &Path) -> Result<ExperimentConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let config: ExperimentConfig =
        serde_json::from_str(&text).map_err(|e| format!("invalid config JSON: {e}"))?;
    config.validate()?;
    Ok(config)
}

/// Recount violation statistics from a rendered superadditivity CSV document.
pub fn recount_figure1(csv: &str, violation_tol: f64) -> Result<(usize, usize), String> {
    let mut rows = 0usize;
    let mut violations = 0usize;
    for line in csv.lines().skip(1) {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(format!("malformed CSV row: {line}"));
        }
        let gap: f64 = fields[3]
            .parse()
            .map_err(|e| format!("bad gap field {}: {e}", fields[3]))?;
        rows += 1;
        if gap < -violation_tol {
            violations += 1;
        }
    }
    Ok((rows, violations))
}

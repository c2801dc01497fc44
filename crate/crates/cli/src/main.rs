use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use twostep::bounds::{BoundsInput, BoundsReport};
use twostep::geometry::{f_vector, write_polytope, TOL_GEOM};
use twostep::harness::{
    self, center_estimate_experiment, graph_verify, process_points, rows_to_csv, run_suite, slenderness_report,
    ExperimentConfig, Mode, SUITES, THREADS_ENV,
};
use twostep::model::{run_two_step_with_tol, sample_base};

#[derive(Parser)]
#[command(name = "twostep", version, about = "Random polytopes from sphere hulls, polarity and vertex thinning")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Iid,
    Process,
}

#[derive(Subcommand)]
enum Command {
    /// Write the sphere hull P and its polar dual as JSON files.
    Gen {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = TOL_GEOM)]
        tol: f64,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Run one two-step trial and write base, Q and a summary record.
    Sample {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        points: usize,
        #[arg(long, default_value_t = 0.95)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = TOL_GEOM)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte Carlo sweep written as CSV.
    Sweep {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Sphere points; defaults to round(500 / F(d)).
        #[arg(long)]
        points: Option<usize>,
        /// Retention probabilities (comma separated).
        #[arg(long, value_delimiter = ',', conflicts_with = "q_grid")]
        prob: Vec<f64>,
        /// Deletion probabilities q = 1 - p (comma separated).
        #[arg(long, value_delimiter = ',')]
        q_grid: Vec<f64>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Iid)]
        mode: ModeArg,
        #[arg(long, default_value_t = 0.05)]
        step_fraction: f64,
        #[arg(long, default_value_t = TOL_GEOM)]
        tol: f64,
        /// CSV path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exits with status 1 if any check fails.
    Verify {
        /// Suite names, or `all`.
        #[arg(default_value = "all")]
        suites: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate every closed-form bound at one parameter point.
    Bounds {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        points: u64,
        /// Vertex count of the dual; defaults to round(F(d) m).
        #[arg(long)]
        vertices: Option<u64>,
        #[arg(long, default_value_t = 0.95)]
        prob: f64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 5)]
        t: usize,
        #[arg(long, default_value_t = 0.5)]
        h: f64,
        #[arg(long, default_value_t = 1.1)]
        radius: f64,
        #[arg(long, default_value_t = 0.05)]
        pi: f64,
        #[arg(long, default_value_t = 0.1)]
        delta: f64,
        /// Also write the report as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive counting checks on small regular graphs.
    GraphVerify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Empirical failure rate of the sphere-center estimate.
    Center {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 0.05)]
        pi: f64,
        #[arg(long, default_value_t = 2000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.parse().with_context(|| format!("{THREADS_ENV}={v} is not a thread count"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    configure_threads()?;
    match cli.command {
        Command::Gen { dim, points, seed, tol, out } => {
            let (p, dual) = sample_base(dim, points, seed, tol)?;
            std::fs::create_dir_all(&out).with_context(|| format!("{}", out.display()))?;
            write_polytope(&p, out.join("p.json"))?;
            write_polytope(&dual, out.join("p_dual.json"))?;
            println!("P  f-vector {:?}", f_vector(&p).0);
            println!("P° f-vector {:?}", f_vector(&dual).0);
        }
        Command::Sample { dim, points, prob, seed, tol, out } => {
            let o = run_two_step_with_tol(dim, points, prob, seed, tol)?;
            if let Some(dir) = out {
                for path in o.write_files(&dir)? {
                    eprintln!("wrote {}", path.display());
                }
            }
            println!("{}", serde_json::to_string_pretty(&o.sidecar())?);
        }
        Command::Sweep {
            dim,
            points,
            prob,
            q_grid,
            trials,
            seed,
            mode,
            step_fraction,
            tol,
            out,
        } => {
            let p_grid = match (prob.is_empty(), q_grid.is_empty()) {
                (false, _) => prob,
                (true, false) => q_grid.iter().map(|q| 1.0 - q).collect(),
                (true, true) => vec![1.0],
            };
            let m = match points {
                Some(m) => m,
                None => process_points(dim)?,
            };
            let mode = match mode {
                ModeArg::Iid => Mode::Iid,
                ModeArg::Process => Mode::Process,
            };
            let cfg = ExperimentConfig {
                d: dim,
                m,
                p_grid,
                trials,
                seed,
                mode,
                step_fraction,
                tol,
                out: out.clone(),
            };
            let rows = harness::sweep(&cfg)?;
            match &out {
                Some(path) => harness::write_csv(&rows, path)?,
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(&rows_to_csv(&rows)?)?;
                }
            }
            if mode == Mode::Iid {
                for &p in &cfg.p_grid {
                    if let Ok(s) = slenderness_report(&rows, dim, p, 0.1) {
                        eprintln!(
                            "p={p}: f_(d-1)/f_0 mean {:.4} in [{:.4}, {:.4}], band [{:.4}, {}], {:.0}% inside",
                            s.mean_ratio,
                            s.min_ratio,
                            s.max_ratio,
                            s.band_lower,
                            s.band_upper.map_or("n/a".into(), |u| format!("{u:.4}")),
                            100.0 * s.fraction_in_band
                        );
                    }
                }
            }
        }
        Command::Verify { suites, seed } => {
            let names: Vec<String> = if suites.iter().any(|s| s == "all") {
                SUITES.iter().map(|s| s.to_string()).collect()
            } else {
                suites
            };
            let mut ok = true;
            for name in &names {
                let report = run_suite(name, seed)?;
                print!("{}", report.to_text());
                ok &= report.passed();
            }
            return Ok(ok);
        }
        Command::Bounds {
            dim,
            points,
            vertices,
            prob,
            eps,
            t,
            h,
            radius,
            pi,
            delta,
            out,
        } => {
            let input = BoundsInput {
                d: dim,
                m: points,
                n: vertices,
                p: prob,
                eps,
                t,
                h,
                r: radius,
                pi,
                delta,
            };
            let report = BoundsReport::evaluate(&input);
            print!("{}", report.to_text());
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)
                    .with_context(|| format!("{}", path.display()))?;
            }
        }
        Command::GraphVerify { seed } => {
            let report = graph_verify(seed)?;
            print!("{}", report.to_text());
            return Ok(report.passed());
        }
        Command::Center { dim, radius, eps, pi, trials, seed } => {
            let (n, rate) = center_estimate_experiment(dim, radius, eps, pi, trials, seed)?;
            println!("N = {n}");
            println!("failure rate = {rate} over {trials} repetitions (target <= {pi})");
            return Ok(rate <= pi);
        }
    }
    Ok(true)
}

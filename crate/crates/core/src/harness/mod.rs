//! Reproducible Monte Carlo sweeps, verification suites and CSV output.

mod center;
mod sweep;
pub mod verify;

pub use center::center_estimate_experiment;
pub use sweep::{
    rows_to_csv, slenderness_report, sweep, write_csv, ExperimentConfig, Mode, SlendernessReport, SweepRow,
};
pub use verify::{graph_verify, run_suite, Check, Report, SUITES};

/// Environment variable read by the command-line tool to size the worker
/// pool.
pub const THREADS_ENV: &str = "TWOSTEP_THREADS";

/// Start size used for deletion-process sweeps: `round(500 / F(d))`.
pub fn process_points(d: usize) -> crate::Result<usize> {
    Ok((500.0 / crate::bounds::f_const(d)?).round() as usize)
}

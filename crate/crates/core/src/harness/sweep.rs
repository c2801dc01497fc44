use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::slenderness_band;
use crate::error::{Error, Result};
use crate::geometry::TOL_GEOM;
use crate::model::{outcome_for_kept, run_two_step_with_tol, sample_base, SampleOutcome};
use crate::seed::{derive_seed, rng_from, Role};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Independent two-step trials for every grid point.
    Iid,
    /// One base per trial, thinned step by step.
    Process,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub d: usize,
    pub m: usize,
    /// Retention probabilities; ignored in process mode.
    pub p_grid: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    pub mode: Mode,
    /// Fraction of the starting vertex count deleted per process step.
    pub step_fraction: f64,
    pub tol: f64,
    pub out: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            d: 3,
            m: 250,
            p_grid: vec![1.0],
            trials: 1,
            seed: 0,
            mode: Mode::Iid,
            step_fraction: 0.05,
            tol: TOL_GEOM,
            out: None,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parameter(msg));
        if self.d < 2 || self.m < self.d + 1 {
            return bad(format!("need d >= 2 and m >= d+1, got d={}, m={}", self.d, self.m));
        }
        if self.trials == 0 {
            return bad("trials must be at least 1".into());
        }
        if self.mode == Mode::Iid && self.p_grid.is_empty() {
            return bad("probability grid is empty".into());
        }
        if let Some(p) = self.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
            return bad(format!("grid value {p} is outside [0, 1]"));
        }
        if !(self.step_fraction > 0.0 && self.step_fraction < 1.0) {
            return bad(format!("step fraction must be in (0, 1), got {}", self.step_fraction));
        }
        if !(self.tol > 0.0) {
            return bad(format!("tolerance must be positive, got {}", self.tol));
        }
        Ok(())
    }
}

/// One CSV record. Fields that need `Q` are empty for degenerate rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub d: usize,
    pub m: usize,
    pub p: f64,
    pub q: f64,
    pub seed: u64,
    pub trial: usize,
    #[serde(rename = "f0_P")]
    pub f0_p: usize,
    #[serde(rename = "fd1_P")]
    pub fd1_p: usize,
    #[serde(rename = "f0_Q")]
    pub f0_q: Option<usize>,
    #[serde(rename = "fd1_Q")]
    pub fd1_q: Option<usize>,
    pub old_facets: Option<usize>,
    pub new_facets: Option<usize>,
    pub shallow_pattern: Option<usize>,
    pub shallow_realized: Option<usize>,
    pub max_cap_size: Option<usize>,
    #[serde(rename = "inradius_Q")]
    pub inradius_q: Option<f64>,
    #[serde(rename = "circumradius_Q")]
    pub circumradius_q: Option<f64>,
    #[serde(rename = "volume_Q")]
    pub volume_q: Option<f64>,
    pub degenerate_reason: String,
    pub normalized_facets: Option<f64>,
}

impl SweepRow {
    fn from_outcome(o: &SampleOutcome, trial: usize, f0_start: usize) -> Self {
        let q = o.polytope_q.as_ref().ok();
        let c = o.classification.as_ref();
        let fd1_q = q.map(|q| q.num_facets());
        SweepRow {
            d: o.d,
            m: o.m,
            p: o.p,
            q: o.q,
            seed: o.seed,
            trial,
            f0_p: o.base.num_vertices(),
            fd1_p: o.base.num_facets(),
            f0_q: q.map(|q| q.num_vertices()),
            fd1_q,
            old_facets: c.map(|c| c.num_old()),
            new_facets: c.map(|c| c.num_new()),
            shallow_pattern: o.shallow.map(|s| s.0),
            shallow_realized: o.shallow.map(|s| s.1),
            max_cap_size: c.map(|c| c.max_new_cap()),
            inradius_q: o.metrics_q.map(|m| m.inradius),
            circumradius_q: o.metrics_q.map(|m| m.circumradius),
            volume_q: o.metrics_q.map(|m| m.volume),
            degenerate_reason: o.polytope_q.as_ref().err().map(|r| r.to_string()).unwrap_or_default(),
            normalized_facets: fd1_q.map(|f| f as f64 / f0_start as f64),
        }
    }

    /// Row-level invariants.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.q != 1.0 - self.p {
            return Err(format!("q = {} is not 1 - p for p = {}", self.q, self.p));
        }
        if let (Some(a), Some(b)) = (self.shallow_realized, self.shallow_pattern) {
            if a > b {
                return Err(format!("realized shallow cuts {a} exceed patterns {b}"));
            }
        }
        if self.degenerate_reason.is_empty() {
            match (self.old_facets, self.new_facets, self.fd1_q) {
                (Some(o), Some(n), Some(f)) if o + n == f => {}
                _ => return Err("old + new facets do not add up to fd1_Q".into()),
            }
            let metrics = [self.inradius_q, self.circumradius_q, self.volume_q];
            if metrics.iter().any(|x| !x.is_some_and(f64::is_finite)) {
                return Err("metrics missing or not finite".into());
            }
        } else if self.fd1_q.is_some() {
            return Err("degenerate row carries facet counts".into());
        }
        Ok(())
    }
}

fn iid_rows(cfg: &ExperimentConfig) -> Result<Vec<SweepRow>> {
    let jobs: Vec<(usize, usize)> = (0..cfg.p_grid.len())
        .flat_map(|g| (0..cfg.trials).map(move |t| (g, t)))
        .collect();
    jobs.par_iter()
        .map(|&(g, t)| {
            let seed = derive_seed(cfg.seed, Role::Trial, ((g as u64) << 32) | t as u64);
            let o = run_two_step_with_tol(cfg.d, cfg.m, cfg.p_grid[g], seed, cfg.tol)?;
            Ok(SweepRow::from_outcome(&o, t, o.base.num_vertices()))
        })
        .collect()
}

fn process_rows(cfg: &ExperimentConfig, trial: usize) -> Result<Vec<SweepRow>> {
    let seed = derive_seed(cfg.seed, Role::Trial, trial as u64);
    let (_, base) = sample_base(cfg.d, cfg.m, seed, cfg.tol)?;
    let n_start = base.num_vertices();
    let step = (cfg.step_fraction * n_start as f64).ceil() as usize;
    let mut remaining: Vec<usize> = (0..n_start).collect();
    let mut rows = Vec::new();
    for k in 0.. {
        let q = (n_start - remaining.len()) as f64 / n_start as f64;
        let o = outcome_for_kept(base.clone(), cfg.m, 1.0 - q, seed, remaining.clone())?;
        rows.push(SweepRow::from_outcome(&o, trial, n_start));
        if remaining.len() < cfg.d + 1 {
            break;
        }
        let mut rng = rng_from(derive_seed(seed, Role::Deletion, k));
        remaining.shuffle(&mut rng);
        remaining.truncate(remaining.len().saturating_sub(step));
        remaining.sort_unstable();
    }
    Ok(rows)
}

/// Runs every trial of `cfg` in parallel. Rows come back ordered by grid
/// point, then trial (iid), or by trial, then step (process), whatever the
/// scheduling.
pub fn sweep(cfg: &ExperimentConfig) -> Result<Vec<SweepRow>> {
    cfg.validate()?;
    let rows = match cfg.mode {
        Mode::Iid => iid_rows(cfg)?,
        Mode::Process => {
            let per_trial: Vec<Vec<SweepRow>> = (0..cfg.trials)
                .into_par_iter()
                .map(|t| process_rows(cfg, t))
                .collect::<Result<_>>()?;
            per_trial.into_iter().flatten().collect()
        }
    };
    for (i, row) in rows.iter().enumerate() {
        row.check().map_err(|e| Error::Model(format!("row {i}: {e}")))?;
    }
    Ok(rows)
}

pub fn rows_to_csv(rows: &[SweepRow]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    w.into_inner().map_err(|e| Error::Malformed(format!("csv buffer: {e}")))
}

pub fn write_csv(rows: &[SweepRow], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let bytes = rows_to_csv(rows)?;
    std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

/// Empirical `f_{d−1}(Q) / f_0(Q)` against the band from the bounds.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SlendernessReport {
    pub d: usize,
    pub p: f64,
    pub delta: f64,
    pub samples: usize,
    pub mean_ratio: f64,
    pub min_ratio: f64,
    pub max_ratio: f64,
    pub band_lower: f64,
    pub band_upper: Option<f64>,
    pub fraction_in_band: f64,
}

pub fn slenderness_report(rows: &[SweepRow], d: usize, p: f64, delta: f64) -> Result<SlendernessReport> {
    let ratios: Vec<f64> = rows
        .iter()
        .filter(|r| r.p == p)
        .filter_map(|r| Some(r.fd1_q? as f64 / r.f0_q? as f64))
        .collect();
    if ratios.is_empty() {
        return Err(Error::Parameter(format!("no non-degenerate rows at p = {p}")));
    }
    let (lo, hi) = slenderness_band(d, p, delta)?;
    let inside = ratios
        .iter()
        .filter(|&&r| r >= lo && hi.is_none_or(|h| r <= h))
        .count();
    Ok(SlendernessReport {
        d,
        p,
        delta,
        samples: ratios.len(),
        mean_ratio: ratios.iter().sum::<f64>() / ratios.len() as f64,
        min_ratio: ratios.iter().copied().fold(f64::INFINITY, f64::min),
        max_ratio: ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        band_lower: lo,
        band_upper: hi,
        fraction_in_band: inside as f64 / ratios.len() as f64,
    })
}

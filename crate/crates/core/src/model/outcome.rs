use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{binomial_vertex_sample, build_q, classify_facets, count_shallow_cuts, sample_base, FacetClassification};
use crate::error::{Degeneracy, Error, Result};
use crate::geometry::{f_vector, metrics, write_polytope, Metrics, Polytope, TOL_GEOM};
use crate::seed::{derive_seed, Role};

/// One draw of the two-step model.
#[derive(Debug, Clone)]
pub struct SampleOutcome {
    pub d: usize,
    pub m: usize,
    pub p: f64,
    pub q: f64,
    pub seed: u64,
    /// The polar dual `P°`.
    pub base: Polytope,
    /// Sorted indices into `base.vertices()`.
    pub kept: Vec<usize>,
    pub polytope_q: std::result::Result<Polytope, Degeneracy>,
    pub classification: Option<FacetClassification>,
    pub metrics_q: Option<Metrics>,
    /// `(pattern, realized)` shallow-cut counts; absent if the base is not
    /// simple.
    pub shallow: Option<(usize, usize)>,
}

/// Summary written next to the polytope files of an outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSidecar {
    pub d: usize,
    pub m: usize,
    pub p: f64,
    pub q: f64,
    pub seed: u64,
    pub kept: Vec<usize>,
    pub degenerate_reason: Option<Degeneracy>,
    pub f_vector_base: Vec<usize>,
    pub f_vector_q: Option<Vec<usize>>,
    pub old_facets: Option<usize>,
    pub new_facets: Option<usize>,
    pub max_cap_size: Option<usize>,
    pub shallow_pattern: Option<usize>,
    pub shallow_realized: Option<usize>,
    pub metrics_q: Option<Metrics>,
}

/// Samples `P`, dualizes, and thins the dual's vertices with probability
/// `p`. Sub-seeds for every stage derive from `seed`.
pub fn run_two_step(d: usize, m: usize, p: f64, seed: u64) -> Result<SampleOutcome> {
    run_two_step_with_tol(d, m, p, seed, TOL_GEOM)
}

pub fn run_two_step_with_tol(d: usize, m: usize, p: f64, seed: u64, tol: f64) -> Result<SampleOutcome> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("p must lie in [0, 1], got {p}")));
    }
    let (_, base) = sample_base(d, m, seed, tol)?;
    run_two_step_from(base, m, p, seed)
}

/// The second step on a given base polytope.
pub fn run_two_step_from(base: Polytope, m: usize, p: f64, seed: u64) -> Result<SampleOutcome> {
    let kept = binomial_vertex_sample(&base, p, derive_seed(seed, Role::VertexSample, 0))?;
    outcome_for_kept(base, m, p, seed, kept)
}

/// Builds and analyzes `Q` for an explicit kept set.
pub(crate) fn outcome_for_kept(base: Polytope, m: usize, p: f64, seed: u64, kept: Vec<usize>) -> Result<SampleOutcome> {
    let polytope_q = build_q(&base, &kept)?;
    let (classification, metrics_q) = match &polytope_q {
        Ok(q) => (Some(classify_facets(q, &base)?), Some(metrics(q)?)),
        Err(_) => (None, None),
    };
    let shallow = if base.flags().is_simple {
        Some(count_shallow_cuts(&base, &kept, polytope_q.as_ref().ok())?)
    } else {
        None
    };
    Ok(SampleOutcome {
        d: base.dim(),
        m,
        p,
        q: 1.0 - p,
        seed,
        base,
        kept,
        polytope_q,
        classification,
        metrics_q,
        shallow,
    })
}

impl SampleOutcome {
    pub fn sidecar(&self) -> SampleSidecar {
        let c = self.classification.as_ref();
        SampleSidecar {
            d: self.d,
            m: self.m,
            p: self.p,
            q: self.q,
            seed: self.seed,
            kept: self.kept.clone(),
            degenerate_reason: self.polytope_q.as_ref().err().copied(),
            f_vector_base: f_vector(&self.base).0,
            f_vector_q: self.polytope_q.as_ref().ok().map(|q| f_vector(q).0),
            old_facets: c.map(|c| c.num_old()),
            new_facets: c.map(|c| c.num_new()),
            max_cap_size: c.map(|c| c.max_new_cap()),
            shallow_pattern: self.shallow.map(|s| s.0),
            shallow_realized: self.shallow.map(|s| s.1),
            metrics_q: self.metrics_q,
        }
    }

    /// Writes `base.json`, `q.json` (when `Q` exists) and `sample.json`
    /// into `dir`, returning the paths written.
    pub fn write_files(&self, dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
        let dir = dir.as_ref();
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let mut written = Vec::new();
        let base = dir.join("base.json");
        write_polytope(&self.base, &base)?;
        written.push(base);
        if let Ok(q) = &self.polytope_q {
            let path = dir.join("q.json");
            write_polytope(q, &path)?;
            written.push(path);
        }
        let side = dir.join("sample.json");
        let text = serde_json::to_string_pretty(&self.sidecar())?;
        std::fs::write(&side, text).map_err(|e| Error::io(&side, e))?;
        written.push(side);
        Ok(written)
    }
}

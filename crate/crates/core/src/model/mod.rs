//! The random models: hull of uniform sphere points, its polar dual, and the
//! binomial vertex sample of the dual.

mod classify;
mod outcome;
mod shallow;

use rand::Rng;

use crate::error::{Degeneracy, Error, Result};
use crate::geometry::{
    convex_hull_with, polar_dual, random_unit_vector, sample_unit_sphere, HullOptions, Polytope, Vector,
    TOL_GEOM,
};
use crate::seed::{derive_seed, rng_from, Role};

pub use classify::{cap_of, classify_facets, disconnected_caps, ClassifiedFacet, FacetClassification, FacetKind};
pub(crate) use outcome::outcome_for_kept;
pub use outcome::{run_two_step, run_two_step_from, run_two_step_with_tol, SampleOutcome, SampleSidecar};
pub use shallow::{count_shallow_cuts, shallow_pattern_polynomial, shallow_patterns};

/// Number of fresh draws `sample_p1` makes after the first before giving up.
pub const MAX_RESAMPLES: u64 = 5;

/// Convex hull of `m` uniform points on the unit sphere in ℝ^d.
///
/// Redraws with a derived seed when the hull is degenerate or misses the
/// origin.
pub fn sample_p1(d: usize, m: usize, seed: u64) -> Result<Polytope> {
    sample_p1_with_tol(d, m, seed, TOL_GEOM)
}

/// [`sample_p1`] with an explicit geometric tolerance, which is inherited
/// by every polytope derived from the result.
pub fn sample_p1_with_tol(d: usize, m: usize, seed: u64, tol: f64) -> Result<Polytope> {
    for attempt in 0..=MAX_RESAMPLES {
        let s = if attempt == 0 { seed } else { derive_seed(seed, Role::Resample, attempt) };
        let points = sample_unit_sphere(d, m, derive_seed(s, Role::SpherePoints, 0))?;
        let opts = HullOptions {
            tol,
            seed: derive_seed(s, Role::InsertionOrder, 0),
        };
        match convex_hull_with(&points, &opts) {
            Ok(p) if p.contains_origin() && p.flags().is_simplicial => return Ok(p),
            Ok(_) | Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Model(format!(
        "no nondegenerate hull after {} draws (d={d}, m={m})",
        MAX_RESAMPLES + 1
    )))
}

/// Keeps each vertex index independently with probability `p`.
pub fn binomial_vertex_sample(base: &Polytope, p: f64, seed: u64) -> Result<Vec<usize>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("p must lie in [0, 1], got {p}")));
    }
    let mut rng = rng_from(seed);
    Ok((0..base.num_vertices()).filter(|_| rng.random::<f64>() < p).collect())
}

/// Hull of the `kept` vertices of `base`, with its source indices pointing
/// into `base`. The inner error reports why no full-dimensional polytope
/// around the origin exists.
pub fn build_q(base: &Polytope, kept: &[usize]) -> Result<std::result::Result<Polytope, Degeneracy>> {
    let d = base.dim();
    if let Some(&bad) = kept.iter().find(|&&v| v >= base.num_vertices()) {
        return Err(Error::Parameter(format!("kept index {bad} is not a vertex of the base")));
    }
    if kept.len() < d + 1 {
        return Ok(Err(Degeneracy::TooFewPoints));
    }
    let points: Vec<Vector> = kept.iter().map(|&v| base.vertices()[v].clone()).collect();
    let opts = HullOptions {
        tol: base.tol(),
        seed: 0,
    };
    let q = match convex_hull_with(&points, &opts) {
        Ok(q) => q,
        Err(Error::Degenerate(why)) => return Ok(Err(why)),
        Err(e) => return Err(e),
    };
    if !q.contains_origin() {
        return Ok(Err(Degeneracy::OriginOutside));
    }
    let source = q.source_indices().iter().map(|&i| kept[i]).collect();
    Ok(Ok(q.with_source_indices(source)))
}

/// `n` draws of the vertex of `base` maximizing a uniform random linear
/// objective. Ties go to the lowest index.
pub fn sample_vertices_by_objectives(base: &Polytope, n: usize, seed: u64) -> Vec<usize> {
    let mut rng = rng_from(derive_seed(seed, Role::Objectives, 0));
    let verts = base.vertices();
    (0..n)
        .map(|_| {
            let c = random_unit_vector(&mut rng, base.dim());
            let mut best = 0;
            let mut best_val = f64::NEG_INFINITY;
            for (i, v) in verts.iter().enumerate() {
                let val = c.dot(v);
                if val > best_val {
                    best = i;
                    best_val = val;
                }
            }
            best
        })
        .collect()
}

/// `(P, P°)` for one draw of the sphere model.
pub fn sample_base(d: usize, m: usize, seed: u64, tol: f64) -> Result<(Polytope, Polytope)> {
    let p = sample_p1_with_tol(d, m, seed, tol)?;
    let dual = polar_dual(&p)?;
    Ok((p, dual))
}

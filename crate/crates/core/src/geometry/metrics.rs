use serde::{Deserialize, Serialize};

use super::lattice::triangulate;
use super::linalg::{det_rows, factorial};
use super::polytope::Polytope;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    /// Radius of the largest origin-centered ball inside the polytope.
    pub inradius: f64,
    /// Radius of the smallest origin-centered ball containing it.
    pub circumradius: f64,
    pub volume: f64,
}

impl Metrics {
    /// Sandwich estimate of the Hausdorff distance to the unit sphere.
    pub fn sphere_deviation(&self) -> f64 {
        (self.circumradius - 1.0).max(1.0 - self.inradius)
    }
}

pub fn metrics(p: &Polytope) -> Result<Metrics> {
    if !p.contains_origin() {
        return Err(Error::MetricsUndefined);
    }
    let inradius = p
        .facets()
        .iter()
        .map(|f| f.halfspace.offset)
        .fold(f64::INFINITY, f64::min);
    let circumradius = p.vertices().iter().map(|v| v.norm()).fold(0.0, f64::max);
    Ok(Metrics {
        inradius,
        circumradius,
        volume: volume(p),
    })
}

/// Volume as a sum of origin-apex pyramids over a pulling triangulation of
/// each facet.
pub fn volume(p: &Polytope) -> f64 {
    let d = p.dim();
    let scale = factorial(d);
    let verts = p.vertices();
    p.facets()
        .iter()
        .map(|f| {
            triangulate(p, &f.vertices, d - 1)
                .iter()
                .map(|simplex| {
                    let rows: Vec<&[f64]> = simplex.iter().map(|&v| &verts[v][..]).collect();
                    det_rows(&rows).abs()
                })
                .sum::<f64>()
        })
        .sum::<f64>()
        / scale
}

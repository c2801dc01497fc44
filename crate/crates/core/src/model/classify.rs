use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Halfspace, Polytope};
use crate::graph::{induced_components, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FacetKind {
    /// Contained in a facet of the base.
    Old,
    New,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifiedFacet {
    pub kind: FacetKind,
    /// Base vertices on or above the facet hyperplane, sorted.
    pub cap: Vec<usize>,
    /// Base facet containing an old facet.
    pub parent: Option<usize>,
}

/// Per-facet labels of `Q`, aligned with `Q.facets()`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FacetClassification {
    pub facets: Vec<ClassifiedFacet>,
}

impl FacetClassification {
    pub fn num_old(&self) -> usize {
        self.facets.iter().filter(|f| f.kind == FacetKind::Old).count()
    }

    pub fn num_new(&self) -> usize {
        self.facets.len() - self.num_old()
    }

    /// Largest cap among new facets; 0 when there are none.
    pub fn max_new_cap(&self) -> usize {
        self.facets
            .iter()
            .filter(|f| f.kind == FacetKind::New)
            .map(|f| f.cap.len())
            .max()
            .unwrap_or(0)
    }
}

/// Base vertices `v` with `normal · v ≥ offset − tol`.
pub fn cap_of(base: &Polytope, h: &Halfspace) -> Vec<usize> {
    let tol = base.tol();
    base.vertices()
        .iter()
        .enumerate()
        .filter(|(_, v)| h.excess(v) >= -tol)
        .map(|(i, _)| i)
        .collect()
}

/// Labels each facet of `q` old or new and records its cap. `q` must have
/// been built by [`super::build_q`] so its source indices refer to `base`.
pub fn classify_facets(q: &Polytope, base: &Polytope) -> Result<FacetClassification> {
    if !q.contains_origin() {
        return Err(Error::Classification);
    }
    let src = q.source_indices();
    let facets = q
        .facets()
        .iter()
        .map(|f| {
            let mut in_base: Vec<usize> = f.vertices.iter().map(|&v| src[v]).collect();
            in_base.sort_unstable();
            let parent = base.facet_containing(&in_base);
            ClassifiedFacet {
                kind: if parent.is_some() { FacetKind::Old } else { FacetKind::New },
                cap: cap_of(base, &f.halfspace),
                parent,
            }
        })
        .collect();
    Ok(FacetClassification { facets })
}

/// Number of new facets whose cap induces a disconnected subgraph of the
/// base skeleton.
pub fn disconnected_caps(base: &Polytope, c: &FacetClassification) -> usize {
    let g = Graph::from_polytope(base);
    c.facets
        .iter()
        .filter(|f| f.kind == FacetKind::New && induced_components(&g, &f.cap).len() != 1)
        .count()
}

//! Face counts and facet triangulations derived from facet–vertex incidence.
//!
//! Faces of dimension `k − 1` inside a `k`-face `F` are the inclusion-maximal
//! sets among `F ∩ G` over facets `G` not containing `F`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::polytope::{intersect_sorted, Polytope};

/// Face counts `f_0, …, f_{d−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Sum of all entries.
    pub fn complexity(&self) -> usize {
        self.0.iter().sum()
    }

    /// Alternating sum `Σ (−1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Euler–Poincaré: the alternating sum equals `1 − (−1)^d`.
    pub fn satisfies_euler(&self) -> bool {
        let d = self.dim();
        let rhs = if d % 2 == 0 { 0 } else { 2 };
        self.euler_characteristic() == rhs
    }
}

/// Maximal proper faces of the `k`-face with sorted vertex set `face`.
pub(crate) fn subfaces(p: &Polytope, face: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return Vec::new();
    }
    let vf = p.vertex_facets();
    let facets = p.facets();
    let mut touched: Vec<usize> = face.iter().flat_map(|&v| vf[v].iter().copied()).collect();
    touched.sort_unstable();
    touched.dedup();
    let mut cands: Vec<Vec<usize>> = touched
        .into_iter()
        .filter_map(|g| {
            let inter = intersect_sorted(face, &facets[g].vertices);
            (inter.len() >= k && inter.len() < face.len()).then_some(inter)
        })
        .collect();
    cands.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    cands.dedup();
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    for c in cands {
        if !maximal.iter().any(|m| is_subset(&c, m)) {
            maximal.push(c);
        }
    }
    maximal
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.len() <= big.len() && small.iter().all(|x| big.binary_search(x).is_ok())
}

/// Face counts in every dimension, computed level by level from the facets.
pub fn f_vector(p: &Polytope) -> FVector {
    let d = p.dim();
    let mut counts = vec![0; d];
    let mut level: HashSet<Vec<usize>> = p.facets().iter().map(|f| f.vertices.clone()).collect();
    for k in (0..d).rev() {
        counts[k] = level.len();
        if k == 0 {
            break;
        }
        let mut next = HashSet::new();
        for face in &level {
            if face.len() == k + 1 {
                // simplex: every k-subset is a face
                for skip in 0..face.len() {
                    let mut s = face.clone();
                    s.remove(skip);
                    next.insert(s);
                }
            } else {
                next.extend(subfaces(p, face, k));
            }
        }
        level = next;
    }
    FVector(counts)
}

/// Pulling triangulation of the `k`-face `face` from its smallest vertex index.
pub(crate) fn triangulate(p: &Polytope, face: &[usize], k: usize) -> Vec<Vec<usize>> {
    if face.len() == k + 1 {
        return vec![face.to_vec()];
    }
    let apex = face[0];
    let mut out = Vec::new();
    for sub in subfaces(p, face, k) {
        if sub.binary_search(&apex).is_ok() {
            continue;
        }
        for mut s in triangulate(p, &sub, k - 1) {
            s.push(apex);
            out.push(s);
        }
    }
    out
}

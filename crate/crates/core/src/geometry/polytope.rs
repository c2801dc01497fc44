//! The dual-description polytope carried through every stage of the model.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::linalg::{dot, norm, Vector};
use super::TOL_GEOM;
use crate::error::{Error, Result};

/// `{x : normal · x ≤ offset}` with a unit normal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vector,
    pub offset: f64,
}

impl Halfspace {
    /// Signed distance of `x` beyond the bounding hyperplane.
    #[inline]
    pub fn excess(&self, x: &[f64]) -> f64 {
        dot(&self.normal, x) - self.offset
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Facet {
    pub halfspace: Halfspace,
    /// Sorted vertex indices lying on the facet.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Flags {
    pub is_simplicial: bool,
    pub is_simple: bool,
    pub origin_interior: bool,
}

#[derive(Debug, Clone)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Facet>,
    ridges: Vec<(usize, usize)>,
    skeleton: Vec<Vec<usize>>,
    vertex_facets: Vec<Vec<usize>>,
    source: Vec<usize>,
    flags: Flags,
    tol: f64,
}

impl Polytope {
    /// Builds a polytope from vertices and facets, deriving ridges and the
    /// 1-skeleton combinatorially from the incidence structure.
    pub fn from_facets(dim: usize, vertices: Vec<Vector>, facets: Vec<Facet>) -> Result<Self> {
        Self::from_facets_with_tol(dim, vertices, facets, TOL_GEOM)
    }

    pub fn from_facets_with_tol(
        dim: usize,
        vertices: Vec<Vector>,
        mut facets: Vec<Facet>,
        tol: f64,
    ) -> Result<Self> {
        check_shape(dim, &vertices, &facets)?;
        for f in &mut facets {
            f.vertices.sort_unstable();
            f.vertices.dedup();
        }
        let vertex_facets = incidence(vertices.len(), &facets);
        let ridges = ridges_from_incidence(dim, &facets, &vertex_facets);
        let skeleton = skeleton_from_incidence(dim, &facets, &vertex_facets, vertices.len());
        let source = (0..vertices.len()).collect();
        Ok(Self::assemble(dim, vertices, facets, ridges, skeleton, source, tol))
    }

    /// Assembles a polytope whose ridge list and skeleton are already known.
    pub(crate) fn assemble(
        dim: usize,
        vertices: Vec<Vector>,
        facets: Vec<Facet>,
        mut ridges: Vec<(usize, usize)>,
        mut skeleton: Vec<Vec<usize>>,
        source: Vec<usize>,
        tol: f64,
    ) -> Self {
        for r in &mut ridges {
            if r.0 > r.1 {
                *r = (r.1, r.0);
            }
        }
        ridges.sort_unstable();
        ridges.dedup();
        for adj in &mut skeleton {
            adj.sort_unstable();
            adj.dedup();
        }
        let vertex_facets = incidence(vertices.len(), &facets);
        let flags = Flags {
            is_simplicial: facets.iter().all(|f| f.vertices.len() == dim),
            is_simple: skeleton.iter().all(|a| a.len() == dim),
            origin_interior: facets.iter().all(|f| f.halfspace.offset > tol),
        };
        Polytope {
            dim,
            vertices,
            facets,
            ridges,
            skeleton,
            vertex_facets,
            source,
            flags,
            tol,
        }
    }

    pub(crate) fn with_source_indices(mut self, source: Vec<usize>) -> Self {
        debug_assert_eq!(source.len(), self.vertices.len());
        self.source = source;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Pairs of facet indices sharing a (d−2)-face.
    pub fn ridges(&self) -> &[(usize, usize)] {
        &self.ridges
    }

    /// Sorted neighbor lists of the 1-skeleton.
    pub fn skeleton(&self) -> &[Vec<usize>] {
        &self.skeleton
    }

    /// For each vertex, the sorted indices of facets containing it.
    pub fn vertex_facets(&self) -> &[Vec<usize>] {
        &self.vertex_facets
    }

    /// For each vertex, its index in the point list the polytope was built from.
    pub fn source_indices(&self) -> &[usize] {
        &self.source
    }


    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// True iff every facet offset exceeds the tolerance.
    pub fn contains_origin(&self) -> bool {
        self.flags.origin_interior
    }

    /// True iff `x` satisfies every facet inequality within tolerance.
    pub fn contains_point(&self, x: &[f64]) -> bool {
        self.facets.iter().all(|f| f.halfspace.excess(x) <= self.tol)
    }

    /// Index of a facet whose vertex set contains all of `vs`, if any.
    pub fn facet_containing(&self, vs: &[usize]) -> Option<usize> {
        let (first, rest) = vs.split_first()?;
        self.vertex_facets[*first]
            .iter()
            .copied()
            .find(|&f| rest.iter().all(|v| self.facets[f].vertices.binary_search(v).is_ok()))
    }

    /// Checks every structural invariant; returns the list of violations.
    pub fn validate(&self) -> std::result::Result<(), Vec<String>> {
        let mut problems = Vec::new();
        let tol = self.tol;
        for (fi, f) in self.facets.iter().enumerate() {
            if (f.halfspace.normal.norm() - 1.0).abs() > tol {
                problems.push(format!("facet {fi}: normal is not unit"));
            }
            for &v in &f.vertices {
                let e = f.halfspace.excess(&self.vertices[v]).abs();
                if e > tol {
                    problems.push(format!("facet {fi}: vertex {v} off hyperplane by {e:e}"));
                }
            }
            for (vi, v) in self.vertices.iter().enumerate() {
                let e = f.halfspace.excess(v);
                if e > tol {
                    problems.push(format!("facet {fi}: vertex {vi} beyond by {e:e}"));
                }
            }
            if f.vertices.len() < self.dim {
                problems.push(format!("facet {fi}: only {} vertices", f.vertices.len()));
            }
        }
        for (vi, fs) in self.vertex_facets.iter().enumerate() {
            if fs.len() < self.dim {
                problems.push(format!("vertex {vi}: on only {} facets", fs.len()));
            }
        }
        let fv = super::lattice::f_vector(self);
        if !fv.satisfies_euler() {
            problems.push(format!("Euler-Poincare fails for f = {:?}", fv.0));
        }
        if !is_connected(&self.skeleton) {
            problems.push("1-skeleton is disconnected".into());
        }
        if self.flags.is_simplicial && self.facets.iter().any(|f| f.vertices.len() != self.dim) {
            problems.push("simplicial flag with non-simplex facet".into());
        }
        if self.flags.is_simple && self.skeleton.iter().any(|a| a.len() != self.dim) {
            problems.push("simple flag with vertex of wrong degree".into());
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(problems)
        }
    }
}

fn check_shape(dim: usize, vertices: &[Vector], facets: &[Facet]) -> Result<()> {
    if dim < 1 || dim > super::linalg::MAX_DIM {
        return Err(Error::Malformed(format!("unsupported dimension {dim}")));
    }
    if let Some(v) = vertices.iter().find(|v| v.dim() != dim || !v.is_finite()) {
        return Err(Error::Malformed(format!("bad vertex {:?}", v.0)));
    }
    for f in facets {
        if f.halfspace.normal.dim() != dim {
            return Err(Error::Malformed("facet normal has wrong dimension".into()));
        }
        if (norm(&f.halfspace.normal) - 1.0).abs() > 1e-6 {
            return Err(Error::Malformed("facet normal is not a unit vector".into()));
        }
        if let Some(&v) = f.vertices.iter().find(|&&v| v >= vertices.len()) {
            return Err(Error::Malformed(format!("facet references missing vertex {v}")));
        }
    }
    Ok(())
}

pub(crate) fn incidence(n: usize, facets: &[Facet]) -> Vec<Vec<usize>> {
    let mut vf = vec![Vec::new(); n];
    for (fi, f) in facets.iter().enumerate() {
        for &v in &f.vertices {
            vf[v].push(fi);
        }
    }
    vf
}

/// Sorted intersection of two sorted slices.
pub(crate) fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Facets containing every vertex of `vs`.
pub(crate) fn facets_containing_all(vertex_facets: &[Vec<usize>], vs: &[usize]) -> Vec<usize> {
    let mut it = vs.iter();
    let Some(&first) = it.next() else {
        return Vec::new();
    };
    let mut acc = vertex_facets[first].clone();
    for &v in it {
        acc = intersect_sorted(&acc, &vertex_facets[v]);
        if acc.is_empty() {
            break;
        }
    }
    acc
}

/// Two facets share a ridge iff their common vertices lie on no third facet.
pub(crate) fn ridges_from_incidence(dim: usize, facets: &[Facet], vf: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut ridges = Vec::new();
    let mut shared: HashMap<usize, usize> = HashMap::new();
    for (fi, f) in facets.iter().enumerate() {
        shared.clear();
        for &v in &f.vertices {
            for &g in &vf[v] {
                if g > fi {
                    *shared.entry(g).or_default() += 1;
                }
            }
        }
        for (&g, &count) in &shared {
            if count + 1 < dim {
                continue;
            }
            let common = intersect_sorted(&f.vertices, &facets[g].vertices);
            if facets_containing_all(vf, &common).len() == 2 {
                ridges.push((fi, g));
            }
        }
    }
    ridges.sort_unstable();
    ridges
}

/// Two vertices span an edge iff the facets containing both meet in exactly them.
pub(crate) fn skeleton_from_incidence(
    dim: usize,
    facets: &[Facet],
    vf: &[Vec<usize>],
    n: usize,
) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    let simplicial = facets.iter().all(|f| f.vertices.len() == dim);
    let mut seen = HashSet::new();
    for f in facets {
        for (i, &u) in f.vertices.iter().enumerate() {
            for &v in &f.vertices[i + 1..] {
                if !seen.insert((u, v)) {
                    continue;
                }
                if simplicial || spans_edge(facets, vf, u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    adj
}

fn spans_edge(facets: &[Facet], vf: &[Vec<usize>], u: usize, v: usize) -> bool {
    let common = intersect_sorted(&vf[u], &vf[v]);
    let mut acc: Option<Vec<usize>> = None;
    for g in common {
        acc = Some(match acc {
            None => facets[g].vertices.clone(),
            Some(a) => intersect_sorted(&a, &facets[g].vertices),
        });
        if acc.as_ref().is_some_and(|a| a.len() == 2) {
            return true;
        }
    }
    acc.is_some_and(|a| a.len() == 2)
}

pub(crate) fn is_connected(adj: &[Vec<usize>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == adj.len()
}

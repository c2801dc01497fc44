//! Randomized incremental (beneath-beyond) convex hull in fixed dimension.
//!
//! The boundary is maintained as a simplicial complex with neighbor links and
//! per-facet conflict lists. A point is visible from a simplex when it lies
//! more than `tol` beyond its hyperplane. Once every point is processed,
//! neighboring simplices on a common hyperplane are merged into a single
//! (possibly non-simplicial) facet.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use smallvec::SmallVec;

use super::linalg::{dot, hyperplane_normal, Vector, MAX_DIM};
use super::polytope::{incidence, skeleton_from_incidence, Facet, Halfspace, Polytope};
use super::TOL_GEOM;
use crate::error::{Degeneracy, Error, Result};
use crate::seed::rng_from;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy)]
pub struct HullOptions {
    /// Geometric tolerance for visibility and coplanarity decisions.
    pub tol: f64,
    /// Seed for the random insertion order.
    pub seed: u64,
}

impl Default for HullOptions {
    fn default() -> Self {
        HullOptions {
            tol: TOL_GEOM,
            seed: 0,
        }
    }
}

/// Convex hull with the default tolerance and insertion seed 0.
pub fn convex_hull(points: &[Vector]) -> Result<Polytope> {
    convex_hull_with(points, &HullOptions::default())
}

/// Convex hull of `points`. Vertices of the result are the extreme input
/// points in increasing input order; [`Polytope::source_indices`] maps them
/// back to `points`.
pub fn convex_hull_with(points: &[Vector], opts: &HullOptions) -> Result<Polytope> {
    let d = points.first().map(Vector::dim).unwrap_or(0);
    if !(2..=MAX_DIM).contains(&d) {
        return Err(Error::Parameter(format!("hull dimension must be in 2..={MAX_DIM}, got {d}")));
    }
    if let Some(bad) = points.iter().position(|p| p.dim() != d || !p.is_finite()) {
        return Err(Error::Parameter(format!("point {bad} is malformed")));
    }
    if points.len() < d + 1 {
        return Err(Error::Degenerate(Degeneracy::TooFewPoints));
    }
    let mut b = Builder::new(points, d, opts.tol);
    let simplex = b.initial_simplex()?;
    b.seed_faces(&simplex)?;

    let in_simplex: std::collections::HashSet<usize> = simplex.iter().copied().collect();
    let mut order: Vec<usize> = (0..points.len()).filter(|i| !in_simplex.contains(i)).collect();
    b.assign_initial(&order);
    order.shuffle(&mut rng_from(opts.seed));
    for p in order {
        if b.owner[p] != NONE {
            b.insert(p)?;
        }
    }
    b.finish()
}

struct Face {
    verts: SmallVec<[usize; MAX_DIM]>,
    neigh: SmallVec<[usize; MAX_DIM]>,
    normal: SmallVec<[f64; MAX_DIM]>,
    offset: f64,
    /// `(d − 1)!` times the simplex volume; ranks conditioning within a merged facet.
    weight: f64,
    outside: Vec<usize>,
    alive: bool,
    mark: u64,
}

struct Builder<'a> {
    pts: &'a [Vector],
    d: usize,
    tol: f64,
    faces: Vec<Face>,
    free: Vec<usize>,
    owner: Vec<usize>,
    interior: [f64; MAX_DIM],
    epoch: u64,
}

impl<'a> Builder<'a> {
    fn new(pts: &'a [Vector], d: usize, tol: f64) -> Self {
        Builder {
            pts,
            d,
            tol,
            faces: Vec::new(),
            free: Vec::new(),
            owner: vec![NONE; pts.len()],
            interior: [0.0; MAX_DIM],
            epoch: 0,
        }
    }

    #[inline]
    fn excess(&self, f: usize, p: usize) -> f64 {
        let face = &self.faces[f];
        dot(&face.normal, &self.pts[p]) - face.offset
    }

    /// Greedy farthest-point simplex: each new vertex maximizes its distance
    /// from the affine span of the previous ones.
    fn initial_simplex(&self) -> Result<Vec<usize>> {
        let d = self.d;
        let first = (0..self.pts.len())
            .min_by(|&a, &b| {
                self.pts[a]
                    .0
                    .partial_cmp(&self.pts[b].0)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap_or(0);
        let origin = &self.pts[first];
        let mut chosen = vec![first];
        let mut basis: Vec<Vec<f64>> = Vec::with_capacity(d);
        for _ in 0..d {
            let mut best = (0.0, NONE, Vec::new());
            for (i, p) in self.pts.iter().enumerate() {
                let mut r: Vec<f64> = p.iter().zip(origin.iter()).map(|(a, b)| a - b).collect();
                for e in &basis {
                    let c = dot(&r, e);
                    r.iter_mut().zip(e).for_each(|(x, y)| *x -= c * y);
                }
                let n = dot(&r, &r).sqrt();
                if n > best.0 {
                    best = (n, i, r);
                }
            }
            if best.0 <= self.tol || best.1 == NONE {
                return Err(Error::Degenerate(Degeneracy::Flat));
            }
            let (n, i, r) = best;
            basis.push(r.into_iter().map(|x| x / n).collect());
            chosen.push(i);
        }
        Ok(chosen)
    }

    fn seed_faces(&mut self, simplex: &[usize]) -> Result<()> {
        let d = self.d;
        for &v in simplex {
            for (c, x) in self.pts[v].iter().enumerate() {
                self.interior[c] += x / (d + 1) as f64;
            }
        }
        for j in 0..=d {
            let verts: SmallVec<[usize; MAX_DIM]> = (0..=d).filter(|&k| k != j).map(|k| simplex[k]).collect();
            let neigh: SmallVec<[usize; MAX_DIM]> = (0..=d).filter(|&k| k != j).collect();
            let f = self.alloc(verts, neigh);
            self.compute_plane(f)?;
        }
        Ok(())
    }

    fn assign_initial(&mut self, order: &[usize]) {
        let nfaces = self.faces.len();
        for &p in order {
            if let Some(f) = (0..nfaces).find(|&f| self.excess(f, p) > self.tol) {
                self.faces[f].outside.push(p);
                self.owner[p] = f;
            }
        }
    }

    fn alloc(&mut self, verts: SmallVec<[usize; MAX_DIM]>, neigh: SmallVec<[usize; MAX_DIM]>) -> usize {
        let face = Face {
            verts,
            neigh,
            normal: SmallVec::new(),
            offset: 0.0,
            weight: 0.0,
            outside: Vec::new(),
            alive: true,
            mark: 0,
        };
        if let Some(slot) = self.free.pop() {
            self.faces[slot] = face;
            slot
        } else {
            self.faces.push(face);
            self.faces.len() - 1
        }
    }

    fn compute_plane(&mut self, f: usize) -> Result<()> {
        let d = self.d;
        let pts: SmallVec<[&[f64]; MAX_DIM]> = self.faces[f].verts.iter().map(|&v| &self.pts[v][..]).collect();
        let mut normal = hyperplane_normal(&pts);
        let weight = dot(&normal, &normal).sqrt();
        if !(weight > self.tol * self.tol) {
            return Err(Error::Degenerate(Degeneracy::NearCoplanar));
        }
        normal.iter_mut().for_each(|x| *x /= weight);
        let mut offset = dot(&normal, pts[0]);
        let side = dot(&normal, &self.interior[..d]) - offset;
        if side.abs() <= self.tol {
            return Err(Error::Degenerate(Degeneracy::NearCoplanar));
        }
        if side > 0.0 {
            normal.iter_mut().for_each(|x| *x = -*x);
            offset = -offset;
        }
        let face = &mut self.faces[f];
        face.normal = normal;
        face.offset = offset;
        face.weight = weight;
        Ok(())
    }

    fn insert(&mut self, p: usize) -> Result<()> {
        let d = self.d;
        self.epoch += 1;
        let visible_mark = 2 * self.epoch;
        let hidden_mark = 2 * self.epoch + 1;

        let start = self.owner[p];
        self.faces[start].mark = visible_mark;
        let mut visible = vec![start];
        // (visible face, position of the dropped vertex, hidden neighbor)
        let mut horizon: Vec<(usize, usize, usize)> = Vec::new();
        let mut k = 0;
        while k < visible.len() {
            let f = visible[k];
            k += 1;
            for i in 0..d {
                let g = self.faces[f].neigh[i];
                let mark = self.faces[g].mark;
                if mark == visible_mark {
                    continue;
                }
                if mark != hidden_mark && self.excess(g, p) > self.tol {
                    self.faces[g].mark = visible_mark;
                    visible.push(g);
                } else {
                    self.faces[g].mark = hidden_mark;
                    horizon.push((f, i, g));
                }
            }
        }

        let mut created = Vec::with_capacity(horizon.len());
        let mut pending: HashMap<SmallVec<[usize; MAX_DIM]>, (usize, usize)> = HashMap::new();
        for &(f, i, g) in &horizon {
            let mut verts = self.faces[f].verts.clone();
            verts[i] = p;
            let mut neigh: SmallVec<[usize; MAX_DIM]> = SmallVec::from_elem(NONE, d);
            neigh[i] = g;
            let nf = self.alloc(verts, neigh);
            let back = self.faces[g]
                .neigh
                .iter()
                .position(|&x| x == f)
                .ok_or(Error::Degenerate(Degeneracy::NearCoplanar))?;
            self.faces[g].neigh[back] = nf;
            self.compute_plane(nf)?;
            for t in 0..d {
                if t == i {
                    continue;
                }
                let mut key: SmallVec<[usize; MAX_DIM]> = self.faces[nf]
                    .verts
                    .iter()
                    .enumerate()
                    .filter(|&(s, _)| s != t)
                    .map(|(_, &v)| v)
                    .collect();
                key.sort_unstable();
                match pending.remove(&key) {
                    Some((other, slot)) => {
                        self.faces[nf].neigh[t] = other;
                        self.faces[other].neigh[slot] = nf;
                    }
                    None => {
                        pending.insert(key, (nf, t));
                    }
                }
            }
            created.push(nf);
        }
        if !pending.is_empty() {
            return Err(Error::Degenerate(Degeneracy::NearCoplanar));
        }

        for &f in &visible {
            let outside = std::mem::take(&mut self.faces[f].outside);
            for q in outside {
                if q == p {
                    continue;
                }
                self.owner[q] = NONE;
                for &nf in &created {
                    if self.excess(nf, q) > self.tol {
                        self.faces[nf].outside.push(q);
                        self.owner[q] = nf;
                        break;
                    }
                }
            }
        }
        self.owner[p] = NONE;
        for f in visible {
            self.faces[f].alive = false;
            self.free.push(f);
        }
        Ok(())
    }

    fn finish(self) -> Result<Polytope> {
        let d = self.d;
        let alive: Vec<usize> = (0..self.faces.len()).filter(|&f| self.faces[f].alive).collect();
        let mut parent: Vec<usize> = (0..self.faces.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for &f in &alive {
            for i in 0..d {
                let g = self.faces[f].neigh[i];
                if g < f {
                    continue;
                }
                let fv = &self.faces[f].verts;
                let Some(&w) = self.faces[g].verts.iter().find(|v| !fv.contains(v)) else {
                    continue;
                };
                if self.excess(f, w).abs() <= self.tol && self.excess(g, fv[i]).abs() <= self.tol {
                    let (a, b) = (find(&mut parent, f), find(&mut parent, g));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }

        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for &f in &alive {
            let r = find(&mut parent, f);
            groups.entry(r).or_default().push(f);
        }
        let mut merged: Vec<(Vec<usize>, usize, Vec<usize>)> = groups
            .into_values()
            .map(|members| {
                let mut vs: Vec<usize> = members.iter().flat_map(|&f| self.faces[f].verts.iter().copied()).collect();
                vs.sort_unstable();
                vs.dedup();
                let best = *members
                    .iter()
                    .max_by(|&&a, &&b| self.faces[a].weight.total_cmp(&self.faces[b].weight))
                    .expect("nonempty group");
                (vs, best, members)
            })
            .collect();
        merged.sort_unstable_by(|a, b| a.0.cmp(&b.0));

        // a boundary point is a vertex only if the facets through it pin it down
        let mut through: HashMap<usize, Vec<usize>> = HashMap::new();
        for (gi, m) in merged.iter().enumerate() {
            for &v in &m.0 {
                through.entry(v).or_default().push(gi);
            }
        }
        let mut used: Vec<usize> = through
            .iter()
            .filter(|(_, gs)| {
                gs.len() >= d && normals_span(gs.iter().map(|&g| &self.faces[merged[g].1].normal[..]), d)
            })
            .map(|(&v, _)| v)
            .collect();
        used.sort_unstable();
        for m in &mut merged {
            m.0.retain(|v| used.binary_search(v).is_ok());
        }
        let mut remap = vec![NONE; self.pts.len()];
        for (new, &old) in used.iter().enumerate() {
            remap[old] = new;
        }
        let mut group_of: HashMap<usize, usize> = HashMap::new();
        for (gi, m) in merged.iter().enumerate() {
            for &f in &m.2 {
                group_of.insert(f, gi);
            }
        }
        let mut ridges = Vec::new();
        for &f in &alive {
            let a = group_of[&f];
            for &g in &self.faces[f].neigh {
                let b = group_of[&g];
                if a < b {
                    ridges.push((a, b));
                }
            }
        }
        let facets: Vec<Facet> = merged
            .iter()
            .map(|(vs, best, _)| {
                let face = &self.faces[*best];
                Facet {
                    halfspace: Halfspace {
                        normal: Vector(face.normal.to_vec()),
                        offset: face.offset,
                    },
                    vertices: vs.iter().map(|&v| remap[v]).collect(),
                }
            })
            .collect();
        let vertices: Vec<Vector> = used.iter().map(|&i| self.pts[i].clone()).collect();
        let vf = incidence(vertices.len(), &facets);
        let skeleton = skeleton_from_incidence(d, &facets, &vf, vertices.len());
        Ok(Polytope::assemble(d, vertices, facets, ridges, skeleton, used, self.tol))
    }
}

/// True iff the given unit normals span ℝ^d (Gram–Schmidt rank test).
fn normals_span<'n>(normals: impl Iterator<Item = &'n [f64]>, d: usize) -> bool {
    let mut basis: Vec<SmallVec<[f64; MAX_DIM]>> = Vec::with_capacity(d);
    for n in normals {
        let mut r: SmallVec<[f64; MAX_DIM]> = SmallVec::from_slice(n);
        for e in &basis {
            let c = dot(&r, e);
            r.iter_mut().zip(e.iter()).for_each(|(x, y)| *x -= c * y);
        }
        let len = dot(&r, &r).sqrt();
        if len > 1e-7 {
            r.iter_mut().for_each(|x| *x /= len);
            basis.push(r);
            if basis.len() == d {
                return true;
            }
        }
    }
    false
}

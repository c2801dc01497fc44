use super::linalg::Vector;
use super::polytope::{Facet, Halfspace, Polytope};
use crate::error::{Error, Result};

/// Polar dual `{y : x · y ≤ 1 for all x ∈ P}`.
///
/// Facet `(u, h)` of `P` becomes the vertex `u / h`, and vertex `v` becomes
/// the facet `{x : v · x ≤ 1}` whose vertices are the facets of `P` through
/// `v`. Edges of `P` become ridges of the dual and vice versa.
pub fn polar_dual(p: &Polytope) -> Result<Polytope> {
    if !p.contains_origin() {
        return Err(Error::Polarity);
    }
    let d = p.dim();
    let vertices: Vec<Vector> = p
        .facets()
        .iter()
        .map(|f| f.halfspace.normal.scaled(1.0 / f.halfspace.offset))
        .collect();
    let facets: Vec<Facet> = p
        .vertices()
        .iter()
        .zip(p.vertex_facets())
        .map(|(v, fs)| {
            let n = v.norm();
            Facet {
                halfspace: Halfspace {
                    normal: v.scaled(1.0 / n),
                    offset: 1.0 / n,
                },
                vertices: fs.clone(),
            }
        })
        .collect();
    let ridges = p
        .skeleton()
        .iter()
        .enumerate()
        .flat_map(|(a, adj)| adj.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
        .collect();
    let mut skeleton = vec![Vec::new(); vertices.len()];
    for &(a, b) in p.ridges() {
        skeleton[a].push(b);
        skeleton[b].push(a);
    }
    let source = (0..vertices.len()).collect();
    Ok(Polytope::assemble(d, vertices, facets, ridges, skeleton, source, p.tol()))
}

//! JSON file format for polytopes.
//!
//! Coordinates are written with shortest round-trip decimal formatting, so a
//! write/read cycle reproduces every `f64` bit for bit.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::linalg::Vector;
use super::polytope::{Facet, Flags, Halfspace, Polytope};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub dim: usize,
    pub vertices: Vec<Vec<f64>>,
    pub facets: Vec<FacetRecord>,
    pub flags: Flags,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacetRecord {
    pub normal: Vec<f64>,
    pub offset: f64,
    pub vertex_indices: Vec<usize>,
}

impl From<&Polytope> for PolytopeFile {
    fn from(p: &Polytope) -> Self {
        PolytopeFile {
            dim: p.dim(),
            vertices: p.vertices().iter().map(|v| v.0.clone()).collect(),
            facets: p
                .facets()
                .iter()
                .map(|f| FacetRecord {
                    normal: f.halfspace.normal.0.clone(),
                    offset: f.halfspace.offset,
                    vertex_indices: f.vertices.clone(),
                })
                .collect(),
            flags: p.flags(),
        }
    }
}

impl PolytopeFile {
    pub fn into_polytope(self) -> Result<Polytope> {
        let facets = self
            .facets
            .into_iter()
            .map(|f| Facet {
                halfspace: Halfspace {
                    normal: Vector(f.normal),
                    offset: f.offset,
                },
                vertices: f.vertex_indices,
            })
            .collect();
        let vertices = self.vertices.into_iter().map(Vector).collect();
        Polytope::from_facets(self.dim, vertices, facets)
    }
}

pub fn to_json(p: &Polytope) -> Result<String> {
    Ok(serde_json::to_string_pretty(&PolytopeFile::from(p))?)
}

pub fn from_json(s: &str) -> Result<Polytope> {
    serde_json::from_str::<PolytopeFile>(s)?.into_polytope()
}

pub fn write_polytope(p: &Polytope, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, to_json(p)?).map_err(|e| Error::io(path, e))
}

pub fn read_polytope(path: impl AsRef<Path>) -> Result<Polytope> {
    let path = path.as_ref();
    let s = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    from_json(&s)
}

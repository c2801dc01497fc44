//! Convex hulls, polarity, face counts and metric functionals in ℝ^d.

mod dual;
mod hull;
mod io;
mod lattice;
pub mod linalg;
mod metrics;
pub mod oracle;
mod polytope;
mod sphere;

pub use dual::polar_dual;
pub use hull::{convex_hull, convex_hull_with, HullOptions};
pub use io::{from_json, read_polytope, to_json, write_polytope, FacetRecord, PolytopeFile};
pub use lattice::{f_vector, FVector};
pub use linalg::Vector;
pub use metrics::{metrics, volume, Metrics};
pub use polytope::{Facet, Flags, Halfspace, Polytope};
pub use sphere::{random_unit_vector, sample_unit_sphere};

/// Global geometric tolerance: distances and normalized determinants within
/// this band of zero are treated as degenerate.
pub const TOL_GEOM: f64 = 1e-9;

/// Sorted neighbor lists of the 1-skeleton.
pub fn one_skeleton(p: &Polytope) -> Vec<Vec<usize>> {
    p.skeleton().to_vec()
}

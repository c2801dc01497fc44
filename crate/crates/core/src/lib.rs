//! Two-step random polytopes.
//!
//! `P` is the convex hull of `m` uniform points on the unit sphere in ℝ^d,
//! `P°` its polar dual, and `Q` the convex hull of a binomial sample of the
//! vertices of `P°`. The crate provides the geometry kernel, the random
//! model, closed-form bounds, graph oracles and a reproducible experiment
//! harness.

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod harness;
pub mod model;
pub mod seed;

pub use error::{Degeneracy, Error, Result};

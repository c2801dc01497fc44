use std::path::PathBuf;

use thiserror::Error;

/// Why a point set failed to produce a full-dimensional hull.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degeneracy {
    /// Fewer than `d + 1` input points.
    TooFewPoints,
    /// The points do not affinely span the ambient space.
    Flat,
    /// A facet or orientation decision fell inside the tolerance band.
    NearCoplanar,
    /// The origin is not strictly inside the hull.
    OriginOutside,
}

impl Degeneracy {
    pub fn as_str(self) -> &'static str {
        match self {
            Degeneracy::TooFewPoints => "too-few-points",
            Degeneracy::Flat => "flat",
            Degeneracy::NearCoplanar => "near-coplanar",
            Degeneracy::OriginOutside => "origin-outside",
        }
    }
}

impl std::fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("degenerate input: {0}")]
    Degenerate(Degeneracy),

    #[error("polarity requires the origin strictly inside the polytope")]
    Polarity,

    #[error("metrics are undefined unless the origin is strictly inside the polytope")]
    MetricsUndefined,

    #[error("classification requires the origin strictly inside Q")]
    Classification,

    #[error("model error: {0}")]
    Model(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("value out of range: {0}")]
    Range(String),

    #[error("malformed polytope: {0}")]
    Malformed(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

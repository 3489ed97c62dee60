use thiserror::Error;

use crate::geometry::Point2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("non-finite coordinate in {0}")]
    NonFinite(Point2),
}

/// Failures of a single distance query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("degenerate triangle (area <= 1e-12)")]
    DegenerateInput,
    #[error("relative velocity is zero; supply a separation axis")]
    ZeroVelocity,
    #[error("non-finite relative velocity")]
    NonFiniteVelocity,
    #[error("support direction is zero")]
    ZeroDirection,
    #[error("triangles penetrate")]
    Penetrating,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BenchError {
    #[error("scene needs at least one object")]
    EmptyScene,
    #[error("object {0} has no name")]
    UnnamedObject(usize),
    #[error("duplicate object name {0:?}")]
    DuplicateName(String),
    #[error("object {0:?} is degenerate")]
    DegenerateObject(String),
    #[error("separation must be positive and finite, got {0}")]
    BadSeparation(f64),
    #[error("pair index ({0}, {1}) out of range or self-paired")]
    BadPair(usize, usize),
    #[error("placing {mover} against {fixed}: reached {achieved} instead of {target}")]
    PlacementFailure {
        mover: String,
        fixed: String,
        target: f64,
        achieved: f64,
    },
    #[error("repeats must be at least 1")]
    ZeroRepeats,
    #[error("incomplete records: {0}")]
    IncompleteRecords(String),
}

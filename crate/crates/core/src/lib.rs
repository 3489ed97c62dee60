//! Narrow-phase distance queries between 2D triangles.
//!
//! The centerpiece is [`dyop::dyop_distance`], which builds the gap box
//! between two facing triangle bounding boxes, takes its midpoint as a
//! dynamic origin point, and measures only the features nearest to it.
//! [`geometry::brute_force_triangle_distance`] is the exact reference;
//! [`baselines`] holds GJK and a Lin-Canny feature walker for comparison, and
//! [`benchmark`] runs the ten-object, ninety-pairing timing protocol.

pub mod baselines;
pub mod benchmark;
pub mod dyop;
pub mod error;
pub mod geometry;
pub mod sampling;

pub use error::{BenchError, GeometryError, QueryError};

//! Comparison algorithms for the benchmark: distance GJK and a Lin-Canny
//! style closest-feature walk, both specialised to planar triangles.

mod gjk;
mod lin_canny;

pub use gjk::{
    gjk_distance, support, GjkDistance, Simplex, SimplexVertex, MAX_ITERATIONS, REL_TOLERANCE,
};
pub use lin_canny::{lin_canny_distance, lin_canny_trace, FeaturePair, LinCannyDistance, WalkStep};

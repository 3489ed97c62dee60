//! Planar primitives, box fitting and the exhaustive distance oracle.

mod oracle;
mod segment;
mod types;

pub use oracle::{brute_force_triangle_distance, triangles_overlap};
pub use segment::{
    point_on_segment, point_segment_distance, segment_segment_distance, segments_intersect,
    PointSegment, SegmentPair,
};
pub use types::{
    Aabb, Axis, DistanceResult, FeatureId, FeatureKind, Point2, Segment, TestCounters, Triangle,
    Vector2, DEGENERATE_AREA,
};

/// Tightest axis-aligned box around `tri`.
pub fn aabb_of_triangle(tri: &Triangle) -> Aabb {
    tri.aabb()
}

//! Exhaustive triangle-triangle distance used as ground truth by every other
//! algorithm in the crate.

use super::segment::{segment_segment_distance, segments_intersect};
use super::types::{DistanceResult, FeatureId, TestCounters, Triangle};

/// True when the closed triangles share at least one point.
pub fn triangles_overlap(a: &Triangle, b: &Triangle) -> bool {
    for i in 0..3 {
        for j in 0..3 {
            if segments_intersect(a.edge(i), b.edge(j)) {
                return true;
            }
        }
    }
    b.contains(a.vertex(0)) || a.contains(b.vertex(0))
}

/// Exact separation distance between two triangles.
///
/// Sweeps all nine edge pairs, which covers every vertex-vertex and
/// vertex-edge pair as well. Overlapping triangles report distance 0 with
/// coincident closest points. Ties go to the lowest
/// `(feature_a.index, feature_b.index)`.
pub fn brute_force_triangle_distance(a: &Triangle, b: &Triangle) -> DistanceResult {
    let counters = TestCounters {
        vv_tests: 0,
        ve_tests: 0,
        ee_tests: 9,
    };
    let mut best: Option<DistanceResult> = None;
    for i in 0..3 {
        for j in 0..3 {
            let pair = segment_segment_distance(a.edge(i), b.edge(j));
            let candidate = DistanceResult {
                distance: pair.distance,
                point_a: pair.point_a,
                point_b: pair.point_b,
                feature_a: FeatureId::on_edge(i, pair.t_a),
                feature_b: FeatureId::on_edge(j, pair.t_b),
                counters,
            };
            if best.as_ref().is_none_or(|b| candidate.beats(b)) {
                best = Some(candidate);
            }
        }
    }
    let best = best.expect("nine edge pairs evaluated");
    if best.distance == 0.0 {
        return best;
    }
    // No edge contact: the only remaining overlap is full containment.
    if let Some(i) = (0..3).find(|&i| b.contains(a.vertex(i))) {
        let p = a.vertex(i);
        return DistanceResult {
            distance: 0.0,
            point_a: p,
            point_b: p,
            feature_a: FeatureId::vertex(i),
            feature_b: FeatureId::face(),
            counters,
        };
    }
    if let Some(j) = (0..3).find(|&j| a.contains(b.vertex(j))) {
        let p = b.vertex(j);
        return DistanceResult {
            distance: 0.0,
            point_a: p,
            point_b: p,
            feature_a: FeatureId::face(),
            feature_b: FeatureId::vertex(j),
            counters,
        };
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{FeatureKind, Point2, Vector2};

    fn tri(c: [[f64; 2]; 3]) -> Triangle {
        Triangle::from_coords(c).unwrap()
    }

    fn unit() -> Triangle {
        tri([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    }

    #[test]
    fn overlap_examples() {
        let a = tri([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]]);
        assert!(!triangles_overlap(
            &a,
            &a.translated(Vector2::new(10.0, 0.0))
        ));
        assert!(triangles_overlap(&a, &a));
        let big = tri([[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]]);
        let small = tri([[1.0, 1.0], [2.0, 1.0], [1.0, 2.0]]);
        assert!(triangles_overlap(&big, &small));
        assert!(triangles_overlap(&small, &big));
    }

    #[test]
    fn shifted_copy_distance_two() {
        let a = unit();
        let b = a.translated(Vector2::new(3.0, 0.0));
        let r = brute_force_triangle_distance(&a, &b);
        assert_eq!(r.distance, 2.0);
        assert_eq!(r.point_a, Point2::new(1.0, 0.0));
        assert_eq!(r.point_b, Point2::new(3.0, 0.0));
        assert_eq!(r.feature_a, FeatureId::vertex(1));
        assert_eq!(r.feature_b, FeatureId::vertex(0));
        assert_eq!(r.counters.ee_tests, 9);
    }

    #[test]
    fn diagonal_pair_hits_edge_interior() {
        // Frozen from a dense boundary-sampling script: 3/sqrt(2),
        // realized between (0.5, 0.5) on the hypotenuse and vertex (2, 2).
        let a = unit();
        let b = tri([[2.0, 2.0], [3.0, 2.0], [2.0, 3.0]]);
        let r = brute_force_triangle_distance(&a, &b);
        assert!((r.distance - 2.121_320_343_559_642_4).abs() < 1e-12);
        assert!((r.point_a.x - 0.5).abs() < 1e-12 && (r.point_a.y - 0.5).abs() < 1e-12);
        assert_eq!(r.point_b, Point2::new(2.0, 2.0));
        assert_eq!(r.feature_a, FeatureId::edge(1));
        assert_eq!(r.feature_b, FeatureId::vertex(0));
    }

    #[test]
    fn overlap_short_circuits_to_zero() {
        let a = unit();
        let b = a.translated(Vector2::new(0.25, 0.25));
        let r = brute_force_triangle_distance(&a, &b);
        assert_eq!(r.distance, 0.0);
        assert_eq!(r.point_a, r.point_b);
        assert_eq!(r.counters.ee_tests, 9);
    }

    #[test]
    fn containment_reports_face() {
        let big = tri([[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]]);
        let small = tri([[1.0, 1.0], [2.0, 1.0], [1.0, 2.0]]);
        let r = brute_force_triangle_distance(&big, &small);
        assert_eq!(r.distance, 0.0);
        assert_eq!(r.feature_a.kind, FeatureKind::Face);
        assert_eq!(r.point_b, Point2::new(1.0, 1.0));
        let r = brute_force_triangle_distance(&small, &big);
        assert_eq!(r.feature_b.kind, FeatureKind::Face);
    }

    #[test]
    fn degenerate_inputs_still_measure() {
        let a = unit();
        let sliver = tri([[3.0, 0.0], [4.0, 0.0], [5.0, 0.0]]);
        assert!(sliver.is_degenerate());
        let r = brute_force_triangle_distance(&a, &sliver);
        assert_eq!(r.distance, 2.0);
        let point = tri([[3.0, 0.5]; 3]);
        let r = brute_force_triangle_distance(&a, &point);
        // nearest feature is vertex (1, 0)
        assert!((r.distance - 4.25f64.sqrt()).abs() < 1e-12);
        // a collinear "triangle" does not swallow distant collinear points
        let far = tri([[10.0, 0.0], [11.0, 0.0], [12.0, 0.0]]);
        assert!(!triangles_overlap(&sliver, &far));
    }

    #[test]
    fn touching_vertex_is_contact() {
        let a = unit();
        let b = tri([[1.0, 0.0], [2.0, 0.0], [2.0, 1.0]]);
        let r = brute_force_triangle_distance(&a, &b);
        assert_eq!(r.distance, 0.0);
        assert!(triangles_overlap(&a, &b));
    }
}

//! Dynamic origin point (DyOP) distance query.
//!
//! Two triangles approaching along an axis face each other across a gap. The
//! gap box is bounded along the movement axis by the facing extremes of the
//! two bounding boxes and across it by the higher triangle's minimum and the
//! lower triangle's maximum. Its midpoint is the dynamic origin point. Only
//! the two vertices of each triangle nearest to that point, and the edge
//! joining them, are measured: 4 vertex-vertex, 4 vertex-edge and 1 edge-edge
//! evaluation per query instead of the full feature sweep.
//!
//! The pruning is not guaranteed exact. The result is always an upper bound
//! on the true separation because every candidate measures a real pair of
//! points on the two triangles.

use serde::{Deserialize, Serialize};

use crate::error::QueryError;
use crate::geometry::{
    point_segment_distance, segment_segment_distance, Aabb, Axis, DistanceResult, FeatureId,
    Point2, TestCounters, Triangle, Vector2,
};

/// Axis the relative motion is mostly along.
pub type MovementAxis = Axis;

/// Identifies one of the two query triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Role {
    A,
    B,
}

/// Gap box between two facing triangles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InternalAabb {
    pub bounds: Aabb,
    pub axis: MovementAxis,
    /// Triangle further along the movement axis.
    pub leading: Role,
    /// Triangle with the greater extent on the perpendicular axis.
    pub higher: Role,
    /// Facing vertex of A (its extreme toward B along the axis).
    pub facing_a: usize,
    pub facing_b: usize,
    /// The bounding boxes overlap along the movement axis; the gap interval
    /// was clamped to zero width.
    pub degenerate_gap: bool,
    /// The perpendicular interval was inverted (boxes disjoint across the
    /// axis) and clamped to zero width. Does not invalidate the pruning.
    pub perpendicular_clamped: bool,
}

/// Midpoint of the gap box; the pruning reference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DyopPoint {
    pub point: Point2,
}

/// Two retained vertices of one triangle and the edge joining them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidates {
    /// Nearest vertex first.
    pub vertices: [usize; 2],
    pub edge: usize,
}

impl Candidates {
    pub fn contains_vertex(&self, index: usize) -> bool {
        self.vertices.contains(&index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSet {
    pub a: Candidates,
    pub b: Candidates,
}

/// Full outcome of [`dyop_distance`], including the intermediate construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DyopDistance {
    pub result: DistanceResult,
    pub internal: InternalAabb,
    pub origin: DyopPoint,
    pub candidates: CandidateSet,
    /// Set when the boxes overlap along the movement axis, i.e. the
    /// triangles are not in the facing configuration the pruning assumes.
    /// Callers wanting an exact answer should fall back to the oracle.
    pub overlapping_boxes: bool,
}

/// X when `|dx| >= |dy|`, otherwise Y.
pub fn dominant_axis(relative_velocity: Vector2) -> Result<MovementAxis, QueryError> {
    if !relative_velocity.is_finite() {
        return Err(QueryError::NonFiniteVelocity);
    }
    if relative_velocity.dx == 0.0 && relative_velocity.dy == 0.0 {
        return Err(QueryError::ZeroVelocity);
    }
    if relative_velocity.dx.abs() >= relative_velocity.dy.abs() {
        Ok(Axis::X)
    } else {
        Ok(Axis::Y)
    }
}

/// Which triangle sits further along `axis`. Box centers decide, then box
/// minima; on a full tie B leads.
fn leading_role(a: &Aabb, b: &Aabb, axis: Axis) -> Role {
    let (ca, cb) = (a.center().coord(axis), b.center().coord(axis));
    let (ma, mb) = (a.min.coord(axis), b.min.coord(axis));
    if ca > cb || (ca == cb && ma > mb) {
        Role::A
    } else {
        Role::B
    }
}

/// Greater maximum on the perpendicular axis, then greater minimum; on a
/// full tie A is higher.
fn higher_role(a: &Aabb, b: &Aabb, perp: Axis) -> Role {
    let (xa, xb) = (a.max.coord(perp), b.max.coord(perp));
    let (na, nb) = (a.min.coord(perp), b.min.coord(perp));
    if xb > xa || (xb == xa && nb > na) {
        Role::B
    } else {
        Role::A
    }
}

fn extreme_vertex(tri: &Triangle, axis: Axis, want_max: bool) -> usize {
    let mut best = 0;
    for i in 1..3 {
        let c = tri.vertex(i).coord(axis);
        let b = tri.vertex(best).coord(axis);
        if (want_max && c > b) || (!want_max && c < b) {
            best = i;
        }
    }
    best
}

/// The vertex of each triangle that faces the other along `axis`: the
/// trailing triangle's maximum and the leading triangle's minimum. Ties go to
/// the lower vertex index.
pub fn nearest_facing_vertices(a: &Triangle, b: &Triangle, axis: MovementAxis) -> (usize, usize) {
    match leading_role(&a.aabb(), &b.aabb(), axis) {
        Role::B => (
            extreme_vertex(a, axis, true),
            extreme_vertex(b, axis, false),
        ),
        Role::A => (
            extreme_vertex(a, axis, false),
            extreme_vertex(b, axis, true),
        ),
    }
}

/// Orders `(lo, hi)`; an inverted interval collapses to its midpoint.
fn clamp_interval(lo: f64, hi: f64) -> (f64, f64, bool) {
    if lo <= hi {
        (lo, hi, false)
    } else {
        let mid = (lo + hi) / 2.0;
        (mid, mid, true)
    }
}

fn corner(axis: Axis, along: f64, across: f64) -> Point2 {
    match axis {
        Axis::X => Point2::new(along, across),
        Axis::Y => Point2::new(across, along),
    }
}

/// Builds the gap box between two facing triangles.
pub fn build_internal_aabb(
    a: &Triangle,
    b: &Triangle,
    axis: MovementAxis,
) -> Result<InternalAabb, QueryError> {
    if a.is_degenerate() || b.is_degenerate() {
        return Err(QueryError::DegenerateInput);
    }
    let (box_a, box_b) = (a.aabb(), b.aabb());
    let leading = leading_role(&box_a, &box_b, axis);
    let (facing_a, facing_b) = nearest_facing_vertices(a, b, axis);
    let (fa, fb) = (
        a.vertex(facing_a).coord(axis),
        b.vertex(facing_b).coord(axis),
    );
    let (gap_lo, gap_hi) = match leading {
        Role::B => (fa, fb),
        Role::A => (fb, fa),
    };
    let (gap_lo, gap_hi, degenerate_gap) = clamp_interval(gap_lo, gap_hi);

    let perp = axis.perpendicular();
    let higher = higher_role(&box_a, &box_b, perp);
    let (upper, lower) = match higher {
        Role::A => (&box_a, &box_b),
        Role::B => (&box_b, &box_a),
    };
    let (perp_lo, perp_hi, perpendicular_clamped) =
        clamp_interval(upper.min.coord(perp), lower.max.coord(perp));

    Ok(InternalAabb {
        bounds: Aabb::new(corner(axis, gap_lo, perp_lo), corner(axis, gap_hi, perp_hi)),
        axis,
        leading,
        higher,
        facing_a,
        facing_b,
        degenerate_gap,
        perpendicular_clamped,
    })
}

/// Midpoint of the gap box.
pub fn compute_dyop(internal: &InternalAabb) -> DyopPoint {
    let Aabb { min, max } = internal.bounds;
    DyopPoint {
        point: Point2::new((min.x + max.x) / 2.0, (min.y + max.y) / 2.0),
    }
}

/// The two vertices of `tri` nearest to the origin point, nearest first
/// (ties to the lower index), and the edge joining them.
pub fn select_candidates(tri: &Triangle, origin: &DyopPoint) -> Candidates {
    let d: [f64; 3] = std::array::from_fn(|i| tri.vertex(i).distance_squared(origin.point));
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]).then(i.cmp(&j)));
    let vertices = [order[0], order[1]];
    let dropped = order[2];
    Candidates {
        vertices,
        edge: (dropped + 1) % 3,
    }
}

/// Shortest distance between `a` and `b` over the candidate features picked
/// around the dynamic origin point.
///
/// `relative_velocity` is the motion of `a` relative to `b`; only its
/// dominant axis matters.
pub fn dyop_distance(
    a: &Triangle,
    b: &Triangle,
    relative_velocity: Vector2,
) -> Result<DyopDistance, QueryError> {
    if a.is_degenerate() || b.is_degenerate() {
        return Err(QueryError::DegenerateInput);
    }
    let axis = dominant_axis(relative_velocity)?;
    let internal = build_internal_aabb(a, b, axis)?;
    let origin = compute_dyop(&internal);
    let candidates = CandidateSet {
        a: select_candidates(a, &origin),
        b: select_candidates(b, &origin),
    };
    let result = measure_candidates(a, b, &candidates);
    Ok(DyopDistance {
        result,
        internal,
        origin,
        candidates,
        overlapping_boxes: internal.degenerate_gap,
    })
}

fn measure_candidates(a: &Triangle, b: &Triangle, c: &CandidateSet) -> DistanceResult {
    let counters = TestCounters {
        vv_tests: 4,
        ve_tests: 4,
        ee_tests: 1,
    };
    let edge_a = a.edge(c.a.edge);
    let edge_b = b.edge(c.b.edge);

    let mut best: Option<DistanceResult> = None;
    let mut offer = |r: DistanceResult| {
        if best.as_ref().is_none_or(|b| r.beats(b)) {
            best = Some(r);
        }
    };

    for &i in &c.a.vertices {
        for &j in &c.b.vertices {
            let (p, q) = (a.vertex(i), b.vertex(j));
            offer(DistanceResult {
                distance: p.distance(q),
                point_a: p,
                point_b: q,
                feature_a: FeatureId::vertex(i),
                feature_b: FeatureId::vertex(j),
                counters,
            });
        }
    }
    for &i in &c.a.vertices {
        let p = a.vertex(i);
        let ps = point_segment_distance(p, edge_b);
        offer(DistanceResult {
            distance: ps.distance,
            point_a: p,
            point_b: ps.closest,
            feature_a: FeatureId::vertex(i),
            feature_b: FeatureId::on_edge(c.b.edge, ps.t),
            counters,
        });
    }
    for &j in &c.b.vertices {
        let q = b.vertex(j);
        let ps = point_segment_distance(q, edge_a);
        offer(DistanceResult {
            distance: ps.distance,
            point_a: ps.closest,
            point_b: q,
            feature_a: FeatureId::on_edge(c.a.edge, ps.t),
            feature_b: FeatureId::vertex(j),
            counters,
        });
    }
    let ss = segment_segment_distance(edge_a, edge_b);
    offer(DistanceResult {
        distance: ss.distance,
        point_a: ss.point_a,
        point_b: ss.point_b,
        feature_a: FeatureId::on_edge(c.a.edge, ss.t_a),
        feature_b: FeatureId::on_edge(c.b.edge, ss.t_b),
        counters,
    });
    best.expect("nine candidate tests")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::brute_force_triangle_distance;

    fn tri(c: [[f64; 2]; 3]) -> Triangle {
        Triangle::from_coords(c).unwrap()
    }

    #[test]
    fn dominant_axis_examples() {
        assert_eq!(dominant_axis(Vector2::new(1.0, 0.2)), Ok(Axis::X));
        assert_eq!(dominant_axis(Vector2::new(0.1, -5.0)), Ok(Axis::Y));
        assert_eq!(dominant_axis(Vector2::new(1.0, 1.0)), Ok(Axis::X));
        assert_eq!(dominant_axis(Vector2::new(-1.0, 1.0)), Ok(Axis::X));
        assert_eq!(
            dominant_axis(Vector2::new(0.0, 0.0)),
            Err(QueryError::ZeroVelocity)
        );
        assert_eq!(
            dominant_axis(Vector2::new(f64::NAN, 0.0)),
            Err(QueryError::NonFiniteVelocity)
        );
    }

    #[test]
    fn facing_vertices_along_x() {
        let a = tri([[0.0, 0.0], [1.0, 2.0], [2.0, 1.0]]);
        let b = tri([[4.0, 0.0], [5.0, 2.0], [6.0, 1.0]]);
        let (i, j) = nearest_facing_vertices(&a, &b, Axis::X);
        assert_eq!(a.vertex(i), Point2::new(2.0, 1.0));
        assert_eq!(b.vertex(j), Point2::new(4.0, 0.0));
        // roles follow geometry, not argument order
        let (j2, i2) = nearest_facing_vertices(&b, &a, Axis::X);
        assert_eq!((i2, j2), (i, j));
    }

    #[test]
    fn facing_vertices_along_y() {
        let lower = tri([[0.0, 0.0], [2.0, 0.0], [1.0, 1.5]]);
        let upper = lower.translated(Vector2::new(0.0, 4.0));
        let (i, j) = nearest_facing_vertices(&lower, &upper, Axis::Y);
        assert_eq!(lower.vertex(i), Point2::new(1.0, 1.5));
        assert_eq!(upper.vertex(j), Point2::new(0.0, 4.0));
    }

    #[test]
    fn facing_vertex_tie_takes_lower_index() {
        let a = tri([[0.0, 0.0], [2.0, 0.0], [2.0, 1.0]]);
        let b = tri([[5.0, 0.0], [6.0, 0.0], [5.0, 1.0]]);
        let (i, j) = nearest_facing_vertices(&a, &b, Axis::X);
        assert_eq!((i, j), (1, 0));
    }

    #[test]
    fn internal_box_worked_example() {
        // Gap x in [2, 5]. B reaches y = 5 > 4 so B is higher: y runs from
        // B's minimum (0) to A's maximum (4).
        let a = tri([[0.0, 0.0], [2.0, 3.0], [1.0, 4.0]]);
        let b = tri([[5.0, 1.0], [7.0, 0.0], [6.0, 5.0]]);
        let ib = build_internal_aabb(&a, &b, Axis::X).unwrap();
        assert_eq!(ib.bounds.min, Point2::new(2.0, 0.0));
        assert_eq!(ib.bounds.max, Point2::new(5.0, 4.0));
        assert_eq!(ib.leading, Role::B);
        assert_eq!(ib.higher, Role::B);
        assert!(!ib.degenerate_gap && !ib.perpendicular_clamped);
        assert_eq!(compute_dyop(&ib).point, Point2::new(3.5, 2.0));
    }

    #[test]
    fn upper_left_against_lower_right() {
        // ABC upper-left, PQR lower-right: box from ABC's max x to PQR's
        // min x, and from ABC's min y to PQR's max y.
        let abc = tri([[1.0, 2.0], [0.5, 5.0], [2.0, 3.5]]);
        let pqr = tri([[4.0, 0.0], [5.0, 3.0], [6.0, 0.0]]);
        let ib = build_internal_aabb(&abc, &pqr, Axis::X).unwrap();
        assert_eq!(ib.higher, Role::A);
        assert_eq!(ib.bounds.min, Point2::new(2.0, 2.0));
        assert_eq!(ib.bounds.max, Point2::new(4.0, 3.0));
        let o = compute_dyop(&ib);
        assert_eq!(o.point, Point2::new((4.0 + 2.0) / 2.0, (3.0 + 2.0) / 2.0));
    }

    #[test]
    fn overlapping_boxes_clamp_gap() {
        let a = tri([[0.0, 0.0], [3.0, 0.0], [0.0, 1.0]]);
        let b = tri([[2.0, 2.0], [5.0, 2.0], [2.0, 3.0]]);
        let ib = build_internal_aabb(&a, &b, Axis::X).unwrap();
        assert!(ib.degenerate_gap);
        assert_eq!(ib.bounds.width(Axis::X), 0.0);
        assert_eq!(ib.bounds.min.x, 2.5);
        // disjoint in y: perpendicular interval inverted too
        assert!(ib.perpendicular_clamped);
        let d = dyop_distance(&a, &b, Vector2::new(1.0, 0.0)).unwrap();
        assert!(d.overlapping_boxes);
    }

    #[test]
    fn degenerate_input_rejected() {
        let good = tri([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let flat = tri([[3.0, 0.0], [4.0, 0.0], [5.0, 0.0]]);
        assert_eq!(
            build_internal_aabb(&good, &flat, Axis::X),
            Err(QueryError::DegenerateInput)
        );
        assert_eq!(
            dyop_distance(&flat, &good, Vector2::new(1.0, 0.0)).unwrap_err(),
            QueryError::DegenerateInput
        );
    }

    #[test]
    fn midpoint_examples() {
        let mk = |min: Point2, max: Point2| InternalAabb {
            bounds: Aabb::new(min, max),
            axis: Axis::X,
            leading: Role::B,
            higher: Role::A,
            facing_a: 0,
            facing_b: 0,
            degenerate_gap: false,
            perpendicular_clamped: false,
        };
        let o = compute_dyop(&mk(Point2::new(0.0, 0.0), Point2::new(2.0, 4.0)));
        assert_eq!(o.point, Point2::new(1.0, 2.0));
        let p = Point2::new(-3.25, 7.5);
        assert_eq!(compute_dyop(&mk(p, p)).point, p);
    }

    #[test]
    fn candidate_selection_example() {
        // |o - v|: v0 2.0616, v1 1.1180, v2 2.0616 (checked independently).
        let t = tri([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let c = select_candidates(
            &t,
            &DyopPoint {
                point: Point2::new(2.0, 0.5),
            },
        );
        assert_eq!(c.vertices, [1, 0]);
        assert_eq!(c.edge, 0);
    }

    #[test]
    fn candidate_tie_break_on_equidistant_point() {
        // circumcenter of a right isosceles triangle, squared distance 2 to all
        let t = tri([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]]);
        let c = select_candidates(
            &t,
            &DyopPoint {
                point: Point2::new(1.0, 1.0),
            },
        );
        assert_eq!(c.vertices, [0, 1]);
        assert_eq!(c.edge, 0);
    }

    #[test]
    fn candidate_edge_joins_selected_vertices() {
        let t = tri([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        for (o, expect_edge) in [((2.0, 2.0), 1), ((-2.0, 0.5), 2), ((0.5, -2.0), 0)] {
            let c = select_candidates(
                &t,
                &DyopPoint {
                    point: Point2::new(o.0, o.1),
                },
            );
            assert_eq!(c.edge, expect_edge);
            let e = t.edge(c.edge);
            let ends = [t.vertex(c.vertices[0]), t.vertex(c.vertices[1])];
            assert!(ends.contains(&e.a) && ends.contains(&e.b));
        }
    }

    #[test]
    fn shifted_copy_matches_oracle() {
        let a = tri([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]);
        let b = a.translated(Vector2::new(3.0, 0.0));
        let d = dyop_distance(&a, &b, Vector2::new(1.0, 0.0)).unwrap();
        assert_eq!(d.result.distance, 2.0);
        assert_eq!(
            d.result.distance,
            brute_force_triangle_distance(&a, &b).distance
        );
        assert_eq!(
            d.result.counters,
            TestCounters {
                vv_tests: 4,
                ve_tests: 4,
                ee_tests: 1
            }
        );
        assert!(!d.overlapping_boxes);
    }

    #[test]
    fn swapped_roles_give_same_distance() {
        let a = tri([[0.0, 0.0], [2.0, 3.0], [1.0, 4.0]]);
        let b = tri([[5.0, 1.0], [7.0, 0.0], [6.0, 5.0]]);
        let v = Vector2::new(1.0, 0.3);
        let ab = dyop_distance(&a, &b, v).unwrap().result.distance;
        let ba = dyop_distance(&b, &a, -v).unwrap().result.distance;
        assert!((ab - ba).abs() <= 1e-12);
    }
}

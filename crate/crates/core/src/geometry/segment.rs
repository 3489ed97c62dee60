use serde::{Deserialize, Serialize};

use super::types::{Point2, Segment};

/// Closest point on a segment to a query point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointSegment {
    pub distance: f64,
    pub closest: Point2,
    /// Segment parameter of `closest`, in `[0, 1]`.
    pub t: f64,
}

/// Closest pair of points between two segments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentPair {
    pub distance: f64,
    pub point_a: Point2,
    pub point_b: Point2,
    pub t_a: f64,
    pub t_b: f64,
}

impl SegmentPair {
    fn swapped(self) -> SegmentPair {
        SegmentPair {
            distance: self.distance,
            point_a: self.point_b,
            point_b: self.point_a,
            t_a: self.t_b,
            t_b: self.t_a,
        }
    }
}

/// Distance from `p` to the closed segment `s`.
///
/// Degenerate segments measure to `s.a`. Clamped parameters return the
/// endpoint itself, so vertex results compare bit-exactly across edges.
pub fn point_segment_distance(p: Point2, s: Segment) -> PointSegment {
    let d = s.b - s.a;
    let len2 = d.length_squared();
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((p - s.a).dot(d) / len2).clamp(0.0, 1.0)
    };
    let closest = s.point_at(t);
    PointSegment {
        distance: p.distance(closest),
        closest,
        t,
    }
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    robust::orient2d(a.as_robust(), b.as_robust(), c.as_robust())
}

fn within_box(p: Point2, s: Segment) -> bool {
    p.x >= s.a.x.min(s.b.x)
        && p.x <= s.a.x.max(s.b.x)
        && p.y >= s.a.y.min(s.b.y)
        && p.y <= s.a.y.max(s.b.y)
}

/// Exact test for `p` lying on the closed segment `s`.
pub fn point_on_segment(p: Point2, s: Segment) -> bool {
    orient(s.a, s.b, p) == 0.0 && within_box(p, s)
}

/// Exact closed-segment intersection test.
pub fn segments_intersect(s1: Segment, s2: Segment) -> bool {
    let o1 = orient(s1.a, s1.b, s2.a);
    let o2 = orient(s1.a, s1.b, s2.b);
    let o3 = orient(s2.a, s2.b, s1.a);
    let o4 = orient(s2.a, s2.b, s1.b);
    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        return true;
    }
    (o1 == 0.0 && within_box(s2.a, s1))
        || (o2 == 0.0 && within_box(s2.b, s1))
        || (o3 == 0.0 && within_box(s1.a, s2))
        || (o4 == 0.0 && within_box(s1.b, s2))
}

/// Minimum distance between two closed segments.
///
/// The distance is exactly zero when the segments intersect (decided with
/// exact orientation predicates); both returned points then coincide.
pub fn segment_segment_distance(s1: Segment, s2: Segment) -> SegmentPair {
    if let Some(hit) = intersection(s1, s2) {
        return hit;
    }
    let candidates = [
        endpoint_pair(s1.a, 0.0, s2),
        endpoint_pair(s1.b, 1.0, s2),
        endpoint_pair(s2.a, 0.0, s1).swapped(),
        endpoint_pair(s2.b, 1.0, s1).swapped(),
    ];
    let mut best = candidates[0];
    for c in &candidates[1..] {
        if c.distance < best.distance {
            best = *c;
        }
    }
    best
}

fn endpoint_pair(p: Point2, t_p: f64, s: Segment) -> SegmentPair {
    let ps = point_segment_distance(p, s);
    SegmentPair {
        distance: ps.distance,
        point_a: p,
        point_b: ps.closest,
        t_a: t_p,
        t_b: ps.t,
    }
}

fn touching(p: Point2, t_p: f64, s: Segment) -> SegmentPair {
    let t = point_segment_distance(p, s).t;
    SegmentPair {
        distance: 0.0,
        point_a: p,
        point_b: p,
        t_a: t_p,
        t_b: t,
    }
}

fn intersection(s1: Segment, s2: Segment) -> Option<SegmentPair> {
    let o1 = orient(s1.a, s1.b, s2.a);
    let o2 = orient(s1.a, s1.b, s2.b);
    let o3 = orient(s2.a, s2.b, s1.a);
    let o4 = orient(s2.a, s2.b, s1.b);

    // Contact through an endpoint, including collinear overlap.
    if o3 == 0.0 && within_box(s1.a, s2) {
        return Some(touching(s1.a, 0.0, s2));
    }
    if o4 == 0.0 && within_box(s1.b, s2) {
        return Some(touching(s1.b, 1.0, s2));
    }
    if o1 == 0.0 && within_box(s2.a, s1) {
        return Some(touching(s2.a, 0.0, s1).swapped());
    }
    if o2 == 0.0 && within_box(s2.b, s1) {
        return Some(touching(s2.b, 1.0, s1).swapped());
    }

    if o1 * o2 < 0.0 && o3 * o4 < 0.0 {
        let d1 = s1.b - s1.a;
        let d2 = s2.b - s2.a;
        let denom = d1.cross(d2);
        let w = s2.a - s1.a;
        let t_a = (w.cross(d2) / denom).clamp(0.0, 1.0);
        let t_b = (w.cross(d1) / denom).clamp(0.0, 1.0);
        let p = s1.point_at(t_a);
        return Some(SegmentPair {
            distance: 0.0,
            point_a: p,
            point_b: p,
            t_a,
            t_b,
        });
    }
    None
}

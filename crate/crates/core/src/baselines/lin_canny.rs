//! Closest-feature walk between two convex triangles.
//!
//! Features are vertices and edges. A pair `(fa, fb)` is the closest pair
//! when the closest point on `fb` lies in the external Voronoi region of
//! `fa` and vice versa. Otherwise the walk steps to the neighbouring feature
//! whose region the point falls into; the pair distance never increases.
//! The returned witness pair seeds the next query on slightly moved inputs.

use serde::{Deserialize, Serialize};

use crate::error::QueryError;
use crate::geometry::{
    point_segment_distance, segment_segment_distance, triangles_overlap, DistanceResult, FeatureId,
    FeatureKind, Point2, TestCounters, Triangle,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FeaturePair {
    pub feature_a: FeatureId,
    pub feature_b: FeatureId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Feature {
    Vertex(usize),
    Edge(usize),
}

impl Feature {
    fn from_id(id: FeatureId) -> Option<Feature> {
        let i = id.index as usize;
        match id.kind {
            FeatureKind::Vertex if i < 3 => Some(Feature::Vertex(i)),
            FeatureKind::Edge if i < 3 => Some(Feature::Edge(i)),
            _ => None,
        }
    }

    fn id(self) -> FeatureId {
        match self {
            Feature::Vertex(i) => FeatureId::vertex(i),
            Feature::Edge(i) => FeatureId::edge(i),
        }
    }

    /// Slot in `0..6` for the visited set.
    fn slot(self) -> usize {
        match self {
            Feature::Vertex(i) => i,
            Feature::Edge(i) => 3 + i,
        }
    }
}

/// One evaluated pair along the walk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WalkStep {
    pub pair: FeaturePair,
    pub distance: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinCannyDistance {
    pub result: DistanceResult,
    /// Terminal feature pair; pass back as the seed of the next query.
    pub witness: FeaturePair,
    /// Feature pairs evaluated, including the final verification.
    pub steps: u32,
    /// The walk revisited a pair (floating-point oscillation) and returned
    /// the best pair seen.
    pub cycled: bool,
}

#[derive(Clone, Copy)]
struct Closest {
    distance: f64,
    point_a: Point2,
    point_b: Point2,
    feature_a: FeatureId,
    feature_b: FeatureId,
}

fn closest_between(
    a: &Triangle,
    b: &Triangle,
    fa: Feature,
    fb: Feature,
    counters: &mut TestCounters,
) -> Closest {
    match (fa, fb) {
        (Feature::Vertex(i), Feature::Vertex(j)) => {
            counters.vv_tests += 1;
            let (p, q) = (a.vertex(i), b.vertex(j));
            Closest {
                distance: p.distance(q),
                point_a: p,
                point_b: q,
                feature_a: fa.id(),
                feature_b: fb.id(),
            }
        }
        (Feature::Vertex(i), Feature::Edge(j)) => {
            counters.ve_tests += 1;
            let p = a.vertex(i);
            let ps = point_segment_distance(p, b.edge(j));
            Closest {
                distance: ps.distance,
                point_a: p,
                point_b: ps.closest,
                feature_a: fa.id(),
                feature_b: FeatureId::on_edge(j, ps.t),
            }
        }
        (Feature::Edge(i), Feature::Vertex(j)) => {
            counters.ve_tests += 1;
            let q = b.vertex(j);
            let ps = point_segment_distance(q, a.edge(i));
            Closest {
                distance: ps.distance,
                point_a: ps.closest,
                point_b: q,
                feature_a: FeatureId::on_edge(i, ps.t),
                feature_b: fb.id(),
            }
        }
        (Feature::Edge(i), Feature::Edge(j)) => {
            counters.ee_tests += 1;
            let ss = segment_segment_distance(a.edge(i), b.edge(j));
            Closest {
                distance: ss.distance,
                point_a: ss.point_a,
                point_b: ss.point_b,
                feature_a: FeatureId::on_edge(i, ss.t_a),
                feature_b: FeatureId::on_edge(j, ss.t_b),
            }
        }
    }
}

enum Region {
    Inside,
    Move(Feature),
    Penetrating,
}

/// Adjacent edge nearer to `p`; ties to the first argument.
fn nearer_edge(
    tri: &Triangle,
    p: Point2,
    e1: usize,
    e2: usize,
    counters: &mut TestCounters,
) -> usize {
    counters.ve_tests += 2;
    let d1 = point_segment_distance(p, tri.edge(e1)).distance;
    let d2 = point_segment_distance(p, tri.edge(e2)).distance;
    if d2 < d1 {
        e2
    } else {
        e1
    }
}

/// Tests whether `p` lies in the external Voronoi region of `feature` of
/// `tri`, and if not, which neighbour to move to.
fn check_region(
    tri: &Triangle,
    feature: Feature,
    p: Point2,
    counters: &mut TestCounters,
) -> Region {
    match feature {
        Feature::Vertex(i) => {
            let v = tri.vertex(i);
            let prev_edge = (i + 2) % 3;
            let d_prev = v - tri.vertex(prev_edge);
            let d_next = tri.vertex((i + 1) % 3) - v;
            let u = p - v;
            let back = u.dot(d_prev) < 0.0;
            let ahead = u.dot(d_next) > 0.0;
            match (back, ahead) {
                (false, false) => Region::Inside,
                (true, false) => Region::Move(Feature::Edge(prev_edge)),
                (false, true) => Region::Move(Feature::Edge(i)),
                (true, true) => {
                    Region::Move(Feature::Edge(nearer_edge(tri, p, prev_edge, i, counters)))
                }
            }
        }
        Feature::Edge(i) => {
            let e = tri.edge(i);
            let d = e.b - e.a;
            if (p - e.a).dot(d) < 0.0 {
                return Region::Move(Feature::Vertex(i));
            }
            if (p - e.b).dot(d) > 0.0 {
                return Region::Move(Feature::Vertex((i + 1) % 3));
            }
            if (p - e.a).dot(d.right_normal()) >= 0.0 {
                return Region::Inside;
            }
            // Behind the edge line: either inside the triangle or past one
            // of the other edges.
            if tri.contains(p) {
                return Region::Penetrating;
            }
            Region::Move(Feature::Edge(nearer_edge(
                tri,
                p,
                (i + 1) % 3,
                (i + 2) % 3,
                counters,
            )))
        }
    }
}

fn default_seed(a: &Triangle, b: &Triangle) -> (Feature, Feature) {
    let dir = b.centroid() - a.centroid();
    let extreme = |t: &Triangle, sign: f64| {
        let mut best = 0;
        for i in 1..3 {
            let origin = Point2::default();
            if (t.vertex(i) - origin).dot(dir) * sign > (t.vertex(best) - origin).dot(dir) * sign {
                best = i;
            }
        }
        best
    };
    (
        Feature::Vertex(extreme(a, 1.0)),
        Feature::Vertex(extreme(b, -1.0)),
    )
}

fn walk(
    a: &Triangle,
    b: &Triangle,
    seed: Option<FeaturePair>,
    mut trace: Option<&mut Vec<WalkStep>>,
) -> Result<LinCannyDistance, QueryError> {
    if a.is_degenerate() || b.is_degenerate() {
        return Err(QueryError::DegenerateInput);
    }
    let (mut fa, mut fb) = seed
        .and_then(|s| {
            Some((
                Feature::from_id(s.feature_a)?,
                Feature::from_id(s.feature_b)?,
            ))
        })
        .unwrap_or_else(|| default_seed(a, b));
    let mut counters = TestCounters::default();
    let mut visited = 0u64;
    let mut steps = 0u32;
    let mut best: Option<(Closest, Feature, Feature)> = None;

    loop {
        let bit = 1u64 << (fa.slot() * 6 + fb.slot());
        if visited & bit != 0 {
            if triangles_overlap(a, b) {
                return Err(QueryError::Penetrating);
            }
            let (c, fa, fb) = best.expect("at least one pair evaluated");
            return Ok(finish(c, fa, fb, counters, steps, true));
        }
        visited |= bit;
        steps += 1;

        let c = closest_between(a, b, fa, fb, &mut counters);
        if let Some(t) = trace.as_deref_mut() {
            t.push(WalkStep {
                pair: FeaturePair {
                    feature_a: fa.id(),
                    feature_b: fb.id(),
                },
                distance: c.distance,
            });
        }
        if c.distance == 0.0 {
            return Err(QueryError::Penetrating);
        }
        best = keep_best(best, c, fa, fb);

        match check_region(a, fa, c.point_b, &mut counters) {
            Region::Penetrating => return Err(QueryError::Penetrating),
            Region::Move(next) => {
                fa = next;
                continue;
            }
            Region::Inside => {}
        }
        match check_region(b, fb, c.point_a, &mut counters) {
            Region::Penetrating => return Err(QueryError::Penetrating),
            Region::Move(next) => {
                fb = next;
                continue;
            }
            Region::Inside => {}
        }
        return Ok(finish(c, fa, fb, counters, steps, false));
    }
}

fn keep_best(
    best: Option<(Closest, Feature, Feature)>,
    c: Closest,
    fa: Feature,
    fb: Feature,
) -> Option<(Closest, Feature, Feature)> {
    match best {
        Some(b) if b.0.distance <= c.distance => Some(b),
        _ => Some((c, fa, fb)),
    }
}

fn finish(
    c: Closest,
    fa: Feature,
    fb: Feature,
    counters: TestCounters,
    steps: u32,
    cycled: bool,
) -> LinCannyDistance {
    LinCannyDistance {
        result: DistanceResult {
            distance: c.distance,
            point_a: c.point_a,
            point_b: c.point_b,
            feature_a: c.feature_a,
            feature_b: c.feature_b,
            counters,
        },
        witness: FeaturePair {
            feature_a: fa.id(),
            feature_b: fb.id(),
        },
        steps,
        cycled,
    }
}

/// Distance between two disjoint triangles by closest-feature walking.
///
/// `seed` is the witness pair of a previous query; without one the walk
/// starts from the vertices extreme toward each other's centroid. Touching
/// or overlapping triangles yield [`QueryError::Penetrating`].
pub fn lin_canny_distance(
    a: &Triangle,
    b: &Triangle,
    seed: Option<FeaturePair>,
) -> Result<LinCannyDistance, QueryError> {
    walk(a, b, seed, None)
}

/// Same as [`lin_canny_distance`], also returning every evaluated pair.
pub fn lin_canny_trace(
    a: &Triangle,
    b: &Triangle,
    seed: Option<FeaturePair>,
) -> Result<(LinCannyDistance, Vec<WalkStep>), QueryError> {
    let mut trace = Vec::new();
    let out = walk(a, b, seed, Some(&mut trace))?;
    Ok((out, trace))
}

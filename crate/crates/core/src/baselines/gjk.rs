//! Distance GJK on the Minkowski difference `A - B` of two triangles.
//!
//! Counter mapping: `vv_tests` counts support points (one vertex of each
//! triangle combined), `ve_tests` segment sub-simplex solves and `ee_tests`
//! triangle sub-simplex solves.

use serde::{Deserialize, Serialize};

use crate::error::QueryError;
use crate::geometry::{DistanceResult, FeatureId, Point2, TestCounters, Triangle, Vector2};

pub const MAX_ITERATIONS: u32 = 64;
/// Stop once `|v|^2 - v.w` falls below this fraction of `|v|^2`.
pub const REL_TOLERANCE: f64 = 1e-12;

/// Vertex of `tri` furthest along `direction`; ties go to the lower index.
pub fn support(tri: &Triangle, direction: Vector2) -> Result<(usize, Point2), QueryError> {
    if direction.dx == 0.0 && direction.dy == 0.0 {
        return Err(QueryError::ZeroDirection);
    }
    Ok(support_unchecked(tri, direction))
}

fn support_unchecked(tri: &Triangle, direction: Vector2) -> (usize, Point2) {
    let origin = Point2::default();
    let mut best = 0;
    let mut best_dot = (tri.vertex(0) - origin).dot(direction);
    for i in 1..3 {
        let d = (tri.vertex(i) - origin).dot(direction);
        if d > best_dot {
            best = i;
            best_dot = d;
        }
    }
    (best, tri.vertex(best))
}

/// A point of `A - B` with the vertices it came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimplexVertex {
    pub w: Vector2,
    pub index_a: usize,
    pub index_b: usize,
}

/// One to three affinely independent points of the Minkowski difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Simplex {
    points: [SimplexVertex; 3],
    weights: [f64; 3],
    len: usize,
}

impl Simplex {
    fn single(p: SimplexVertex) -> Self {
        Simplex {
            points: [p; 3],
            weights: [1.0, 0.0, 0.0],
            len: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn points(&self) -> &[SimplexVertex] {
        &self.points[..self.len]
    }

    fn contains(&self, w: Vector2) -> bool {
        self.points().iter().any(|p| p.w == w)
    }

    fn push(&mut self, p: SimplexVertex) {
        self.points[self.len] = p;
        self.len += 1;
    }

    /// Point of the hull nearest the origin, as a weighted sum.
    fn closest(&self) -> Vector2 {
        (0..self.len).fold(Vector2::default(), |acc, i| {
            acc + self.points[i].w * self.weights[i]
        })
    }

    fn keep(&mut self, kept: &[(SimplexVertex, f64)]) {
        for (k, &(p, w)) in kept.iter().enumerate() {
            self.points[k] = p;
            self.weights[k] = w;
        }
        self.len = kept.len();
    }

    /// Reduces to the smallest sub-simplex supporting the closest point.
    /// Returns true when the origin lies inside a full triangle.
    fn reduce(&mut self, counters: &mut TestCounters) -> bool {
        match self.len {
            1 => {
                self.weights[0] = 1.0;
                false
            }
            2 => {
                counters.ve_tests += 1;
                let (s, n) = solve_segment(self.points[0], self.points[1]);
                self.keep(&s[..n]);
                false
            }
            3 => {
                counters.ee_tests += 1;
                let [p, q, r] = self.points;
                let area = (q.w - p.w).cross(r.w - p.w);
                let o = Vector2::default();
                let s1 = (q.w - p.w).cross(o - p.w);
                let s2 = (r.w - q.w).cross(o - q.w);
                let s3 = (p.w - r.w).cross(o - r.w);
                let inside = if area > 0.0 {
                    s1 >= 0.0 && s2 >= 0.0 && s3 >= 0.0
                } else {
                    s1 <= 0.0 && s2 <= 0.0 && s3 <= 0.0
                };
                if inside && area != 0.0 {
                    self.weights = [s2 / area, s3 / area, s1 / area];
                    return true;
                }
                let mut best: Option<(f64, Reduced)> = None;
                for (x, y) in [(p, q), (q, r), (r, p)] {
                    counters.ve_tests += 1;
                    let (s, n) = solve_segment(x, y);
                    let v = s[..n]
                        .iter()
                        .fold(Vector2::default(), |acc, &(pt, w)| acc + pt.w * w);
                    let d = v.length_squared();
                    if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                        best = Some((d, (s, n)));
                    }
                }
                let (_, (s, n)) = best.expect("three edges");
                self.keep(&s[..n]);
                false
            }
            _ => unreachable!("simplex holds 1..=3 points"),
        }
    }
}

type Reduced = ([(SimplexVertex, f64); 2], usize);

fn solve_segment(a: SimplexVertex, b: SimplexVertex) -> Reduced {
    let ab = b.w - a.w;
    let len2 = ab.length_squared();
    let t = if len2 == 0.0 {
        0.0
    } else {
        -(a.w.dot(ab)) / len2
    };
    if t <= 0.0 {
        ([(a, 1.0), (a, 0.0)], 1)
    } else if t >= 1.0 {
        ([(b, 1.0), (b, 0.0)], 1)
    } else {
        ([(a, 1.0 - t), (b, t)], 2)
    }
}

/// GJK result with convergence diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GjkDistance {
    pub result: DistanceResult,
    pub iterations: u32,
    /// False when the iteration cap was hit; `result` is then best-so-far.
    pub converged: bool,
}

/// Feature spanned by the vertex indices flagged in `used`.
fn feature_of(used: [bool; 3]) -> FeatureId {
    match used {
        [true, false, false] => FeatureId::vertex(0),
        [false, true, false] => FeatureId::vertex(1),
        [false, false, true] => FeatureId::vertex(2),
        [true, true, false] => FeatureId::edge(0),
        [false, true, true] => FeatureId::edge(1),
        [true, false, true] => FeatureId::edge(2),
        _ => FeatureId::face(),
    }
}

fn single(used: [bool; 3]) -> Option<usize> {
    match used {
        [true, false, false] => Some(0),
        [false, true, false] => Some(1),
        [false, false, true] => Some(2),
        _ => None,
    }
}

fn assemble(
    a: &Triangle,
    b: &Triangle,
    s: &Simplex,
    counters: TestCounters,
    inside: bool,
) -> DistanceResult {
    let origin = Point2::default();
    let mut pa = Vector2::default();
    let mut pb = Vector2::default();
    let mut used_a = [false; 3];
    let mut used_b = [false; 3];
    for (p, &w) in s.points().iter().zip(&s.weights) {
        if w > 0.0 {
            pa = pa + (a.vertex(p.index_a) - origin) * w;
            pb = pb + (b.vertex(p.index_b) - origin) * w;
            used_a[p.index_a] = true;
            used_b[p.index_b] = true;
        }
    }
    // Single-vertex supports return the vertex exactly.
    let point_a = single(used_a).map_or(origin + pa, |i| a.vertex(i));
    let point_b = single(used_b).map_or(origin + pb, |i| b.vertex(i));
    let distance = if inside {
        0.0
    } else {
        point_a.distance(point_b)
    };
    DistanceResult {
        distance,
        point_a,
        point_b,
        feature_a: feature_of(used_a),
        feature_b: feature_of(used_b),
        counters,
    }
}

/// Separation distance between two triangles by GJK. Intersecting
/// triangles report 0.
pub fn gjk_distance(a: &Triangle, b: &Triangle) -> Result<GjkDistance, QueryError> {
    if a.is_degenerate() || b.is_degenerate() {
        return Err(QueryError::DegenerateInput);
    }
    let mut counters = TestCounters::default();
    let minkowski = |dir: Vector2, counters: &mut TestCounters| {
        counters.vv_tests += 1;
        let (ia, pa) = support_unchecked(a, dir);
        let (ib, pb) = support_unchecked(b, -dir);
        SimplexVertex {
            w: pa - pb,
            index_a: ia,
            index_b: ib,
        }
    };

    let start = minkowski(b.centroid() - a.centroid(), &mut counters);
    let mut simplex = Simplex::single(start);
    let mut v = start.w;
    let mut iterations = 0;
    let mut converged = false;
    let mut inside = false;

    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let v2 = v.length_squared();
        if v2 == 0.0 {
            inside = true;
            converged = true;
            break;
        }
        let w = minkowski(-v, &mut counters);
        if v2 - v.dot(w.w) <= REL_TOLERANCE * v2 || simplex.contains(w.w) {
            converged = true;
            break;
        }
        simplex.push(w);
        if simplex.reduce(&mut counters) {
            inside = true;
            converged = true;
            break;
        }
        let next = simplex.closest();
        if next.length_squared() >= v2 {
            // no progress left in floating point
            converged = true;
            break;
        }
        v = next;
    }

    Ok(GjkDistance {
        result: assemble(a, b, &simplex, counters, inside),
        iterations,
        converged,
    })
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// Signed areas at or below this magnitude mark a triangle as degenerate.
pub const DEGENERATE_AREA: f64 = 1e-12;

/// A position in the plane, in scene units.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: Point2) -> f64 {
        (*self - other).length()
    }

    pub fn distance_squared(&self, other: Point2) -> f64 {
        (*self - other).length_squared()
    }

    /// Coordinate along `axis`.
    pub fn coord(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
        }
    }

    pub(crate) fn as_robust(&self) -> robust::Coord<f64> {
        robust::Coord {
            x: self.x,
            y: self.y,
        }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A displacement in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Vector2 {
    pub dx: f64,
    pub dy: f64,
}

impl Vector2 {
    pub const fn new(dx: f64, dy: f64) -> Self {
        Vector2 { dx, dy }
    }

    /// Unit vector along the positive direction of `axis`.
    pub fn along(axis: Axis) -> Self {
        match axis {
            Axis::X => Vector2::new(1.0, 0.0),
            Axis::Y => Vector2::new(0.0, 1.0),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.dx.is_finite() && self.dy.is_finite()
    }

    pub fn dot(&self, other: Vector2) -> f64 {
        self.dx * other.dx + self.dy * other.dy
    }

    pub fn cross(&self, other: Vector2) -> f64 {
        self.dx * other.dy - self.dy * other.dx
    }

    pub fn length_squared(&self) -> f64 {
        self.dot(*self)
    }

    pub fn length(&self) -> f64 {
        self.dx.hypot(self.dy)
    }

    /// Outward normal of a counter-clockwise edge running along `self`.
    pub fn right_normal(&self) -> Vector2 {
        Vector2::new(self.dy, -self.dx)
    }
}

impl Add<Vector2> for Point2 {
    type Output = Point2;
    fn add(self, v: Vector2) -> Point2 {
        Point2::new(self.x + v.dx, self.y + v.dy)
    }
}

impl Sub<Point2> for Point2 {
    type Output = Vector2;
    fn sub(self, other: Point2) -> Vector2 {
        Vector2::new(self.x - other.x, self.y - other.y)
    }
}

impl Add for Vector2 {
    type Output = Vector2;
    fn add(self, v: Vector2) -> Vector2 {
        Vector2::new(self.dx + v.dx, self.dy + v.dy)
    }
}

impl Sub for Vector2 {
    type Output = Vector2;
    fn sub(self, v: Vector2) -> Vector2 {
        Vector2::new(self.dx - v.dx, self.dy - v.dy)
    }
}

impl Mul<f64> for Vector2 {
    type Output = Vector2;
    fn mul(self, s: f64) -> Vector2 {
        Vector2::new(self.dx * s, self.dy * s)
    }
}

impl Neg for Vector2 {
    type Output = Vector2;
    fn neg(self) -> Vector2 {
        Vector2::new(-self.dx, -self.dy)
    }
}

/// One of the two coordinate axes of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn perpendicular(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
        })
    }
}

/// A closed segment. `a == b` is allowed and behaves as a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
}

impl Segment {
    pub const fn new(a: Point2, b: Point2) -> Self {
        Segment { a, b }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    /// Point at parameter `t`; the endpoints are returned exactly for `t` of 0 and 1.
    pub fn point_at(&self, t: f64) -> Point2 {
        if t <= 0.0 {
            self.a
        } else if t >= 1.0 {
            self.b
        } else {
            self.a + (self.b - self.a) * t
        }
    }
}

/// A triangle with counter-clockwise vertex order.
///
/// Degenerate triangles (area at or below [`DEGENERATE_AREA`]) can be built;
/// [`Triangle::is_degenerate`] flags them and the pruning query rejects them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Triangle {
    vertices: [Point2; 3],
    name: Option<String>,
}

impl Triangle {
    /// Builds a triangle, swapping `v1` and `v2` when the input winds clockwise.
    pub fn new(v0: Point2, v1: Point2, v2: Point2) -> Result<Self, GeometryError> {
        for p in [v0, v1, v2] {
            if !p.is_finite() {
                return Err(GeometryError::NonFinite(p));
            }
        }
        Ok(Triangle::wound([v0, v1, v2], None))
    }

    fn wound([v0, v1, v2]: [Point2; 3], name: Option<String>) -> Self {
        let vertices = if robust::orient2d(v0.as_robust(), v1.as_robust(), v2.as_robust()) < 0.0 {
            [v0, v2, v1]
        } else {
            [v0, v1, v2]
        };
        Triangle { vertices, name }
    }

    pub fn from_coords(coords: [[f64; 2]; 3]) -> Result<Self, GeometryError> {
        let [a, b, c] = coords.map(|[x, y]| Point2::new(x, y));
        Triangle::new(a, b, c)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vertices(&self) -> &[Point2; 3] {
        &self.vertices
    }

    pub fn vertex(&self, index: usize) -> Point2 {
        self.vertices[index]
    }

    /// Edge `index` runs from vertex `index` to vertex `(index + 1) % 3`.
    pub fn edge(&self, index: usize) -> Segment {
        Segment::new(self.vertices[index], self.vertices[(index + 1) % 3])
    }

    /// Non-negative after construction.
    pub fn signed_area(&self) -> f64 {
        let [a, b, c] = self.vertices;
        0.5 * (b - a).cross(c - a)
    }

    pub fn is_degenerate(&self) -> bool {
        self.signed_area().abs() <= DEGENERATE_AREA
    }

    pub fn centroid(&self) -> Point2 {
        let [a, b, c] = self.vertices;
        Point2::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0)
    }

    /// Largest vertex-to-vertex distance.
    pub fn diameter(&self) -> f64 {
        let [a, b, c] = self.vertices;
        a.distance(b).max(b.distance(c)).max(c.distance(a))
    }

    pub fn translated(&self, offset: Vector2) -> Triangle {
        Triangle::wound(self.vertices.map(|p| p + offset), self.name.clone())
    }

    /// Uniform scaling about the origin. Positive factors keep the winding.
    pub fn scaled(&self, factor: f64) -> Triangle {
        Triangle::wound(
            self.vertices
                .map(|p| Point2::new(p.x * factor, p.y * factor)),
            self.name.clone(),
        )
    }

    /// Closed-triangle containment using exact orientation predicates.
    pub fn contains(&self, p: Point2) -> bool {
        let [a, b, c] = self.vertices;
        if robust::orient2d(a.as_robust(), b.as_robust(), c.as_robust()) == 0.0 {
            // zero area: only the boundary exists
            return (0..3).any(|i| super::segment::point_on_segment(p, self.edge(i)));
        }
        (0..3).all(|i| {
            let e = self.edge(i);
            robust::orient2d(e.a.as_robust(), e.b.as_robust(), p.as_robust()) >= 0.0
        })
    }

    /// Componentwise extrema of the vertices.
    pub fn aabb(&self) -> Aabb {
        let [a, b, c] = self.vertices;
        Aabb {
            min: Point2::new(a.x.min(b.x).min(c.x), a.y.min(b.y).min(c.y)),
            max: Point2::new(a.x.max(b.x).max(c.x), a.y.max(b.y).max(c.y)),
        }
    }
}

/// Axis-aligned box with `min <= max` componentwise.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Aabb {
    pub min: Point2,
    pub max: Point2,
}

impl Aabb {
    pub fn new(min: Point2, max: Point2) -> Self {
        debug_assert!(min.x <= max.x && min.y <= max.y, "inverted box");
        Aabb { min, max }
    }

    pub fn center(&self) -> Point2 {
        Point2::new(
            (self.min.x + self.max.x) / 2.0,
            (self.min.y + self.max.y) / 2.0,
        )
    }

    /// `(min, max)` along `axis`.
    pub fn interval(&self, axis: Axis) -> (f64, f64) {
        (self.min.coord(axis), self.max.coord(axis))
    }

    pub fn overlaps_on(&self, other: &Aabb, axis: Axis) -> bool {
        let (lo, hi) = self.interval(axis);
        let (olo, ohi) = other.interval(axis);
        lo <= ohi && olo <= hi
    }

    pub fn width(&self, axis: Axis) -> f64 {
        let (lo, hi) = self.interval(axis);
        hi - lo
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureKind {
    Vertex,
    Edge,
    /// The triangle interior. Reported only when one triangle contains a
    /// vertex of the other without any edge crossing.
    Face,
}

/// A vertex or edge of a triangle. Edge `i` joins vertex `i` to vertex `(i + 1) % 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FeatureId {
    pub kind: FeatureKind,
    pub index: u8,
}

impl FeatureId {
    pub fn vertex(index: usize) -> Self {
        debug_assert!(index < 3);
        FeatureId {
            kind: FeatureKind::Vertex,
            index: index as u8,
        }
    }

    pub fn edge(index: usize) -> Self {
        debug_assert!(index < 3);
        FeatureId {
            kind: FeatureKind::Edge,
            index: index as u8,
        }
    }

    pub fn face() -> Self {
        FeatureId {
            kind: FeatureKind::Face,
            index: 0,
        }
    }

    /// Vertex indices that define this feature.
    pub fn defining_vertices(&self) -> Vec<usize> {
        let i = self.index as usize;
        match self.kind {
            FeatureKind::Vertex => vec![i],
            FeatureKind::Edge => vec![i, (i + 1) % 3],
            FeatureKind::Face => vec![0, 1, 2],
        }
    }

    /// Feature of edge `edge` at segment parameter `t`.
    pub(crate) fn on_edge(edge: usize, t: f64) -> Self {
        if t <= 0.0 {
            FeatureId::vertex(edge)
        } else if t >= 1.0 {
            FeatureId::vertex((edge + 1) % 3)
        } else {
            FeatureId::edge(edge)
        }
    }
}

impl fmt::Display for FeatureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FeatureKind::Vertex => write!(f, "v{}", self.index),
            FeatureKind::Edge => write!(f, "e{}", self.index),
            FeatureKind::Face => f.write_str("face"),
        }
    }
}

/// Primitive evaluation counts for one query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TestCounters {
    pub vv_tests: u64,
    pub ve_tests: u64,
    pub ee_tests: u64,
}

impl TestCounters {
    pub fn total(&self) -> u64 {
        self.vv_tests + self.ve_tests + self.ee_tests
    }
}

impl Add for TestCounters {
    type Output = TestCounters;
    fn add(self, o: TestCounters) -> TestCounters {
        TestCounters {
            vv_tests: self.vv_tests + o.vv_tests,
            ve_tests: self.ve_tests + o.ve_tests,
            ee_tests: self.ee_tests + o.ee_tests,
        }
    }
}

/// Outcome of a triangle-triangle distance query.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub distance: f64,
    /// Closest point on the first triangle.
    pub point_a: Point2,
    /// Closest point on the second triangle.
    pub point_b: Point2,
    pub feature_a: FeatureId,
    pub feature_b: FeatureId,
    pub counters: TestCounters,
}

impl DistanceResult {
    /// Swaps the roles of the two triangles.
    pub fn swapped(&self) -> DistanceResult {
        DistanceResult {
            point_a: self.point_b,
            point_b: self.point_a,
            feature_a: self.feature_b,
            feature_b: self.feature_a,
            ..*self
        }
    }

    /// Ordering key for equal distances: lower `(feature_a.index, feature_b.index)` wins.
    pub(crate) fn beats(&self, other: &DistanceResult) -> bool {
        self.distance < other.distance
            || (self.distance == other.distance
                && (self.feature_a.index, self.feature_b.index)
                    < (other.feature_a.index, other.feature_b.index))
    }
}

use std::collections::HashSet;

use serde::Serialize;

use crate::error::BenchError;
use crate::geometry::{brute_force_triangle_distance, Axis, Triangle, Vector2};

/// Named objects, the fixed separation enforced before every query, and
/// the approach axis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scene {
    objects: Vec<Triangle>,
    separation: f64,
    axis: Axis,
}

impl Scene {
    /// Objects must be named, uniquely, and non-degenerate.
    pub fn new(objects: Vec<Triangle>, separation: f64, axis: Axis) -> Result<Self, BenchError> {
        if objects.is_empty() {
            return Err(BenchError::EmptyScene);
        }
        if !(separation > 0.0 && separation.is_finite()) {
            return Err(BenchError::BadSeparation(separation));
        }
        let mut seen = HashSet::new();
        for (k, t) in objects.iter().enumerate() {
            let name = t.name().ok_or(BenchError::UnnamedObject(k))?.to_owned();
            if !seen.insert(name.clone()) {
                return Err(BenchError::DuplicateName(name));
            }
            if t.is_degenerate() {
                return Err(BenchError::DegenerateObject(name));
            }
        }
        Ok(Scene {
            objects,
            separation,
            axis,
        })
    }

    pub fn objects(&self) -> &[Triangle] {
        &self.objects
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn name(&self, index: usize) -> &str {
        self.objects[index].name().expect("scene objects are named")
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|t| t.name() == Some(name))
    }

    pub fn with_separation(mut self, separation: f64) -> Result<Self, BenchError> {
        if !(separation > 0.0 && separation.is_finite()) {
            return Err(BenchError::BadSeparation(separation));
        }
        self.separation = separation;
        Ok(self)
    }

    pub fn with_axis(mut self, axis: Axis) -> Self {
        self.axis = axis;
        self
    }
}

/// Vertex lists of the ten reference objects, in scene units.
pub const DEFAULT_OBJECTS: [[[f64; 2]; 3]; 10] = [
    [[0.0, 0.0], [2.0, 0.0], [0.0, 1.5]],  // right
    [[0.0, 0.0], [1.6, 0.2], [0.7, 1.8]],  // acute
    [[0.0, 0.0], [3.0, 0.0], [2.4, 0.8]],  // obtuse
    [[0.0, 0.0], [4.0, 0.3], [3.9, 0.55]], // sliver
    [[0.0, 0.0], [1.0, 0.0], [0.5, 0.87]], // near-equilateral
    [[0.0, 0.0], [0.5, 0.1], [0.2, 0.45]], // small
    [[0.0, 0.0], [3.5, 1.0], [1.0, 3.8]],  // large
    [[0.0, 0.0], [0.8, 0.0], [0.4, 2.6]],  // tall isosceles
    [[0.0, 0.0], [2.2, -0.6], [2.5, 0.9]], // obtuse, pointing left
    [[0.0, 0.0], [1.5, 1.5], [-1.0, 1.0]], // right, rotated
];

pub const DEFAULT_SEPARATION: f64 = 1.0;

/// The ten objects `Obj1`..`Obj10`, separation 1.0, approach along X.
pub fn default_scene() -> Scene {
    let objects = DEFAULT_OBJECTS
        .iter()
        .enumerate()
        .map(|(k, c)| {
            Triangle::from_coords(*c)
                .expect("finite constants")
                .with_name(format!("Obj{}", k + 1))
        })
        .collect();
    Scene::new(objects, DEFAULT_SEPARATION, Axis::X).expect("valid default scene")
}

/// Ordered `(mover, static)` index pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingPlan {
    pub pairs: Vec<(usize, usize)>,
}

impl PairingPlan {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Every ordered pair `(i, j)` with `i != j`, row-major.
pub fn enumerate_pairs(n: usize) -> PairingPlan {
    let pairs = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    PairingPlan { pairs }
}

/// A pair posed for one query.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacedPair {
    pub moving: Triangle,
    pub fixed: Triangle,
    /// Unit vector along the scene axis; motion of `moving` toward `fixed`.
    pub velocity: Vector2,
    /// Oracle distance after placement.
    pub distance: f64,
}

pub const PLACEMENT_TOLERANCE: f64 = 1e-9;
const BISECTION_STEPS: u32 = 64;
const SCAN_STEPS: u32 = 64;

/// Leaves the static object at its canonical pose and slides the mover
/// along the negative scene axis until the oracle distance equals the
/// scene separation.
pub fn place_pair(scene: &Scene, pair: (usize, usize)) -> Result<PlacedPair, BenchError> {
    let (i, j) = pair;
    let n = scene.objects.len();
    if i >= n || j >= n || i == j {
        return Err(BenchError::BadPair(i, j));
    }
    let axis = scene.axis;
    let target = scene.separation;
    let mover = &scene.objects[i];
    let fixed = &scene.objects[j];
    let dir = Vector2::along(axis);

    let distance_at = |offset: f64| {
        let moved = mover.translated(dir * offset);
        brute_force_triangle_distance(&moved, fixed).distance
    };

    // At `far` the axis gap alone equals the target, so the distance is at
    // least the target. Distance is convex in the offset, so scanning toward
    // the static object finds the crossing if one exists.
    let (mb, fb) = (mover.aabb(), fixed.aabb());
    let far = fb.min.coord(axis) - target - mb.max.coord(axis);
    let sweep = mb.width(axis) + fb.width(axis) + target;

    let mut lo = far;
    let mut hi = None;
    if distance_at(far) == target {
        hi = Some(far);
    } else {
        for k in 1..=SCAN_STEPS {
            let o = far + sweep * f64::from(k) / f64::from(SCAN_STEPS);
            if distance_at(o) <= target {
                hi = Some(o);
                break;
            }
            lo = o;
        }
    }
    let fail = |achieved: f64| BenchError::PlacementFailure {
        mover: scene.name(i).to_owned(),
        fixed: scene.name(j).to_owned(),
        target,
        achieved,
    };
    let Some(mut hi) = hi else {
        return Err(fail(distance_at(lo)));
    };

    for _ in 0..BISECTION_STEPS {
        let mid = lo + (hi - lo) / 2.0;
        if mid <= lo || mid >= hi {
            break;
        }
        if distance_at(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (d_lo, d_hi) = (distance_at(lo), distance_at(hi));
    let (offset, achieved) = if (d_lo - target).abs() < (d_hi - target).abs() {
        (lo, d_lo)
    } else {
        (hi, d_hi)
    };
    if (achieved - target).abs() > PLACEMENT_TOLERANCE {
        return Err(fail(achieved));
    }
    Ok(PlacedPair {
        moving: mover.translated(dir * offset),
        fixed: fixed.clone(),
        velocity: dir,
        distance: achieved,
    })
}

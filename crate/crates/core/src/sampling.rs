//! Seeded random triangle pairs for verification sweeps.

use rand::Rng;

use crate::geometry::{Axis, Point2, Triangle, Vector2};

fn unit_triangle<R: Rng + ?Sized>(rng: &mut R) -> Triangle {
    loop {
        let mut p = || Point2::new(rng.gen::<f64>(), rng.gen::<f64>());
        let t = Triangle::new(p(), p(), p()).expect("finite samples");
        if !t.is_degenerate() {
            return t;
        }
    }
}

/// A disjoint pair with boxes separated along a random axis.
#[derive(Debug, Clone, PartialEq)]
pub struct SeparatedPair {
    pub a: Triangle,
    pub b: Triangle,
    pub axis: Axis,
    /// Unit motion of `a` toward `b`.
    pub velocity: Vector2,
}

/// Both triangles have vertices uniform in the unit box; `b` is then pushed
/// along a random axis and direction by at least its own diameter, with a
/// smaller sideways shift. Draws whose boxes still overlap along the axis are
/// rejected.
pub fn random_separated_pair<R: Rng + ?Sized>(rng: &mut R) -> SeparatedPair {
    loop {
        let a = unit_triangle(rng);
        let b = unit_triangle(rng);
        let axis = if rng.gen::<bool>() { Axis::X } else { Axis::Y };
        let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let along = sign * (b.diameter() + rng.gen::<f64>());
        let across = rng.gen_range(-0.5..0.5);
        let offset = match axis {
            Axis::X => Vector2::new(along, across),
            Axis::Y => Vector2::new(across, along),
        };
        let b = b.translated(offset);
        if a.aabb().overlaps_on(&b.aabb(), axis) {
            continue;
        }
        return SeparatedPair {
            a,
            b,
            axis,
            velocity: Vector2::along(axis) * sign,
        };
    }
}

/// Any two non-degenerate triangles in a `[-2, 2]` box; they may overlap.
pub fn random_pair<R: Rng + ?Sized>(rng: &mut R) -> (Triangle, Triangle) {
    let spread = |t: Triangle, rng: &mut R| {
        let s = rng.gen_range(0.5..2.0);
        t.scaled(s).translated(Vector2::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        ))
    };
    let a = unit_triangle(rng);
    let a = spread(a, rng);
    let b = unit_triangle(rng);
    let b = spread(b, rng);
    (a, b)
}

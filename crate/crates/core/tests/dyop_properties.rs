use proptest::prelude::*;
use proximity::dyop::{
    build_internal_aabb, compute_dyop, dyop_distance, select_candidates, DyopPoint,
};
use proximity::geometry::{
    brute_force_triangle_distance, Axis, FeatureKind, Point2, Triangle, Vector2,
};
use proximity::sampling::{random_separated_pair, SeparatedPair};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn coord() -> impl Strategy<Value = f64> {
    -5.0..5.0f64
}

fn point() -> impl Strategy<Value = Point2> {
    (coord(), coord()).prop_map(|(x, y)| Point2::new(x, y))
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_map(|(a, b, c)| Triangle::new(a, b, c).unwrap())
        .prop_filter("non-degenerate", |t| !t.is_degenerate())
}

fn velocity() -> impl Strategy<Value = Vector2> {
    (coord(), coord())
        .prop_map(|(dx, dy)| Vector2::new(dx, dy))
        .prop_filter("nonzero", |v| v.dx != 0.0 || v.dy != 0.0)
}

fn separated() -> impl Strategy<Value = SeparatedPair> {
    any::<u64>().prop_map(|seed| random_separated_pair(&mut ChaCha8Rng::seed_from_u64(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn never_below_the_oracle(a in triangle(), b in triangle(), v in velocity()) {
        let d = dyop_distance(&a, &b, v).unwrap().result.distance;
        let exact = brute_force_triangle_distance(&a, &b).distance;
        prop_assert!(d >= exact - 1e-12, "{d} < {exact}");
    }

    #[test]
    fn exact_when_oracle_features_are_candidates(p in separated()) {
        let q = dyop_distance(&p.a, &p.b, p.velocity).unwrap();
        let oracle = brute_force_triangle_distance(&p.a, &p.b);
        let covered = oracle.feature_a.defining_vertices().iter().all(|&i| q.candidates.a.contains_vertex(i))
            && oracle.feature_b.defining_vertices().iter().all(|&j| q.candidates.b.contains_vertex(j));
        if covered {
            prop_assert!((q.result.distance - oracle.distance).abs() <= 1e-9);
        }
    }

    #[test]
    fn origin_is_the_exact_box_midpoint(a in triangle(), b in triangle(), y in any::<bool>()) {
        let axis = if y { Axis::Y } else { Axis::X };
        let internal = build_internal_aabb(&a, &b, axis).unwrap();
        let DyopPoint { point } = compute_dyop(&internal);
        let (min, max) = (internal.bounds.min, internal.bounds.max);
        prop_assert_eq!(point.x * 2.0, min.x + max.x);
        prop_assert_eq!(point.y * 2.0, min.y + max.y);
    }

    #[test]
    fn two_vertices_and_their_edge(t in triangle(), o in point()) {
        let c = select_candidates(&t, &DyopPoint { point: o });
        prop_assert!(c.vertices[0] != c.vertices[1]);
        prop_assert!(c.vertices.iter().all(|&i| i < 3));
        let e = c.edge;
        let mut ends = [e, (e + 1) % 3];
        let mut picked = c.vertices;
        ends.sort_unstable();
        picked.sort_unstable();
        prop_assert_eq!(ends, picked);
        // nearest first
        let d = |i: usize| t.vertex(i).distance_squared(o);
        prop_assert!(d(c.vertices[0]) <= d(c.vertices[1]));
    }

    #[test]
    fn counters_are_fixed(a in triangle(), b in triangle(), v in velocity()) {
        let c = dyop_distance(&a, &b, v).unwrap().result.counters;
        prop_assert_eq!((c.vv_tests, c.ve_tests, c.ee_tests), (4, 4, 1));
    }

    #[test]
    fn translation_leaves_distance_unchanged(p in separated(), dx in coord(), dy in coord()) {
        let t = Vector2::new(dx, dy);
        let d0 = dyop_distance(&p.a, &p.b, p.velocity).unwrap().result.distance;
        let d1 = dyop_distance(&p.a.translated(t), &p.b.translated(t), p.velocity).unwrap().result.distance;
        prop_assert!((d0 - d1).abs() < 1e-9);
    }

    #[test]
    fn winning_features_survive_scaling(p in separated(), s in 0.1..10.0f64) {
        let r0 = dyop_distance(&p.a, &p.b, p.velocity).unwrap().result;
        let r1 = dyop_distance(&p.a.scaled(s), &p.b.scaled(s), p.velocity).unwrap().result;
        prop_assert_eq!((r0.feature_a, r0.feature_b), (r1.feature_a, r1.feature_b));
    }
}

#[test]
fn features_are_never_faces() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2000 {
        let p = random_separated_pair(&mut rng);
        let r = dyop_distance(&p.a, &p.b, p.velocity).unwrap().result;
        assert_ne!(r.feature_a.kind, FeatureKind::Face);
        assert_ne!(r.feature_b.kind, FeatureKind::Face);
    }
}

#[test]
fn mismatch_rate_on_separated_pairs_is_measurable() {
    // The pruning can miss the true closest pair; measure how often.
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let trials = 5000;
    let mut misses = 0;
    for _ in 0..trials {
        let p = random_separated_pair(&mut rng);
        let d = dyop_distance(&p.a, &p.b, p.velocity)
            .unwrap()
            .result
            .distance;
        let exact = brute_force_triangle_distance(&p.a, &p.b).distance;
        assert!(d >= exact - 1e-12);
        if d - exact > 1e-9 {
            misses += 1;
        }
    }
    eprintln!("dyop misses: {misses}/{trials}");
    assert!(misses < trials);
}

use std::collections::HashSet;

use proximity::baselines::{gjk_distance, lin_canny_distance, lin_canny_trace, MAX_ITERATIONS};
use proximity::geometry::{brute_force_triangle_distance, Triangle};
use proximity::sampling::{random_pair, random_separated_pair};
use proximity::QueryError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TRIALS: usize = 10_000;
const TOL: f64 = 1e-7;

fn separated_pairs(seed: u64) -> Vec<(Triangle, Triangle)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..TRIALS)
        .map(|_| {
            let p = random_separated_pair(&mut rng);
            (p.a, p.b)
        })
        .collect()
}

fn mixed_pairs(seed: u64) -> Vec<(Triangle, Triangle)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..TRIALS).map(|_| random_pair(&mut rng)).collect()
}

#[test]
fn gjk_matches_oracle_on_separated_pairs() {
    let mut converged = 0;
    for (a, b) in separated_pairs(2) {
        let g = gjk_distance(&a, &b).unwrap();
        let exact = brute_force_triangle_distance(&a, &b).distance;
        assert!(
            (g.result.distance - exact).abs() <= TOL,
            "{} vs {exact}",
            g.result.distance
        );
        assert!(g.iterations <= MAX_ITERATIONS);
        converged += usize::from(g.converged);
    }
    assert!(
        converged as f64 >= 0.999 * TRIALS as f64,
        "{converged} converged"
    );
}

#[test]
fn gjk_matches_oracle_on_any_pairs() {
    for (a, b) in mixed_pairs(3) {
        let g = gjk_distance(&a, &b).unwrap();
        let exact = brute_force_triangle_distance(&a, &b).distance;
        assert!(
            (g.result.distance - exact).abs() <= TOL,
            "{} vs {exact}",
            g.result.distance
        );
        assert!(g.iterations <= MAX_ITERATIONS);
        assert!((g.result.point_a.distance(g.result.point_b) - g.result.distance).abs() <= TOL);
    }
}

#[test]
fn lin_canny_matches_oracle_on_separated_pairs() {
    for (a, b) in separated_pairs(4) {
        let l = lin_canny_distance(&a, &b, None).unwrap();
        let exact = brute_force_triangle_distance(&a, &b).distance;
        assert!(
            (l.result.distance - exact).abs() <= TOL,
            "{} vs {exact}",
            l.result.distance
        );
    }
}

#[test]
fn lin_canny_matches_oracle_or_reports_contact() {
    let mut penetrating = 0;
    for (a, b) in mixed_pairs(5) {
        let exact = brute_force_triangle_distance(&a, &b).distance;
        match lin_canny_distance(&a, &b, None) {
            Ok(l) => assert!((l.result.distance - exact).abs() <= TOL),
            Err(QueryError::Penetrating) => {
                assert_eq!(exact, 0.0);
                penetrating += 1;
            }
            Err(e) => panic!("unexpected {e:?}"),
        }
    }
    assert!(penetrating > 0);
}

#[test]
fn walks_never_climb_or_revisit() {
    for (a, b) in separated_pairs(6).into_iter().take(2000) {
        let (out, trace) = lin_canny_trace(&a, &b, None).unwrap();
        assert!(!out.cycled);
        let mut seen = HashSet::new();
        for w in trace.windows(2) {
            assert!(w[1].distance <= w[0].distance);
        }
        for s in &trace {
            assert!(
                seen.insert((s.pair.feature_a, s.pair.feature_b)),
                "pair visited twice"
            );
        }
        assert_eq!(trace.len() as u32, out.steps);
    }
}

#[test]
fn warm_start_reuses_the_witness() {
    for (a, b) in separated_pairs(7).into_iter().take(2000) {
        let cold = lin_canny_distance(&a, &b, None).unwrap();
        let warm = lin_canny_distance(&a, &b, Some(cold.witness)).unwrap();
        assert_eq!(warm.result.distance, cold.result.distance);
        assert!(warm.steps <= cold.steps);
    }
}

#[test]
fn baselines_fill_their_counters() {
    for (a, b) in separated_pairs(8).into_iter().take(500) {
        assert!(gjk_distance(&a, &b).unwrap().result.counters.total() > 0);
        assert!(
            lin_canny_distance(&a, &b, None)
                .unwrap()
                .result
                .counters
                .total()
                > 0
        );
    }
}

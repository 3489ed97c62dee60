use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::scene::{enumerate_pairs, place_pair, PlacedPair, Scene};
use crate::baselines::{gjk_distance, lin_canny_distance};
use crate::dyop::dyop_distance;
use crate::error::{BenchError, QueryError};
use crate::geometry::{brute_force_triangle_distance, DistanceResult, TestCounters};

/// Distances further than this from the placement oracle flag a mismatch.
pub const MISMATCH_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "DyOP")]
    Dyop,
    #[serde(rename = "GJK")]
    Gjk,
    #[serde(rename = "LinCanny")]
    LinCanny,
    #[serde(rename = "Oracle")]
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Dyop,
        Algorithm::Gjk,
        Algorithm::LinCanny,
        Algorithm::Oracle,
    ];
    /// DyOP and the two baselines it is compared against.
    pub const COMPARED: [Algorithm; 3] = [Algorithm::Dyop, Algorithm::Gjk, Algorithm::LinCanny];

    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Dyop => "DyOP",
            Algorithm::Gjk => "GJK",
            Algorithm::LinCanny => "LinCanny",
            Algorithm::Oracle => "Oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgorithm(pub String);

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown algorithm {:?} (expected dyop, gjk, lincanny or oracle)",
            self.0
        )
    }
}

impl std::error::Error for UnknownAlgorithm {}

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dyop" => Ok(Algorithm::Dyop),
            "gjk" => Ok(Algorithm::Gjk),
            "lincanny" | "lin-canny" => Ok(Algorithm::LinCanny),
            "oracle" => Ok(Algorithm::Oracle),
            _ => Err(UnknownAlgorithm(s.to_owned())),
        }
    }
}

/// Per-record annotations.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordFlags {
    /// Distance differs from the placement oracle by more than
    /// [`MISMATCH_TOLERANCE`].
    pub mismatch: bool,
    /// DyOP pruning ran on overlapping boxes.
    pub overlapping_boxes: bool,
    /// GJK hit its iteration cap.
    pub not_converged: bool,
    /// Lin-Canny walk revisited a feature pair.
    pub cycled: bool,
    /// The algorithm returned an error; the record carries no distance.
    pub failed: Option<String>,
}

impl RecordFlags {
    pub fn is_clean(&self) -> bool {
        *self == RecordFlags::default()
    }
}

impl fmt::Display for RecordFlags {
    /// `;`-separated flag names, empty when clean.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.mismatch {
            parts.push("mismatch".into());
        }
        if self.overlapping_boxes {
            parts.push("overlapping_boxes".into());
        }
        if self.not_converged {
            parts.push("not_converged".into());
        }
        if self.cycled {
            parts.push("cycled".into());
        }
        if let Some(e) = &self.failed {
            parts.push(format!("failed:{e}"));
        }
        f.write_str(&parts.join(";"))
    }
}

/// One algorithm on one placed pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingRecord {
    pub mover: String,
    pub fixed: String,
    pub algorithm: Algorithm,
    /// Median wall time of the timed runs, at least 1 ns.
    pub median_ns: u64,
    pub counters: TestCounters,
    /// `None` for failed records.
    pub distance: Option<f64>,
    /// Oracle distance at placement.
    pub reference: f64,
    pub flags: RecordFlags,
}

/// Outcome of a single query in the common shape used by the harness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QueryOutcome {
    pub result: DistanceResult,
    pub overlapping_boxes: bool,
    pub not_converged: bool,
    pub cycled: bool,
}

/// Runs `algorithm` once on a placed pair.
pub fn run_query(algorithm: Algorithm, placed: &PlacedPair) -> Result<QueryOutcome, QueryError> {
    let (a, b) = (&placed.moving, &placed.fixed);
    let plain = |result| QueryOutcome {
        result,
        overlapping_boxes: false,
        not_converged: false,
        cycled: false,
    };
    Ok(match algorithm {
        Algorithm::Dyop => {
            let d = dyop_distance(a, b, placed.velocity)?;
            QueryOutcome {
                overlapping_boxes: d.overlapping_boxes,
                ..plain(d.result)
            }
        }
        Algorithm::Gjk => {
            let g = gjk_distance(a, b)?;
            QueryOutcome {
                not_converged: !g.converged,
                ..plain(g.result)
            }
        }
        Algorithm::LinCanny => {
            let l = lin_canny_distance(a, b, None)?;
            QueryOutcome {
                cycled: l.cycled,
                ..plain(l.result)
            }
        }
        Algorithm::Oracle => plain(brute_force_triangle_distance(a, b)),
    })
}

fn time_once(algorithm: Algorithm, placed: &PlacedPair) -> u64 {
    let (a, b) = (black_box(&placed.moving), black_box(&placed.fixed));
    let start = Instant::now();
    match algorithm {
        Algorithm::Dyop => {
            let _ = black_box(dyop_distance(a, b, black_box(placed.velocity)));
        }
        Algorithm::Gjk => {
            let _ = black_box(gjk_distance(a, b));
        }
        Algorithm::LinCanny => {
            let _ = black_box(lin_canny_distance(a, b, None));
        }
        Algorithm::Oracle => {
            black_box(brute_force_triangle_distance(a, b));
        }
    }
    start.elapsed().as_nanos() as u64
}

fn median(mut samples: Vec<u64>) -> u64 {
    samples.sort_unstable();
    samples[(samples.len() - 1) / 2].max(1)
}

/// Measures one placed pair with one algorithm: a warm-up call, then
/// `repeats` individually timed calls.
pub fn measure(
    algorithm: Algorithm,
    placed: &PlacedPair,
    mover: &str,
    fixed: &str,
    repeats: usize,
) -> TimingRecord {
    let outcome = run_query(algorithm, placed);
    let samples: Vec<u64> = (0..repeats).map(|_| time_once(algorithm, placed)).collect();
    let median_ns = median(samples);
    let mut flags = RecordFlags::default();
    let (counters, distance) = match outcome {
        Ok(o) => {
            flags.overlapping_boxes = o.overlapping_boxes;
            flags.not_converged = o.not_converged;
            flags.cycled = o.cycled;
            flags.mismatch = (o.result.distance - placed.distance).abs() > MISMATCH_TOLERANCE;
            (o.result.counters, Some(o.result.distance))
        }
        Err(e) => {
            flags.failed = Some(format!("{e:?}"));
            (TestCounters::default(), None)
        }
    };
    TimingRecord {
        mover: mover.to_owned(),
        fixed: fixed.to_owned(),
        algorithm,
        median_ns,
        counters,
        distance,
        reference: placed.distance,
        flags,
    }
}

/// Every ordered pair of `scene` against every algorithm, in plan order.
///
/// Algorithm errors become failed records; placement errors abort the run.
pub fn run_benchmark(
    scene: &Scene,
    algorithms: &[Algorithm],
    repeats: usize,
) -> Result<Vec<TimingRecord>, BenchError> {
    if repeats == 0 {
        return Err(BenchError::ZeroRepeats);
    }
    let plan = enumerate_pairs(scene.objects().len());
    let mut records = Vec::with_capacity(plan.len() * algorithms.len());
    for &(i, j) in &plan.pairs {
        let placed = place_pair(scene, (i, j))?;
        for &algorithm in algorithms {
            records.push(measure(
                algorithm,
                &placed,
                scene.name(i),
                scene.name(j),
                repeats,
            ));
        }
    }
    Ok(records)
}

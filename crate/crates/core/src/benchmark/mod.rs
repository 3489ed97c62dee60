//! Ten objects, every ordered pairing, a fixed separation, and the three
//! algorithms timed side by side. Wall-clock medians are reported next to
//! machine-independent primitive-test counts.

mod report;
mod run;
mod scene;

pub use report::{
    build_report, percentage_diff, BaselineSummary, ComparisonReport, CounterSummary,
    PairPercentage, Spread,
};
pub use run::{
    measure, run_benchmark, run_query, Algorithm, QueryOutcome, RecordFlags, TimingRecord,
    UnknownAlgorithm, MISMATCH_TOLERANCE,
};
pub use scene::{
    default_scene, enumerate_pairs, place_pair, PairingPlan, PlacedPair, Scene, DEFAULT_OBJECTS,
    DEFAULT_SEPARATION, PLACEMENT_TOLERANCE,
};

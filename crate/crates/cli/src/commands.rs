use std::fs;
use std::path::{Path, PathBuf};

use proximity::benchmark::{
    build_report, place_pair, run_benchmark, run_query, Algorithm, ComparisonReport, PlacedPair,
    Scene, TimingRecord,
};
use proximity::dyop::dyop_distance;
use proximity::geometry::{
    brute_force_triangle_distance, Axis, FeatureId, Point2, TestCounters, Vector2,
};
use proximity::sampling::random_separated_pair;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Slack allowed below the oracle before a DyOP result counts as a
/// conservative-bound violation.
pub const CONSERVATIVE_SLACK: f64 = 1e-12;

pub struct DistRequest {
    pub scene: Scene,
    pub a: String,
    pub b: String,
    pub algorithm: Algorithm,
    /// Overrides the scene's approach axis.
    pub axis: Option<Axis>,
    /// Slide `a` to the scene separation first; otherwise use the poses as
    /// given and approach along the positive axis.
    pub place: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistReport {
    pub algorithm: Algorithm,
    pub a: String,
    pub b: String,
    pub axis: Axis,
    pub placed: bool,
    pub distance: f64,
    pub point_a: Point2,
    pub point_b: Point2,
    pub feature_a: FeatureId,
    pub feature_b: FeatureId,
    pub counters: TestCounters,
    /// Oracle distance for the same poses.
    pub reference: f64,
    pub overlapping_boxes: bool,
    pub not_converged: bool,
    pub cycled: bool,
}

pub fn cmd_dist(req: DistRequest) -> Result<DistReport, CliError> {
    let find = |name: &str| {
        req.scene
            .index_of(name)
            .ok_or_else(|| CliError::Usage(format!("no object named {name:?} in the scene")))
    };
    let (i, j) = (find(&req.a)?, find(&req.b)?);
    if i == j {
        return Err(CliError::Usage(
            "--a and --b must name different objects".into(),
        ));
    }
    let axis = req.axis.unwrap_or(req.scene.axis());
    let scene = req.scene.with_axis(axis);
    let placed = if req.place {
        place_pair(&scene, (i, j))?
    } else {
        let (moving, fixed) = (scene.objects()[i].clone(), scene.objects()[j].clone());
        let distance = brute_force_triangle_distance(&moving, &fixed).distance;
        PlacedPair {
            moving,
            fixed,
            velocity: Vector2::along(axis),
            distance,
        }
    };
    let out = run_query(req.algorithm, &placed).map_err(|source| CliError::Algorithm {
        algorithm: req.algorithm.to_string(),
        source,
    })?;
    let r = out.result;
    Ok(DistReport {
        algorithm: req.algorithm,
        a: req.a,
        b: req.b,
        axis,
        placed: req.place,
        distance: r.distance,
        point_a: r.point_a,
        point_b: r.point_b,
        feature_a: r.feature_a,
        feature_b: r.feature_b,
        counters: r.counters,
        reference: placed.distance,
        overlapping_boxes: out.overlapping_boxes,
        not_converged: out.not_converged,
        cycled: out.cycled,
    })
}

pub struct BenchRequest {
    pub scene: Scene,
    pub repeats: usize,
    pub algorithms: Vec<Algorithm>,
    pub out_csv: PathBuf,
    pub out_json: PathBuf,
}

/// One CSV row per record. Only `median_ns` depends on the machine.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub pair_a: String,
    pub pair_b: String,
    pub algorithm: Algorithm,
    pub median_ns: u64,
    pub vv_tests: u64,
    pub ve_tests: u64,
    pub ee_tests: u64,
    pub distance: Option<f64>,
    pub flags: String,
}

impl From<&TimingRecord> for CsvRow {
    fn from(r: &TimingRecord) -> Self {
        CsvRow {
            pair_a: r.mover.clone(),
            pair_b: r.fixed.clone(),
            algorithm: r.algorithm,
            median_ns: r.median_ns,
            vv_tests: r.counters.vv_tests,
            ve_tests: r.counters.ve_tests,
            ee_tests: r.counters.ee_tests,
            distance: r.distance,
            flags: r.flags.to_string(),
        }
    }
}

pub fn write_records_csv(records: &[TimingRecord], path: &Path) -> Result<(), CliError> {
    let mut w = csv::Writer::from_path(path).map_err(|e| CliError::output(path, e))?;
    for r in records {
        w.serialize(CsvRow::from(r))
            .map_err(|e| CliError::output(path, e))?;
    }
    w.flush().map_err(|e| CliError::output(path, e))
}

fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::output(path, e))?;
    fs::write(path, text + "\n").map_err(|e| CliError::output(path, e))
}

/// Runs the benchmark and writes both output files. Mismatching records
/// are reported in the returned report, not as an error, so that the data
/// is always written.
pub fn cmd_bench(req: &BenchRequest) -> Result<ComparisonReport, CliError> {
    if req.repeats == 0 {
        return Err(CliError::Usage("--repeats must be at least 1".into()));
    }
    if req.algorithms.is_empty() {
        return Err(CliError::Usage(
            "--algos needs at least one algorithm".into(),
        ));
    }
    let mut algorithms = req.algorithms.clone();
    if !algorithms.contains(&Algorithm::Dyop) {
        // percentages are relative to DyOP
        algorithms.insert(0, Algorithm::Dyop);
    }
    let records = run_benchmark(&req.scene, &algorithms, req.repeats)?;
    let report = build_report(&records)?;
    write_records_csv(&records, &req.out_csv)?;
    write_json(&report, &req.out_json)?;
    Ok(report)
}

/// Human-readable max/min lines per baseline, in percent of DyOP's time.
pub fn summary_lines(report: &ComparisonReport) -> Vec<String> {
    let mut lines = Vec::new();
    for b in &report.baselines {
        match (b.wall_clock, b.wall_clock_delta) {
            (Some(w), Some(d)) => {
                lines.push(format!(
                    "{} vs DyOP wall time: max {:.7}% ({:+.7}%), min {:.7}% ({:+.7}%), mean {:.7}%",
                    b.algorithm, w.max, d.max, w.min, d.min, w.mean
                ));
            }
            _ => lines.push(format!(
                "{} vs DyOP wall time: no comparable pairs",
                b.algorithm
            )),
        }
        if let Some(c) = b.counters {
            lines.push(format!(
                "{} vs DyOP primitive tests: max {:.7}%, min {:.7}%",
                b.algorithm, c.max, c.min
            ));
        }
        if b.skipped_pairs > 0 {
            lines.push(format!(
                "{}: {} pairs skipped after failures",
                b.algorithm, b.skipped_pairs
            ));
        }
    }
    lines
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    /// Trials where DyOP differs from the oracle by more than `tolerance`.
    pub mismatches: usize,
    pub mismatch_rate: f64,
    /// Largest amount DyOP exceeded the oracle by.
    pub max_overestimate: f64,
    /// Trials where DyOP fell below the oracle by more than
    /// [`CONSERVATIVE_SLACK`]. Always 0 for a correct build.
    pub conservative_violations: usize,
}

/// Compares DyOP against the oracle on `trials` seeded random pairs with
/// axis-separated boxes.
pub fn cmd_verify(trials: usize, seed: u64, tolerance: f64) -> Result<VerifyReport, CliError> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    if !(tolerance >= 0.0 && tolerance.is_finite()) {
        return Err(CliError::Usage(format!(
            "--tol must be finite and non-negative, got {tolerance}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport {
        trials,
        seed,
        tolerance,
        mismatches: 0,
        mismatch_rate: 0.0,
        max_overestimate: 0.0,
        conservative_violations: 0,
    };
    for _ in 0..trials {
        let p = random_separated_pair(&mut rng);
        let d = dyop_distance(&p.a, &p.b, p.velocity)
            .map_err(|source| CliError::Algorithm {
                algorithm: "DyOP".into(),
                source,
            })?
            .result
            .distance;
        let exact = brute_force_triangle_distance(&p.a, &p.b).distance;
        if (d - exact).abs() > tolerance {
            report.mismatches += 1;
        }
        if d < exact - CONSERVATIVE_SLACK {
            report.conservative_violations += 1;
        }
        report.max_overestimate = report.max_overestimate.max(d - exact);
    }
    report.mismatch_rate = report.mismatches as f64 / trials as f64;
    Ok(report)
}

pub const SPEED_FILE: &str = "speed.csv";
pub const PERCENTAGE_FILE: &str = "percentage.csv";
pub const SPEED_HEADER: [&str; 4] = ["pair_a", "pair_b", "algorithm", "median_ns"];
pub const PERCENTAGE_HEADER: [&str; 6] = [
    "pair_a",
    "pair_b",
    "baseline",
    "ratio_pct",
    "delta_pct",
    "counter_ratio_pct",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotFiles {
    pub speed: PathBuf,
    pub percentage: PathBuf,
}

fn headed_writer(path: &Path, header: &[&str]) -> Result<csv::Writer<fs::File>, CliError> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_path(path)
        .map_err(|e| CliError::output(path, e))?;
    w.write_record(header)
        .map_err(|e| CliError::output(path, e))?;
    Ok(w)
}

/// Writes plot-ready series from a saved benchmark report: per-pair wall
/// times per algorithm, and per-pair percentages per baseline.
pub fn cmd_plot(report_path: &Path, out_dir: &Path) -> Result<PlotFiles, CliError> {
    let text = fs::read_to_string(report_path).map_err(|e| CliError::input(report_path, e))?;
    let report: ComparisonReport =
        serde_json::from_str(&text).map_err(|e| CliError::input(report_path, e))?;
    fs::create_dir_all(out_dir).map_err(|e| CliError::output(out_dir, e))?;
    let files = PlotFiles {
        speed: out_dir.join(SPEED_FILE),
        percentage: out_dir.join(PERCENTAGE_FILE),
    };

    let mut w = headed_writer(&files.speed, &SPEED_HEADER)?;
    for r in &report.records {
        w.serialize((&r.mover, &r.fixed, r.algorithm, r.median_ns))
            .map_err(|e| CliError::output(&files.speed, e))?;
    }
    w.flush().map_err(|e| CliError::output(&files.speed, e))?;

    let mut w = headed_writer(&files.percentage, &PERCENTAGE_HEADER)?;
    for b in &report.baselines {
        for p in &b.per_pair {
            w.serialize((
                &p.mover,
                &p.fixed,
                b.algorithm,
                p.ratio_pct,
                p.delta_pct,
                p.counter_ratio_pct,
            ))
            .map_err(|e| CliError::output(&files.percentage, e))?;
        }
    }
    w.flush()
        .map_err(|e| CliError::output(&files.percentage, e))?;
    Ok(files)
}

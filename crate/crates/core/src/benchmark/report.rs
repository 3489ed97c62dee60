use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::run::{Algorithm, TimingRecord};
use crate::error::BenchError;
use crate::geometry::TestCounters;

/// `t_baseline / t_dyop * 100`. Above 100 means DyOP was faster.
pub fn percentage_diff(t_baseline_ns: f64, t_dyop_ns: f64) -> f64 {
    t_baseline_ns / t_dyop_ns * 100.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairPercentage {
    pub mover: String,
    pub fixed: String,
    /// Wall-time ratio, baseline over DyOP, in percent.
    pub ratio_pct: f64,
    /// `ratio_pct - 100`: how much longer the baseline took, in percent.
    pub delta_pct: f64,
    /// Primitive-test ratio, baseline over DyOP, in percent.
    pub counter_ratio_pct: f64,
}

/// Spread of the per-pair percentages for one baseline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Spread {
    pub max: f64,
    pub min: f64,
    pub mean: f64,
}

impl Spread {
    fn of(values: impl Iterator<Item = f64>) -> Option<Spread> {
        let (mut max, mut min, mut sum, mut n) = (f64::NEG_INFINITY, f64::INFINITY, 0.0, 0usize);
        for v in values {
            max = max.max(v);
            min = min.min(v);
            sum += v;
            n += 1;
        }
        // clamp keeps max >= mean >= min despite summation rounding
        (n > 0).then(|| Spread {
            max,
            min,
            mean: (sum / n as f64).clamp(min, max),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineSummary {
    pub algorithm: Algorithm,
    pub per_pair: Vec<PairPercentage>,
    /// Wall-clock ratio spread; `None` when every pair failed.
    pub wall_clock: Option<Spread>,
    /// Same over `delta_pct`.
    pub wall_clock_delta: Option<Spread>,
    /// Primitive-test ratio spread.
    pub counters: Option<Spread>,
    /// Pairs left out because either record failed.
    pub skipped_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterSummary {
    pub algorithm: Algorithm,
    pub queries: usize,
    pub totals: TestCounters,
    pub mean_tests_per_query: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub pairs: usize,
    pub algorithms: Vec<Algorithm>,
    pub baselines: Vec<BaselineSummary>,
    pub counters: Vec<CounterSummary>,
    pub mismatches: usize,
    pub failures: usize,
    pub records: Vec<TimingRecord>,
}

type PairKey = (String, String);

/// Aggregates benchmark records into per-baseline percentage tables.
///
/// Every pair that appears must have a DyOP record, and every baseline must
/// cover the same pairs. Records with only DyOP produce no baseline tables.
pub fn build_report(records: &[TimingRecord]) -> Result<ComparisonReport, BenchError> {
    if records.is_empty() {
        return Err(BenchError::IncompleteRecords("no records".into()));
    }
    let mut pair_order: Vec<PairKey> = Vec::new();
    let mut by_algo: BTreeMap<Algorithm, BTreeMap<PairKey, &TimingRecord>> = BTreeMap::new();
    for r in records {
        let key = (r.mover.clone(), r.fixed.clone());
        if !pair_order.contains(&key) {
            pair_order.push(key.clone());
        }
        if by_algo
            .entry(r.algorithm)
            .or_default()
            .insert(key, r)
            .is_some()
        {
            return Err(BenchError::IncompleteRecords(format!(
                "duplicate {} record for {} vs {}",
                r.algorithm, r.mover, r.fixed
            )));
        }
    }
    for (algo, recs) in &by_algo {
        if let Some(missing) = pair_order.iter().find(|k| !recs.contains_key(*k)) {
            return Err(BenchError::IncompleteRecords(format!(
                "no {algo} record for {} vs {}",
                missing.0, missing.1
            )));
        }
    }
    let dyop = by_algo
        .get(&Algorithm::Dyop)
        .ok_or_else(|| BenchError::IncompleteRecords("no DyOP records".into()))?;

    let mut baselines = Vec::new();
    for (&algorithm, recs) in by_algo.iter().filter(|(a, _)| **a != Algorithm::Dyop) {
        let mut per_pair = Vec::new();
        let mut skipped_pairs = 0;
        for key in &pair_order {
            let (d, b) = (dyop[key], recs[key]);
            if d.flags.failed.is_some() || b.flags.failed.is_some() {
                skipped_pairs += 1;
                continue;
            }
            let ratio_pct = percentage_diff(b.median_ns as f64, d.median_ns as f64);
            per_pair.push(PairPercentage {
                mover: key.0.clone(),
                fixed: key.1.clone(),
                ratio_pct,
                delta_pct: ratio_pct - 100.0,
                counter_ratio_pct: percentage_diff(
                    b.counters.total() as f64,
                    d.counters.total() as f64,
                ),
            });
        }
        baselines.push(BaselineSummary {
            algorithm,
            wall_clock: Spread::of(per_pair.iter().map(|p| p.ratio_pct)),
            wall_clock_delta: Spread::of(per_pair.iter().map(|p| p.delta_pct)),
            counters: Spread::of(per_pair.iter().map(|p| p.counter_ratio_pct)),
            per_pair,
            skipped_pairs,
        });
    }

    let counters = by_algo
        .iter()
        .map(|(&algorithm, recs)| {
            let totals = recs
                .values()
                .fold(TestCounters::default(), |acc, r| acc + r.counters);
            let ok = recs.values().filter(|r| r.flags.failed.is_none()).count();
            CounterSummary {
                algorithm,
                queries: recs.len(),
                totals,
                mean_tests_per_query: if ok == 0 {
                    0.0
                } else {
                    totals.total() as f64 / ok as f64
                },
            }
        })
        .collect();

    Ok(ComparisonReport {
        pairs: pair_order.len(),
        algorithms: by_algo.keys().copied().collect(),
        baselines,
        counters,
        mismatches: records.iter().filter(|r| r.flags.mismatch).count(),
        failures: records.iter().filter(|r| r.flags.failed.is_some()).count(),
        records: records.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmark::RecordFlags;

    fn rec(mover: &str, fixed: &str, algorithm: Algorithm, ns: u64, tests: u64) -> TimingRecord {
        TimingRecord {
            mover: mover.into(),
            fixed: fixed.into(),
            algorithm,
            median_ns: ns,
            counters: TestCounters {
                vv_tests: tests,
                ve_tests: 0,
                ee_tests: 0,
            },
            distance: Some(1.0),
            reference: 1.0,
            flags: RecordFlags::default(),
        }
    }

    #[test]
    fn percentage_examples() {
        assert_eq!(percentage_diff(100.0, 100.0), 100.0);
        assert_eq!(percentage_diff(200.0, 100.0), 200.0);
        assert_eq!(percentage_diff(75.0, 100.0), 75.0);
    }

    #[test]
    fn constant_times_give_flat_hundred() {
        let mut records = Vec::new();
        for (m, f) in [("a", "b"), ("b", "a")] {
            records.push(rec(m, f, Algorithm::Dyop, 50, 9));
            records.push(rec(m, f, Algorithm::Gjk, 50, 9));
        }
        let r = build_report(&records).unwrap();
        let s = r.baselines[0].wall_clock.unwrap();
        assert_eq!((s.max, s.min, s.mean), (100.0, 100.0, 100.0));
        assert_eq!(r.pairs, 2);
    }

    #[test]
    fn single_pair_summary() {
        let records = vec![
            rec("a", "b", Algorithm::Dyop, 10_000, 9),
            rec("a", "b", Algorithm::LinCanny, 20_593, 18),
        ];
        let r = build_report(&records).unwrap();
        let s = r.baselines[0].wall_clock.unwrap();
        assert!((s.max - 205.93).abs() < 1e-9);
        assert_eq!(s.max, s.min);
        assert!((r.baselines[0].wall_clock_delta.unwrap().max - 105.93).abs() < 1e-9);
        assert_eq!(r.baselines[0].counters.unwrap().max, 200.0);
        // both metric families are present
        assert!(r.baselines[0].wall_clock.is_some() && !r.counters.is_empty());
    }

    #[test]
    fn dyop_only_has_no_baselines() {
        let r = build_report(&[rec("a", "b", Algorithm::Dyop, 10, 9)]).unwrap();
        assert!(r.baselines.is_empty());
        assert_eq!(r.counters[0].totals.vv_tests, 9);
    }

    #[test]
    fn incomplete_inputs_are_rejected() {
        assert!(matches!(
            build_report(&[]),
            Err(BenchError::IncompleteRecords(_))
        ));
        let no_dyop = [rec("a", "b", Algorithm::Gjk, 10, 9)];
        assert!(matches!(
            build_report(&no_dyop),
            Err(BenchError::IncompleteRecords(_))
        ));
        let gap = [
            rec("a", "b", Algorithm::Dyop, 10, 9),
            rec("b", "a", Algorithm::Dyop, 10, 9),
            rec("a", "b", Algorithm::Gjk, 10, 9),
        ];
        assert!(matches!(
            build_report(&gap),
            Err(BenchError::IncompleteRecords(_))
        ));
    }

    #[test]
    fn failed_records_are_skipped_not_dropped() {
        let mut bad = rec("a", "b", Algorithm::LinCanny, 10, 0);
        bad.flags.failed = Some("Penetrating".into());
        bad.distance = None;
        let r = build_report(&[rec("a", "b", Algorithm::Dyop, 10, 9), bad]).unwrap();
        assert_eq!(r.failures, 1);
        assert_eq!(r.baselines[0].skipped_pairs, 1);
        assert!(r.baselines[0].wall_clock.is_none());
        assert_eq!(r.records.len(), 2);
    }
}

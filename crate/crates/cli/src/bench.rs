//! Timing comparison of the basis-preserving and transform constructions.

use std::hint::black_box;
use std::path::Path;
use std::time::{Duration, Instant};

use newtonbez_core::bezout::{bezout_newton_preserving, bezout_newton_preserving_with, bezout_newton_via_transform};
use newtonbez_core::poly::{random_instance, Instance};
use newtonbez_core::{with_counting, Field, Rational};

use crate::error::CliError;
use crate::io::{emit, FieldKind};

pub const CSV_HEADER: &str = "n,m,size,t_preserving,t_trans,ratio,mults,adds";

/// Each timed run repeats the construction until at least this much time
/// has passed and reports the mean, so small degrees are not dominated by
/// clock resolution.
const MIN_RUN: Duration = Duration::from_millis(2);

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub m: usize,
    pub size: usize,
    pub t_preserving: f64,
    pub t_trans: f64,
    pub ratio: f64,
    pub mults: Option<u64>,
    pub adds: Option<u64>,
}

impl BenchRecord {
    pub fn csv_row(&self) -> String {
        let count = |c: Option<u64>| c.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{:.9e},{:.9e},{:.6},{},{}",
            self.n,
            self.m,
            self.size,
            self.t_preserving,
            self.t_trans,
            self.ratio,
            count(self.mults),
            count(self.adds)
        )
    }
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.csv_row());
        out.push('\n');
    }
    out
}

/// Seconds per call: one warm-up, then the median of three runs.
fn time_median<T>(mut f: impl FnMut() -> T) -> f64 {
    black_box(f());
    let mut samples: Vec<f64> = (0..3)
        .map(|_| {
            let start = Instant::now();
            let mut calls = 0u32;
            while calls == 0 || start.elapsed() < MIN_RUN {
                black_box(f());
                calls += 1;
            }
            start.elapsed().as_secs_f64() / f64::from(calls)
        })
        .collect();
    samples.sort_by(f64::total_cmp);
    samples[1]
}

/// Degree pairs benchmarked for `n`: `(n, n)` and, for `n > 2`, `(n, n − 2)`.
pub fn degree_pairs(degrees: &[usize]) -> Vec<(usize, usize)> {
    degrees.iter().flat_map(|&n| std::iter::once((n, n)).chain((n > 2).then_some((n, n - 2)))).collect()
}

fn instance_seed(seed: u64, n: usize, m: usize) -> u64 {
    seed.wrapping_add((n as u64) << 20).wrapping_add(m as u64)
}

fn bench_one<F: Field>(inst: &Instance<F>, n: usize, m: usize) -> Result<BenchRecord, CliError> {
    // Surface precondition errors before timing.
    bezout_newton_preserving(&inst.f, &inst.g)?;
    bezout_newton_via_transform(&inst.f, &inst.g)?;
    let t_preserving = time_median(|| bezout_newton_preserving(&inst.f, &inst.g));
    let t_trans = time_median(|| bezout_newton_via_transform(&inst.f, &inst.g));
    let (mults, adds) = if F::EXACT {
        let (_, c) = with_counting(|ops| bezout_newton_preserving_with(&inst.f, &inst.g, ops));
        (Some(c.multiplications), Some(c.additions))
    } else {
        (None, None)
    };
    Ok(BenchRecord { n, m, size: n, t_preserving, t_trans, ratio: t_trans / t_preserving, mults, adds })
}

/// Runs the benchmark sequentially over every degree pair.
pub fn run_bench(degrees: &[usize], field: FieldKind, seed: u64) -> Result<Vec<BenchRecord>, CliError> {
    if degrees.is_empty() {
        return Err(CliError::Usage("degree list is empty".into()));
    }
    if let Some(bad) = degrees.iter().find(|&&n| n < 2) {
        return Err(CliError::Usage(format!("degree {bad} is below 2")));
    }
    degree_pairs(degrees)
        .into_iter()
        .map(|(n, m)| {
            let s = instance_seed(seed, n, m);
            match field {
                FieldKind::Rational => bench_one(&random_instance::<Rational>(n, m, s)?, n, m),
                FieldKind::F64 => bench_one(&random_instance::<f64>(n, m, s)?, n, m),
            }
        })
        .collect()
}

pub fn cmd_bench(
    degrees: &[usize],
    field: FieldKind,
    seed: u64,
    csv: Option<&Path>,
) -> Result<Vec<BenchRecord>, CliError> {
    let records = run_bench(degrees, field, seed)?;
    emit(csv, &to_csv(&records))?;
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs() {
        assert_eq!(degree_pairs(&[2, 5]), vec![(2, 2), (5, 5), (5, 3)]);
    }

    #[test]
    fn rational_counts_at_four() {
        let records = run_bench(&[4], FieldKind::Rational, 0).unwrap();
        assert_eq!(records.len(), 2);
        for r in &records {
            assert_eq!((r.mults, r.adds), (Some(26), Some(28)));
            assert!(r.t_preserving > 0.0 && r.t_trans > 0.0);
            assert!((r.ratio - r.t_trans / r.t_preserving).abs() <= 1e-12 * r.ratio);
        }
    }

    #[test]
    fn float_rows_leave_counts_empty() {
        let records = run_bench(&[3], FieldKind::F64, 5).unwrap();
        let csv = to_csv(&records);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        for line in lines {
            assert_eq!(line.split(',').count(), 8);
            assert!(line.ends_with(",,"), "{line}");
        }
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_bench(&[], FieldKind::F64, 0).unwrap_err().exit_code(), 2);
        assert_eq!(run_bench(&[4, 1], FieldKind::F64, 0).unwrap_err().exit_code(), 2);
    }
}

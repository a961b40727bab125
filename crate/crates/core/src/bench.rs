//! Morphology sweep harness: generate graphs, verify both algorithm routes
//! against the BFS oracle, then time the matrix-power partition against the
//! Floyd-Warshall route and tabulate the comparison.

use std::fmt::Write as _;
use std::hint::black_box;
use std::time::{Duration, Instant};

use crate::baseline::{floyd_warshall, oracle_partition};
use crate::error::Error;
use crate::graph::Morphology;
use crate::partition::{partition, PartitionResult};

/// One row of a morphology comparison: target shape, measured depth and the
/// median wall-clock time of each route. `correct` is always true for
/// records that make it out of [`run_benchmark`]; a mismatch aborts the run.
#[derive(Debug, Clone)]
pub struct BenchmarkRecord {
    pub morphology: Morphology,
    pub measured_depth: u32,
    pub seed: u64,
    pub t_fw: Duration,
    pub t_new: Duration,
    pub speedup: f64,
    pub correct: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
}

/// Median wall-clock duration of `work` over `repetitions` timed runs after
/// `warmup` untimed ones.
pub fn median_time<F: FnMut()>(mut work: F, warmup: u32, repetitions: u32) -> Duration {
    for _ in 0..warmup {
        work();
    }
    let mut times: Vec<Duration> = (0..repetitions.max(1))
        .map(|_| {
            let start = Instant::now();
            work();
            start.elapsed()
        })
        .collect();
    times.sort_unstable();
    let n = times.len();
    if n % 2 == 1 {
        times[n / 2]
    } else {
        (times[n / 2 - 1] + times[n / 2]) / 2
    }
}

/// Runs the sweep: for every `(morphology, seed)` pair, generates the graph,
/// checks both routes against the oracle and records median timings over
/// `repetitions` runs (one warm-up each). Timing covers the algorithms only,
/// not generation or verification.
pub fn run_benchmark(
    specs: &[Morphology],
    seeds_per_spec: u64,
    repetitions: u32,
) -> Result<Vec<BenchmarkRecord>, Error> {
    let mut records = Vec::new();
    for spec in specs {
        for seed in 0..seeds_per_spec.max(1) {
            let g = spec.generate(seed)?;
            let oracle = oracle_partition(&g)?;

            let fw_route = || -> Result<PartitionResult, Error> {
                let dist = floyd_warshall(&g)?;
                Ok(PartitionResult::from_eccentricities(&dist.eccentricities()))
            };
            let context = format!(
                "N={} NA={} P={} seed={seed}",
                spec.nodes, spec.edges, spec.depth
            );
            let mismatch = |route: &str| Error::BenchmarkMismatch {
                context: format!("{context} ({route} route)"),
            };
            if fw_route()? != oracle {
                return Err(mismatch("floyd-warshall"));
            }
            if partition(&g, true)? != oracle {
                return Err(mismatch("matrix-power"));
            }

            let t_fw = median_time(
                || {
                    black_box(fw_route().expect("verified above"));
                },
                1,
                repetitions,
            );
            let t_new = median_time(
                || {
                    black_box(partition(&g, true).expect("verified above"));
                },
                1,
                repetitions,
            );

            records.push(BenchmarkRecord {
                morphology: *spec,
                measured_depth: oracle.depth(),
                seed,
                t_fw,
                t_new,
                speedup: t_fw.as_secs_f64() / t_new.as_secs_f64().max(f64::MIN_POSITIVE),
                correct: true,
            });
        }
    }
    Ok(records)
}

/// The default sweep: three graph sizes, edge budgets from sparse to dense
/// and target depths from 1 up to N/4. Completes in well under a minute.
pub fn desk_preset() -> Vec<Morphology> {
    let mut specs = Vec::new();
    for &n in &[100usize, 200, 300] {
        let shapes = [
            (2 * n, n / 4),
            (2 * n, 2),
            (n * n / 20, n / 8),
            (n * n / 20, 2),
            (3 * n * n / 20, 2),
            (3 * n * n / 20, 1),
        ];
        for (edges, depth) in shapes {
            specs.push(Morphology {
                nodes: n,
                edges,
                depth,
            });
        }
    }
    specs
}

fn flag(speedup: f64) -> &'static str {
    if speedup < 1.0 {
        "slower"
    } else if speedup >= 10.0 {
        "10x"
    } else {
        ""
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Formats records as CSV or a Markdown table. Both start with a comment /
/// caption line recording the worker thread count in effect.
pub fn emit_table(records: &[BenchmarkRecord], format: TableFormat) -> String {
    let threads = rayon::current_num_threads();
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            writeln!(out, "# threads={threads}").expect("write to String");
            writeln!(
                out,
                "N,NA,P_target,P_measured,seed,t_fw_ms,t_new_ms,speedup,flag"
            )
            .expect("write to String");
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{},{:.3},{:.3},{:.2},{}",
                    r.morphology.nodes,
                    r.morphology.edges,
                    r.morphology.depth,
                    r.measured_depth,
                    r.seed,
                    ms(r.t_fw),
                    ms(r.t_new),
                    r.speedup,
                    flag(r.speedup)
                )
                .expect("write to String");
            }
        }
        TableFormat::Markdown => {
            writeln!(out, "Comparison of computing time ({threads} threads)\n")
                .expect("write to String");
            out.push_str(
                "| N | NA | P target | P measured | seed | FW [ms] | new [ms] | speedup | flag |\n",
            );
            out.push_str("|--:|--:|--:|--:|--:|--:|--:|--:|:--|\n");
            for r in records {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {:.3} | {:.3} | {:.2} | {} |",
                    r.morphology.nodes,
                    r.morphology.edges,
                    r.morphology.depth,
                    r.measured_depth,
                    r.seed,
                    ms(r.t_fw),
                    ms(r.t_new),
                    r.speedup,
                    flag(r.speedup)
                )
                .expect("write to String");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::thread::sleep;

    fn record(speedup: f64) -> BenchmarkRecord {
        BenchmarkRecord {
            morphology: Morphology {
                nodes: 10,
                edges: 9,
                depth: 2,
            },
            measured_depth: 2,
            seed: 0,
            t_fw: Duration::from_micros((speedup * 1000.0) as u64),
            t_new: Duration::from_micros(1000),
            speedup,
            correct: true,
        }
    }

    #[test]
    fn median_is_monotone_under_added_sleep() {
        // Generous margin: sleeps are lower bounds and the test host may be
        // busy running other tests.
        let base = median_time(|| sleep(Duration::from_millis(1)), 0, 3);
        let slower = median_time(
            || {
                sleep(Duration::from_millis(1));
                sleep(Duration::from_millis(25));
            },
            0,
            3,
        );
        assert!(slower > base, "expected {slower:?} > {base:?}");
    }

    #[test]
    fn median_of_even_run_count_averages_the_middle() {
        // Just exercises the even branch; values are wall-clock so only
        // ordering is asserted.
        let d = median_time(|| sleep(Duration::from_millis(1)), 1, 4);
        assert!(d >= Duration::from_millis(1));
    }

    #[test]
    fn empty_table_is_header_only() {
        let csv = emit_table(&[], TableFormat::Csv);
        let mut lines = csv.lines();
        assert!(lines.next().unwrap().starts_with("# threads="));
        assert_eq!(
            lines.next().unwrap(),
            "N,NA,P_target,P_measured,seed,t_fw_ms,t_new_ms,speedup,flag"
        );
        assert_eq!(lines.next(), None);

        let md = emit_table(&[], TableFormat::Markdown);
        assert_eq!(md.lines().filter(|l| l.starts_with('|')).count(), 2);
    }

    #[test]
    fn single_record_row_parses_back() {
        let csv = emit_table(&[record(2.5)], TableFormat::Csv);
        let row = csv.lines().nth(2).unwrap();
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 9);
        assert_eq!(fields[0], "10");
        assert_eq!(fields[1], "9");
        assert_eq!(fields[3], "2");
        assert_eq!(fields[7].parse::<f64>().unwrap(), 2.5);
        assert_eq!(fields[8], "");
    }

    #[test]
    fn flags_mark_slow_and_fast_rows() {
        let csv = emit_table(&[record(0.5), record(12.0)], TableFormat::Csv);
        let rows: Vec<&str> = csv.lines().skip(2).collect();
        assert!(rows[0].ends_with(",slower"));
        assert!(rows[1].ends_with(",10x"));
        let md = emit_table(&[record(0.5)], TableFormat::Markdown);
        assert!(md.contains("| slower |"));
    }

    #[test]
    fn csv_round_trips_through_a_reader() {
        let records: Vec<BenchmarkRecord> = (0..10).map(|i| record(0.5 + i as f64 * 1.5)).collect();
        let text = emit_table(&records, TableFormat::Csv);
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let headers = reader.headers().unwrap().clone();
        assert_eq!(&headers[0], "N");
        assert_eq!(&headers[8], "flag");
        let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 10);
        for (row, rec) in rows.iter().zip(&records) {
            assert_eq!(row[0].parse::<usize>().unwrap(), rec.morphology.nodes);
            assert_eq!(row[2].parse::<usize>().unwrap(), rec.morphology.depth);
            assert_eq!(row[4].parse::<u64>().unwrap(), rec.seed);
            assert!((row[7].parse::<f64>().unwrap() - rec.speedup).abs() < 0.01);
        }
    }

    #[test]
    fn single_node_morphology_runs() {
        let specs = [Morphology {
            nodes: 1,
            edges: 0,
            depth: 0,
        }];
        let records = run_benchmark(&specs, 1, 1).unwrap();
        assert_eq!(records.len(), 1);
        assert!(records[0].correct);
        assert_eq!(records[0].measured_depth, 0);
    }

    #[test]
    fn small_sweep_produces_verified_records() {
        let specs = [
            Morphology {
                nodes: 30,
                edges: 60,
                depth: 2,
            },
            Morphology {
                nodes: 24,
                edges: 23,
                depth: 11,
            },
        ];
        let records = run_benchmark(&specs, 2, 3).unwrap();
        assert_eq!(records.len(), 4);
        for r in &records {
            assert!(r.correct);
            assert!(r.t_fw > Duration::ZERO);
            assert!(r.t_new > Duration::ZERO);
        }
    }

    #[test]
    fn desk_preset_shapes_are_feasible() {
        for m in desk_preset() {
            m.validate().unwrap();
        }
    }
}

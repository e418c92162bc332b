//! Wall-clock timing of the neighborhood solver on seeded random graphs.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crimp_core::solvers::{solve_neighborhood, Policy};

use crate::error::CliError;
use crate::random::{random_instance, rng};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub seed: u64,
    /// Median over the repeats.
    pub elapsed: Duration,
    pub ratio_numerator: u64,
    pub ratio_denominator: u64,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    /// Edges per vertex; `m = round(density * n)`, at least `n - 1`.
    pub densities: Vec<f64>,
    pub ks: Vec<usize>,
    /// Instances per size, seeded `seed, seed + 1, ...`; one row each.
    pub instances: usize,
    pub seed: u64,
    pub repeats: usize,
    pub policy: Policy,
}

/// Instances are generated up front (untimed); each repeat then times every
/// instance once, so every solve starts equally cold and slow stretches on a
/// shared machine spread over all sizes.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>, CliError> {
    let mut cases = Vec::new();
    for &n in &cfg.sizes {
        for &density in &cfg.densities {
            let max = n * n.saturating_sub(1) / 2;
            let m = ((density * n as f64).round() as usize).max(n.saturating_sub(1)).min(max);
            for &k in &cfg.ks {
                for seed in (0..cfg.instances.max(1) as u64).map(|i| cfg.seed.wrapping_add(i)) {
                    cases.push((seed, random_instance(n, m, k, &mut rng(seed))?));
                }
            }
        }
    }
    let mut times = vec![Vec::new(); cases.len()];
    let mut last = vec![None; cases.len()];
    for _ in 0..cfg.repeats.max(1) {
        for (i, (_, inst)) in cases.iter().enumerate() {
            let start = Instant::now();
            let s = solve_neighborhood(inst, cfg.policy)?;
            times[i].push(start.elapsed());
            last[i] = Some(s);
        }
    }
    let rows = cases
        .iter()
        .zip(times.iter_mut())
        .zip(last)
        .map(|(((seed, inst), times), s)| {
            let s = s.expect("at least one repeat");
            times.sort_unstable();
            BenchRow {
                n: inst.graph().n(),
                m: inst.graph().m(),
                k: inst.k(),
                seed: *seed,
                elapsed: times[times.len() / 2],
                ratio_numerator: s.ratio.numerator(),
                ratio_denominator: s.ratio.denominator(),
            }
        })
        .collect();
    Ok(rows)
}

/// Median elapsed time over the rows sharing `(n, m, k)`, in first-seen order.
pub fn median_by_size(rows: &[BenchRow]) -> Vec<(usize, usize, usize, Duration)> {
    let mut groups: Vec<((usize, usize, usize), Vec<Duration>)> = Vec::new();
    for r in rows {
        let key = (r.n, r.m, r.k);
        match groups.iter_mut().find(|(g, _)| *g == key) {
            Some((_, times)) => times.push(r.elapsed),
            None => groups.push((key, vec![r.elapsed])),
        }
    }
    groups
        .into_iter()
        .map(|((n, m, k), mut times)| {
            times.sort_unstable();
            (n, m, k, times[times.len() / 2])
        })
        .collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,m,k,seed,elapsed_seconds,ratio_numerator,ratio_denominator\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{},{}",
            r.n,
            r.m,
            r.k,
            r.seed,
            r.elapsed.as_secs_f64(),
            r.ratio_numerator,
            r.ratio_denominator
        );
    }
    out
}

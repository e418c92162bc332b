//! Greedy baselines. Each round scans every remaining non-edge, so these are
//! meant for small graphs.

use alloc::vec::Vec;

use super::{Algorithm, Solution, SolveError};
use crate::graph::{Edge, EdgeSet, Graph};
use crate::instance::Instance;

fn greedy<F>(inst: &Instance, algorithm: Algorithm, mut score: F) -> Result<Solution, SolveError>
where
    F: FnMut(&Graph, &[Edge]) -> Result<u64, SolveError>,
{
    let g = inst.graph();
    let mut added: Vec<Edge> = Vec::with_capacity(inst.k());
    for _ in 0..inst.k() {
        let mut best: Option<(u64, Edge)> = None;
        for e in g.non_edges() {
            if added.contains(&e) {
                continue;
            }
            added.push(e);
            let s = score(g, &added)?;
            added.pop();
            // Non-edges arrive in lexicographic order, so ties keep the first.
            if best.is_none_or(|(bs, _)| s < bs) {
                best = Some((s, e));
            }
        }
        match best {
            Some((_, e)) => added.push(e),
            None => break,
        }
    }
    Solution::evaluate(inst, EdgeSet::from(added), algorithm)
}

/// `k` rounds, each adding the edge that minimizes `max(cc(a), cc(b))`.
pub fn baseline_greedy_centrality(inst: &Instance) -> Result<Solution, SolveError> {
    let (a, b) = (inst.a(), inst.b());
    greedy(inst, Algorithm::GreedyCentrality, |g, extra| {
        Ok(g.closeness_with(a, extra)?.max(g.closeness_with(b, extra)?))
    })
}

/// `k` rounds, each adding the edge that minimizes the diameter.
pub fn baseline_greedy_diameter(inst: &Instance) -> Result<Solution, SolveError> {
    greedy(inst, Algorithm::GreedyDiameter, |g, extra| Ok(g.diameter_with(extra)? as u64))
}

//! Exhaustive search over edge sets of size at most `k`.
//!
//! Vertices other than `a` and `b` that have identical open or closed
//! neighborhoods are interchangeable: swapping two of them is an automorphism
//! fixing `a` and `b`, so it preserves both sums. Sets are generated in
//! lexicographic order of their sorted edge lists, and a member of such a twin
//! class may appear for the first time only after every lower member of its class
//! has appeared. The lexicographically smallest set of each symmetry orbit
//! satisfies this rule, so the search still returns the set that wins the global
//! tie-break.

use alloc::vec;
use alloc::vec::Vec;

use super::{Algorithm, GapSolution, Solution, SolveError};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::instance::Instance;
use crate::ratio::ExactRatio;

/// Largest number of candidate edge sets the exhaustive solvers will evaluate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

const UNCLASSED: u32 = u32::MAX;

#[derive(PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

struct Search {
    candidates: Vec<Edge>,
    class_of: Vec<u32>,
    rank: Vec<u32>,
    next_rank: Vec<u32>,
    uses: Vec<u32>,
}

fn twin_classes(g: &Graph, a: Vertex, b: Vertex) -> (Vec<u32>, Vec<u32>, usize) {
    let n = g.n();
    let mut keys: Vec<(bool, Vec<Vertex>, Vertex)> = Vec::with_capacity(n);
    for v in 0..n as Vertex {
        if v == a || v == b {
            continue;
        }
        let open = g.neighbors(v).to_vec();
        keys.push((false, open.clone(), v));
        let mut closed = open;
        let pos = closed.partition_point(|&x| x < v);
        closed.insert(pos, v);
        keys.push((true, closed, v));
    }
    keys.sort_unstable();

    let mut class_of = vec![UNCLASSED; n];
    let mut rank = vec![0u32; n];
    let mut classes = 0usize;
    let mut i = 0;
    while i < keys.len() {
        let mut j = i + 1;
        while j < keys.len() && keys[j].0 == keys[i].0 && keys[j].1 == keys[i].1 {
            j += 1;
        }
        // A vertex has a nontrivial class of at most one kind.
        if j - i > 1 {
            for (r, key) in keys[i..j].iter().enumerate() {
                class_of[key.2 as usize] = classes as u32;
                rank[key.2 as usize] = r as u32;
            }
            classes += 1;
        }
        i = j;
    }
    (class_of, rank, classes)
}

impl Search {
    fn new(inst: &Instance) -> Search {
        let g = inst.graph();
        let (class_of, rank, classes) = twin_classes(g, inst.a(), inst.b());
        // No set of k edges touches more than 2k vertices, so higher ranks never
        // qualify.
        let limit = 2 * inst.k() as u32;
        let usable = |v: Vertex| class_of[v as usize] == UNCLASSED || rank[v as usize] < limit;
        let candidates = g.non_edges().filter(|&(u, v)| usable(u) && usable(v)).collect();
        Search {
            candidates,
            class_of,
            rank,
            next_rank: vec![0; classes],
            uses: vec![0; g.n()],
        }
    }

    fn enter(&mut self, v: Vertex) -> bool {
        let c = self.class_of[v as usize];
        if self.uses[v as usize] == 0 && c != UNCLASSED {
            if self.rank[v as usize] != self.next_rank[c as usize] {
                return false;
            }
            self.next_rank[c as usize] += 1;
        }
        self.uses[v as usize] += 1;
        true
    }

    fn leave(&mut self, v: Vertex) {
        self.uses[v as usize] -= 1;
        let c = self.class_of[v as usize];
        if self.uses[v as usize] == 0 && c != UNCLASSED {
            self.next_rank[c as usize] -= 1;
        }
    }

    /// Visits every admissible set of exactly `size` edges in lexicographic order.
    fn visit<F: FnMut(&[Edge]) -> Flow>(&mut self, size: usize, f: &mut F) -> Flow {
        let mut chosen = Vec::with_capacity(size);
        self.dfs(0, size, &mut chosen, f)
    }

    fn dfs<F: FnMut(&[Edge]) -> Flow>(&mut self, start: usize, remaining: usize, chosen: &mut Vec<Edge>, f: &mut F) -> Flow {
        if remaining == 0 {
            return f(chosen);
        }
        let mut i = start;
        while i + remaining <= self.candidates.len() {
            let (u, v) = self.candidates[i];
            i += 1;
            if !self.enter(u) {
                continue;
            }
            if !self.enter(v) {
                self.leave(u);
                continue;
            }
            chosen.push((u, v));
            let flow = self.dfs(i, remaining - 1, chosen, f);
            chosen.pop();
            self.leave(v);
            self.leave(u);
            if flow == Flow::Stop {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    /// Number of sets the search would evaluate, stopping once it exceeds `limit`.
    fn count(&mut self, k: usize, limit: u64) -> u64 {
        let mut total = 0u64;
        for size in 0..=k {
            let flow = self.visit(size, &mut |_| {
                total += 1;
                if total > limit {
                    Flow::Stop
                } else {
                    Flow::Continue
                }
            });
            if flow == Flow::Stop {
                break;
            }
        }
        total
    }
}

/// Number of edge sets the exhaustive solvers evaluate on `inst` after symmetry
/// reduction (every size from 0 to `k`), counting no further than `limit + 1`.
pub fn count_candidate_sets(inst: &Instance, limit: u64) -> u64 {
    Search::new(inst).count(inst.k(), limit)
}

fn prepare(inst: &Instance, cap: u64) -> Result<Search, SolveError> {
    let mut search = Search::new(inst);
    let subsets = search.count(inst.k(), cap);
    if subsets > cap {
        return Err(SolveError::EnumerationCap { subsets, cap });
    }
    Ok(search)
}

/// Best achievable ratio with at most `k` new edges. Refuses when more than `cap`
/// sets would have to be evaluated.
pub fn solve_exact_ratio(inst: &Instance, cap: u64) -> Result<Solution, SolveError> {
    let mut search = prepare(inst, cap)?;
    let (cc_a, cc_b) = inst.closeness_sums();
    let mut best: (ExactRatio, Vec<Edge>, u64, u64) = (ExactRatio::from_sums(cc_a, cc_b), Vec::new(), cc_a, cc_b);
    for size in 1..=inst.k() {
        if best.0.is_one() {
            break;
        }
        let mut found: Option<(ExactRatio, Vec<Edge>, u64, u64)> = None;
        search.visit(size, &mut |added: &[Edge]| {
            let (x, y) = search_sums(inst, added);
            let r = ExactRatio::from_sums(x, y);
            // Same size and lexicographic visiting order: strict improvement only.
            if r > found.as_ref().map_or(best.0, |f| f.0) {
                found = Some((r, added.to_vec(), x, y));
                if r.is_one() {
                    return Flow::Stop;
                }
            }
            Flow::Continue
        });
        if let Some(f) = found {
            best = f;
        }
    }
    let (ratio, added, cc_a, cc_b) = best;
    Ok(Solution {
        added: EdgeSet::from(added),
        cc_a,
        cc_b,
        ratio,
        algorithm: Algorithm::ExactRatio,
        policy: None,
        swapped: false,
        elapsed: Default::default(),
    })
}

/// Smallest achievable `|cc(a) - cc(b)|` with at most `k` new edges. Refuses when
/// more than `cap` sets would have to be evaluated.
pub fn solve_exact_gap(inst: &Instance, cap: u64) -> Result<GapSolution, SolveError> {
    let mut search = prepare(inst, cap)?;
    let (cc_a, cc_b) = inst.closeness_sums();
    let mut best: (u64, Vec<Edge>, u64, u64) = (cc_a.abs_diff(cc_b), Vec::new(), cc_a, cc_b);
    for size in 1..=inst.k() {
        if best.0 == 0 {
            break;
        }
        let mut found: Option<(u64, Vec<Edge>, u64, u64)> = None;
        search.visit(size, &mut |added: &[Edge]| {
            let (x, y) = search_sums(inst, added);
            let gap = x.abs_diff(y);
            if gap < found.as_ref().map_or(best.0, |f| f.0) {
                found = Some((gap, added.to_vec(), x, y));
                if gap == 0 {
                    return Flow::Stop;
                }
            }
            Flow::Continue
        });
        if let Some(f) = found {
            best = f;
        }
    }
    let (gap, added, cc_a, cc_b) = best;
    Ok(GapSolution {
        added: EdgeSet::from(added),
        gap,
        cc_a,
        cc_b,
        algorithm: Algorithm::ExactGap,
        elapsed: Default::default(),
    })
}

fn search_sums(inst: &Instance, added: &[Edge]) -> (u64, u64) {
    let g = inst.graph();
    (
        g.closeness_with(inst.a(), added).expect("instance graph is connected"),
        g.closeness_with(inst.b(), added).expect("instance graph is connected"),
    )
}

//! The neighborhood algorithm: join the two vertices, then connect the less
//! central one to private neighbors of the more central one, and keep the best
//! prefix of that edge sequence. Guarantees 6/11 of the optimal ratio.
//!
//! Along the sequence the sum of the more central vertex is constant once the two
//! vertices are adjacent, while the other sum strictly decreases. The best prefix
//! therefore sits next to the first crossing point, which a binary search finds
//! with `O(log k)` BFS runs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Algorithm, Solution, SolveError};
use crate::graph::{edge, EdgeSet, Graph, Vertex};
use crate::instance::Instance;
use crate::ratio::ExactRatio;

/// Which private neighbor to connect next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Policy {
    /// Smallest vertex id first. Deterministic and cheap.
    #[default]
    SmallestId,
    /// The neighbor whose edge lowers the sum of the less central vertex the most
    /// (ties to the smallest id). One BFS per candidate per step.
    MaxDecrease,
}

impl Policy {
    pub fn tag(&self) -> &'static str {
        match self {
            Policy::SmallestId => "smallest-id",
            Policy::MaxDecrease => "max-decrease",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Policy> {
        [Policy::SmallestId, Policy::MaxDecrease].into_iter().find(|p| p.tag() == tag)
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Runs the neighborhood algorithm.
///
/// When `cc(a) < cc(b)` the roles are exchanged internally (recorded in
/// [`Solution::swapped`]); the reported sums always refer to the instance's own
/// `a` and `b`. Equal sums return the empty set.
pub fn solve_neighborhood(inst: &Instance, policy: Policy) -> Result<Solution, SolveError> {
    let (cc_a, cc_b) = inst.closeness_sums();
    if cc_a == cc_b || inst.k() == 0 {
        let mut s = Solution::evaluate(inst, EdgeSet::new(), Algorithm::Neighborhood)?;
        s.policy = Some(policy);
        return Ok(s);
    }
    let swapped = cc_a < cc_b;
    let (hub, other) = if swapped { (inst.b(), inst.a()) } else { (inst.a(), inst.b()) };
    let g = inst.graph();
    let sequence = build_sequence(g, hub, other, inst.k(), policy);
    let base = if swapped { (cc_b, cc_a) } else { (cc_a, cc_b) };
    let choice = best_prefix(g, hub, other, inst.k(), sequence.as_slice(), base)?;
    let (cc_a, cc_b) = if swapped {
        (choice.cc_other, choice.cc_hub)
    } else {
        (choice.cc_hub, choice.cc_other)
    };
    Ok(Solution {
        added: sequence.prefix(choice.len),
        cc_a,
        cc_b,
        ratio: ExactRatio::from_sums(cc_a, cc_b),
        algorithm: Algorithm::Neighborhood,
        policy: Some(policy),
        swapped,
        elapsed: Default::default(),
    })
}

/// The full edge sequence the algorithm would consider, together with whether
/// the roles were exchanged. With `swapped`, the sequence is incident on `b`.
pub fn neighborhood_sequence(inst: &Instance, policy: Policy) -> (EdgeSet, bool) {
    let (cc_a, cc_b) = inst.closeness_sums();
    if cc_a == cc_b || inst.k() == 0 {
        return (EdgeSet::new(), false);
    }
    let swapped = cc_a < cc_b;
    let (hub, other) = if swapped { (inst.b(), inst.a()) } else { (inst.a(), inst.b()) };
    (build_sequence(inst.graph(), hub, other, inst.k(), policy), swapped)
}

/// Chooses the best prefix of `sequence` (including the empty prefix) for the
/// instance's `a` as the vertex receiving edges.
///
/// `sequence` may start with `ab`; every other edge must join `a` to a current
/// neighbor of `b` that is not adjacent to `a`.
pub fn finalize_binary_search(inst: &Instance, sequence: &EdgeSet) -> Result<Solution, SolveError> {
    let choice = best_prefix(inst.graph(), inst.a(), inst.b(), inst.k(), sequence.as_slice(), inst.closeness_sums())?;
    Ok(Solution {
        added: sequence.prefix(choice.len),
        cc_a: choice.cc_hub,
        cc_b: choice.cc_other,
        ratio: ExactRatio::from_sums(choice.cc_hub, choice.cc_other),
        algorithm: Algorithm::Neighborhood,
        policy: None,
        swapped: false,
        elapsed: Default::default(),
    })
}

fn private_neighbors(g: &Graph, hub: Vertex, other: Vertex) -> impl Iterator<Item = Vertex> + '_ {
    g.neighbors(other).iter().copied().filter(move |&u| u != hub && !g.has_edge(hub, u))
}

fn build_sequence(g: &Graph, hub: Vertex, other: Vertex, k: usize, policy: Policy) -> EdgeSet {
    let mut seq = EdgeSet::new();
    if k == 0 {
        return seq;
    }
    if !g.has_edge(hub, other) {
        seq.push(hub, other);
    }
    match policy {
        Policy::SmallestId => {
            for u in private_neighbors(g, hub, other) {
                if seq.len() == k {
                    break;
                }
                seq.push(hub, u);
            }
        }
        Policy::MaxDecrease => {
            let cc_other = g.closeness_with(other, seq.as_slice()).expect("connected");
            let mut cc_hub = g.closeness_with(hub, seq.as_slice()).expect("connected");
            let mut pool: Vec<Vertex> = private_neighbors(g, hub, other).collect();
            let mut extra = seq.as_slice().to_vec();
            // Past the first crossing no prefix can beat the crossing pair.
            while seq.len() < k && !pool.is_empty() && cc_hub > cc_other {
                let mut best: Option<(u64, usize)> = None;
                for (i, &u) in pool.iter().enumerate() {
                    extra.push(edge(hub, u));
                    let c = g.closeness_with(hub, &extra).expect("connected");
                    extra.pop();
                    if best.is_none_or(|(bc, _)| c < bc) {
                        best = Some((c, i));
                    }
                }
                let (c, i) = best.expect("pool is non-empty");
                let u = pool.remove(i);
                seq.push(hub, u);
                extra.push(edge(hub, u));
                cc_hub = c;
            }
        }
    }
    seq
}

struct PrefixChoice {
    len: usize,
    cc_hub: u64,
    cc_other: u64,
}

fn validate_sequence(g: &Graph, hub: Vertex, other: Vertex, k: usize, seq: &[(Vertex, Vertex)]) -> Result<bool, SolveError> {
    if seq.len() > k {
        return Err(SolveError::SequenceTooLong { len: seq.len(), k });
    }
    g.check_vertex(hub)?;
    g.check_vertex(other)?;
    g.check_additions(seq)?;
    let leading = seq.first() == Some(&edge(hub, other));
    if !leading && !seq.is_empty() && !g.has_edge(hub, other) {
        return Err(SolveError::NotMonotone { edge: seq[0] });
    }
    for &e in &seq[leading as usize..] {
        let u = match e {
            (x, y) if x == hub => y,
            (x, y) if y == hub => x,
            _ => return Err(SolveError::NotMonotone { edge: e }),
        };
        if !g.has_edge(other, u) {
            return Err(SolveError::NotMonotone { edge: e });
        }
    }
    Ok(leading)
}

/// `base` holds the closeness sums of `hub` and `other` before any addition.
fn best_prefix(
    g: &Graph,
    hub: Vertex,
    other: Vertex,
    k: usize,
    seq: &[(Vertex, Vertex)],
    base: (u64, u64),
) -> Result<PrefixChoice, SolveError> {
    let leading = validate_sequence(g, hub, other, k, seq)?;
    let start = leading as usize;
    let len = seq.len();

    let (cc_hub_empty, cc_other_empty) = base;
    let cc_other = if leading { g.closeness_with(other, &seq[..1])? } else { cc_other_empty };

    let mut memo: Vec<Option<u64>> = vec![None; len + 1];
    memo[0] = Some(cc_hub_empty);
    let mut hub_sum = |i: usize| -> Result<u64, SolveError> {
        if let Some(c) = memo[i] {
            return Ok(c);
        }
        let c = g.closeness_with(hub, &seq[..i])?;
        memo[i] = Some(c);
        Ok(c)
    };

    // Smallest prefix at or after `start` where the hub is at least as central.
    let crossing = if start > len || hub_sum(len)? > cc_other {
        None
    } else if hub_sum(start)? <= cc_other {
        Some(start)
    } else {
        let (mut lo, mut hi) = (start, len);
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if hub_sum(mid)? <= cc_other {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Some(hi)
    };

    let mut candidates = vec![0];
    match crossing {
        Some(t) => {
            if t >= 1 {
                candidates.push(t - 1);
            }
            candidates.push(t);
        }
        None => candidates.push(len),
    }
    candidates.sort_unstable();
    candidates.dedup();

    let mut best: Option<(ExactRatio, PrefixChoice)> = None;
    for i in candidates {
        let cc_hub = hub_sum(i)?;
        let cc_o = if i == 0 { cc_other_empty } else { cc_other };
        let ratio = ExactRatio::from_sums(cc_hub, cc_o);
        // Candidates are visited by increasing length, so a strict improvement
        // is required to replace the incumbent.
        if best.as_ref().is_none_or(|(r, _)| ratio > *r) {
            best = Some((ratio, PrefixChoice { len: i, cc_hub, cc_other: cc_o }));
        }
    }
    Ok(best.expect("the empty prefix is always a candidate").1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    /// a = 0 joined to hub b = 1, which carries leaves 2..n.
    fn star(n: usize) -> Graph {
        let edges: Vec<Edge> = (0..n as Vertex).filter(|&v| v != 1).map(|v| edge(1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn exhaustive_best_prefix(inst: &Instance, seq: &EdgeSet) -> (usize, ExactRatio) {
        let mut best = (0, ExactRatio::from_sums(0, 1));
        for i in 0..=seq.len() {
            let p = seq.prefix(i);
            let r = ExactRatio::from_sums(
                inst.graph().closeness_with(inst.a(), p.as_slice()).unwrap(),
                inst.graph().closeness_with(inst.b(), p.as_slice()).unwrap(),
            );
            if i == 0 || r > best.1 {
                best = (i, r);
            }
        }
        best
    }

    #[test]
    fn equal_sums_return_empty_set() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let inst = Instance::new(g, 0, 2, 2).unwrap();
        let s = solve_neighborhood(&inst, Policy::SmallestId).unwrap();
        assert!(s.added.is_empty());
        assert!(s.ratio.is_one());
    }

    #[test]
    fn star_fills_in_private_neighbors() {
        let inst = Instance::new(star(5), 0, 1, 3).unwrap();
        let s = solve_neighborhood(&inst, Policy::SmallestId).unwrap();
        assert_eq!(s.added.as_slice(), &[(0, 2), (0, 3), (0, 4)]);
        assert!(s.ratio.is_one());
        assert!(!s.swapped);
    }

    #[test]
    fn roles_are_exchanged_when_a_is_more_central() {
        let inst = Instance::new(star(5), 1, 0, 3).unwrap();
        let s = solve_neighborhood(&inst, Policy::SmallestId).unwrap();
        assert!(s.swapped);
        assert_eq!((s.cc_a, s.cc_b), (4, 4));
    }

    #[test]
    fn single_edge_sequence_compares_with_empty() {
        let inst = Instance::new(star(5), 0, 1, 3).unwrap();
        let seq = EdgeSet::from([(0, 2)]);
        let s = finalize_binary_search(&inst, &seq).unwrap();
        assert_eq!(s.added.len(), 1);
        assert_eq!(s.ratio, ExactRatio::from_sums(4, 6));
    }

    #[test]
    fn prefix_search_matches_exhaustive_scan_on_path() {
        // a = 0 at the end of a path, b = 1 in the middle of a broom.
        let g = Graph::from_edges(
            9,
            &[(0, 8), (8, 7), (7, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6)],
        )
        .unwrap();
        let inst = Instance::new(g, 0, 1, 6).unwrap();
        let (seq, swapped) = neighborhood_sequence(&inst, Policy::SmallestId);
        assert!(!swapped);
        assert_eq!(seq.as_slice()[0], (0, 1));
        let fast = finalize_binary_search(&inst, &seq).unwrap();
        let (len, ratio) = exhaustive_best_prefix(&inst, &seq);
        assert_eq!(fast.added.len(), len);
        assert_eq!(fast.ratio, ratio);
    }

    #[test]
    fn rejects_edges_away_from_a() {
        let inst = Instance::new(star(5), 0, 1, 3).unwrap();
        let seq = EdgeSet::from([(2, 3)]);
        assert_eq!(
            finalize_binary_search(&inst, &seq),
            Err(SolveError::NotMonotone { edge: (2, 3) })
        );
    }

    #[test]
    fn rejects_sequence_without_ab_when_not_adjacent() {
        let g = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3)]).unwrap();
        let inst = Instance::new(g, 0, 1, 2).unwrap();
        assert_eq!(
            finalize_binary_search(&inst, &EdgeSet::from([(0, 3)])),
            Err(SolveError::NotMonotone { edge: (0, 3) })
        );
        assert!(finalize_binary_search(&inst, &EdgeSet::from([(0, 1), (0, 3)])).is_ok());
    }

    #[test]
    fn max_decrease_policy_is_no_worse_than_input() {
        let inst = Instance::new(star(7), 0, 1, 2).unwrap();
        let s = solve_neighborhood(&inst, Policy::MaxDecrease).unwrap();
        assert!(s.ratio >= inst.ratio());
        assert_eq!(s.policy, Some(Policy::MaxDecrease));
    }

    #[test]
    fn policy_tags_round_trip() {
        assert_eq!(Policy::from_tag("smallest-id"), Some(Policy::SmallestId));
        assert_eq!(Policy::from_tag("max-decrease"), Some(Policy::MaxDecrease));
        assert_eq!(Policy::from_tag("random"), None);
    }
}

use alloc::vec;

use super::{best_of, Algorithm, Solution, SolveError};
use crate::graph::EdgeSet;
use crate::instance::Instance;

/// Adds `ab` when it is missing and keeps whichever of `{}` and `{ab}` has the
/// better ratio. Once `a` and `b` are adjacent the ratio exceeds 1/2.
pub fn solve_trivial(inst: &Instance) -> Result<Solution, SolveError> {
    let empty = Solution::evaluate(inst, EdgeSet::new(), Algorithm::Trivial)?;
    if inst.k() == 0 || inst.graph().has_edge(inst.a(), inst.b()) {
        return Ok(empty);
    }
    let with_ab = Solution::evaluate(inst, EdgeSet::from([(inst.a(), inst.b())]), Algorithm::Trivial)?;
    Ok(best_of(vec![empty, with_ab]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, Graph, Vertex};
    use crate::ratio::ExactRatio;

    fn cycle(n: usize) -> Graph {
        let edges: alloc::vec::Vec<Edge> =
            (0..n as Vertex).map(|v| crate::graph::edge(v, (v + 1) % n as Vertex)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn balanced_pair_keeps_the_empty_set() {
        // Joining antipodal cycle vertices also gives ratio 1, but uses an edge.
        let inst = Instance::new(cycle(6), 0, 3, 1).unwrap();
        let s = solve_trivial(&inst).unwrap();
        assert!(s.added.is_empty());
        assert!(s.ratio.is_one());
    }

    #[test]
    fn path_endpoint_gets_joined() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, 0, 2, 1).unwrap();
        let s = solve_trivial(&inst).unwrap();
        assert_eq!(s.added.as_slice(), &[(0, 2)]);
        assert_eq!(s.ratio, ExactRatio::from_sums(4, 3));
    }

    #[test]
    fn adjacent_pair_is_left_alone() {
        // b = 1 is the hub of a star, a = 0 one of its leaves.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (1, 4)]).unwrap();
        let inst = Instance::new(g, 0, 1, 3).unwrap();
        let s = solve_trivial(&inst).unwrap();
        assert!(s.added.is_empty());
        assert_eq!(s.ratio, ExactRatio::from_sums(4, 7));
    }

    #[test]
    fn zero_budget_returns_input_ratio() {
        let inst = Instance::new(cycle(5), 0, 2, 0).unwrap();
        let s = solve_trivial(&inst).unwrap();
        assert!(s.added.is_empty());
        assert_eq!(s.ratio, inst.ratio());
    }
}

use crate::graph::{Graph, GraphError, Vertex};
use crate::ratio::ExactRatio;

/// A connected graph, two designated vertices and an edge budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    a: Vertex,
    b: Vertex,
    k: usize,
}

impl Instance {
    pub fn new(graph: Graph, a: Vertex, b: Vertex, k: usize) -> Result<Instance, GraphError> {
        graph.check_vertex(a)?;
        graph.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SameVertex(a));
        }
        graph.check_connected()?;
        let non_edges = graph.non_edge_count();
        if k > non_edges {
            return Err(GraphError::BudgetExceedsNonEdges { k, non_edges });
        }
        Ok(Instance { graph, a, b, k })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn a(&self) -> Vertex {
        self.a
    }

    pub fn b(&self) -> Vertex {
        self.b
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Same graph and budget with the roles of `a` and `b` exchanged.
    pub fn swapped(&self) -> Instance {
        Instance { graph: self.graph.clone(), a: self.b, b: self.a, k: self.k }
    }

    /// Same graph and vertices with a different budget.
    pub fn with_budget(&self, k: usize) -> Result<Instance, GraphError> {
        Instance::new(self.graph.clone(), self.a, self.b, k)
    }

    pub fn closeness_sums(&self) -> (u64, u64) {
        // Connectivity was checked at construction.
        (
            self.graph.closeness(self.a).expect("instance graph is connected"),
            self.graph.closeness(self.b).expect("instance graph is connected"),
        )
    }

    pub fn ratio(&self) -> ExactRatio {
        let (x, y) = self.closeness_sums();
        ExactRatio::from_sums(x, y)
    }

    /// FNV-1a hash over `n m a b k` and the sorted edge list.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = OFFSET;
        let mut feed = |x: u64| {
            for byte in x.to_le_bytes() {
                h ^= byte as u64;
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.graph.n() as u64);
        feed(self.graph.m() as u64);
        feed(self.a as u64);
        feed(self.b as u64);
        feed(self.k as u64);
        for (u, v) in self.graph.edges() {
            feed(((u as u64) << 32) | v as u64);
        }
        h
    }
}

/// Closeness ratio of `a` and `b` in `graph`.
pub fn closeness_ratio(graph: &Graph, a: Vertex, b: Vertex) -> Result<ExactRatio, GraphError> {
    if a == b {
        return Err(GraphError::SameVertex(a));
    }
    Ok(ExactRatio::from_sums(graph.closeness(a)?, graph.closeness(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn cycle(n: usize) -> Graph {
        let edges: alloc::vec::Vec<Edge> =
            (0..n as Vertex).map(|v| (v, (v + 1) % n as Vertex)).map(|(u, v)| crate::graph::edge(u, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn vertex_transitive_ratio_is_one() {
        let g = cycle(6);
        for b in 1..6 {
            assert!(closeness_ratio(&g, 0, b).unwrap().is_one());
        }
    }

    #[test]
    fn same_vertex_is_rejected() {
        assert_eq!(closeness_ratio(&cycle(4), 2, 2), Err(GraphError::SameVertex(2)));
        assert_eq!(Instance::new(cycle(4), 1, 1, 0), Err(GraphError::SameVertex(1)));
    }

    #[test]
    fn budget_is_bounded_by_non_edges() {
        let g = cycle(4);
        assert!(Instance::new(g.clone(), 0, 2, 2).is_ok());
        assert_eq!(
            Instance::new(g, 0, 2, 3),
            Err(GraphError::BudgetExceedsNonEdges { k: 3, non_edges: 2 })
        );
    }

    #[test]
    fn disconnected_instances_are_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(Instance::new(g, 0, 1, 0), Err(GraphError::Disconnected { .. })));
    }

    #[test]
    fn fingerprint_depends_on_content() {
        let i1 = Instance::new(cycle(5), 0, 2, 1).unwrap();
        let i2 = Instance::new(cycle(5), 0, 2, 2).unwrap();
        assert_eq!(i1.fingerprint(), i1.clone().fingerprint());
        assert_ne!(i1.fingerprint(), i2.fingerprint());
    }
}

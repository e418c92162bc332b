//! Simple undirected unweighted graphs with dense vertex ids.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Dense vertex id in `0..n`.
pub type Vertex = u32;

/// An unordered vertex pair, always stored with the smaller id first.
pub type Edge = (Vertex, Vertex);

/// Normalizes a pair so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: Vertex, n: usize },
    SelfLoop(Vertex),
    DuplicateEdge(Edge),
    /// The pair is already an edge of the base graph.
    ExistingEdge(Edge),
    Disconnected { unreachable: Vertex },
    SameVertex(Vertex),
    BudgetExceedsNonEdges { k: usize, non_edges: usize },
    TooManyVertices(usize),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge((u, v)) => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::ExistingEdge((u, v)) => {
                write!(f, "({u}, {v}) is already an edge of the graph")
            }
            GraphError::Disconnected { unreachable } => {
                write!(f, "graph is disconnected: vertex {unreachable} is unreachable")
            }
            GraphError::SameVertex(v) => write!(f, "designated vertices must differ (both are {v})"),
            GraphError::BudgetExceedsNonEdges { k, non_edges } => {
                write!(f, "budget {k} exceeds the {non_edges} available non-edges")
            }
            GraphError::TooManyVertices(n) => write!(f, "{n} vertices exceed the 32-bit id space"),
        }
    }
}

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending, so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, parallel edges and
    /// out-of-range endpoints. Connectivity is not required here; see
    /// [`Graph::check_connected`].
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
        if n > UNREACHED as usize {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for u in 0..n {
            let list = &mut targets[offsets[u]..offsets[u + 1]];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(edge(u as Vertex, w[0])));
            }
        }
        Ok(Graph { offsets, targets })
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    /// Number of vertex pairs that are not edges.
    pub fn non_edge_count(&self) -> usize {
        let n = self.n();
        n * n.saturating_sub(1) / 2 - self.m()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Touches the adjacency of queue entries a few slots past `head` so their
    /// cache misses overlap with the current vertex's scan.
    #[inline(always)]
    fn prefetch_ahead(&self, queue: &[Vertex], head: usize) {
        if let Some(&v) = queue.get(head + 8) {
            core::hint::black_box(self.offsets[v as usize]);
        }
        if let Some(&v) = queue.get(head + 4) {
            core::hint::black_box(self.targets.get(self.offsets[v as usize]));
        }
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (u, v) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n() as Vertex).flat_map(move |u| {
            self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v))
        })
    }

    /// All non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.n() as Vertex;
        (0..n).flat_map(move |u| {
            let nbrs = self.neighbors(u);
            (u + 1..n).filter(move |v| nbrs.binary_search(v).is_err()).map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Validates that `edges` are distinct non-edges of this graph.
    pub fn check_additions(&self, edges: &[Edge]) -> Result<(), GraphError> {
        let mut sorted: Vec<Edge> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if self.has_edge(u, v) {
                return Err(GraphError::ExistingEdge(edge(u, v)));
            }
            sorted.push(edge(u, v));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0]));
        }
        Ok(())
    }

    /// The graph `G + S`. The input graph is left untouched.
    pub fn with_edges(&self, added: &EdgeSet) -> Result<Graph, GraphError> {
        self.check_additions(added.as_slice())?;
        let mut all: Vec<Edge> = self.edges().collect();
        all.extend(added.iter());
        Graph::from_edges(self.n(), &all)
    }

    pub fn is_connected(&self) -> bool {
        self.check_connected().is_ok()
    }

    pub fn check_connected(&self) -> Result<(), GraphError> {
        if self.n() == 0 {
            return Ok(());
        }
        self.bfs_distances(0).map(|_| ())
    }

    /// Hop distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<u32>, GraphError> {
        self.bfs_distances_with(source, &[])
    }

    /// Hop distances from `source` in `G + extra`, without materializing the
    /// augmented graph. `extra` must consist of non-edges; this is not rechecked.
    pub fn bfs_distances_with(&self, source: Vertex, extra: &[Edge]) -> Result<Vec<u32>, GraphError> {
        self.check_vertex(source)?;
        let overlay = Overlay::new(self.n(), extra);
        let mut dist = vec![UNREACHED; self.n()];
        // Every vertex enters the queue at most once, so a flat array suffices.
        let mut queue = vec![0 as Vertex; self.n()];
        let (mut head, mut tail) = (0, 1);
        dist[source as usize] = 0;
        queue[0] = source;
        while head < tail {
            self.prefetch_ahead(&queue[..tail], head);
            let u = queue[head];
            head += 1;
            let next = dist[u as usize] + 1;
            for &w in self.neighbors(u) {
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = next;
                    queue[tail] = w;
                    tail += 1;
                }
            }
            if overlay.touches(u) {
                for &w in overlay.neighbors(u) {
                    if dist[w as usize] == UNREACHED {
                        dist[w as usize] = next;
                        queue[tail] = w;
                        tail += 1;
                    }
                }
            }
        }
        if let Some(v) = dist.iter().position(|&d| d == UNREACHED) {
            return Err(GraphError::Disconnected { unreachable: v as Vertex });
        }
        Ok(dist)
    }

    /// Closeness sum of `v`: total hop distance from `v` to every vertex.
    pub fn closeness(&self, v: Vertex) -> Result<u64, GraphError> {
        self.closeness_with(v, &[])
    }

    /// Closeness sum of `v` in `G + extra`, by level-synchronous BFS over a visited bitset.
    pub fn closeness_with(&self, v: Vertex, extra: &[Edge]) -> Result<u64, GraphError> {
        self.check_vertex(v)?;
        let n = self.n();
        let overlay = Overlay::new(self.n(), extra);
        let mut seen = vec![0u64; n.div_ceil(64)];
        let mut queue = vec![0 as Vertex; n + 1];
        seen[v as usize / 64] |= 1 << (v % 64);
        queue[0] = v;
        let (mut head, mut tail) = (0, 1);
        let (mut level, mut total) = (0u64, 0u64);
        while head < tail {
            let end = tail;
            level += 1;
            while head < end {
                self.prefetch_ahead(&queue[..tail], head);
                let u = queue[head];
                head += 1;
                for &w in self.neighbors(u) {
                    // Branch-free: the slot at `tail` (one spare) is overwritten unless `w` is new.
                    let (word, bit) = (w as usize / 64, 1u64 << (w % 64));
                    let fresh = seen[word] & bit == 0;
                    seen[word] |= bit;
                    queue[tail] = w;
                    tail += fresh as usize;
                }
                if overlay.touches(u) {
                    for &w in overlay.neighbors(u) {
                        let (word, bit) = (w as usize / 64, 1u64 << (w % 64));
                        if seen[word] & bit == 0 {
                            seen[word] |= bit;
                            queue[tail] = w;
                            tail += 1;
                        }
                    }
                }
            }
            total += level * (tail - end) as u64;
        }
        if tail < n {
            let unreachable = (0..n).find(|&x| seen[x / 64] >> (x % 64) & 1 == 0).expect("some vertex is unseen");
            return Err(GraphError::Disconnected { unreachable: unreachable as Vertex });
        }
        Ok(total)
    }

    /// Largest eccentricity in `G + extra`.
    pub fn diameter_with(&self, extra: &[Edge]) -> Result<u32, GraphError> {
        let mut best = 0;
        for v in 0..self.n() as Vertex {
            let ecc = self.bfs_distances_with(v, extra)?.into_iter().max().unwrap_or(0);
            best = best.max(ecc);
        }
        Ok(best)
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        self.diameter_with(&[])
    }
}

/// Extra adjacency for a handful of added edges, sorted for range lookup.
struct Overlay {
    arcs: Vec<(Vertex, Vertex)>,
    /// Bit `v` is set when `v` has an extra arc; empty when there are none.
    mask: Vec<u64>,
}

impl Overlay {
    fn new(n: usize, extra: &[Edge]) -> Overlay {
        let mut arcs = Vec::with_capacity(extra.len() * 2);
        let mut mask = if extra.is_empty() { Vec::new() } else { vec![0u64; n.div_ceil(64)] };
        for &(u, v) in extra {
            arcs.push((u, v));
            arcs.push((v, u));
            for x in [u, v] {
                if let Some(word) = mask.get_mut(x as usize / 64) {
                    *word |= 1 << (x % 64);
                }
            }
        }
        arcs.sort_unstable();
        Overlay { arcs, mask }
    }

    #[inline]
    fn touches(&self, u: Vertex) -> bool {
        !self.mask.is_empty() && self.mask[u as usize / 64] >> (u % 64) & 1 == 1
    }

    #[inline]
    fn neighbors(&self, u: Vertex) -> impl Iterator<Item = &Vertex> {
        let start = self.arcs.partition_point(|&(x, _)| x < u);
        self.arcs[start..].iter().take_while(move |&&(x, _)| x == u).map(|(_, w)| w)
    }
}

/// An ordered collection of added edges, each stored as `(u, v)` with `u < v`.
///
/// Insertion order is preserved (the neighborhood solver relies on it); use
/// [`EdgeSet::sorted`] for order-independent comparisons.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> EdgeSet {
        EdgeSet(Vec::new())
    }

    pub fn push(&mut self, u: Vertex, v: Vertex) {
        self.0.push(edge(u, v));
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.0.contains(&edge(u, v))
    }

    pub fn prefix(&self, len: usize) -> EdgeSet {
        EdgeSet(self.0[..len].to_vec())
    }

    pub fn sorted(&self) -> Vec<Edge> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s
    }

    pub fn into_vec(self) -> Vec<Edge> {
        self.0
    }
}

impl From<Vec<Edge>> for EdgeSet {
    fn from(edges: Vec<Edge>) -> EdgeSet {
        EdgeSet(edges.into_iter().map(|(u, v)| edge(u, v)).collect())
    }
}

impl<const N: usize> From<[Edge; N]> for EdgeSet {
    fn from(edges: [Edge; N]) -> EdgeSet {
        EdgeSet::from(edges.to_vec())
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> EdgeSet {
        EdgeSet(iter.into_iter().map(|(u, v)| edge(u, v)).collect())
    }
}

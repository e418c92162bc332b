//! Slow, obviously-correct reference implementations used as test oracles.
#![allow(dead_code)]

use crimp_core::{Edge, Graph, Instance, Vertex};
use proptest::prelude::*;

pub const INF: u64 = u64::MAX / 4;

/// All-pairs hop distances by Floyd-Warshall on an adjacency matrix.
pub fn floyd_warshall(n: usize, edges: &[Edge]) -> Vec<Vec<u64>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in edges {
        d[u as usize][v as usize] = 1;
        d[v as usize][u as usize] = 1;
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][w] + d[w][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

pub fn edge_list(g: &Graph) -> Vec<Edge> {
    g.edges().collect()
}

/// `(cc(a), cc(b))` of `g + added` from the distance matrix.
pub fn oracle_sums(g: &Graph, added: &[Edge], a: Vertex, b: Vertex) -> (u64, u64) {
    let mut edges = edge_list(g);
    edges.extend_from_slice(added);
    let d = floyd_warshall(g.n(), &edges);
    (d[a as usize].iter().sum(), d[b as usize].iter().sum())
}

/// Strictly-better comparison of `x1/y1` against `x2/y2` as min/max ratios.
pub fn ratio_gt(s1: (u64, u64), s2: (u64, u64)) -> bool {
    let (p1, q1) = (s1.0.min(s1.1), s1.0.max(s1.1));
    let (p2, q2) = (s2.0.min(s2.1), s2.0.max(s2.1));
    (p1 as u128) * (q2 as u128) > (p2 as u128) * (q1 as u128)
}

/// All `size`-subsets of `0..len` in lexicographic order.
pub fn combinations(len: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, len: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..len {
            cur.push(i);
            rec(i + 1, len, size, cur, out);
            cur.pop();
        }
    }
    rec(0, len, size, &mut cur, &mut out);
    out
}

pub fn non_edges(g: &Graph) -> Vec<Edge> {
    let mut out = Vec::new();
    for u in 0..g.n() as Vertex {
        for v in u + 1..g.n() as Vertex {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Best ratio over every edge set of size at most `k`, scanning sizes upward
/// and sets in lexicographic order, replacing only on strict improvement.
pub fn brute_force_ratio(inst: &Instance) -> ((u64, u64), Vec<Edge>) {
    let g = inst.graph();
    let cands = non_edges(g);
    let mut best_sums = oracle_sums(g, &[], inst.a(), inst.b());
    let mut best = Vec::new();
    for size in 1..=inst.k() {
        for combo in combinations(cands.len(), size) {
            let set: Vec<Edge> = combo.iter().map(|&i| cands[i]).collect();
            let sums = oracle_sums(g, &set, inst.a(), inst.b());
            if ratio_gt(sums, best_sums) {
                best_sums = sums;
                best = set;
            }
        }
    }
    (best_sums, best)
}

/// Smallest gap over every edge set of size at most `k`, same scanning order.
pub fn brute_force_gap(inst: &Instance) -> (u64, Vec<Edge>) {
    let g = inst.graph();
    let cands = non_edges(g);
    let (x, y) = oracle_sums(g, &[], inst.a(), inst.b());
    let mut best_gap = x.abs_diff(y);
    let mut best = Vec::new();
    for size in 1..=inst.k() {
        for combo in combinations(cands.len(), size) {
            let set: Vec<Edge> = combo.iter().map(|&i| cands[i]).collect();
            let (x, y) = oracle_sums(g, &set, inst.a(), inst.b());
            if x.abs_diff(y) < best_gap {
                best_gap = x.abs_diff(y);
                best = set;
            }
        }
    }
    (best_gap, best)
}

/// Random connected graph: a random tree (vertex `i` hangs off a random earlier
/// vertex) plus a random subset of the remaining pairs.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
            let pairs = n * (n - 1) / 2;
            (Just(n), parents, proptest::collection::vec(0u8..4, pairs))
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<Edge> = parents.iter().enumerate().map(|(i, &p)| (p as Vertex, i as Vertex + 1)).collect();
            let mut idx = 0;
            for u in 0..n as Vertex {
                for v in u + 1..n as Vertex {
                    // Roughly one extra pair in four.
                    if extra[idx] == 0 && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

/// Random instance on a connected graph with budget up to `max_k`.
pub fn instance(max_n: usize, max_k: usize) -> impl Strategy<Value = Instance> {
    connected_graph(max_n).prop_filter("needs two vertices", |g| g.n() >= 2).prop_flat_map(move |g| {
        let n = g.n() as Vertex;
        let non_edges = g.non_edge_count();
        (Just(g), 0..n, 1..n, 0..=max_k.min(non_edges))
    })
    .prop_map(|(g, a, shift, k)| {
        let n = g.n() as Vertex;
        let b = (a + shift) % n;
        Instance::new(g, a, b, k).unwrap()
    })
}

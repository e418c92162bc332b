//! All connected graphs on a few vertices, one per isomorphism class.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a vertex with
//! a non-empty neighborhood (every connected graph has a vertex whose removal
//! keeps it connected) and deduplicated by a canonical code.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, Graph, Vertex};

/// Largest vertex count the canonical code supports.
pub const MAX_CATALOG_VERTICES: usize = 10;

type Adjacency = Vec<u16>;

fn pair_code(adj: &Adjacency, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | ((adj[order[i]] >> order[j]) & 1) as u64;
        }
    }
    code
}

/// Largest pair code over relabelings that keep vertices sorted by a
/// relabeling-invariant key.
fn canonical_code(adj: &Adjacency) -> u64 {
    let n = adj.len();
    let degree = |v: usize| adj[v].count_ones();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(degree).collect();
        nd.sort_unstable_by(|x, y| y.cmp(x));
        (core::cmp::Reverse(degree(v)), nd.into_iter().map(core::cmp::Reverse).collect::<Vec<_>>())
    };
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.sort_by_key(|&v| key(v));
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        if i > 0 && key(vertices[i - 1]) == key(v) {
            classes.last_mut().expect("non-empty").push(v);
        } else {
            classes.push(vec![v]);
        }
    }
    let mut best = 0u64;
    let mut order = Vec::with_capacity(n);
    permute_classes(adj, &mut classes, 0, &mut order, &mut best);
    best
}

fn permute_classes(adj: &Adjacency, classes: &mut [Vec<usize>], c: usize, order: &mut Vec<usize>, best: &mut u64) {
    if c == classes.len() {
        *best = (*best).max(pair_code(adj, order));
        return;
    }
    let len = classes[c].len();
    permute_within(adj, classes, c, 0, len, order, best);
}

fn permute_within(adj: &Adjacency, classes: &mut [Vec<usize>], c: usize, i: usize, len: usize, order: &mut Vec<usize>, best: &mut u64) {
    if i == len {
        let start = order.len();
        order.extend_from_slice(&classes[c]);
        permute_classes(adj, classes, c + 1, order, best);
        order.truncate(start);
        return;
    }
    for j in i..len {
        classes[c].swap(i, j);
        permute_within(adj, classes, c, i + 1, len, order, best);
        classes[c].swap(i, j);
    }
}

fn decode(n: usize, code: u64) -> Vec<Edge> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i as Vertex, j as Vertex));
        }
    }
    let total = pairs.len();
    pairs.into_iter().enumerate().filter(|&(p, _)| code >> (total - 1 - p) & 1 == 1).map(|(_, e)| e).collect()
}

fn adjacency(n: usize, edges: &[Edge]) -> Adjacency {
    let mut adj = vec![0u16; n];
    for &(u, v) in edges {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    adj
}

/// Connected graphs on exactly `n` vertices for every `n` in `1..=max_n`, one per
/// isomorphism class, each in its canonical labeling. Entry `i` holds the graphs
/// on `i + 1` vertices, sorted by canonical code.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Vec<Graph>> {
    assert!(max_n <= MAX_CATALOG_VERTICES, "catalog supports at most {MAX_CATALOG_VERTICES} vertices");
    let mut levels: Vec<Vec<u64>> = Vec::new();
    if max_n == 0 {
        return Vec::new();
    }
    levels.push(vec![0]);
    for n in 2..=max_n {
        let mut next = BTreeSet::new();
        for &code in &levels[n - 2] {
            let mut adj = adjacency(n - 1, &decode(n - 1, code));
            adj.push(0);
            for mask in 1u16..(1 << (n - 1)) {
                let mut grown = adj.clone();
                grown[n - 1] = mask;
                for (v, row) in grown.iter_mut().enumerate().take(n - 1) {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                next.insert(canonical_code(&grown));
            }
        }
        levels.push(next.into_iter().collect());
    }
    levels
        .iter()
        .enumerate()
        .map(|(i, codes)| {
            codes
                .iter()
                .map(|&code| Graph::from_edges(i + 1, &decode(i + 1, code)).expect("decoded graphs are simple"))
                .collect()
        })
        .collect()
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    connected_graphs_up_to(n).pop().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = connected_graphs_up_to(6).iter().map(Vec::len).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn every_graph_is_connected() {
        for g in connected_graphs(5) {
            assert!(g.is_connected());
        }
    }

    #[test]
    fn isomorphic_labelings_share_a_code() {
        let path_a = adjacency(4, &[(0, 1), (1, 2), (2, 3)]);
        let path_b = adjacency(4, &[(2, 0), (0, 3), (3, 1)]);
        let star = adjacency(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(canonical_code(&path_a), canonical_code(&path_b));
        assert_ne!(canonical_code(&path_a), canonical_code(&star));
    }
}

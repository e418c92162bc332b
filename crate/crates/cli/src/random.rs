//! Seeded random connected graphs: a uniform random spanning tree of the
//! complete graph (decoded from a uniform Prüfer sequence) plus extra edges
//! sampled uniformly from the remaining pairs.

use std::collections::HashSet;

use crimp_core::{Edge, Graph, Instance, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Linear-time Prüfer decoding.
fn prufer_tree(n: usize, rng: &mut impl Rng) -> Vec<Edge> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a tree has leaves");
    let mut leaf = ptr;
    for &s in &seq {
        edges.push(((leaf.min(s)) as Vertex, (leaf.max(s)) as Vertex));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1) as Vertex, leaf.max(n - 1) as Vertex));
    edges
}

/// Connected graph on `n` vertices with exactly `m` edges.
pub fn random_connected_graph(n: usize, m: usize, rng: &mut impl Rng) -> Result<Graph, CliError> {
    if n == 0 {
        return Err(CliError::Input("a graph needs at least one vertex".into()));
    }
    let max = n * (n - 1) / 2;
    if m + 1 < n || m > max {
        return Err(CliError::Input(format!("a connected simple graph on {n} vertices has between {} and {max} edges, not {m}", n - 1)));
    }
    let mut edges = prufer_tree(n, rng);
    let mut seen: HashSet<Edge> = edges.iter().copied().collect();
    if m - edges.len() > (max - edges.len()) / 2 {
        // Dense: draw the missing pairs from the explicit complement.
        let mut rest: Vec<Edge> = (0..n as Vertex)
            .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
            .filter(|e| !seen.contains(e))
            .collect();
        let need = m - edges.len();
        for i in 0..need {
            let j = rng.gen_range(i..rest.len());
            rest.swap(i, j);
        }
        edges.extend_from_slice(&rest[..need]);
    } else {
        while edges.len() < m {
            let u = rng.gen_range(0..n as Vertex);
            let v = rng.gen_range(0..n as Vertex);
            if u != v && seen.insert((u.min(v), u.max(v))) {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Random instance with `a != b` chosen uniformly; `k` is capped by the number
/// of non-edges.
pub fn random_instance(n: usize, m: usize, k: usize, rng: &mut impl Rng) -> Result<Instance, CliError> {
    if n < 2 {
        return Err(CliError::Input("an instance needs at least two vertices".into()));
    }
    let g = random_connected_graph(n, m, rng)?;
    let a = rng.gen_range(0..n as Vertex);
    let b = (a + rng.gen_range(1..n as Vertex)) % n as Vertex;
    let k = k.min(g.non_edge_count());
    Ok(Instance::new(g, a, b, k)?)
}

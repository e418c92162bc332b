use alloc::vec::Vec;

use super::SolveError;
use crate::graph::{EdgeSet, Vertex};
use crate::reductions::{CertifiedInstance, Role};

/// Rewrites a solution on a set-cover gadget into edges from `b` to set vertices
/// without increasing `cc(b)`.
///
/// An edge `xy` not touching `b` becomes `b y` for the endpoint `y` farther from
/// `b`. Then `b z` for a pendant `z` becomes an edge to an unused set vertex, and
/// `b v` for an element vertex `v` becomes an edge to a set containing `v`,
/// preferring sets that reach elements not yet at distance two. Edges that end up
/// duplicated are redirected to unused set vertices, or to pendants once every set
/// vertex is used.
pub fn normalize_to_b_star(cert: &CertifiedInstance, solution: &EdgeSet) -> Result<EdgeSet, SolveError> {
    if !cert.family.is_gadget() {
        return Err(SolveError::NotAGadget);
    }
    let inst = &cert.instance;
    let g = inst.graph();
    g.check_additions(solution.as_slice())?;
    let b = inst.b();
    let dist = g.bfs_distances(b)?;

    let set_vertices = cert.vertices_where(|r| matches!(r, Role::SetVertex(_)));
    // Sets containing each element vertex, as set-vertex ids.
    let sets_of = |v: Vertex| -> Vec<Vertex> { g.neighbors(v).iter().copied().filter(|s| set_vertices.contains(s)).collect() };

    // Far endpoints, in solution order.
    let mut targets: Vec<Vertex> = Vec::with_capacity(solution.len());
    for (x, y) in solution.iter() {
        let t = if x == b {
            y
        } else if y == b {
            x
        } else if dist[x as usize] > dist[y as usize] {
            x
        } else {
            y
        };
        // Vertices adjacent to b are already at distance one.
        if !g.has_edge(b, t) {
            targets.push(t);
        }
    }

    let is_set = |v: Vertex| matches!(cert.roles[v as usize], Role::SetVertex(_));
    let is_element = |v: Vertex| matches!(cert.roles[v as usize], Role::Element { .. });
    let reached = |chosen: &[Vertex], v: Vertex| sets_of(v).iter().any(|s| chosen.contains(s));

    let mut chosen: Vec<Vertex> = Vec::new();
    let mut leftover = 0usize;
    for &t in targets.iter().filter(|&&t| is_set(t)) {
        if chosen.contains(&t) {
            leftover += 1;
        } else {
            chosen.push(t);
        }
    }
    for &t in targets.iter().filter(|&&t| !is_set(t)) {
        if is_element(t) && !reached(&chosen, t) {
            chosen.push(sets_of(t)[0]);
        } else {
            leftover += 1;
        }
    }
    // With every set vertex taken, pendants keep each remaining edge worth one.
    let mut spare = cert
        .vertices_where(|r| matches!(r, Role::Independent(_)))
        .into_iter()
        .filter(|z| !solution.contains(b, *z));
    for _ in 0..leftover {
        let unused: Vec<Vertex> = set_vertices.iter().copied().filter(|s| !chosen.contains(s)).collect();
        // Prefer a set that reaches an element still at distance three.
        let pick = unused
            .iter()
            .copied()
            .find(|&s| g.neighbors(s).iter().any(|&v| is_element(v) && !reached(&chosen, v)))
            .or_else(|| unused.first().copied())
            .or_else(|| spare.next());
        match pick {
            Some(s) => chosen.push(s),
            None => break,
        }
    }
    Ok(chosen.into_iter().map(|s| (b, s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reductions::{gen_star, gen_theorem1, SetCoverInstance};
    use alloc::vec;

    fn gadget() -> CertifiedInstance {
        let sc = SetCoverInstance::new(2, vec![vec![0], vec![1], vec![0, 1]], 1).unwrap();
        gen_theorem1(&sc).unwrap()
    }

    fn cc_b(cert: &CertifiedInstance, s: &EdgeSet) -> u64 {
        cert.instance.graph().closeness_with(cert.instance.b(), s.as_slice()).unwrap()
    }

    #[test]
    fn pendant_edge_moves_to_a_set_vertex() {
        let cert = gadget();
        assert_eq!(cert.roles[8], Role::Independent(0));
        let before = EdgeSet::from([(1, 8)]);
        let after = normalize_to_b_star(&cert, &before).unwrap();
        assert_eq!(after.len(), 1);
        assert!(matches!(cert.roles[after.as_slice()[0].1 as usize], Role::SetVertex(_)));
        assert!(cc_b(&cert, &after) <= cc_b(&cert, &before));
    }

    #[test]
    fn element_edge_moves_to_b() {
        let cert = gadget();
        let before = EdgeSet::from([(6, 7)]);
        let after = normalize_to_b_star(&cert, &before).unwrap();
        assert!(after.iter().all(|(u, _)| u == 1));
        assert!(cc_b(&cert, &after) <= cc_b(&cert, &before));
    }

    #[test]
    fn normalized_solution_is_a_fixed_point() {
        let cert = gadget();
        let s = EdgeSet::from([(1, 5)]);
        assert_eq!(normalize_to_b_star(&cert, &s).unwrap(), s);
    }

    #[test]
    fn non_gadgets_are_rejected() {
        let cert = gen_star(5, None).unwrap();
        assert_eq!(normalize_to_b_star(&cert, &EdgeSet::new()), Err(SolveError::NotAGadget));
    }
}

mod common;

use common::*;
use crimp_core::ratio::{ExactRatio, Rational};
use crimp_core::solvers::{
    count_candidate_sets, finalize_binary_search, neighborhood_sequence, solve_exact_gap, solve_exact_ratio,
    solve_neighborhood, solve_trivial, Policy, Solution, DEFAULT_ENUMERATION_CAP,
};
use crimp_core::{EdgeSet, Graph, Instance};
use proptest::prelude::*;

fn sums_ratio(s: (u64, u64)) -> ExactRatio {
    ExactRatio::from_sums(s.0, s.1)
}

/// Best prefix by scanning every prefix, keeping the shortest on ties.
fn best_prefix_scan(inst: &Instance, seq: &EdgeSet) -> (usize, ExactRatio) {
    let mut best = (0, sums_ratio(oracle_sums(inst.graph(), &[], inst.a(), inst.b())));
    for i in 1..=seq.len() {
        let r = sums_ratio(oracle_sums(inst.graph(), seq.prefix(i).as_slice(), inst.a(), inst.b()));
        if r > best.1 {
            best = (i, r);
        }
    }
    best
}

fn consistent(inst: &Instance, s: &Solution) {
    let (x, y) = oracle_sums(inst.graph(), s.added.as_slice(), inst.a(), inst.b());
    assert_eq!((s.cc_a, s.cc_b), (x, y));
    assert_eq!(s.ratio, ExactRatio::from_sums(x, y));
    assert!(s.added.len() <= inst.k());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closeness_matches_floyd_warshall(g in connected_graph(12), extra in proptest::collection::vec((0u32..12, 0u32..12), 0..4)) {
        let n = g.n() as u32;
        let mut added: Vec<(u32, u32)> = Vec::new();
        for (u, v) in extra {
            let e = crimp_core::graph::edge(u % n, v % n);
            if e.0 != e.1 && !g.has_edge(e.0, e.1) && !added.contains(&e) {
                added.push(e);
            }
        }
        let mut edges = edge_list(&g);
        edges.extend_from_slice(&added);
        let d = floyd_warshall(g.n(), &edges);
        for v in 0..n {
            prop_assert_eq!(g.closeness_with(v, &added).unwrap(), d[v as usize].iter().sum::<u64>());
            let bfs = g.bfs_distances_with(v, &added).unwrap();
            for u in 0..n as usize {
                prop_assert_eq!(bfs[u] as u64, d[v as usize][u]);
            }
        }
    }

    #[test]
    fn exact_ratio_matches_full_enumeration(inst in instance(7, 3)) {
        let fast = solve_exact_ratio(&inst, DEFAULT_ENUMERATION_CAP).unwrap();
        let (sums, edges) = brute_force_ratio(&inst);
        prop_assert_eq!(fast.ratio, sums_ratio(sums));
        prop_assert_eq!(fast.added.sorted(), edges);
        consistent(&inst, &fast);
    }

    #[test]
    fn exact_gap_matches_full_enumeration(inst in instance(7, 3)) {
        let fast = solve_exact_gap(&inst, DEFAULT_ENUMERATION_CAP).unwrap();
        let (gap, edges) = brute_force_gap(&inst);
        prop_assert_eq!(fast.gap, gap);
        prop_assert_eq!(fast.added.sorted(), edges);
        let (x, y) = oracle_sums(inst.graph(), fast.added.as_slice(), inst.a(), inst.b());
        prop_assert_eq!((fast.cc_a, fast.cc_b), (x, y));
    }

    #[test]
    fn symmetry_reduction_never_enlarges_the_search(inst in instance(8, 3)) {
        let cands = non_edges(inst.graph()).len();
        let full: usize = (0..=inst.k()).map(|r| combinations(cands, r).len()).sum();
        prop_assert!(count_candidate_sets(&inst, u64::MAX) <= full as u64);
    }

    #[test]
    fn neighborhood_is_within_6_11_of_optimum(inst in instance(9, 2)) {
        let s = solve_neighborhood(&inst, Policy::SmallestId).unwrap();
        let (opt, _) = brute_force_ratio(&inst);
        prop_assert!(s.ratio.at_least_times(6, 11, &sums_ratio(opt)), "{} vs opt {}", s.ratio, sums_ratio(opt));
        consistent(&inst, &s);
    }

    #[test]
    fn neighborhood_dominates_trivial(inst in instance(12, 4)) {
        let t = solve_trivial(&inst).unwrap();
        for policy in [Policy::SmallestId, Policy::MaxDecrease] {
            let s = solve_neighborhood(&inst, policy).unwrap();
            prop_assert!(s.ratio >= t.ratio);
            consistent(&inst, &s);
        }
        consistent(&inst, &t);
    }

    #[test]
    fn prefix_search_matches_prefix_scan(inst in instance(14, 8)) {
        for policy in [Policy::SmallestId, Policy::MaxDecrease] {
            let (seq, swapped) = neighborhood_sequence(&inst, policy);
            let oriented = if swapped { inst.swapped() } else { inst.clone() };
            let fast = finalize_binary_search(&oriented, &seq).unwrap();
            let (len, ratio) = best_prefix_scan(&oriented, &seq);
            prop_assert_eq!(fast.added.len(), len);
            prop_assert_eq!(fast.ratio, ratio);
        }
    }

    #[test]
    fn sequence_is_monotone(inst in instance(14, 8)) {
        let (seq, swapped) = neighborhood_sequence(&inst, Policy::SmallestId);
        let oriented = if swapped { inst.swapped() } else { inst.clone() };
        let g = oriented.graph();
        let start = usize::from(!g.has_edge(oriented.a(), oriented.b()) && !seq.is_empty());
        let mut prev: Option<(u64, u64)> = None;
        for i in start..=seq.len() {
            let (x, y) = oracle_sums(g, seq.prefix(i).as_slice(), oriented.a(), oriented.b());
            if let Some((px, py)) = prev {
                prop_assert!(x < px);
                prop_assert_eq!(y, py);
            }
            prev = Some((x, y));
        }
    }

    #[test]
    fn enough_edges_near_a_guarantee_6_11(inst in instance(12, 6)) {
        let g = inst.graph();
        let (x, y) = inst.closeness_sums();
        prop_assume!(y <= x && 6 * (inst.k() + g.degree(inst.a())) >= g.n());
        let s = solve_neighborhood(&inst, Policy::SmallestId).unwrap();
        prop_assert!(s.ratio.cmp_fraction(6, 11).is_ge());
    }

    #[test]
    fn adding_to_both_sides_of_a_fraction(w in 0i64..1000, p in 1i64..1000, gap in 1i64..1000) {
        let q = p + gap;
        prop_assume!(w < p);
        let (w, p, q) = (w as i128, p as i128, q as i128);
        prop_assert!(Rational::new(p + w, q + w) >= Rational::new(p, q));
    }

    #[test]
    fn subtracting_from_a_fraction(w in 0i64..1000, q in 2i64..2000, p_off in 1i64..1000) {
        let (w, q) = (w as i128, q as i128);
        let p = q / 2 + 1 + (p_off as i128 % ((q - q / 2 - 1).max(1)));
        prop_assume!(2 * w < q && 2 * p > q && p < q);
        prop_assert!(Rational::new(p - w, q - 2 * w) >= Rational::new(p, q));
    }
}

#[test]
fn exact_ratio_on_short_path() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let inst = Instance::new(g, 0, 2, 1).unwrap();
    let s = solve_exact_ratio(&inst, DEFAULT_ENUMERATION_CAP).unwrap();
    // Path 0-1-2 is already balanced between its endpoints.
    assert!(s.ratio.is_one());
    assert!(s.added.is_empty());

    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let inst = Instance::new(g, 0, 2, 1).unwrap();
    let s = solve_exact_ratio(&inst, DEFAULT_ENUMERATION_CAP).unwrap();
    let (sums, edges) = brute_force_ratio(&inst);
    assert_eq!(s.ratio, sums_ratio(sums));
    assert_eq!(s.added.sorted(), edges);
}

#[test]
fn zero_budget_keeps_input_ratio() {
    let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let inst = Instance::new(g, 0, 3, 0).unwrap();
    assert_eq!(solve_exact_ratio(&inst, 10).unwrap().ratio, inst.ratio());
    assert_eq!(solve_exact_gap(&inst, 10).unwrap().gap, 0);
}

#[test]
fn prefix_search_without_crossing_returns_whole_sequence() {
    // b is the hub of a large star; a hangs off b through one extra vertex.
    let mut edges: Vec<(u32, u32)> = (3..12).map(|v| (1, v)).collect();
    edges.push((0, 2));
    edges.push((1, 2));
    let g = Graph::from_edges(12, &edges).unwrap();
    let inst = Instance::new(g, 0, 1, 3).unwrap();
    let seq = EdgeSet::from([(0, 1), (0, 3), (0, 4)]);
    let s = finalize_binary_search(&inst, &seq).unwrap();
    let (x, y) = oracle_sums(inst.graph(), seq.as_slice(), 0, 1);
    assert!(x > y);
    assert_eq!(s.added, seq);
}

//! Executable forms of the structural facts behind the neighborhood algorithm.
//! Each check evaluates its hypotheses exactly; when they hold it evaluates the
//! conclusion, and a failure is reported as a violation with the numbers needed
//! to replay it.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{edge, Graph, GraphError, Vertex};
use crate::instance::Instance;
use crate::ratio::ExactRatio;
use crate::solvers::{solve_exact_ratio, SolveError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    HypothesisNotMet,
    Violated,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::Violated => "violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fact {
    Int(u64),
    Ratio(ExactRatio),
    Bool(bool),
    Vertex(Vertex),
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fact::Int(v) => write!(f, "{v}"),
            Fact::Ratio(r) => write!(f, "{r}"),
            Fact::Bool(b) => write!(f, "{b}"),
            Fact::Vertex(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: &'static str,
    /// Fingerprint of the checked graph with its designated vertices and budget.
    pub fingerprint: u64,
    pub verdict: Verdict,
    /// Which hypothesis failed, or which condition decided the verdict.
    pub reason: &'static str,
    /// Named quantities, in evaluation order.
    pub facts: Vec<(&'static str, Fact)>,
}

impl CheckReport {
    fn new(check: &'static str, fingerprint: u64) -> CheckReport {
        CheckReport { check, fingerprint, verdict: Verdict::HypothesisNotMet, reason: "", facts: Vec::new() }
    }

    fn fact(&mut self, name: &'static str, value: Fact) {
        self.facts.push((name, value));
    }

    fn finish(mut self, verdict: Verdict, reason: &'static str) -> CheckReport {
        self.verdict = verdict;
        self.reason = reason;
        self
    }

    pub fn get(&self, name: &str) -> Option<Fact> {
        self.facts.iter().find(|(n, _)| *n == name).map(|&(_, f)| f)
    }
}

/// The partition of the vertices other than `a` and `b` by adjacency to them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodDecomposition {
    /// `N(a) \ N[b]`.
    pub a_private: Vec<Vertex>,
    /// `N(b) \ N[a]`.
    pub b_private: Vec<Vertex>,
    /// `N(a) ∩ N(b)`.
    pub mutual: Vec<Vertex>,
    pub rest: Vec<Vertex>,
}

impl NeighborhoodDecomposition {
    pub fn new(g: &Graph, a: Vertex, b: Vertex) -> NeighborhoodDecomposition {
        let mut d = NeighborhoodDecomposition { a_private: Vec::new(), b_private: Vec::new(), mutual: Vec::new(), rest: Vec::new() };
        for v in 0..g.n() as Vertex {
            if v == a || v == b {
                continue;
            }
            match (g.has_edge(a, v), g.has_edge(b, v)) {
                (true, true) => d.mutual.push(v),
                (true, false) => d.a_private.push(v),
                (false, true) => d.b_private.push(v),
                (false, false) => d.rest.push(v),
            }
        }
        d
    }

    pub fn total(&self) -> usize {
        self.a_private.len() + self.b_private.len() + self.mutual.len() + self.rest.len() + 2
    }
}

fn fingerprint(g: &Graph, a: Vertex, b: Vertex, k: usize) -> Result<u64, GraphError> {
    Ok(Instance::new(g.clone(), a, b, k.min(g.non_edge_count()))?.fingerprint())
}

/// `(cc(a), cc(b))` in `G + ab` (the graph itself when they are adjacent).
fn sums_with_ab(g: &Graph, a: Vertex, b: Vertex) -> Result<(u64, u64), GraphError> {
    if g.has_edge(a, b) {
        return Ok((g.closeness(a)?, g.closeness(b)?));
    }
    let extra = [edge(a, b)];
    Ok((g.closeness_with(a, &extra)?, g.closeness_with(b, &extra)?))
}

/// Adjacent vertices have ratio above 1/2, because
/// `cc(a) <= cc(b) + n - 2` and vice versa.
pub fn check_observation1(g: &Graph, a: Vertex, b: Vertex) -> Result<CheckReport, GraphError> {
    let mut r = CheckReport::new("obs1", fingerprint(g, a, b, 0)?);
    if !g.has_edge(a, b) {
        return Ok(r.finish(Verdict::HypothesisNotMet, "a and b are not adjacent"));
    }
    let (x, y) = (g.closeness(a)?, g.closeness(b)?);
    let (lo, hi) = (x.min(y), x.max(y));
    let n = g.n() as u64;
    r.fact("cc_a", Fact::Int(x));
    r.fact("cc_b", Fact::Int(y));
    r.fact("n", Fact::Int(n));
    r.fact("ratio", Fact::Ratio(ExactRatio::from_sums(x, y)));
    let strict_half = 2 * lo > hi;
    let additive = hi <= lo + n - 2;
    r.fact("twice_min_exceeds_max", Fact::Bool(strict_half));
    r.fact("max_within_n_minus_2", Fact::Bool(additive));
    Ok(if strict_half && additive {
        r.finish(Verdict::Holds, "ratio above 1/2")
    } else {
        r.finish(Verdict::Violated, "ratio bound fails for adjacent vertices")
    })
}

/// With `cc(b) < cc(a)`: adding `ab` keeps `b` strictly more central, or `G + ab`
/// is already 6/11-balanced, or `G` is.
pub fn check_no_switching(g: &Graph, a: Vertex, b: Vertex) -> Result<CheckReport, GraphError> {
    let mut r = CheckReport::new("no-switching", fingerprint(g, a, b, 0)?);
    let (x, y) = (g.closeness(a)?, g.closeness(b)?);
    r.fact("cc_a", Fact::Int(x));
    r.fact("cc_b", Fact::Int(y));
    if y >= x {
        return Ok(r.finish(Verdict::HypothesisNotMet, "cc(b) is not smaller than cc(a)"));
    }
    let (xa, yb) = sums_with_ab(g, a, b)?;
    let ratio = ExactRatio::from_sums(x, y);
    let ratio_ab = ExactRatio::from_sums(xa, yb);
    r.fact("cc_a_with_ab", Fact::Int(xa));
    r.fact("cc_b_with_ab", Fact::Int(yb));
    r.fact("ratio", Fact::Ratio(ratio));
    r.fact("ratio_with_ab", Fact::Ratio(ratio_ab));
    let keeps_order = yb < xa;
    let ab_balanced = ratio_ab.cmp_fraction(6, 11).is_ge();
    let input_balanced = ratio.cmp_fraction(6, 11).is_ge();
    r.fact("b_stays_more_central", Fact::Bool(keeps_order));
    r.fact("ratio_with_ab_at_least_6_11", Fact::Bool(ab_balanced));
    r.fact("ratio_at_least_6_11", Fact::Bool(input_balanced));
    Ok(if keeps_order {
        r.finish(Verdict::Holds, "b stays more central after adding ab")
    } else if ab_balanced {
        r.finish(Verdict::Holds, "ratio with ab is at least 6/11")
    } else if input_balanced {
        r.finish(Verdict::Holds, "input ratio is at least 6/11")
    } else {
        r.finish(Verdict::Violated, "no alternative holds")
    })
}

/// With `ab` an edge, `cc(b) < cc(a)`, ratio below 2/3 and `u` a neighbor of `b`
/// such that adding `au` makes `a` at least as central as `b`: the ratio of
/// `G + au` is at least 2/3.
pub fn check_termination(g: &Graph, a: Vertex, b: Vertex, u: Vertex) -> Result<CheckReport, GraphError> {
    g.check_vertex(u)?;
    let mut r = CheckReport::new("termination", fingerprint(g, a, b, 0)?);
    r.fact("u", Fact::Vertex(u));
    if !g.has_edge(a, b) {
        return Ok(r.finish(Verdict::HypothesisNotMet, "a and b are not adjacent"));
    }
    let (x, y) = (g.closeness(a)?, g.closeness(b)?);
    r.fact("cc_a", Fact::Int(x));
    r.fact("cc_b", Fact::Int(y));
    if y >= x {
        return Ok(r.finish(Verdict::HypothesisNotMet, "cc(b) is not smaller than cc(a)"));
    }
    let ratio = ExactRatio::from_sums(x, y);
    r.fact("ratio", Fact::Ratio(ratio));
    if ratio.cmp_fraction(2, 3).is_ge() {
        return Ok(r.finish(Verdict::HypothesisNotMet, "ratio is already at least 2/3"));
    }
    if u == a || !g.has_edge(b, u) || g.has_edge(a, u) {
        return Ok(r.finish(Verdict::HypothesisNotMet, "u is not a private neighbor of b"));
    }
    let extra = [edge(a, u)];
    let (xu, yu) = (g.closeness_with(a, &extra)?, g.closeness_with(b, &extra)?);
    r.fact("cc_a_with_au", Fact::Int(xu));
    r.fact("cc_b_with_au", Fact::Int(yu));
    if xu > yu {
        return Ok(r.finish(Verdict::HypothesisNotMet, "adding au leaves a less central"));
    }
    let after = ExactRatio::from_sums(xu, yu);
    r.fact("ratio_with_au", Fact::Ratio(after));
    Ok(if after.cmp_fraction(2, 3).is_ge() {
        r.finish(Verdict::Holds, "ratio with au is at least 2/3")
    } else {
        r.finish(Verdict::Violated, "ratio with au is below 2/3")
    })
}

/// When neither `G` nor `G + ab` reaches 6/11 of the optimum while `b` stays more
/// central: `5 cc(G+ab, b) < 6(n-2)`, the optimum exceeds 11/12,
/// `5 |N(b) \ N[a]| > 4(n-2)`, and `6(k + deg a) >= n`.
///
/// The optimum comes from the exhaustive solver, limited to `cap` candidate sets;
/// a refusal is reported as an unmet hypothesis.
pub fn check_private_neighbor_bounds(inst: &Instance, cap: u64) -> Result<CheckReport, GraphError> {
    let (g, a, b, k) = (inst.graph(), inst.a(), inst.b(), inst.k());
    let mut r = CheckReport::new("private-neighbors", inst.fingerprint());
    let d = NeighborhoodDecomposition::new(g, a, b);
    let n = g.n() as u64;
    r.fact("n", Fact::Int(n));
    r.fact("k", Fact::Int(k as u64));
    r.fact("partition_is_exact", Fact::Bool(d.total() == g.n()));
    if d.total() != g.n() {
        return Ok(r.finish(Verdict::Violated, "neighborhood partition does not cover the vertices"));
    }
    let (x, y) = inst.closeness_sums();
    r.fact("cc_a", Fact::Int(x));
    r.fact("cc_b", Fact::Int(y));
    if y >= x {
        return Ok(r.finish(Verdict::HypothesisNotMet, "cc(b) is not smaller than cc(a)"));
    }
    let (xa, yb) = sums_with_ab(g, a, b)?;
    r.fact("cc_a_with_ab", Fact::Int(xa));
    r.fact("cc_b_with_ab", Fact::Int(yb));
    if yb >= xa {
        return Ok(r.finish(Verdict::HypothesisNotMet, "adding ab makes a at least as central"));
    }
    let opt = match solve_exact_ratio(inst, cap) {
        Ok(s) => s.ratio,
        Err(SolveError::EnumerationCap { .. }) => {
            return Ok(r.finish(Verdict::HypothesisNotMet, "optimum unavailable: enumeration cap"));
        }
        Err(SolveError::Graph(e)) => return Err(e),
        Err(_) => return Ok(r.finish(Verdict::HypothesisNotMet, "optimum unavailable")),
    };
    let ratio = ExactRatio::from_sums(x, y);
    let ratio_ab = ExactRatio::from_sums(xa, yb);
    r.fact("opt", Fact::Ratio(opt));
    r.fact("ratio", Fact::Ratio(ratio));
    r.fact("ratio_with_ab", Fact::Ratio(ratio_ab));
    // ratio < (6/11) opt  <=>  not (ratio >= (6/11) opt)
    if ratio.at_least_times(6, 11, &opt) || ratio_ab.at_least_times(6, 11, &opt) {
        return Ok(r.finish(Verdict::HypothesisNotMet, "G or G + ab is already within 6/11 of the optimum"));
    }
    let part1 = 5 * yb < 6 * (n - 2);
    let part2 = opt.cmp_fraction(11, 12).is_gt();
    let b_private = d.b_private.len() as u64;
    let part3 = 5 * b_private > 4 * (n - 2);
    let budget = 6 * (k as u64 + g.degree(a) as u64) >= n;
    r.fact("b_private", Fact::Int(b_private));
    r.fact("deg_a", Fact::Int(g.degree(a) as u64));
    r.fact("cc_b_with_ab_below_6_5_of_n_minus_2", Fact::Bool(part1));
    r.fact("opt_above_11_12", Fact::Bool(part2));
    r.fact("b_private_above_4_5_of_n_minus_2", Fact::Bool(part3));
    r.fact("k_plus_deg_a_at_least_n_over_6", Fact::Bool(budget));
    Ok(if part1 && part2 && part3 && budget {
        r.finish(Verdict::Holds, "all bounds hold")
    } else {
        r.finish(Verdict::Violated, "a bound fails")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn star(n: usize) -> Graph {
        let edges: Vec<Edge> = (0..n as Vertex).filter(|&v| v != 1).map(|v| edge(1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<Edge> = (0..n as Vertex).map(|v| edge(v, (v + 1) % n as Vertex)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn observation1_on_star() {
        let r = check_observation1(&star(5), 0, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.get("ratio"), Some(Fact::Ratio(ExactRatio::from_sums(7, 4))));
    }

    #[test]
    fn observation1_needs_adjacency() {
        let g = Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(check_observation1(&g, 0, 1).unwrap().verdict, Verdict::HypothesisNotMet);
        assert_eq!(check_observation1(&cycle(6), 0, 1).unwrap().verdict, Verdict::Holds);
    }

    #[test]
    fn no_switching_on_star_uses_input_ratio_or_order() {
        let r = check_no_switching(&star(5), 0, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.get("b_stays_more_central"), Some(Fact::Bool(true)));
        assert_eq!(check_no_switching(&star(5), 1, 0).unwrap().verdict, Verdict::HypothesisNotMet);
    }

    #[test]
    fn termination_gates() {
        let g = star(6);
        // u = 2 is a private neighbor of b; ratio 5/9 < 2/3.
        let r = check_termination(&g, 0, 1, 2).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisNotMet);
        assert_eq!(r.reason, "adding au leaves a less central");
        assert_eq!(check_termination(&g, 0, 1, 0).unwrap().verdict, Verdict::HypothesisNotMet);
        let cycle = cycle(6);
        assert_eq!(check_termination(&cycle, 0, 1, 2).unwrap().reason, "cc(b) is not smaller than cc(a)");
    }

    #[test]
    fn decomposition_partitions_vertices() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (0, 4), (1, 4), (3, 5)]).unwrap();
        let d = NeighborhoodDecomposition::new(&g, 0, 1);
        assert_eq!(d.a_private, [2]);
        assert_eq!(d.b_private, [3]);
        assert_eq!(d.mutual, [4]);
        assert_eq!(d.rest, [5]);
        assert_eq!(d.total(), 6);
    }

    #[test]
    fn private_neighbor_bounds_gate_on_balanced_input() {
        let inst = Instance::new(star(5), 0, 1, 1).unwrap();
        let r = check_private_neighbor_bounds(&inst, 1_000).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisNotMet);
    }
}

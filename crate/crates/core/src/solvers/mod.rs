//! Strategies for choosing at most `k` edges to add.
//!
//! Every solver returns a [`Solution`] whose sums are recomputed on `G + added`.
//! Whenever candidates tie on the objective, the one with fewer edges wins, and
//! then the one whose sorted edge list is lexicographically smallest.

mod baselines;
mod exact;
mod neighborhood;
mod normalize;
mod trivial;

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::time::Duration;

use crate::graph::{Edge, EdgeSet, GraphError};
use crate::instance::Instance;
use crate::ratio::ExactRatio;

pub use baselines::{baseline_greedy_centrality, baseline_greedy_diameter};
pub use exact::{count_candidate_sets, solve_exact_gap, solve_exact_ratio, DEFAULT_ENUMERATION_CAP};
pub use neighborhood::{finalize_binary_search, neighborhood_sequence, solve_neighborhood, Policy};
pub use normalize::normalize_to_b_star;
pub use trivial::solve_trivial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Trivial,
    Neighborhood,
    ExactRatio,
    ExactGap,
    GreedyCentrality,
    GreedyDiameter,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Trivial,
        Algorithm::Neighborhood,
        Algorithm::ExactRatio,
        Algorithm::ExactGap,
        Algorithm::GreedyCentrality,
        Algorithm::GreedyDiameter,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Algorithm::Trivial => "trivial",
            Algorithm::Neighborhood => "neighborhood",
            Algorithm::ExactRatio => "exact-ratio",
            Algorithm::ExactGap => "exact-gap",
            Algorithm::GreedyCentrality => "greedy-centrality",
            Algorithm::GreedyDiameter => "greedy-diameter",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Algorithm> {
        Algorithm::ALL.into_iter().find(|a| a.tag() == tag)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Graph(GraphError),
    /// The exhaustive search space exceeds the cap.
    EnumerationCap { subsets: u64, cap: u64 },
    /// A sequence handed to the prefix search breaks the monotone structure.
    NotMonotone { edge: Edge },
    SequenceTooLong { len: usize, k: usize },
    /// The instance carries no set-cover gadget layout.
    NotAGadget,
}

impl From<GraphError> for SolveError {
    fn from(e: GraphError) -> SolveError {
        SolveError::Graph(e)
    }
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Graph(e) => write!(f, "{e}"),
            SolveError::EnumerationCap { subsets, cap } => write!(
                f,
                "exhaustive search refused: more than {cap} candidate edge sets (counted {subsets})"
            ),
            SolveError::NotMonotone { edge: (u, v) } => write!(
                f,
                "edge ({u}, {v}) breaks the prefix search contract (must join a to a private neighbor of b)"
            ),
            SolveError::SequenceTooLong { len, k } => {
                write!(f, "sequence of {len} edges exceeds the budget {k}")
            }
            SolveError::NotAGadget => f.write_str("instance is not a set-cover gadget"),
        }
    }
}

/// Edges chosen for the ratio objective, with the sums they produce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub added: EdgeSet,
    /// Closeness sum of the instance's `a` in `G + added`.
    pub cc_a: u64,
    /// Closeness sum of the instance's `b` in `G + added`.
    pub cc_b: u64,
    pub ratio: ExactRatio,
    pub algorithm: Algorithm,
    /// Vertex selection policy, for the neighborhood solver.
    pub policy: Option<Policy>,
    /// The neighborhood solver exchanged the roles of `a` and `b` so that the
    /// less central vertex receives the new edges.
    pub swapped: bool,
    /// Wall-clock time spent solving. The core crate has no clock, so this stays
    /// zero unless the caller measures it.
    pub elapsed: Duration,
}

impl Solution {
    /// Recomputes the sums of `G + added`, validating the additions.
    pub fn evaluate(inst: &Instance, added: EdgeSet, algorithm: Algorithm) -> Result<Solution, SolveError> {
        if added.len() > inst.k() {
            return Err(SolveError::SequenceTooLong { len: added.len(), k: inst.k() });
        }
        let g = inst.graph();
        g.check_additions(added.as_slice())?;
        let cc_a = g.closeness_with(inst.a(), added.as_slice())?;
        let cc_b = g.closeness_with(inst.b(), added.as_slice())?;
        Ok(Solution {
            added,
            cc_a,
            cc_b,
            ratio: ExactRatio::from_sums(cc_a, cc_b),
            algorithm,
            policy: None,
            swapped: false,
            elapsed: Duration::ZERO,
        })
    }

    pub fn gap(&self) -> u64 {
        self.cc_a.abs_diff(self.cc_b)
    }
}

/// Edges chosen for the gap objective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSolution {
    pub added: EdgeSet,
    pub gap: u64,
    pub cc_a: u64,
    pub cc_b: u64,
    pub algorithm: Algorithm,
    pub elapsed: Duration,
}

impl GapSolution {
    pub fn ratio(&self) -> ExactRatio {
        ExactRatio::from_sums(self.cc_a, self.cc_b)
    }
}

/// Orders two edge sets of equal objective value: fewer edges first, then the
/// lexicographically smaller sorted edge list.
pub fn tie_break(x: &[Edge], y: &[Edge]) -> Ordering {
    x.len().cmp(&y.len()).then_with(|| {
        let mut xs: Vec<Edge> = x.to_vec();
        let mut ys: Vec<Edge> = y.to_vec();
        xs.sort_unstable();
        ys.sort_unstable();
        xs.cmp(&ys)
    })
}

/// True when the candidate `(ratio, edges)` is strictly preferable to the incumbent.
pub(crate) fn ratio_preferred(ratio: ExactRatio, edges: &[Edge], best_ratio: ExactRatio, best_edges: &[Edge]) -> bool {
    match ratio.cmp(&best_ratio) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => tie_break(edges, best_edges) == Ordering::Less,
    }
}

/// Picks the better of several evaluated solutions under the global order.
pub(crate) fn best_of(candidates: Vec<Solution>) -> Solution {
    let mut it = candidates.into_iter();
    let mut best = it.next().expect("at least one candidate");
    for s in it {
        if ratio_preferred(s.ratio, s.added.as_slice(), best.ratio, best.added.as_slice()) {
            best = s;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tie_break_prefers_fewer_then_smaller_edges() {
        assert_eq!(tie_break(&[], &[(0, 1)]), Ordering::Less);
        assert_eq!(tie_break(&[(0, 2)], &[(0, 1)]), Ordering::Greater);
        assert_eq!(tie_break(&[(1, 3), (0, 4)], &[(0, 4), (1, 3)]), Ordering::Equal);
        assert_eq!(tie_break(&[(0, 4), (1, 2)], &[(0, 3), (5, 6)]), Ordering::Greater);
    }

    #[test]
    fn algorithm_tags_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(Algorithm::from_tag(a.tag()), Some(a));
        }
        assert_eq!(Algorithm::from_tag("nope"), None);
    }
}

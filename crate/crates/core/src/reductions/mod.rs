//! Generators for instances with known answers: set-cover gadgets whose optimum
//! encodes whether a cover exists, and small families showing where natural
//! strategies fail.
//!
//! Vertex ids are assigned in a fixed order (`a = 0`, `b = 1`, then the
//! family-specific vertices), so identical parameters always give identical
//! graphs.

mod figures;
mod set_cover;
mod theorem1;
mod theorem2;
mod theorem4;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeSet, GraphError, Vertex};
use crate::instance::Instance;
use crate::ratio::{ExactRatio, Rational};

pub use figures::{gen_fig1a, gen_fig1b, gen_star};
pub use set_cover::{set_cover_corpus, SetCoverInstance, COVER_SEARCH_LIMIT};
pub use theorem1::{gen_theorem1, gen_theorem1_with_cover};
pub use theorem2::{compute_interval_x, gen_theorem2, interval_bounds, TauParams};
pub use theorem4::{gen_theorem4, InapproxParams, DEFAULT_VERTEX_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Theorem1,
    Theorem2,
    Theorem4,
    Fig1a,
    Fig1b,
    Star,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Theorem1, Family::Theorem2, Family::Theorem4, Family::Fig1a, Family::Fig1b, Family::Star];

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Theorem1 => "theorem1",
            Family::Theorem2 => "theorem2",
            Family::Theorem4 => "theorem4",
            Family::Fig1a => "fig1a",
            Family::Fig1b => "fig1b",
            Family::Star => "star",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Set-cover gadget families, whose vertices carry set and element roles.
    pub fn is_gadget(&self) -> bool {
        matches!(self, Family::Theorem1 | Family::Theorem2 | Family::Theorem4)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// What a vertex stands for in its generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    A,
    B,
    /// Third triangle vertex of a gadget, or the hub `C` of a figure family.
    C,
    D,
    U1,
    U2,
    SetVertex(usize),
    /// Copy `twin` of the vertex for universe element `element`.
    Element { element: usize, twin: usize },
    /// Member of the pendant independent set.
    Independent(usize),
    /// Internal vertex `step` (counted from the first endpoint) of a long path.
    Path { segment: &'static str, step: usize },
    Leaf(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A => f.write_str("a"),
            Role::B => f.write_str("b"),
            Role::C => f.write_str("c"),
            Role::D => f.write_str("D"),
            Role::U1 => f.write_str("u1"),
            Role::U2 => f.write_str("u2"),
            Role::SetVertex(j) => write!(f, "s{j}"),
            Role::Element { element, twin } => write!(f, "v{element}.{twin}"),
            Role::Independent(i) => write!(f, "z{i}"),
            Role::Path { segment, step } => write!(f, "path {segment} #{step}"),
            Role::Leaf(i) => write!(f, "x{i}"),
        }
    }
}

/// A claim about the generated instance, checkable by replaying its edges.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    /// Adding `witness` makes both sums equal to `sum`, so the optimal ratio is 1.
    OptRatioIsOne { witness: EdgeSet, sum: u64 },
    /// No set of at most `k` edges reaches ratio `bound` (1 for the plain gadget).
    OptRatioBelow { bound: Rational },
    /// Adding `witness` reaches ratio at least `bound`.
    OptRatioAtLeast { witness: EdgeSet, bound: Rational },
    GapZero { witness: EdgeSet },
    /// Every set of at most `k` edges leaves the sums at least 1 apart.
    GapAtLeastOne,
    /// Adding `witness` gives a ratio strictly above `bound`.
    WitnessRatioAbove { witness: EdgeSet, bound: f64 },
    /// Without a cover no set of the allowed size exceeds this ratio. Reported
    /// only; not checkable at this scale.
    RatioUpperBound { bound: f64 },
    /// Cover existence was not decided; only supplied witnesses are certified.
    ForwardOnly,
    /// The ratio of the input graph is exactly `ratio`.
    InputRatio { ratio: Rational },
    /// `ratio(G + added)` tends to `target` as the pendant set grows; it is within
    /// `tolerance` at this size.
    Asymptotic { label: &'static str, added: EdgeSet, target: Rational, tolerance: Rational },
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::OptRatioIsOne { .. } => "opt_ratio_is_one",
            Certificate::OptRatioBelow { .. } => "opt_ratio_below",
            Certificate::OptRatioAtLeast { .. } => "opt_ratio_at_least",
            Certificate::GapZero { .. } => "gap_zero",
            Certificate::GapAtLeastOne => "gap_at_least_one",
            Certificate::WitnessRatioAbove { .. } => "witness_ratio_above",
            Certificate::RatioUpperBound { .. } => "ratio_upper_bound",
            Certificate::ForwardOnly => "forward_only",
            Certificate::InputRatio { .. } => "input_ratio",
            Certificate::Asymptotic { .. } => "asymptotic",
        }
    }

    /// Edges whose replay backs this certificate.
    pub fn witness(&self) -> Option<&EdgeSet> {
        match self {
            Certificate::OptRatioIsOne { witness, .. }
            | Certificate::OptRatioAtLeast { witness, .. }
            | Certificate::GapZero { witness }
            | Certificate::WitnessRatioAbove { witness, .. } => Some(witness),
            Certificate::Asymptotic { added, .. } => Some(added),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionError {
    InvalidSetCover(String),
    /// The target ratio must lie strictly between 1/2 and 1.
    TauOutOfRange(Rational),
    InvalidParameter { name: &'static str, reason: &'static str },
    /// The construction would need more vertices than allowed.
    TooLarge { required: u64, cap: u64 },
    /// No integer independent-set size lies in the admissible interval.
    EmptyInterval { lower: Rational, upper: Rational },
    Graph(GraphError),
}

impl From<GraphError> for ReductionError {
    fn from(e: GraphError) -> ReductionError {
        ReductionError::Graph(e)
    }
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::InvalidSetCover(msg) => write!(f, "invalid set-cover instance: {msg}"),
            ReductionError::TauOutOfRange(t) => write!(f, "tau must satisfy 1/2 < tau < 1, got {t}"),
            ReductionError::InvalidParameter { name, reason } => write!(f, "invalid parameter {name}: {reason}"),
            ReductionError::TooLarge { required, cap } => {
                write!(f, "construction needs {required} vertices, cap is {cap}")
            }
            ReductionError::EmptyInterval { lower, upper } => {
                write!(f, "no integer in the interval ({lower}, {upper}]")
            }
            ReductionError::Graph(e) => write!(f, "{e}"),
        }
    }
}

/// Reason a certificate failed to replay.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateMismatch {
    pub certificate: &'static str,
    pub cc_a: u64,
    pub cc_b: u64,
}

impl fmt::Display for CertificateMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "certificate {} does not replay (cc_a = {}, cc_b = {})", self.certificate, self.cc_a, self.cc_b)
    }
}

/// A generated instance with the roles of its vertices and the claims it carries.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedInstance {
    pub instance: Instance,
    pub family: Family,
    /// Generator parameters in a stable order, for provenance headers.
    pub params: Vec<(String, String)>,
    pub tau: Option<TauParams>,
    pub inapprox: Option<InapproxParams>,
    pub certificates: Vec<Certificate>,
    /// `roles[v]` describes vertex `v`.
    pub roles: Vec<Role>,
    /// Labeled candidate edges of the figure families.
    pub candidates: Vec<(&'static str, (Vertex, Vertex))>,
}

impl CertifiedInstance {
    pub fn candidate(&self, label: &str) -> Option<(Vertex, Vertex)> {
        self.candidates.iter().find(|(l, _)| *l == label).map(|&(_, e)| e)
    }

    /// Vertices with the given role.
    pub fn vertices_where(&self, pred: impl Fn(&Role) -> bool) -> Vec<Vertex> {
        (0..self.roles.len() as Vertex).filter(|&v| pred(&self.roles[v as usize])).collect()
    }

    /// Replays every certificate that carries edges and checks its claim exactly
    /// (floating-point bounds are compared in floating point).
    pub fn check_certificates(&self) -> Result<(), CertificateMismatch> {
        let g = self.instance.graph();
        let (a, b) = (self.instance.a(), self.instance.b());
        for cert in &self.certificates {
            let Some(edges) = cert.witness() else {
                if let Certificate::InputRatio { ratio } = cert {
                    let (x, y) = self.instance.closeness_sums();
                    if ExactRatio::from_sums(x, y).as_rational() != *ratio {
                        return Err(CertificateMismatch { certificate: cert.name(), cc_a: x, cc_b: y });
                    }
                }
                continue;
            };
            let mismatch = |cc_a, cc_b| CertificateMismatch { certificate: cert.name(), cc_a, cc_b };
            if g.check_additions(edges.as_slice()).is_err() {
                return Err(mismatch(0, 0));
            }
            let cc_a = g.closeness_with(a, edges.as_slice()).map_err(|_| mismatch(0, 0))?;
            let cc_b = g.closeness_with(b, edges.as_slice()).map_err(|_| mismatch(0, 0))?;
            let ratio = ExactRatio::from_sums(cc_a, cc_b).as_rational();
            let within_budget = edges.len() <= self.instance.k();
            let ok = match cert {
                Certificate::OptRatioIsOne { sum, .. } => within_budget && cc_a == *sum && cc_b == *sum,
                Certificate::OptRatioAtLeast { bound, .. } => within_budget && ratio >= *bound,
                Certificate::GapZero { .. } => within_budget && cc_a == cc_b,
                Certificate::WitnessRatioAbove { bound, .. } => within_budget && ratio.to_f64() > *bound,
                Certificate::Asymptotic { target, tolerance, .. } => {
                    let diff = ratio - *target;
                    let diff = if diff < Rational::ZERO { -diff } else { diff };
                    diff <= *tolerance
                }
                _ => true,
            };
            if !ok {
                return Err(mismatch(cc_a, cc_b));
            }
        }
        Ok(())
    }
}

/// Builder shared by the generators: collects edges and roles in id order.
pub(crate) struct Layout {
    edges: Vec<(Vertex, Vertex)>,
    roles: Vec<Role>,
}

impl Layout {
    pub(crate) fn new() -> Layout {
        Layout { edges: Vec::new(), roles: Vec::new() }
    }

    pub(crate) fn vertex(&mut self, role: Role) -> Vertex {
        self.roles.push(role);
        (self.roles.len() - 1) as Vertex
    }

    pub(crate) fn join(&mut self, u: Vertex, v: Vertex) {
        self.edges.push(crate::graph::edge(u, v));
    }

    /// A path of `length` edges from `from` to a new or given endpoint, with
    /// `length - 1` new internal vertices.
    pub(crate) fn path(&mut self, from: Vertex, to: Vertex, length: usize, segment: &'static str) {
        let mut prev = from;
        for step in 1..length {
            let v = self.vertex(Role::Path { segment, step });
            self.join(prev, v);
            prev = v;
        }
        self.join(prev, to);
    }

    pub(crate) fn len(&self) -> usize {
        self.roles.len()
    }

    pub(crate) fn finish(self, k: usize) -> Result<(Instance, Vec<Role>), GraphError> {
        let graph = crate::graph::Graph::from_edges(self.roles.len(), &self.edges)?;
        Ok((Instance::new(graph, 0, 1, k)?, self.roles))
    }
}

pub(crate) fn param(name: &str, value: impl fmt::Display) -> (String, String) {
    use alloc::string::ToString;
    (name.to_string(), value.to_string())
}

//! Plain-text instance files.
//!
//! ```text
//! crimp v1
//! n m a b k
//! # key = value        (provenance, optional, any number)
//! u v                  (m lines, u < v, sorted)
//! ```
//!
//! The parser also accepts unsorted edges, either endpoint order and blank lines;
//! [`InstanceFile::to_text`] always writes the canonical form.

use std::fmt::Write as _;

use crimp_core::{Edge, Graph, GraphError, Instance, Vertex};

pub const MAGIC: &str = "crimp v1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line 1: expected `{MAGIC}`")]
    Magic,
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("{0}")]
    Graph(String),
}

impl From<GraphError> for FormatError {
    fn from(e: GraphError) -> FormatError {
        FormatError::Graph(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub instance: Instance,
    /// Generator provenance as ordered key/value pairs.
    pub provenance: Vec<(String, String)>,
}

fn numbers<const N: usize>(line: &str, lineno: usize, what: &str) -> Result<[u64; N], FormatError> {
    let syntax = |reason: String| FormatError::Syntax { line: lineno, reason };
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != N {
        return Err(syntax(format!("expected {what}, found {} fields", fields.len())));
    }
    let mut out = [0u64; N];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| syntax(format!("`{field}` is not a non-negative integer")))?;
    }
    Ok(out)
}

fn vertex(v: u64, lineno: usize) -> Result<Vertex, FormatError> {
    Vertex::try_from(v).map_err(|_| FormatError::Syntax { line: lineno, reason: format!("vertex {v} too large") })
}

impl InstanceFile {
    pub fn new(instance: Instance) -> InstanceFile {
        InstanceFile { instance, provenance: Vec::new() }
    }

    pub fn parse(text: &str) -> Result<InstanceFile, FormatError> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
        match lines.next() {
            Some((_, MAGIC)) => {}
            _ => return Err(FormatError::Magic),
        }
        let mut header = None;
        let mut provenance = Vec::new();
        let mut edges: Vec<Edge> = Vec::new();
        for (lineno, line) in lines {
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let (key, value) = rest.split_once('=').unwrap_or((rest, ""));
                provenance.push((key.trim().to_string(), value.trim().to_string()));
                continue;
            }
            if header.is_none() {
                header = Some(numbers::<5>(line, lineno, "`n m a b k`")?);
                continue;
            }
            let [u, v] = numbers::<2>(line, lineno, "an edge `u v`")?;
            let (u, v) = (vertex(u, lineno)?, vertex(v, lineno)?);
            edges.push((u.min(v), u.max(v)));
        }
        let [n, m, a, b, k] = header.ok_or(FormatError::Syntax { line: 2, reason: "missing `n m a b k` header".into() })?;
        if edges.len() as u64 != m {
            return Err(FormatError::EdgeCount { declared: m as usize, found: edges.len() });
        }
        let n = usize::try_from(n).map_err(|_| FormatError::Syntax { line: 2, reason: "n too large".into() })?;
        let graph = Graph::from_edges(n, &edges)?;
        let instance = Instance::new(graph, vertex(a, 2)?, vertex(b, 2)?, k as usize)?;
        Ok(InstanceFile { instance, provenance })
    }

    /// Canonical text: header, provenance, then edges sorted with `u < v`.
    pub fn to_text(&self) -> String {
        let inst = &self.instance;
        let g = inst.graph();
        let mut out = String::with_capacity(16 + 12 * g.m());
        out.push_str(MAGIC);
        out.push('\n');
        let _ = writeln!(out, "{} {} {} {} {}", g.n(), g.m(), inst.a(), inst.b(), inst.k());
        for (key, value) in &self.provenance {
            let _ = writeln!(out, "# {key} = {value}");
        }
        let mut edges: Vec<Edge> = g.edges().collect();
        edges.sort_unstable();
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

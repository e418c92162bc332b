use alloc::string::String;
use alloc::vec::Vec;

use super::{param, Certificate, CertifiedInstance, Family, Layout, ReductionError, Role, SetCoverInstance};
use crate::graph::{EdgeSet, Vertex};
use crate::instance::Instance;
use crate::ratio::Rational;

/// Vertex ids of a built gadget.
pub(crate) struct Gadget {
    pub instance: Instance,
    pub roles: Vec<Role>,
    pub set_vertices: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

/// Triangle `a b c`; set vertices on `c`; `copies` interchangeable vertices per
/// element, each joined to the sets containing it; `x` pendants on `a`.
pub(crate) fn build_gadget(sc: &SetCoverInstance, copies: usize, x: usize, budget: usize) -> Result<Gadget, ReductionError> {
    let mut l = Layout::new();
    let a = l.vertex(Role::A);
    let b = l.vertex(Role::B);
    let c = l.vertex(Role::C);
    l.join(a, b);
    l.join(b, c);
    l.join(a, c);
    let set_vertices: Vec<Vertex> = (0..sc.sets().len()).map(|j| l.vertex(Role::SetVertex(j))).collect();
    for &s in &set_vertices {
        l.join(c, s);
    }
    for element in 0..sc.universe() {
        for twin in 0..copies {
            let v = l.vertex(Role::Element { element, twin });
            for (j, set) in sc.sets().iter().enumerate() {
                if set.binary_search(&element).is_ok() {
                    l.join(set_vertices[j], v);
                }
            }
        }
    }
    let independent: Vec<Vertex> = (0..x).map(|i| l.vertex(Role::Independent(i))).collect();
    for &z in &independent {
        l.join(a, z);
    }
    let (instance, roles) = l.finish(budget)?;
    Ok(Gadget { instance, roles, set_vertices, independent })
}

/// `b s_j` for each set of the cover, padded to exactly `size` edges with the
/// remaining set vertices and then pendant vertices. Every padding edge lowers
/// `cc(b)` by exactly one, like a cover edge would.
pub(crate) fn padded_witness(g: &Gadget, cover: &[usize], size: usize) -> EdgeSet {
    let b: Vertex = 1;
    let mut targets: Vec<Vertex> = cover.iter().map(|&j| g.set_vertices[j]).collect();
    for (j, &s) in g.set_vertices.iter().enumerate() {
        if !cover.contains(&j) {
            targets.push(s);
        }
    }
    targets.extend(g.independent.iter().copied());
    targets.into_iter().take(size).map(|v| (b, v)).collect()
}

pub(crate) fn format_sets(sc: &SetCoverInstance) -> String {
    let mut out = String::new();
    for (j, set) in sc.sets().iter().enumerate() {
        if j > 0 {
            out.push(';');
        }
        for (i, e) in set.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&alloc::format!("{e}"));
        }
    }
    out
}

/// The ratio-1 gadget: with `X = n + k` pendants, some set of at most `k` edges
/// equalizes `a` and `b` exactly when the set-cover instance has a cover of size
/// at most `k`.
pub fn gen_theorem1(sc: &SetCoverInstance) -> Result<CertifiedInstance, ReductionError> {
    gen_theorem1_with_cover(sc, None)
}

/// As [`gen_theorem1`], with a known cover used as witness when the instance is
/// too large to decide.
pub fn gen_theorem1_with_cover(sc: &SetCoverInstance, known: Option<&[usize]>) -> Result<CertifiedInstance, ReductionError> {
    if let Some(cover) = known {
        if cover.len() > sc.budget() || cover.iter().any(|&j| j >= sc.sets().len()) || !sc.is_cover(cover) {
            return Err(ReductionError::InvalidParameter { name: "cover", reason: "not a cover within the budget" });
        }
    }
    let (n, m, k) = (sc.universe(), sc.sets().len(), sc.budget());
    let x = n + k;
    let g = build_gadget(sc, 1, x, k)?;
    let sum = (4 * n + 2 * m + k + 2) as u64;

    let mut certificates = Vec::new();
    let decided = sc.find_cover();
    let cover = match &decided {
        Ok(found) => found.as_deref(),
        Err(_) => {
            certificates.push(Certificate::ForwardOnly);
            known
        }
    };
    match cover {
        Some(cover) => {
            let witness = padded_witness(&g, cover, k);
            certificates.push(Certificate::OptRatioIsOne { witness: witness.clone(), sum });
            certificates.push(Certificate::GapZero { witness });
        }
        None if decided.is_ok() => {
            certificates.push(Certificate::OptRatioBelow { bound: Rational::ONE });
            certificates.push(Certificate::GapAtLeastOne);
        }
        None => {}
    }

    Ok(CertifiedInstance {
        instance: g.instance,
        family: Family::Theorem1,
        params: alloc::vec![
            param("universe", n),
            param("sets", format_sets(sc)),
            param("budget", k),
            param("X", x),
        ],
        tau: None,
        inapprox: None,
        certificates,
        roles: g.roles,
        candidates: Vec::new(),
    })
}

//! Small families where natural strategies fail. A path "of length d" is realized
//! with `d - 1` fresh internal vertices.

use alloc::vec;
use alloc::vec::Vec;

use super::{param, Certificate, CertifiedInstance, Family, Layout, ReductionError, Role};
use crate::graph::{EdgeSet, Vertex};
use crate::ratio::Rational;

fn check_figure_params(d: usize, x: usize) -> Result<(), ReductionError> {
    if d < 2 {
        return Err(ReductionError::InvalidParameter { name: "d", reason: "must be at least 2" });
    }
    if x < 1 {
        return Err(ReductionError::InvalidParameter { name: "X", reason: "must be at least 1" });
    }
    Ok(())
}

fn frac(p: usize, q: usize) -> Rational {
    Rational::new(p as i128, q as i128)
}

/// Path `a .. b` of length `d`, edge `b C`, path `C .. D` of length `d`, and `x`
/// pendants on `D`; `2d + 2 + x` vertices. Candidates: `e1 = aC`, `e2 = CD`,
/// `e3 = aD`.
pub fn gen_fig1a(d: usize, x: usize) -> Result<CertifiedInstance, ReductionError> {
    check_figure_params(d, x)?;
    let mut l = Layout::new();
    let a = l.vertex(Role::A);
    let b = l.vertex(Role::B);
    let c = l.vertex(Role::C);
    let dd = l.vertex(Role::D);
    l.path(a, b, d, "a-b");
    l.join(b, c);
    l.path(c, dd, d, "C-D");
    for i in 0..x {
        let z = l.vertex(Role::Independent(i));
        l.join(dd, z);
    }
    let (instance, roles) = l.finish(1)?;
    let candidates = vec![("e1", (a, c)), ("e2", (c, dd)), ("e3", (a, dd))];
    let tolerance = frac(10, x);
    let asymptotic = |label, added: &[(Vertex, Vertex)], target| Certificate::Asymptotic {
        label,
        added: EdgeSet::from(added.to_vec()),
        target,
        tolerance,
    };
    let certificates = vec![
        asymptotic("G", &[], frac(d + 2, 2 * d + 2)),
        asymptotic("G+e1", &[(a, c)], Rational::ONE),
        asymptotic("G+e2", &[(c, dd)], frac(3, d + 3)),
        asymptotic("G+e3", &[(a, dd)], frac(2, d + 2)),
    ];
    Ok(CertifiedInstance {
        instance,
        family: Family::Fig1a,
        params: vec![param("d", d), param("X", x)],
        tau: None,
        inapprox: None,
        certificates,
        roles,
        candidates,
    })
}

/// Path `a .. b` of length `d`, edge `b C` with `x` pendants on `C`, and paths of
/// length `2d` from `b` to `u1` and to `u2`; `5d + 2 + x` vertices. Candidates:
/// `e1 = u1 u2` (minimizes the diameter) and `e2 = aC`.
pub fn gen_fig1b(d: usize, x: usize) -> Result<CertifiedInstance, ReductionError> {
    check_figure_params(d, x)?;
    let mut l = Layout::new();
    let a = l.vertex(Role::A);
    let b = l.vertex(Role::B);
    let c = l.vertex(Role::C);
    let u1 = l.vertex(Role::U1);
    let u2 = l.vertex(Role::U2);
    l.path(a, b, d, "a-b");
    l.join(b, c);
    l.path(b, u1, 2 * d, "b-u1");
    l.path(b, u2, 2 * d, "b-u2");
    for i in 0..x {
        let z = l.vertex(Role::Independent(i));
        l.join(c, z);
    }
    let (instance, roles) = l.finish(1)?;
    let tolerance = frac(10, x);
    let certificates = vec![
        Certificate::Asymptotic {
            label: "G+e1",
            added: EdgeSet::from([(u1, u2)]),
            target: frac(2, d + 2),
            tolerance,
        },
        Certificate::Asymptotic {
            label: "G+e2",
            added: EdgeSet::from([(a, c)]),
            target: Rational::ONE,
            tolerance,
        },
    ];
    Ok(CertifiedInstance {
        instance,
        family: Family::Fig1b,
        params: vec![param("d", d), param("X", x)],
        tau: None,
        inapprox: None,
        certificates,
        roles,
        candidates: vec![("e1", (u1, u2)), ("e2", (a, c))],
    })
}

/// `a b` adjacent, `b` adjacent to `n - 2` leaves; budget `k` (default `n - 2`).
/// The input ratio is `(n - 1) / (2n - 3)`, and joining `a` to every leaf gives 1.
pub fn gen_star(n: usize, k: Option<usize>) -> Result<CertifiedInstance, ReductionError> {
    if n < 3 {
        return Err(ReductionError::InvalidParameter { name: "n", reason: "must be at least 3" });
    }
    let k = k.unwrap_or(n - 2);
    let mut l = Layout::new();
    let a = l.vertex(Role::A);
    let b = l.vertex(Role::B);
    l.join(a, b);
    let leaves: Vec<Vertex> = (1..=n - 2).map(|i| l.vertex(Role::Leaf(i))).collect();
    for &x in &leaves {
        l.join(b, x);
    }
    debug_assert_eq!(l.len(), n);
    let (instance, roles) = l.finish(k)?;
    let mut certificates = vec![Certificate::InputRatio { ratio: frac(n - 1, 2 * n - 3) }];
    if k >= n - 2 {
        certificates.push(Certificate::OptRatioIsOne {
            witness: leaves.iter().map(|&x| (a, x)).collect(),
            sum: (n - 1) as u64,
        });
    }
    Ok(CertifiedInstance {
        instance,
        family: Family::Star,
        params: vec![param("n", n), param("k", k)],
        tau: None,
        inapprox: None,
        certificates,
        roles,
        candidates: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::closeness_ratio;
    use crate::ratio::ExactRatio;

    #[test]
    fn fig1a_layout() {
        let cert = gen_fig1a(3, 100).unwrap();
        assert_eq!(cert.instance.graph().n(), 2 * 3 + 2 + 100);
        assert_eq!(cert.candidate("e3"), Some((0, 3)));
        cert.check_certificates().unwrap();
    }

    #[test]
    fn fig1b_layout() {
        let cert = gen_fig1b(3, 50).unwrap();
        assert_eq!(cert.instance.graph().n(), 5 * 3 + 2 + 50);
        cert.check_certificates().unwrap();
    }

    #[test]
    fn star_ratio() {
        let cert = gen_star(5, None).unwrap();
        assert_eq!(cert.instance.k(), 3);
        assert_eq!(closeness_ratio(cert.instance.graph(), 0, 1).unwrap(), ExactRatio::from_sums(4, 7));
        cert.check_certificates().unwrap();
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(gen_fig1a(1, 10).is_err());
        assert!(gen_fig1b(3, 0).is_err());
        assert!(gen_star(2, None).is_err());
    }
}

use alloc::vec::Vec;

use super::theorem1::{build_gadget, format_sets, padded_witness};
use super::{param, Certificate, CertifiedInstance, Family, ReductionError, SetCoverInstance};
use crate::ratio::Rational;

/// Default limit on the number of vertices of a generated gadget.
pub const DEFAULT_VERTEX_CAP: u64 = 2_000_000;

/// Parameters of the bicriteria gadget. The real-valued quantities involve `e^c`
/// and are evaluated in floating point; they only size the construction and
/// label certificates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InapproxParams {
    pub c: Rational,
    pub epsilon: Rational,
    pub epsilon_prime: f64,
    pub delta: f64,
    /// Copies of each element before the `m`-fold twin expansion (1 when the
    /// universe is already large enough).
    pub copies: u64,
    /// Universe size after duplication.
    pub n: u64,
    pub m: u64,
    pub k: u64,
    /// Edges the instance allows: `ceil(c k)`.
    pub budget: u64,
    pub x: u64,
    /// Ratio no solution of `budget` edges exceeds when there is no cover.
    pub upper_bound: f64,
}

/// Gadget where, without a cover, even `ceil(c k)` edges stay below a constant
/// ratio, while a cover of size `k` gives ratio above `1 - epsilon'`.
///
/// Each element is duplicated `ceil(c / epsilon')` times when the universe is
/// small, then every element vertex is expanded into `m` twins, and `a` receives
/// `m n + ceil(c k)` pendants.
pub fn gen_theorem4(sc: &SetCoverInstance, c: Rational, epsilon: Rational, vertex_cap: u64) -> Result<CertifiedInstance, ReductionError> {
    if c < Rational::ONE {
        return Err(ReductionError::InvalidParameter { name: "c", reason: "must be at least 1" });
    }
    if epsilon <= Rational::ZERO || epsilon >= Rational::ONE {
        return Err(ReductionError::InvalidParameter { name: "epsilon", reason: "must lie strictly between 0 and 1" });
    }
    let (m, k) = (sc.sets().len() as u64, sc.budget() as u64);
    let (cf, ef) = (c.to_f64(), epsilon.to_f64());
    let ec = libm::exp(cf);
    let epsilon_prime = ef / (2.0 * (5.0 * ec - 1.0));
    let delta = ef / (2.0 * ec * (1.0 - epsilon_prime));
    let upper_bound = 5.0 * ec / (5.0 * ec + 1.0 - ec * delta);

    let ck = (c * Rational::integer(k as i128)).ceil() as u64;
    let universe = sc.universe() as u64;
    let copies = if universe as f64 <= cf * k as f64 / epsilon_prime {
        let mut copies = libm::ceil(cf / epsilon_prime) as u64;
        while (universe * copies) as f64 <= cf * k as f64 / epsilon_prime {
            copies += 1;
        }
        copies
    } else {
        1
    };
    let n = universe * copies;
    let x = m * n + ck;
    let required = 3 + m + m * n + x;
    if required > vertex_cap {
        return Err(ReductionError::TooLarge { required, cap: vertex_cap });
    }
    let g = build_gadget(sc, (copies * m) as usize, x as usize, ck as usize)?;

    let mut certificates = Vec::new();
    match sc.find_cover() {
        Ok(Some(cover)) => certificates.push(Certificate::WitnessRatioAbove {
            witness: padded_witness(&g, &cover, k as usize),
            bound: 1.0 - epsilon_prime,
        }),
        Ok(None) => certificates.push(Certificate::RatioUpperBound { bound: upper_bound }),
        Err(_) => certificates.push(Certificate::ForwardOnly),
    }

    Ok(CertifiedInstance {
        instance: g.instance,
        family: Family::Theorem4,
        params: alloc::vec![
            param("universe", sc.universe()),
            param("sets", format_sets(sc)),
            param("budget", k),
            param("c", c),
            param("epsilon", epsilon),
            param("copies", copies),
            param("X", x),
        ],
        tau: None,
        inapprox: Some(InapproxParams {
            c,
            epsilon,
            epsilon_prime,
            delta,
            copies,
            n,
            m,
            k,
            budget: ck,
            x,
            upper_bound,
        }),
        certificates,
        roles: g.roles,
        candidates: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn example() -> SetCoverInstance {
        SetCoverInstance::new(2, vec![vec![0], vec![1], vec![0, 1]], 1).unwrap()
    }

    #[test]
    fn small_example_sizes() {
        let cert = gen_theorem4(&example(), Rational::ONE, Rational::new(1, 2), DEFAULT_VERTEX_CAP).unwrap();
        let p = cert.inapprox.unwrap();
        assert_eq!((p.copies, p.n, p.x, p.budget), (51, 102, 307, 1));
        assert_eq!(cert.instance.graph().n() as u64, 3 + 3 + 3 * 102 + 307);
        assert!(p.epsilon_prime > 0.0 && p.delta > 0.0 && p.upper_bound < 1.0);
        cert.check_certificates().unwrap();
    }

    #[test]
    fn witness_sum_with_unit_c() {
        let cert = gen_theorem4(&example(), Rational::ONE, Rational::new(1, 2), DEFAULT_VERTEX_CAP).unwrap();
        let p = cert.inapprox.unwrap();
        let w = cert.certificates[0].witness().unwrap();
        let cc_b = cert.instance.graph().closeness_with(1, w.as_slice()).unwrap();
        assert_eq!(cc_b, 4 * p.m * p.n + 2 * p.m + p.k + 2);
    }

    #[test]
    fn vertex_cap_refuses() {
        let err = gen_theorem4(&example(), Rational::ONE, Rational::new(1, 2), 100).unwrap_err();
        assert_eq!(err, ReductionError::TooLarge { required: 619, cap: 100 });
    }

    #[test]
    fn parameters_are_validated() {
        assert!(gen_theorem4(&example(), Rational::new(1, 2), Rational::new(1, 2), DEFAULT_VERTEX_CAP).is_err());
        assert!(gen_theorem4(&example(), Rational::ONE, Rational::ZERO, DEFAULT_VERTEX_CAP).is_err());
    }
}

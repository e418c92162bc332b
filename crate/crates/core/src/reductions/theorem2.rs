use alloc::vec::Vec;

use super::theorem1::{build_gadget, format_sets, gen_theorem1, padded_witness};
use super::{param, Certificate, CertifiedInstance, Family, ReductionError, SetCoverInstance};
use crate::ratio::Rational;

/// Parameters of a threshold gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TauParams {
    pub tau: Rational,
    pub m: usize,
    /// Number of element vertices after duplication.
    pub n: usize,
    pub k: usize,
    pub x: u64,
    /// Copies of each element vertex.
    pub copies: usize,
    /// Open lower end of the admissible interval for `x`.
    pub lower: Rational,
    /// Closed upper end of the admissible interval for `x`.
    pub upper: Rational,
}

fn check_tau(tau: Rational) -> Result<(), ReductionError> {
    if tau <= Rational::new(1, 2) || tau >= Rational::ONE {
        return Err(ReductionError::TauOutOfRange(tau));
    }
    Ok(())
}

/// The interval `(lower, upper]` of pendant counts for which the ratio reaches
/// `tau` exactly when a cover exists.
pub fn interval_bounds(m: usize, n: usize, k: usize, tau: Rational) -> Result<(Rational, Rational), ReductionError> {
    check_tau(tau)?;
    let r = |v: usize| Rational::integer(v as i128);
    let two = r(2);
    let base = two + two * r(m) + r(3) * r(n);
    let slope = two * tau - Rational::ONE;
    let lower = (base - tau * (two + two * r(m) - r(k) + two * r(n) + Rational::ONE)) / slope;
    let upper = (base - tau * (two + two * r(m) - r(k) + two * r(n))) / slope;
    Ok((lower, upper))
}

/// Smallest integer strictly above the lower end of the interval.
pub fn compute_interval_x(m: usize, n: usize, k: usize, tau: Rational) -> Result<u64, ReductionError> {
    let (lower, upper) = interval_bounds(m, n, k, tau)?;
    let x = lower.floor() + 1;
    if Rational::integer(x) > upper || x < 1 {
        return Err(ReductionError::EmptyInterval { lower, upper });
    }
    Ok(x as u64)
}

fn precondition_holds(m: usize, n: usize, k: usize, tau: Rational) -> bool {
    let s = (2 * m + 4 * n + k) as i128;
    Rational::new(s, s + 1) >= tau * tau
}

/// Copies per element needed so the gadget's ratio can reach `tau` at all.
fn copies_needed(m: usize, n: usize, k: usize, tau: Rational) -> usize {
    if precondition_holds(m, n, k, tau) {
        return 1;
    }
    let tau2 = tau * tau;
    let estimate = (tau2 / (Rational::integer(4 * n as i128) * (Rational::ONE - tau2))).ceil().max(1) as usize;
    let mut copies = estimate;
    while !precondition_holds(m, n * copies, k, tau) {
        copies += 1;
    }
    copies
}

/// The threshold gadget: some set of at most `k` edges reaches ratio `tau` exactly
/// when the set-cover instance has a cover of size at most `k`. `tau = 1` gives
/// the ratio-1 gadget.
pub fn gen_theorem2(sc: &SetCoverInstance, tau: Rational) -> Result<CertifiedInstance, ReductionError> {
    if tau == Rational::ONE {
        return gen_theorem1(sc);
    }
    check_tau(tau)?;
    let (m, k) = (sc.sets().len(), sc.budget());
    let copies = copies_needed(m, sc.universe(), k, tau);
    let n = sc.universe() * copies;
    let (lower, upper) = interval_bounds(m, n, k, tau)?;
    let x = compute_interval_x(m, n, k, tau)?;
    let g = build_gadget(sc, copies, x as usize, k)?;

    let mut certificates = Vec::new();
    match sc.find_cover() {
        Ok(Some(cover)) => {
            certificates.push(Certificate::OptRatioAtLeast { witness: padded_witness(&g, &cover, k), bound: tau });
        }
        Ok(None) => certificates.push(Certificate::OptRatioBelow { bound: tau }),
        Err(_) => certificates.push(Certificate::ForwardOnly),
    }

    Ok(CertifiedInstance {
        instance: g.instance,
        family: Family::Theorem2,
        params: alloc::vec![
            param("universe", sc.universe()),
            param("sets", format_sets(sc)),
            param("budget", k),
            param("tau", tau),
            param("copies", copies),
            param("X", x),
        ],
        tau: Some(TauParams { tau, m, n, k, x, copies, lower, upper }),
        inapprox: None,
        certificates,
        roles: g.roles,
        candidates: Vec::new(),
    })
}

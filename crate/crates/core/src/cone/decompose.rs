use crate::betti::{eval_functional, make_pure_diagram, BettiTable, DegreeSequence};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::membership::{first_violation, inequality_scan, Decomposition};

/// Writes a cone member as a nonnegative combination of pure diagrams.
///
/// Each step takes `d0` and `d1` as the smallest degrees in rows 0 and 1,
/// chooses the tail shape when row 2 has mass at `d1 + 1` (two-step
/// otherwise, free when row 1 is empty), and subtracts the largest multiple
/// of `pi_d` that keeps the residual in the cone. The chosen sequences
/// increase in the partial order, so they form a chain.
pub fn decompose<S: Scalar>(v: &BettiTable<S>) -> Result<Decomposition<S>> {
    if let Some((f, value)) = first_violation(v) {
        return Err(Error::NotInCone {
            functional: f.to_string(),
            value: value.to_string(),
        });
    }
    Ok(Decomposition {
        terms: greedy_decompose(&v.to_canonical())?,
    })
}

/// The next pure diagram the greedy step subtracts from `v`.
pub fn pivot<S: Scalar>(v: &BettiTable<S>) -> Option<DegreeSequence> {
    let d0 = v.row_min_degree(0)?;
    let d = match v.row_min_degree(1) {
        None => DegreeSequence::free(d0),
        Some(d1) if v.stored(2, d1 + 1).is_positive() => DegreeSequence::tail(d0, d1).ok()?,
        Some(d1) => DegreeSequence::two_step(d0, d1).ok()?,
    };
    Some(d)
}

/// Largest `c >= 0` with `v - c pi` still satisfying every inequality: the
/// minimum of `f(v) / f(pi)` over functionals with `f(pi) > 0`.
pub fn max_coefficient<S: Scalar>(v: &BettiTable<S>, pi: &BettiTable<S>) -> Option<S> {
    let (lo, hi) = match (v.degree_range(), pi.degree_range()) {
        (Some((a, b)), Some((c, d))) => (a.min(c), b.max(d)),
        _ => return None,
    };
    // epsilon constraints only drop on the support of pi
    let scan = inequality_scan(pi, lo, hi);
    scan.into_iter()
        .filter_map(|f| {
            let drop = eval_functional(f, pi);
            drop.is_positive().then(|| eval_functional(f, v) / drop)
        })
        .min()
}

pub(crate) fn greedy_decompose<S: Scalar>(v: &BettiTable<S>) -> Result<Vec<(DegreeSequence, S)>> {
    let cap = 3 * v.len() + 3;
    let mut residual = v.clone();
    let mut terms = Vec::new();
    while !residual.is_empty() {
        if terms.len() >= cap {
            return Err(Error::IterationCap { cap });
        }
        let d = pivot(&residual).ok_or(Error::IterationCap { cap })?;
        let pi = make_pure_diagram::<S>(d);
        let c = max_coefficient(&residual, pi.table()).ok_or(Error::IterationCap { cap })?;
        if !c.is_positive() {
            return Err(Error::IterationCap { cap });
        }
        residual = residual.add_scaled(&-c.clone(), pi.table())?;
        terms.push((d, c));
    }
    Ok(terms)
}

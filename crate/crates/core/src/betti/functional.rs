use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::table::{BettiTable, TailMode};

/// The linear functionals cutting out the cone.
///
/// * `Epsilon { i, j }`: the entry `v_{i,j}`.
/// * `Alpha(k)`: `2 v_{1,k} - v_{2,k+1}`.
/// * `Gamma(k)`: `sum_{j <= k} (3 v_{0,j} - 3 v_{1,j+1} + v_{2,j+2})`.
/// * `GammaInf`: the same sum over all `j`.
/// * `DoublingEq { i, j }` (`i >= 2`): `2 v_{i,j} - v_{i+1,j+1}`, which must
///   vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FunctionalId {
    Epsilon { i: usize, j: i64 },
    Alpha(i64),
    Gamma(i64),
    GammaInf,
    DoublingEq { i: usize, j: i64 },
}

impl FunctionalId {
    pub fn doubling_eq(i: usize, j: i64) -> Result<Self> {
        if i < 2 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("doubling equality needs i >= 2, got {i}"),
            });
        }
        Ok(FunctionalId::DoublingEq { i, j })
    }

    /// Equality constraints must evaluate to exactly zero; the rest to a
    /// nonnegative value.
    pub fn is_equality(&self) -> bool {
        matches!(self, FunctionalId::DoublingEq { .. })
    }

    /// Whether `value` satisfies this constraint.
    pub fn holds<S: Scalar>(&self, value: &S) -> bool {
        if self.is_equality() {
            value.is_zero()
        } else {
            !value.is_negative()
        }
    }
}

impl fmt::Display for FunctionalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionalId::Epsilon { i, j } => write!(f, "epsilon({i},{j})"),
            FunctionalId::Alpha(k) => write!(f, "alpha({k})"),
            FunctionalId::Gamma(k) => write!(f, "gamma({k})"),
            FunctionalId::GammaInf => f.write_str("gamma_inf"),
            FunctionalId::DoublingEq { i, j } => write!(f, "doubling_eq({i},{j})"),
        }
    }
}

/// Exact value of `f` on `v`.
///
/// Only rows 0..=2 enter `Alpha` and `Gamma`, so the sums run over the
/// stored support and are finite.
pub fn eval_functional<S: Scalar>(f: FunctionalId, v: &BettiTable<S>) -> S {
    match f {
        FunctionalId::Epsilon { i, j } => v.get(i, j),
        FunctionalId::Alpha(k) => S::from_int(2) * v.get(1, k) - v.get(2, k + 1),
        FunctionalId::Gamma(k) => gamma_up_to(v, Some(k)),
        FunctionalId::GammaInf => gamma_up_to(v, None),
        FunctionalId::DoublingEq { i, j } => match v.mode() {
            TailMode::Canonical if i >= 2 => S::zero(),
            _ => S::from_int(2) * v.get(i, j) - v.get(i + 1, j + 1),
        },
    }
}

fn gamma_up_to<S: Scalar>(v: &BettiTable<S>, k: Option<i64>) -> S {
    let weights = [S::from_int(3), S::from_int(-3), S::from_int(1)];
    let mut acc = S::zero();
    for (row, w) in weights.iter().enumerate() {
        // v_{row, j + row} is counted for j <= k
        for (deg, x) in v.row(row) {
            if k.is_none_or(|k| deg - row as i64 <= k) {
                acc = acc + w.clone() * x.clone();
            }
        }
    }
    acc
}

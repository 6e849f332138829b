use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::field::Field;
use super::module::GradedModule;
use super::resolution::{min_free_resolution, relation_space};
use crate::betti::{eval_functional, FunctionalId};

/// Hilbert series `H_M(t) = p(t) / (1 - t)` read off from `dim M_e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Degree of the first coefficient of `numerator` and of `dims`.
    pub min_degree: i64,
    /// `p(t) = (1 - t) H_M(t)`, coefficient of `t^(min_degree + k)` at `k`,
    /// trailing zeros dropped.
    pub numerator: Vec<i64>,
    /// `e(M) = p(1)`, the eventual value of `dim M_e`.
    pub multiplicity: u64,
    /// `dim M_e` for `e = min_degree ..= deg_bound`.
    pub dims: Vec<u64>,
}

impl HilbertData {
    pub fn multiplicity_as<S: Scalar>(&self) -> S {
        S::from_int(self.multiplicity as i64)
    }
}

/// Fails with [`Error::NotStabilized`] unless the last three computed
/// dimensions agree.
pub fn hilbert_data<F: Field>(m: &GradedModule<F>, deg_bound: i64) -> Result<HilbertData> {
    let Some(&lo) = m.gen_degrees().iter().min() else {
        // the zero module
        return Ok(HilbertData {
            min_degree: 0,
            numerator: Vec::new(),
            multiplicity: 0,
            dims: Vec::new(),
        });
    };
    let dims: Vec<u64> = (lo..=deg_bound)
        .map(|e| {
            let (piece, rel) = relation_space(m, e);
            (piece.dim() - rel.dim()) as u64
        })
        .collect();
    let n = dims.len();
    if n < 3 || dims[n - 1] != dims[n - 2] || dims[n - 2] != dims[n - 3] {
        return Err(Error::NotStabilized(deg_bound));
    }
    let mut numerator: Vec<i64> = dims
        .iter()
        .scan(0i64, |prev, &d| {
            let diff = d as i64 - *prev;
            *prev = d as i64;
            Some(diff)
        })
        .collect();
    while numerator.last() == Some(&0) {
        numerator.pop();
    }
    Ok(HilbertData {
        min_degree: lo,
        numerator,
        multiplicity: dims[n - 1],
        dims,
    })
}

/// `3 * (row 1 total) - (row 2 total)`, the multiplicity of the first
/// syzygy module.
pub fn syzygy_multiplicity<S: Scalar>(betti: &BettiTable<S>) -> S {
    S::from_int(3) * betti.row_total(1) - betti.row_total(2)
}

/// Whether `e(M)` from the Hilbert function equals `gamma_inf` of the
/// resolved Betti table.
pub fn mult_identity_check<F: Field>(
    m: &GradedModule<F>,
    deg_bound: i64,
    hom_bound: usize,
) -> Result<bool> {
    let h = hilbert_data(m, deg_bound)?;
    let r = min_free_resolution(m, deg_bound, hom_bound);
    let gamma = eval_functional(FunctionalId::GammaInf, &r.betti);
    Ok(gamma == h.multiplicity_as())
}

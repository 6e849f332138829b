use std::collections::BTreeSet;

use crate::betti::{eval_functional, BettiTable, DegreeSequence, FunctionalId, TailMode};
use crate::scalar::Scalar;

use super::decompose::greedy_decompose;

/// Outcome of a membership test: either a certificate of membership or the
/// first violated constraint together with its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<C, F, S> {
    Member(C),
    NotMember { functional: F, value: S },
}

impl<C, F, S> Verdict<C, F, S> {
    pub fn is_member(&self) -> bool {
        matches!(self, Verdict::Member(_))
    }

    pub fn certificate(&self) -> Option<&C> {
        match self {
            Verdict::Member(c) => Some(c),
            Verdict::NotMember { .. } => None,
        }
    }

    pub fn violation(&self) -> Option<(&F, &S)> {
        match self {
            Verdict::Member(_) => None,
            Verdict::NotMember { functional, value } => Some((functional, value)),
        }
    }
}

pub type MembershipVerdict<S> = Verdict<Decomposition<S>, FunctionalId, S>;

/// A nonnegative combination of pure diagrams, in the order the greedy
/// procedure found them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<S> {
    pub terms: Vec<(DegreeSequence, S)>,
}

impl<S: Scalar> Decomposition<S> {
    /// `sum c_d pi_d`, canonical mode.
    pub fn recombine(&self) -> BettiTable<S> {
        self.terms
            .iter()
            .fold(BettiTable::canonical(), |acc, (d, c)| {
                acc.add_scaled(c, crate::betti::make_pure_diagram::<S>(*d).table())
                    .expect("both canonical")
            })
    }

    pub fn degree_sequences(&self) -> impl Iterator<Item = DegreeSequence> + '_ {
        self.terms.iter().map(|(d, _)| *d)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Membership in the cone of Betti tables of finitely generated modules.
///
/// Scan order for the certificate: doubling equalities (explicit mode
/// only), then `epsilon`, then `alpha`, then `gamma`, each by increasing
/// index. Members come with their greedy decomposition.
pub fn check_graded<S: Scalar>(v: &BettiTable<S>) -> MembershipVerdict<S> {
    match first_violation(v) {
        Some((functional, value)) => Verdict::NotMember { functional, value },
        None => {
            // every greedy step clears at least one stored entry, so the cap
            // is never reached for a table that passed the scan
            let terms = greedy_decompose(&v.to_canonical())
                .expect("greedy decomposition terminates on cone members");
            Verdict::Member(Decomposition { terms })
        }
    }
}

/// Membership in the cone of Betti tables of finite length modules: the
/// graded cone cut by `gamma_inf = 0`.
pub fn check_finite_length<S: Scalar>(v: &BettiTable<S>) -> MembershipVerdict<S> {
    let verdict = check_graded(v);
    if !verdict.is_member() {
        return verdict;
    }
    let g = eval_functional(FunctionalId::GammaInf, &v.to_canonical());
    if g.is_zero() {
        verdict
    } else {
        Verdict::NotMember {
            functional: FunctionalId::GammaInf,
            value: g,
        }
    }
}

/// Doubling equalities that can be checked on an explicit table: those
/// `(i, j)` with `2 <= i < max_row` touching the support. Rows past the
/// largest stored one are treated as not computed.
pub fn doubling_constraints<S: Scalar>(v: &BettiTable<S>) -> Vec<FunctionalId> {
    if v.mode() == TailMode::Canonical {
        return Vec::new();
    }
    let Some(h) = v.max_row() else {
        return Vec::new();
    };
    let mut out = BTreeSet::new();
    for i in 2..h {
        for (j, _) in v.row(i) {
            out.insert((i, j));
        }
        for (j, _) in v.row(i + 1) {
            out.insert((i, j - 1));
        }
    }
    out.into_iter()
        .map(|(i, j)| FunctionalId::DoublingEq { i, j })
        .collect()
}

/// Every inequality that can be nonzero on a canonical table whose stored
/// degrees lie in `[lo, hi]`, in scan order. `alpha_k` vanishes outside
/// `[lo - 1, hi + 1]`; `gamma_k` vanishes below `lo - 2` and is constant
/// from `hi` on.
pub(crate) fn inequality_scan<S: Scalar>(v: &BettiTable<S>, lo: i64, hi: i64) -> Vec<FunctionalId> {
    let mut out: Vec<FunctionalId> = v
        .iter()
        .map(|(i, j, _)| FunctionalId::Epsilon { i, j })
        .collect();
    out.extend((lo - 1..=hi + 1).map(FunctionalId::Alpha));
    out.extend((lo - 2..=hi).map(FunctionalId::Gamma));
    out
}

/// The first violated constraint in scan order, if any.
pub fn first_violation<S: Scalar>(v: &BettiTable<S>) -> Option<(FunctionalId, S)> {
    for f in doubling_constraints(v) {
        let value = eval_functional(f, v);
        if !value.is_zero() {
            return Some((f, value));
        }
    }
    let canon = v.to_canonical();
    let (lo, hi) = canon.degree_range()?;
    inequality_scan(&canon, lo, hi).into_iter().find_map(|f| {
        let value = eval_functional(f, &canon);
        (!f.holds(&value)).then_some((f, value))
    })
}

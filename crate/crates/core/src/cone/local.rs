//! Cones of ungraded Betti sequences over the completion of B.
//!
//! Only `(beta_0, beta_1, beta_2)` matter: every later entry doubles the
//! previous one.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::membership::Verdict;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiSequence<S> {
    pub b0: S,
    pub b1: S,
    pub b2: S,
}

impl<S: Scalar> BettiSequence<S> {
    pub fn new(b0: S, b1: S, b2: S) -> Self {
        BettiSequence { b0, b1, b2 }
    }

    pub fn from_ints(b0: i64, b1: i64, b2: i64) -> Self {
        Self::new(S::from_int(b0), S::from_int(b1), S::from_int(b2))
    }

    /// `beta_i` with the doubling tail.
    pub fn entry(&self, i: usize) -> S {
        match i {
            0 => self.b0.clone(),
            1 => self.b1.clone(),
            _ => self.b2.clone() * crate::scalar::pow2::<S>((i - 2) as u32),
        }
    }
}

/// Constraints of the local cones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LocalFunctional {
    /// `b_i >= 0`
    Entry(usize),
    /// `3 b0 + b2 - 3 b1 >= 0`
    Multiplicity,
    /// `2 b1 - b2 >= 0`
    Alpha,
    /// `3 b0 + b2 - 3 b1 = 0` (finite length only)
    MultiplicityEq,
}

impl LocalFunctional {
    pub fn eval<S: Scalar>(&self, s: &BettiSequence<S>) -> S {
        let three = S::from_int(3);
        match self {
            LocalFunctional::Entry(i) => s.entry(*i),
            LocalFunctional::Multiplicity | LocalFunctional::MultiplicityEq => {
                three.clone() * s.b0.clone() + s.b2.clone() - three * s.b1.clone()
            }
            LocalFunctional::Alpha => S::from_int(2) * s.b1.clone() - s.b2.clone(),
        }
    }

    fn holds<S: Scalar>(&self, value: &S) -> bool {
        match self {
            LocalFunctional::MultiplicityEq => value.is_zero(),
            _ => !value.is_negative(),
        }
    }
}

impl fmt::Display for LocalFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalFunctional::Entry(i) => write!(f, "b{i}"),
            LocalFunctional::Multiplicity => f.write_str("3b0+b2-3b1"),
            LocalFunctional::Alpha => f.write_str("2b1-b2"),
            LocalFunctional::MultiplicityEq => f.write_str("3b0+b2-3b1=0"),
        }
    }
}

/// Coefficients on the local rays `(1,0,0)`, `(1,1,0)`, `(1,3,6)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDecomposition<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> LocalDecomposition<S> {
    pub fn recombine(&self) -> BettiSequence<S> {
        BettiSequence {
            b0: self.a.clone() + self.b.clone() + self.c.clone(),
            b1: self.b.clone() + S::from_int(3) * self.c.clone(),
            b2: S::from_int(6) * self.c.clone(),
        }
    }
}

pub type LocalVerdict<S> = Verdict<LocalDecomposition<S>, LocalFunctional, S>;

fn constraints(finite_length: bool) -> Vec<LocalFunctional> {
    let mut out = vec![
        LocalFunctional::Entry(0),
        LocalFunctional::Entry(1),
        LocalFunctional::Entry(2),
        LocalFunctional::Multiplicity,
        LocalFunctional::Alpha,
    ];
    if finite_length {
        out.push(LocalFunctional::MultiplicityEq);
    }
    out
}

/// Membership in the local cone (all modules, or finite length modules).
pub fn check_local<S: Scalar>(s: &BettiSequence<S>, finite_length: bool) -> LocalVerdict<S> {
    for f in constraints(finite_length) {
        let value = f.eval(s);
        if !f.holds(&value) {
            return Verdict::NotMember {
                functional: f,
                value,
            };
        }
    }
    Verdict::Member(solve(s))
}

/// The unique coefficients on the three local rays; `a` is zero for finite
/// length members.
pub fn decompose_local<S: Scalar>(
    s: &BettiSequence<S>,
    finite_length: bool,
) -> Result<LocalDecomposition<S>> {
    match check_local(s, finite_length) {
        Verdict::Member(d) => Ok(d),
        Verdict::NotMember { functional, value } => Err(Error::NotInCone {
            functional: functional.to_string(),
            value: value.to_string(),
        }),
    }
}

// a + b + c = b0, b + 3c = b1, 6c = b2
fn solve<S: Scalar>(s: &BettiSequence<S>) -> LocalDecomposition<S> {
    let c = s.b2.clone() / S::from_int(6);
    let b = s.b1.clone() - S::from_int(3) * c.clone();
    let a = s.b0.clone() - b.clone() - c.clone();
    LocalDecomposition { a, b, c }
}

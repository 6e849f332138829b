//! Membership, certificates and decompositions for the cones of Betti
//! tables and of local Betti sequences.

mod decompose;
mod local;
mod membership;
mod order;

pub use decompose::{decompose, max_coefficient, pivot};
pub use local::{
    check_local, decompose_local, BettiSequence, LocalDecomposition, LocalFunctional, LocalVerdict,
};
pub use membership::{
    check_finite_length, check_graded, doubling_constraints, first_violation, Decomposition,
    MembershipVerdict, Verdict,
};
pub use order::{comparable, degseq_leq};

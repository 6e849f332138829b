//! Betti tables, degree sequences, pure diagrams and the functionals that
//! cut out the cone.

mod degseq;
mod functional;
mod hk;
mod table;

pub use degseq::{make_pure_diagram, Degree, DegreeSequence, PureDiagram, Shape};
pub use functional::{eval_functional, FunctionalId};
pub use hk::{
    higher_betti, hk_ray, hk_relations_check, hk_relations_hold, syzygy_of_indecomposable, HkRay,
    McmName,
};
pub use table::{table_arith, BettiTable, TailMode};

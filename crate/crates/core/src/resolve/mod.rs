//! Graded modules over `B = k[x,y,z]/(xy,yz,xz)` and their minimal free
//! resolutions, Hilbert series and multiplicities.
//!
//! The coefficient field is a run-time value ([`FieldSpec`]); the
//! `*_with` helpers dispatch a [`Presentation`] to the matching
//! [`Field`] implementation.

mod field;
mod hilbert;
mod linalg;
mod module;
mod poly;
mod resolution;

pub use field::{Field, FieldSpec, PrimeField, RationalField};
pub use hilbert::{hilbert_data, mult_identity_check, syzygy_multiplicity, HilbertData};
pub use module::{
    builtin, quotient_module, Builtin, GradedModule, ModuleDescription, Presentation,
};
pub use poly::{BPoly, Mono, Var};
pub use resolution::{min_free_resolution, ResolutionResult};

use crate::error::Result;
use crate::Rational;

macro_rules! with_field {
    ($spec:expr, $p:expr, |$m:ident| $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                let $m = GradedModule::new(RationalField::<Rational>::new(), $p)?;
                $body
            }
            FieldSpec::Prime(q) => {
                let $m = GradedModule::new(PrimeField::new(q)?, $p)?;
                $body
            }
        }
    };
}

pub fn resolve_with(
    spec: FieldSpec,
    p: &Presentation,
    deg_bound: i64,
    hom_bound: usize,
) -> Result<ResolutionResult> {
    with_field!(spec, p, |m| Ok(min_free_resolution(
        &m, deg_bound, hom_bound
    )))
}

pub fn hilbert_with(spec: FieldSpec, p: &Presentation, deg_bound: i64) -> Result<HilbertData> {
    with_field!(spec, p, |m| hilbert_data(&m, deg_bound))
}

pub fn mult_identity_with(
    spec: FieldSpec,
    p: &Presentation,
    deg_bound: i64,
    hom_bound: usize,
) -> Result<bool> {
    with_field!(spec, p, |m| mult_identity_check(&m, deg_bound, hom_bound))
}

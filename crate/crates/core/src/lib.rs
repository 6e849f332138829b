//! Betti tables over `B = k[x,y,z]/(xy,yz,xz)` and the cone they span.
//!
//! * [`betti`]: tables, degree sequences, pure diagrams, the defining
//!   functionals and the Herzog–Kühl rays.
//! * [`cone`]: membership with certificates, greedy decomposition into
//!   pure diagrams, the partial order on degree sequences, local cones.
//! * [`resolve`]: presentations of graded B-modules, minimal free
//!   resolutions, Hilbert series.
//! * [`verify`]: an exact double-description check that generators and
//!   halfspaces cut out the same cone on finite windows.
//! * [`format`]: the `betti v1` text format.
//!
//! Cone-side code is generic over [`Scalar`]; the aliases below fix it to
//! [`BigRational`](num_rational::BigRational).

pub mod betti;
pub mod cone;
pub mod error;
pub mod format;
pub mod resolve;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type Table = betti::BettiTable<Rational>;
pub type Diagram = betti::PureDiagram<Rational>;
pub type Sequence = cone::BettiSequence<Rational>;
pub type Report = verify::WindowReport<Rational>;

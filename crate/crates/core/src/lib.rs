//! Exact arithmetic in the Brauer algebra over rational function fields,
//! updown tableaux, and primitive idempotents computed by the
//! Jucys–Murphy recurrence and the regularized fusion procedure.

pub mod algebra;
pub mod diagram;
pub mod field;
pub mod idempotent;
pub mod report;
pub mod suites;
pub mod tableau;

pub use algebra::{AlgebraElement, AlgebraError, BrauerAlgebra};
pub use diagram::{BrauerDiagram, Generator};
pub use field::{Field, FieldError, FieldMode, GroundField, QOmega, QOmegaElem};
pub use report::{CheckRecord, VerificationReport};
pub use tableau::{Partition, UpdownTableau};

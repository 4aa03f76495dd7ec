//! Toolkit for q-ary separable, strongly separable and frameproof codes:
//! exact finite-field arithmetic, difference-matrix constructions driven
//! by cap sets, definitional and fast property verifiers, closed-form size
//! bounds, exhaustive optimum search at tiny parameters, and coalition
//! tracing from descendant observations.

pub mod bounds;
pub mod code;
pub mod construct;
pub mod field;
pub mod search;
pub mod trace;
pub mod verify;

pub use code::{Code, Coalition, DescendantSet};
pub use field::{FieldElement, FieldSpec, VectorElement, VectorView};
pub use verify::VerificationReport;

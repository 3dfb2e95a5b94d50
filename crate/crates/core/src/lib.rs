//! Exact computation of symplectic normal forms for self-adjoint operators.

pub mod codec;
pub mod error;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod normal_form;
pub mod poly;
pub mod symplectic;

pub use error::{Error, Result};
pub use field::{Elem, Field, FieldDescriptor, Scalar, ScalarText};
pub use linalg::{Mat, Subspace};
pub use poly::Poly;

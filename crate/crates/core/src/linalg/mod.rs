//! Exact dense linear algebra over [`Field`](crate::field::Field).

mod matrix;
mod subspace;

pub use matrix::{Mat, Rref};
pub use subspace::{restrict_scalars_kernel, Subspace};

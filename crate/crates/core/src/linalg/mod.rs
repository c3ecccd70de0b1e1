//! Exact linear algebra over the rationals.

mod matrix;
mod poly;
mod scalar;

pub use matrix::{sparse, Matrix, RowOp, RowSpace};
pub use poly::{Poly, PolyMatrix};
pub use scalar::Scalar;

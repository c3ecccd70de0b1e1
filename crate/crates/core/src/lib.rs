//! Exact finite-dimensional algebra and module computations over the
//! rationals: syzygies, transposes, stable homs and delooping level bounds.

pub mod algebra;
pub mod constructions;
pub mod dell;
pub mod error;
pub mod homological;
pub mod io;
pub mod linalg;
pub mod module;

pub use algebra::{Algebra, AlgebraTable, SubalgebraEmbedding};
pub use error::{Error, Result};
pub use linalg::{Matrix, RowSpace, Scalar};
pub use module::{ModuleMorphism, ModuleRep};

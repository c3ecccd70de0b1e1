//! Rebuilds `Lambda(q)`, `M(a)` and `Lambda(q)[M(q)]`, runs every check and
//! produces a replayable JSON report.

pub mod checks;
pub mod compute;
pub mod fixtures;
pub mod report;

pub use checks::{verify_all, VerifyError, VerifyOptions};
pub use report::{replay, Report, Status};

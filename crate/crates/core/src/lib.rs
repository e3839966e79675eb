pub mod catalog;
pub mod classify;
pub mod error;
pub mod findim;
mod expr;
pub mod freealg;
pub mod hopf;
pub mod isomap;
pub mod linalg;
pub mod report;
pub mod repro;
pub mod scalar;
pub mod tensorspace;

pub use error::{Error, Result};
pub use scalar::{Rational, Scalar, Var};

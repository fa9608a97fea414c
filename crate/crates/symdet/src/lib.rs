//! Exact determinantal algorithms for symmetric polynomials, rank-one
//! exterior powers of polynomial rings, and divided differences.

pub mod cli;
pub mod divdiff;
pub mod error;
pub mod exterior;
pub mod fundamental;
pub mod matrix;
pub mod poly;
pub mod sym;

pub use error::{Error, Result};
pub use poly::{parse, Poly, Rational, VarId};

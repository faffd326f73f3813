//! Exact computations with Hodge representations of semisimple Lie algebras.
//!
//! A Hodge representation is described by a tuple `(g, E, μ, c)`: a semisimple
//! algebra (a sum of simple factors), a grading element with coefficients in
//! `{0,1}` on each factor, a dominant highest weight, and a rational center
//! scalar. From such a tuple the crate computes Hodge numbers, the reality
//! type, and properties of the induced grading of the adjoint representation,
//! and it enumerates all tuples realizing prescribed Hodge numbers.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod hodge;
pub mod rational;
pub mod repdata;
pub mod rootdata;

pub use error::{Error, ErrorKind, Result};

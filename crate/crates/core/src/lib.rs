//! Stratification checking and finite typed-universe cardinal arithmetic
//! for NF-style set theory.

pub mod cardinal;
pub mod error;
pub mod eval;
pub mod formula;
pub mod harness;
pub mod stratify;
pub mod universe;

pub use error::{Error, Result};

//! Finite-scale almost chains of subsets of `ω`.
//!
//! The crate turns almost chains `{A_x : x ∈ X}` into barely alternating
//! finite adjustments by one-point insertion, checks compatibility of partial
//! families, interpolates `(ω, ω)` towers, and builds the three-point extension
//! operator `Ef(n) = f(x⁰ₙ) − f(x¹ₙ) + f(x²ₙ)` on finite line models.
//!
//! Everything is exact: indices and function values are arbitrary-precision
//! rationals and sets are bit vectors over a truncated ground set.

#![allow(clippy::result_large_err)]

pub mod adjuster;
pub mod chain_core;
pub mod error;
pub mod format;
pub mod generators;
pub mod line_operator;

#[cfg(any(test, feature = "oracles"))]
pub mod oracles;

pub use error::{Error, ErrorClass, Result};

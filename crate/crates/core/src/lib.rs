//! Exact-arithmetic toolkit for Q-polynomial distance-regular graphs that
//! contain a 3-clique whose idempotent columns are linearly dependent.
//!
//! The crate is layered bottom-up:
//!
//! - [`exact_math`]: rationals, integer polynomials, real-root isolation.
//! - [`params`]: everything computable from an intersection array alone.
//! - [`theorem`]: the six-way equivalence at parameter level and the
//!   classification search over diameters.
//! - [`graphs`]: explicit graphs, exact primitive idempotents and the
//!   graph-level conditions.
//! - [`constructions`]: builders for the classified graphs that fit on a desk.
//! - [`cli`]: report types and the command implementations behind `qdrg`.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod exact_math;
pub mod graphs;
pub mod params;
pub mod theorem;

pub use error::{Error, Result};
pub use exact_math::{Eigenvalue, IntegerPolynomial, Rational};
pub use params::IntersectionArray;

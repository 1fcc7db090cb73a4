//! Exact symbolic computation for piecewise-polynomial Riesz spaces, their
//! tensor products in sup-inf normal form, and finitely supported function
//! lattices.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the library. Operations either return an exact
//! result or a structured error (for example, when a lattice operation would
//! need an irrational crossing point).

// Errors carry their exact witnesses (isolating intervals, offending points,
// wrapped sources), which makes the Err variant large. Error paths are cold,
// so the size is preferred over boxing every witness.
#![allow(clippy::result_large_err)]

pub mod c00;
pub mod dsl;
pub mod error;
pub mod exactnum;
pub mod finitedim;
pub mod pplattice;
pub mod suite;
pub mod tensorlattice;

pub use error::{Error, Result};

//! Dehn twist factorizations in the genus-2 mapping class group.
//!
//! Words in the chain twists `ζ1..ζ5` are compared exactly through their action
//! on the surface group ([`surface`], [`mcg`]). Factorizations, Hurwitz moves
//! and replayable certificates live in [`factorization`]; [`identities`] builds
//! the certificates behind stabilization, and [`braid`] lifts sphere braid
//! monodromies. [`catalogue`] lists every frozen certificate and [`cli`] is the
//! command-line front end.

pub mod braid;
pub mod catalogue;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod identities;
pub mod mcg;
pub mod rewrite;
pub mod surface;
mod syntax;

pub use error::{BoundExceeded, Error, Result};

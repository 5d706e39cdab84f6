//! Type-A crystals, their atomic decomposition, and a wall-crossing engine
//! that recharges tableaux from weight multiplicities down to Kostka-Foulkes
//! polynomials.
//!
//! The usual entry point is [`crystal::Crystal::build`], followed by
//! [`atoms::AtomDecomposition::new`] and either the closed-form statistics in
//! [`charge`] or the step-by-step [`wallcross::Engine`].

pub mod error;
pub mod atoms;
pub mod charge;
pub mod cli;
pub mod crystal;
pub mod poly;
pub mod rootlat;
pub mod wallcross;

pub use error::{Error, Result};
pub use poly::LaurentPoly;
pub use rootlat::{AffineRoot, Root, Weight, WeylElement};

//! Finite-structure workbench for left commutative rngs and the Hu-Liu product.
//!
//! Structures are small Cayley tables over `0..n` with `0` as the additive
//! identity. Every law check returns the first failing tuple as a witness.

pub mod catalog;
pub mod cli;
pub mod constructions;
pub mod format;
pub mod hlring;
pub mod ideals;
pub mod integrality;
pub mod kernel;
pub mod lcrng;
pub mod lyingover;
pub mod violation;

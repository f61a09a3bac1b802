//! Modular data and modular-invariant classification for the affine orthogonal
//! algebras B_r and D_r at levels 1 to 3.

pub mod error;
pub mod exact;
pub mod affine;
pub mod modular;
pub mod invariants;
pub mod classify;

pub use error::{Error, Result};

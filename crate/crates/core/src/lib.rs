//! Algebraic core for entanglement-assisted quantum MDS codes built from
//! cyclic codes of length `n = (q^2 + 1) / a` over `GF(q^2)`.
//!
//! Everything here is pure computation over `alloc`; IO, the CLI and the
//! report formats live in the `eaqmds` companion crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cyclic;
pub mod error;
pub mod families;
pub mod gfield;
pub mod intmath;
pub mod linalg;
pub mod tables;
pub mod verify;
pub mod zmod;

pub use error::{Error, Result};

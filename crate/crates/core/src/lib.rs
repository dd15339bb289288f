//! Exact computation of centers, discriminants and automorphism data for
//! PI skew polynomial rings and quantum Weyl algebras.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exactmath;
pub mod skewring;
pub mod centerlat;
pub mod discriminant;
pub mod autgroup;
pub mod qweyl;

pub use error::{Error, Result};

//! Exact engine for the Moyal star product, the Weyl correspondence on
//! polynomial symbols, the minimal realization of `sl(n+1, C)`, its first
//! cohomology with values in the star-bracket module, and the resulting
//! deformation family of representations.
//!
//! Everything is computed over the Gaussian rationals `Q(i)`; there is no
//! floating point anywhere. The crate is `no_std` and only needs `alloc`.
#![no_std]
extern crate alloc;

pub mod cohom;
pub mod error;
pub mod liealg;
pub mod moyal;
pub mod parse;
pub mod poly;
pub mod reps;
pub mod scalar;
pub mod weylop;
pub mod xla;

pub use error::{Error, Result};
pub use poly::{MultiIndex, Polynomial, Space, SpaceKind};
pub use scalar::GaussianRational;

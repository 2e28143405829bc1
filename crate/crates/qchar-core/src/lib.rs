//! Exact computer algebra for the quantum character varieties of the
//! four-punctured sphere and the punctured torus.
//!
//! Everything here is `no_std` with `alloc`. Parsing, files and the command
//! line live in the `qchar` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod scalar;
pub mod freealg;
pub mod rewrite;
pub mod qsl2;
pub mod homcheck;
pub mod catalog;
pub mod series;

pub use freealg::{Alphabet, Generator, NcPoly, Word};
pub use scalar::{GaussRat, QLaurent};

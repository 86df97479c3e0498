//! Finite presentations of upper cluster algebras.
//!
//! Starting from a seed, the library builds candidate rings from Laurent
//! generators, presents them as quotients of polynomial rings, checks that
//! they sit between the lower and upper bounds, and runs a saturation test
//! that either certifies equality with the upper cluster algebra or
//! produces new elements to adjoin.
//!
//! Layers, bottom up:
//! - [`arith`]: exact rational polynomials and Laurent polynomials.
//! - [`groebner`]: Buchberger bases, elimination, saturation.
//! - [`cluster`]: exchange matrices, seeds, mutation, diagnostics.
//! - [`presentation`]: the generator-discovery loop.
//! - [`cli`]: expression grammar, file formats and command drivers.

pub mod arith;
pub mod cli;
pub mod cluster;
pub mod error;
pub mod groebner;
pub mod presentation;

pub use error::{Error, Result};

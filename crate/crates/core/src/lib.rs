//! Exact computation of equivariant elliptic Hochschild homology sheaves for
//! smooth toric varieties.
//!
//! Everything here is computed over the "group model" of an elliptic curve
//! `E`: a point is a pair of rationals mod 1 (the torsion data) together with
//! a formal rational linear combination of generic symbols (coordinates that
//! are transcendental over the torsion lattice).  All linear algebra is done
//! over arbitrary-precision integers and rationals; there is no floating
//! point anywhere in this crate.
//!
//! The crate is `no_std` (it only needs `alloc`).  IO, serialization and the
//! command line interface live in the companion `ellfan` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cech;
pub mod epoints;
pub mod fan;
pub mod lattice;
pub mod local_model;
pub mod localization;
pub mod subgroups;

mod error;

pub use error::Error;

/// Arbitrary-precision integer used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational used throughout.
pub type Rat = num_rational::BigRational;

/// Shorthand for building an `Int` from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for building a `Rat` from a machine integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

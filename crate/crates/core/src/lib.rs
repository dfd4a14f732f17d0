//! Exact combinatorics of neighborhood geometries.
//!
//! The crate builds finite permutation groups, the regular maps they carry,
//! the point-circle configurations those maps induce, and finite patches of
//! the uniform disk tilings covering them. Everything is computed exactly
//! (integers and explicit permutations) except the `hyperbolic` module,
//! which works in `f64` inside the unit disk.
//!
//! The crate is `no_std` + `alloc`; IO, file formats and the command-line
//! front end live in the companion `nbgeom-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod configs;
pub mod graphs;
pub mod hyperbolic;
pub mod maps;
pub mod perm;

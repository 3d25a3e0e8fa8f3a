//! Decides whether the edge ring `K[G]` of a finite simple graph is strongly
//! Koszul, from the block structure of `G`, and checks that verdict against
//! direct computations in the affine semigroup generated by the edge
//! monomials and in the toric ideal of its presentation.
//!
//! Everything here is `no_std` + `alloc`; file formats, the corpus harness and
//! the command line live in the `koszul-lab` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bipartite;
pub mod blocks;
pub mod canon;
pub mod classifier;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod groebner;
mod lattice;
pub mod semigroup;
pub mod toric;

pub use classifier::{classify, classify_trivial, ClassificationReport};
pub use error::{Error, Result};
pub use graph::{Cycle, Edge, Graph};

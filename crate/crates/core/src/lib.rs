//! Exact algorithms for small graphs in locally colourable families.
//!
//! The crate is `no_std` (it needs `alloc`). Graphs are immutable values with
//! bit-packed adjacency; every solver is exact and deterministic, and every
//! ratio is an exact rational.
//!
//! - [`graph`]: the [`Graph`] value type, weighted graphs, neighbourhood
//!   quantities.
//! - [`catalog`]: named graphs and constructions (Kneser, Schrijver, Turán,
//!   blow-ups, joins, the chromatic-threshold construction).
//! - [`colouring`]: colourability, chromatic number, cliques, independence.
//! - [`local`]: `a`-locally `b`-partite membership, dense and sparse pairs,
//!   and finite instance checks of the structural lemmas.
//! - [`hom`]: homomorphisms, subgraph embeddings, isomorphism and
//!   homomorphism-diagram verification.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod catalog;
pub mod colouring;
pub mod error;
pub mod graph;
pub mod hom;
pub mod local;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, Rational, WeightedGraph};

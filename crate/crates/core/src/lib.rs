//! Channel metrization and decoding-equivalent Hamming cube embeddings.
//!
//! A channel and a distance are *matched* when maximum-likelihood decoding
//! and minimum-distance decoding pick the same codewords for every code and
//! every received symbol. Matchedness depends only on the column-wise weak
//! order of the two matrices, so the crate works in exact rationals
//! throughout.
//!
//! - [`orders`]: channels, distances, rank matrices, decoders, and the
//!   equivalence predicates.
//! - [`metrization`]: decides whether a channel admits a matched distance and
//!   returns either a canonical one or a checkable contradiction.
//! - [`subsets`]: minterm vectors and the intersection / symmetric-difference
//!   transforms over the subset lattice.
//! - [`embedding`]: linear embeddings of translation-invariant weights and
//!   point embeddings of arbitrary semimetrics into the Hamming cube.
//! - [`minimal`]: minimum-dimension embeddings via exact integer programming.

pub mod embedding;
pub mod error;
pub mod metrization;
pub mod minimal;
pub mod orders;
pub mod rational;
pub mod subsets;

pub use error::{Error, Result};
pub use orders::{
    Channel, Code, Direction, DistanceMatrix, SquareMatrix, WeakOrderMatrix, WeightVector,
};
pub use rational::Rat;
pub use subsets::{SetFamily, SubsetVector};

//! Channels, distances, weak-order matrices and the decoding-equivalence
//! predicates built on them.

mod channel;
mod decode;
mod distance;
mod matrix;
mod weak_order;
mod weight;

pub use channel::Channel;
pub use decode::{
    decoder_agreement_oracle, matched, mdd_decode, mld_decode, AgreementReport, Code,
    DecoderWitness, ORACLE_MAX_N,
};
pub use distance::{
    ball_family, classify_distance, to_metric, weight_to_distance, DistanceClass, DistanceMatrix,
};
pub use matrix::SquareMatrix;
pub use weak_order::{dense_ranks, same_weak_order, weak_order, Direction, WeakOrderMatrix};
pub use weight::WeightVector;

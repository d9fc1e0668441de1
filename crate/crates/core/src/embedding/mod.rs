//! Linear and point embeddings into Hamming cubes.

mod exact;
mod linear;
mod points;
mod verify;
mod word;

pub use exact::{exact_embed, EXACT_MAX_N};
pub use linear::{embed_weight, embed_weight_with, AffineScale, AffineSummary, LinearEmbedding};
pub use points::{dummy_weight, embed_points, PointEmbedding};
pub use verify::{verify_linear, verify_points, EmbeddingReport, Violation};
pub use word::CubeWord;

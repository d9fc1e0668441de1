//! Minterm vectors of set families, the intersection and symmetric-difference
//! transforms, realizability, and the scale-and-shift construction that makes
//! any rational symmetric-difference pattern realizable.

mod family;
mod scaling;
mod search;
mod transform;
mod vector;

pub use family::{check_realizable, minterm_vector, realize, SetFamily};
pub use scaling::{scale_shift, ScalingWitness, WitnessSummary};
pub use search::{
    search_realization, PatternConstraint, PatternKind, Realization, SEARCH_MAX_N,
};
pub use transform::{
    cap_from_sym, cap_matrix, cap_transform, solve_cap, solve_sym, sym_matrix, sym_transform,
};
pub use vector::{graded_masks, subset_label, SubsetVector, MAX_SUBSET_N};

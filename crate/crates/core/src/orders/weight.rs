use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rat};
use crate::subsets::SubsetVector;

/// A weight function on the nonzero vectors of `F₂ⁿ`, indexed by bitmask.
///
/// The value at mask `I` is `ω(Σ_{i∈I} e_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(SubsetVector);

impl WeightVector {
    pub fn new(values: SubsetVector) -> Result<Self> {
        if let Some((mask, _)) = values.iter().find(|(_, v)| v.is_negative()) {
            return Err(Error::NegativeWeight { mask });
        }
        Ok(Self(values))
    }

    /// The Hamming weight on `F₂ⁿ`.
    pub fn hamming(n: usize) -> Self {
        Self(SubsetVector::from_fn(n, |mask| int(mask.count_ones() as i64)))
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn at(&self, mask: usize) -> &Rat {
        self.0.get(mask)
    }

    pub fn values(&self) -> &SubsetVector {
        &self.0
    }

    pub fn is_semimetric(&self) -> bool {
        self.0.iter().all(|(_, v)| !v.is_zero())
    }

    pub fn require_semimetric(&self) -> Result<()> {
        match self.0.iter().find(|(_, v)| v.is_zero()) {
            Some((mask, _)) => Err(Error::NonPositiveWeight { mask }),
            None => Ok(()),
        }
    }
}

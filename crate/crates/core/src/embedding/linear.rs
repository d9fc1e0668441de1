use serde::Serialize;

use super::word::CubeWord;
use crate::error::{Error, Result};
use crate::orders::{DistanceMatrix, SquareMatrix, WeightVector};
use crate::rational::{format_rat, int, Rat};
use crate::subsets::{realize, scale_shift, solve_sym, ScalingWitness, SubsetVector};

/// `target ↦ m·target + k`, the affine law an embedding realizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineScale {
    pub m: Rat,
    pub k: Rat,
}

impl AffineScale {
    pub fn new(m: Rat, k: Rat) -> Self {
        Self { m, k }
    }

    pub fn apply(&self, value: &Rat) -> Rat {
        &self.m * value + &self.k
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AffineSummary {
    pub m: String,
    pub k: String,
}

impl From<&AffineScale> for AffineSummary {
    fn from(s: &AffineScale) -> Self {
        Self {
            m: format_rat(&s.m),
            k: format_rat(&s.k),
        }
    }
}

/// A linear map `F₂ⁿ → H^N` given by the images of the basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearEmbedding {
    len: usize,
    generators: Vec<CubeWord>,
    scale: Option<AffineScale>,
}

impl LinearEmbedding {
    pub fn new(generators: Vec<CubeWord>, scale: Option<AffineScale>) -> Result<Self> {
        let len = generators.first().map_or(0, CubeWord::len);
        if let Some(bad) = generators.iter().find(|g| g.len() != len) {
            return Err(Error::WordLength {
                left: len,
                right: bad.len(),
            });
        }
        if generators.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self {
            len,
            generators,
            scale,
        })
    }

    /// Generators from a realization of the minterm vector `x`: generator `i`
    /// is the indicator of `A_i`.
    pub fn from_minterms(x: &SubsetVector, scale: Option<AffineScale>) -> Result<Self> {
        let family = realize(x)?;
        let generators = (0..x.n())
            .map(|i| CubeWord::from_bits(family.membership().iter().map(|&m| m >> i & 1 == 1)))
            .collect();
        Self::new(generators, scale)
    }

    pub fn n(&self) -> usize {
        self.generators.len()
    }

    /// Dimension `N` of the target cube.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn generators(&self) -> &[CubeWord] {
        &self.generators
    }

    pub fn generators_mut(&mut self) -> &mut [CubeWord] {
        &mut self.generators
    }

    pub fn scale(&self) -> Option<&AffineScale> {
        self.scale.as_ref()
    }

    /// `f(v)` for `v` given as a bitmask: the XOR of the generators in `supp(v)`.
    pub fn image(&self, mask: usize) -> CubeWord {
        let mut word = CubeWord::zero(self.len);
        for (i, g) in self.generators.iter().enumerate() {
            if mask >> i & 1 == 1 {
                word.xor_assign(g);
            }
        }
        word
    }

    /// The pulled-back weight `v ↦ |f(v)|` on nonzero vectors.
    pub fn induced_weight(&self) -> SubsetVector {
        SubsetVector::from_fn(self.n(), |mask| int(self.image(mask).weight() as i64))
    }

    /// Hamming distance between images, on all of `F₂ⁿ`.
    pub fn pullback_distance(&self) -> DistanceMatrix {
        let size = 1usize << self.n();
        let images: Vec<CubeWord> = (0..size).map(|m| self.image(m)).collect();
        let matrix = SquareMatrix::from_fn(size, |u, v| {
            int(images[u].hamming(&images[v]).expect("same length") as i64)
        });
        DistanceMatrix::new(matrix).expect("Hamming distance is a distance")
    }
}

/// Embeds `weight` linearly into a Hamming cube with `|f(v)| = m·ω(v) + k`,
/// using the canonical scale-and-shift witness.
pub fn embed_weight(weight: &WeightVector) -> Result<LinearEmbedding> {
    weight.require_semimetric()?;
    let x = solve_sym(weight.values());
    embedding_from_witness(&scale_shift(&x))
}

/// As [`embed_weight`] with a caller-chosen `(m, r)`.
pub fn embed_weight_with(weight: &WeightVector, m: Rat, r: Rat) -> Result<LinearEmbedding> {
    weight.require_semimetric()?;
    let x = solve_sym(weight.values());
    embedding_from_witness(&ScalingWitness::with(&x, m, r)?)
}

pub(crate) fn embedding_from_witness(witness: &ScalingWitness) -> Result<LinearEmbedding> {
    LinearEmbedding::from_minterms(
        &witness.x_prime,
        Some(AffineScale::new(witness.m.clone(), witness.k.clone())),
    )
}

use num_traits::ToPrimitive;

use super::vector::SubsetVector;
use crate::error::{Error, Result};
use crate::rational::{int, is_nonneg_integer, Rat};

/// A family of `n` sets over the ground set `0..N`.
///
/// Each ground element is described by the mask of the sets containing it,
/// so it lies in exactly one minterm.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    membership: Vec<usize>,
}

impl SetFamily {
    pub fn new(n: usize, membership: Vec<usize>) -> Result<Self> {
        for (element, &mask) in membership.iter().enumerate() {
            if mask == 0 || mask >> n != 0 {
                return Err(Error::IndexOutOfRange {
                    index: element,
                    size: n,
                });
            }
        }
        Ok(Self { n, membership })
    }

    /// Builds the family from explicit member lists of each set (0-based elements).
    pub fn from_sets(sets: &[Vec<usize>]) -> Result<Self> {
        let ground = sets.iter().flatten().max().map_or(0, |m| m + 1);
        let mut membership = vec![0usize; ground];
        for (i, set) in sets.iter().enumerate() {
            for &e in set {
                membership[e] |= 1 << i;
            }
        }
        membership.retain(|&m| m != 0);
        Self::new(sets.len(), membership)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground_size(&self) -> usize {
        self.membership.len()
    }

    pub fn membership(&self) -> &[usize] {
        &self.membership
    }

    /// Elements of set `i` (0-based).
    pub fn set(&self, i: usize) -> Vec<usize> {
        (0..self.membership.len())
            .filter(|&e| self.membership[e] >> i & 1 == 1)
            .collect()
    }

    /// `|∩_{i∈J} A_i|`, counted directly.
    pub fn intersection_size(&self, mask: usize) -> usize {
        self.membership.iter().filter(|&&m| m & mask == mask).count()
    }

    /// `|△_{i∈J} A_i|`, counted directly.
    pub fn sym_diff_size(&self, mask: usize) -> usize {
        self.membership
            .iter()
            .filter(|&&m| (m & mask).count_ones() % 2 == 1)
            .count()
    }
}

/// Minterm cardinalities: `x_I` counts the elements whose membership is exactly `I`.
pub fn minterm_vector(family: &SetFamily) -> SubsetVector {
    let mut counts = vec![0i64; (1 << family.n) - 1];
    for &mask in &family.membership {
        counts[mask - 1] += 1;
    }
    SubsetVector::new(family.n, counts.into_iter().map(int).collect()).expect("length")
}

/// Whether every entry is a nonnegative integer.
pub fn check_realizable(x: &SubsetVector) -> bool {
    x.values().iter().all(is_nonneg_integer)
}

fn first_unrealizable(x: &SubsetVector) -> Option<(usize, &Rat)> {
    x.iter().find(|(_, v)| !is_nonneg_integer(v))
}

/// A family whose minterm vector is `x`; minterms are laid out consecutively
/// in ascending mask order.
pub fn realize(x: &SubsetVector) -> Result<SetFamily> {
    if let Some((mask, value)) = first_unrealizable(x) {
        return Err(Error::NotRealizable {
            mask,
            value: crate::rational::format_rat(value),
        });
    }
    let mut membership = Vec::new();
    for (mask, v) in x.iter() {
        let count = v.to_integer().to_usize().ok_or_else(|| Error::NotRealizable {
            mask,
            value: crate::rational::format_rat(v),
        })?;
        membership.extend(std::iter::repeat_n(mask, count));
    }
    SetFamily::new(x.n(), membership)
}

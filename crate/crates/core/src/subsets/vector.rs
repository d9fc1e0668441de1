use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::rational::{format_rat, Rat};
use num_traits::{One, Zero};

/// Largest `n` accepted for a subset-indexed vector (2^n - 1 entries).
pub const MAX_SUBSET_N: usize = 20;

/// One value per nonempty subset `I ⊆ [n]`.
///
/// Subsets are bitmasks: element `i` (1-based) is bit `i - 1`. Values are
/// stored in ascending mask order, so entry `mask - 1` belongs to `mask`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubsetVector {
    n: usize,
    values: Vec<Rat>,
}

impl SubsetVector {
    pub fn new(n: usize, values: Vec<Rat>) -> Result<Self> {
        check_n(n)?;
        let expected = (1usize << n) - 1;
        if values.len() != expected {
            return Err(Error::SubsetLength {
                n,
                expected,
                found: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> Rat) -> Self {
        check_n(n).expect("subset vector size");
        Self {
            n,
            values: (1..1usize << n).map(&mut f).collect(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_| Rat::zero())
    }

    pub fn ones(n: usize) -> Self {
        Self::from_fn(n, |_| Rat::one())
    }

    /// Builds from values listed in graded order (see [`graded_masks`]).
    pub fn from_graded(n: usize, values: Vec<Rat>) -> Result<Self> {
        let masks = graded_masks(n);
        if values.len() != masks.len() {
            return Err(Error::SubsetLength {
                n,
                expected: masks.len(),
                found: values.len(),
            });
        }
        let mut out = vec![Rat::zero(); masks.len()];
        for (mask, v) in masks.into_iter().zip(values) {
            out[mask - 1] = v;
        }
        Self::new(n, out)
    }

    pub fn to_graded(&self) -> Vec<Rat> {
        graded_masks(self.n)
            .into_iter()
            .map(|mask| self.get(mask).clone())
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, mask: usize) -> &Rat {
        &self.values[mask - 1]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rat> {
        self.values
    }

    /// `(mask, value)` pairs in ascending mask order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    pub fn map(&self, mut f: impl FnMut(&Rat) -> Rat) -> Self {
        Self {
            n: self.n,
            values: self.values.iter().map(&mut f).collect(),
        }
    }

    /// Full-length array indexed by mask, with the empty set at index 0 set to zero.
    pub(crate) fn to_full(&self) -> Vec<Rat> {
        std::iter::once(Rat::zero())
            .chain(self.values.iter().cloned())
            .collect()
    }

    pub(crate) fn from_full(n: usize, mut full: Vec<Rat>) -> Self {
        full.remove(0);
        Self { n, values: full }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_SUBSET_N {
        return Err(Error::Guard {
            what: "subset vector n",
            value: n,
            limit: MAX_SUBSET_N,
        });
    }
    Ok(())
}

/// Nonempty subsets of `[n]` by size, then lexicographically by members:
/// for `n = 3` the masks of {1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}.
pub fn graded_masks(n: usize) -> Vec<usize> {
    let members = |mask: usize| -> Vec<usize> { (0..n).filter(|i| mask >> i & 1 == 1).collect() };
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), members(m)));
    masks
}

/// Human-readable subset label, e.g. `{1,3}`.
pub fn subset_label(mask: usize) -> String {
    let members: Vec<String> = (0..usize::BITS as usize)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

impl Add for &SubsetVector {
    type Output = SubsetVector;

    fn add(self, rhs: &SubsetVector) -> SubsetVector {
        assert_eq!(self.n, rhs.n, "subset vector sizes differ");
        SubsetVector {
            n: self.n,
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Mul<&SubsetVector> for &Rat {
    type Output = SubsetVector;

    fn mul(self, rhs: &SubsetVector) -> SubsetVector {
        rhs.map(|v| self * v)
    }
}

impl fmt::Display for SubsetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(format_rat).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn graded_order_for_three() {
        assert_eq!(graded_masks(3), vec![1, 2, 4, 3, 5, 6, 7]);
        let v = SubsetVector::from_graded(3, [1, 2, 3, 12, 13, 23, 123].map(int).to_vec()).unwrap();
        assert_eq!(*v.get(0b011), int(12));
        assert_eq!(*v.get(0b100), int(3));
        assert_eq!(v.to_graded(), [1, 2, 3, 12, 13, 23, 123].map(int).to_vec());
    }

    #[test]
    fn length_checked() {
        assert!(matches!(
            SubsetVector::new(2, vec![int(1)]),
            Err(Error::SubsetLength { expected: 3, found: 1, .. })
        ));
        assert!(SubsetVector::new(0, vec![]).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(subset_label(0b101), "{1,3}");
        assert_eq!(subset_label(0b1), "{1}");
    }
}

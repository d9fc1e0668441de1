use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::SquareMatrix;
use super::weight::WeightVector;
use crate::error::{Error, Result};
use crate::rational::{format_rat, Rat};

/// A symmetric, nonnegative matrix with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DistanceMatrix(SquareMatrix);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceClass {
    pub is_semimetric: bool,
    pub is_metric: bool,
}

impl DistanceMatrix {
    pub fn new(matrix: SquareMatrix) -> Result<Self> {
        let n = matrix.n();
        for i in 0..n {
            let diag = matrix.get(i, i);
            if !diag.is_zero() {
                return Err(Error::NonZeroDiagonal {
                    index: i,
                    value: format_rat(diag),
                });
            }
            for j in 0..n {
                let v = matrix.get(i, j);
                if v.is_negative() {
                    return Err(Error::NegativeDistance {
                        row: i,
                        col: j,
                        value: format_rat(v),
                    });
                }
                if j > i && v != matrix.get(j, i) {
                    return Err(Error::Asymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self(matrix))
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        Self::new(SquareMatrix::from_rows(rows)?)
    }

    /// Builds a distance from its strict upper triangle, `upper(i, j)` for `i < j`.
    pub fn from_pairs(n: usize, mut upper: impl FnMut(usize, usize) -> Rat) -> Result<Self> {
        let mut values = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = upper(i, j);
                values[j][i] = v.clone();
                values[i][j] = v;
            }
        }
        Self::from_rows(values)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        self.0.get(i, j)
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    /// First off-diagonal zero, if any.
    fn zero_pair(&self) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j).is_zero())
    }

    pub fn require_semimetric(&self) -> Result<()> {
        match self.zero_pair() {
            Some((row, col)) => Err(Error::NotSemimetric { row, col }),
            None => Ok(()),
        }
    }
}

pub fn classify_distance(d: &DistanceMatrix) -> DistanceClass {
    let is_semimetric = d.zero_pair().is_none();
    let n = d.n();
    let triangle = (0..n).all(|i| {
        (0..n).all(|j| (0..n).all(|k| *d.get(i, k) <= d.get(i, j) + d.get(j, k)))
    });
    DistanceClass {
        is_semimetric,
        is_metric: is_semimetric && triangle,
    }
}

/// `1 + d / max(d)` off the diagonal; a metric decoding equivalent to `d`.
pub fn to_metric(d: &DistanceMatrix) -> Result<DistanceMatrix> {
    d.require_semimetric()?;
    let n = d.n();
    if n == 1 {
        return Ok(d.clone());
    }
    let max = d.matrix().rows().flatten().max().cloned().expect("nonempty");
    DistanceMatrix::from_pairs(n, |i, j| Rat::one() + d.get(i, j) / &max)
}

/// The translation-invariant distance `d(x, y) = ω(x XOR y)` on `F₂ⁿ`,
/// with points indexed by bitmask.
pub fn weight_to_distance(weight: &WeightVector) -> DistanceMatrix {
    let size = 1usize << weight.n();
    let matrix = SquareMatrix::from_fn(size, |x, y| {
        if x == y {
            Rat::zero()
        } else {
            weight.at(x ^ y).clone()
        }
    });
    DistanceMatrix(matrix)
}

/// The distinct balls `B(x0, r)` as `r` runs over column `x0`, smallest first.
pub fn ball_family(d: &DistanceMatrix, center: usize) -> Result<Vec<Vec<usize>>> {
    let n = d.n();
    if center >= n {
        return Err(Error::IndexOutOfRange {
            index: center,
            size: n,
        });
    }
    let mut radii: Vec<&Rat> = (0..n).map(|y| d.get(y, center)).collect();
    radii.sort();
    radii.dedup();
    Ok(radii
        .into_iter()
        .map(|r| (0..n).filter(|&y| d.get(y, center) <= r).collect())
        .collect())
}

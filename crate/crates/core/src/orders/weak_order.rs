use serde::Serialize;

use super::matrix::SquareMatrix;
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Which end of a column gets rank 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Largest entry ranks first (the decreasing matrix, used for channels).
    Descending,
    /// Smallest entry ranks first (the increasing matrix, used for distances).
    Ascending,
}

/// Column-wise dense ranks of a square matrix.
///
/// Within a column, equal entries share a rank and the next distinct value
/// gets the next rank (1, 1, 2, ...).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeakOrderMatrix {
    n: usize,
    ranks: Vec<u32>,
}

impl WeakOrderMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self, row: usize, col: usize) -> u32 {
        self.ranks[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.ranks.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rank rows must be square");
        Self {
            n,
            ranks: rows.iter().flatten().copied().collect(),
        }
    }
}

/// Dense ranks of `values` (ascending: smallest gets 1).
pub fn dense_ranks<'a>(values: impl IntoIterator<Item = &'a Rat>, direction: Direction) -> Vec<u32> {
    let values: Vec<&Rat> = values.into_iter().collect();
    let mut distinct = values.clone();
    distinct.sort();
    distinct.dedup();
    if direction == Direction::Descending {
        distinct.reverse();
    }
    values
        .iter()
        .map(|v| {
            let pos = match direction {
                Direction::Ascending => distinct.binary_search(v),
                Direction::Descending => distinct.binary_search_by(|probe| v.cmp(probe)),
            };
            pos.expect("value present") as u32 + 1
        })
        .collect()
}

pub fn weak_order(matrix: &SquareMatrix, direction: Direction) -> WeakOrderMatrix {
    let n = matrix.n();
    let mut ranks = vec![0; n * n];
    for col in 0..n {
        for (row, rank) in dense_ranks(matrix.column(col), direction).into_iter().enumerate() {
            ranks[row * n + col] = rank;
        }
    }
    WeakOrderMatrix { n, ranks }
}

/// Whether two matrices induce the same column-wise weak order.
///
/// For distances this is decoding equivalence; for channels it is channel
/// equivalence. The answer does not depend on `direction`.
pub fn same_weak_order(a: &SquareMatrix, b: &SquareMatrix, direction: Direction) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(weak_order(a, direction) == weak_order(b, direction))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn grid(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn worked_example_descending_and_ascending() {
        let m = grid(&[&[9, 2, 1], &[9, 7, 0], &[8, 6, 8]]);
        assert_eq!(
            weak_order(&m, Direction::Descending).rows(),
            vec![vec![1, 3, 2], vec![1, 1, 3], vec![2, 2, 1]]
        );
        assert_eq!(
            weak_order(&m, Direction::Ascending).rows(),
            vec![vec![2, 1, 2], vec![2, 3, 1], vec![1, 2, 3]]
        );
    }

    #[test]
    fn all_tie_column() {
        let m = grid(&[&[5, 5], &[5, 5]]);
        for dir in [Direction::Ascending, Direction::Descending] {
            assert_eq!(weak_order(&m, dir).rows(), vec![vec![1, 1], vec![1, 1]]);
        }
    }

    #[test]
    fn size_mismatch() {
        let a = grid(&[&[0]]);
        let b = grid(&[&[0, 1], &[1, 0]]);
        assert!(same_weak_order(&a, &b, Direction::Ascending).is_err());
    }

    #[test]
    fn column_swap_breaks_equivalence() {
        let a = grid(&[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]]);
        let b = grid(&[&[0, 2, 1], &[2, 0, 3], &[1, 3, 0]]);
        assert!(!same_weak_order(&a, &b, Direction::Ascending).unwrap());
        let c = grid(&[&[0, 1], &[1, 0]]);
        let d = grid(&[&[0, 1], &[2, 0]]);
        assert!(same_weak_order(&c, &d, Direction::Ascending).unwrap());
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::{format_rat, Rat};

/// Dense `n × n` grid of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Rat>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != n {
                return Err(Error::NotSquare {
                    row,
                    found: values.len(),
                    expected: n,
                });
            }
            entries.extend(values);
        }
        Ok(Self { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        assert!(n > 0, "matrix size must be positive");
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[Rat] {
        &self.entries[row * self.n..(row + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rat]> {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = &Rat> + '_ {
        (0..self.n).map(move |row| self.get(row, col))
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        self.rows().map(<[Rat]>::to_vec).collect()
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(format_rat).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

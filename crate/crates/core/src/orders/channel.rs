use num_traits::{One, Signed, Zero};

use super::matrix::SquareMatrix;
use crate::error::{Error, Result};
use crate::rational::{format_rat, Rat};

/// Square row-stochastic matrix; entry `(i, j)` is the probability that `j`
/// is received when `i` is sent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Channel(SquareMatrix);

impl Channel {
    pub fn new(matrix: SquareMatrix) -> Result<Self> {
        let n = matrix.n();
        for row in 0..n {
            let mut sum = Rat::zero();
            for col in 0..n {
                let p = matrix.get(row, col);
                if p.is_negative() || *p > Rat::one() {
                    return Err(Error::ProbabilityOutOfRange {
                        row,
                        col,
                        value: format_rat(p),
                    });
                }
                sum += p;
            }
            if !sum.is_one() {
                return Err(Error::RowSum {
                    row,
                    sum: format_rat(&sum),
                });
            }
        }
        Ok(Self(matrix))
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        Self::new(SquareMatrix::from_rows(rows)?)
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn prob(&self, sent: usize, received: usize) -> &Rat {
        self.0.get(sent, received)
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn accepts_stochastic_rows() {
        let p = Channel::from_rows(vec![
            vec![rat(5, 8), rat(1, 8), rat(2, 8)],
            vec![rat(2, 8), rat(5, 8), rat(1, 8)],
            vec![rat(1, 8), rat(2, 8), rat(5, 8)],
        ])
        .unwrap();
        assert_eq!(p.n(), 3);
        assert_eq!(*p.prob(0, 2), rat(1, 4));
        assert!(Channel::from_rows(vec![vec![int(1)]]).is_ok());
    }

    #[test]
    fn rejects_bad_row_sum() {
        let err = Channel::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 2), rat(1, 2)],
        ])
        .unwrap_err();
        assert_eq!(
            err,
            Error::RowSum {
                row: 0,
                sum: "5/6".into()
            }
        );
    }

    #[test]
    fn rejects_out_of_range() {
        let err = Channel::from_rows(vec![vec![int(2), int(-1)], vec![int(0), int(1)]]).unwrap_err();
        assert!(matches!(err, Error::ProbabilityOutOfRange { row: 0, col: 0, .. }));
    }
}

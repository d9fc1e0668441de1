use std::fmt;

use serde::Serialize;

use super::Mode;
use crate::orders::{weak_order, Channel, Direction, WeakOrderMatrix};

/// The unordered pair `{i, j}`, `i ≠ j`, standing for the variable `d(i, j)`.
/// Stored 0-indexed as `(lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairVar {
    lo: usize,
    hi: usize,
}

impl PairVar {
    pub fn new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Self { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Some(Self { lo: b, hi: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    /// Dense index in `0..n(n-1)/2`.
    pub(crate) fn index(self, n: usize) -> usize {
        self.lo * (2 * n - self.lo - 1) / 2 + (self.hi - self.lo - 1)
    }
}

impl fmt::Display for PairVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo + 1, self.hi + 1)
    }
}

/// A vertex of the constraint graph: the shared zero of every `d(i, i)`, or
/// an off-diagonal pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Zero,
    Pair(PairVar),
}

impl Node {
    /// The variable holding `d(row, col)`.
    pub fn at(row: usize, col: usize) -> Self {
        PairVar::new(row, col).map_or(Node::Zero, Node::Pair)
    }

    pub(crate) fn index(self, n: usize) -> usize {
        match self {
            Node::Zero => 0,
            Node::Pair(p) => 1 + p.index(n),
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Zero => f.write_str("0"),
            Node::Pair(p) => p.fmt(f),
        }
    }
}

/// Relation asserted by one column comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "=")]
    Equal,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::Equal => "=",
        })
    }
}

/// `d(rows.0, column) rel d(rows.1, column)`, read off the channel's
/// decreasing rank matrix. `from` and `to` are the corresponding nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: Node,
    pub to: Node,
    pub column: usize,
    pub rows: (usize, usize),
}

impl Edge {
    fn new(column: usize, i: usize, k: usize) -> Self {
        Self {
            from: Node::at(i, column),
            to: Node::at(k, column),
            column,
            rows: (i, k),
        }
    }

    pub(crate) fn reversed(self) -> Self {
        Self::new(self.column, self.rows.1, self.rows.0)
    }
}

/// Every equality and strict inequality the distance must satisfy to be
/// matched to a channel, plus flags for the diagonal conditions.
#[derive(Debug, Clone)]
pub struct ConstraintGraph {
    pub n: usize,
    pub mode: Mode,
    pub order: WeakOrderMatrix,
    pub equalities: Vec<Edge>,
    /// `from < to`
    pub stricts: Vec<Edge>,
    /// Every diagonal entry ranks first in its column.
    pub diagonal_ok: bool,
    /// Rank 1 appears only on the diagonal.
    pub diagonal_strict: bool,
}

impl ConstraintGraph {
    /// Strict edges between two off-diagonal pairs.
    pub fn pair_stricts(&self) -> impl Iterator<Item = (PairVar, PairVar)> + '_ {
        self.stricts.iter().filter_map(|e| match (e.from, e.to) {
            (Node::Pair(a), Node::Pair(b)) => Some((a, b)),
            _ => None,
        })
    }

    pub fn pair_equalities(&self) -> impl Iterator<Item = (PairVar, PairVar)> + '_ {
        self.equalities.iter().filter_map(|e| match (e.from, e.to) {
            (Node::Pair(a), Node::Pair(b)) => Some((a, b)),
            _ => None,
        })
    }
}

/// Reads the constraint system off the decreasing rank matrix of `channel`.
///
/// In column `j`, a higher probability must mean a smaller distance: equal
/// ranks give `d(i,j) = d(k,j)`, a smaller rank gives `d(i,j) < d(k,j)`.
/// Comparisons against the diagonal entry produce edges to [`Node::Zero`].
pub fn extract_constraints(channel: &Channel, mode: Mode) -> ConstraintGraph {
    let n = channel.n();
    let order = weak_order(channel.matrix(), Direction::Descending);
    let mut equalities = Vec::new();
    let mut stricts = Vec::new();
    for col in 0..n {
        for i in 0..n {
            for k in 0..n {
                if i == k {
                    continue;
                }
                let (ri, rk) = (order.rank(i, col), order.rank(k, col));
                if ri == rk && i < k {
                    equalities.push(Edge::new(col, i, k));
                } else if ri < rk {
                    stricts.push(Edge::new(col, i, k));
                }
            }
        }
    }
    let diagonal_ok = (0..n).all(|i| order.rank(i, i) == 1);
    let diagonal_strict =
        diagonal_ok && (0..n).all(|j| (0..n).all(|i| i == j || order.rank(i, j) > 1));
    ConstraintGraph {
        n,
        mode,
        order,
        equalities,
        stricts,
        diagonal_ok,
        diagonal_strict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn p(a: usize, b: usize) -> PairVar {
        PairVar::new(a - 1, b - 1).unwrap()
    }

    fn sorted_stricts(g: &ConstraintGraph) -> Vec<(PairVar, PairVar)> {
        let mut s: Vec<_> = g.pair_stricts().collect();
        s.sort();
        s
    }

    #[test]
    fn pair_indexing_is_dense() {
        let n = 5;
        let mut seen: Vec<usize> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| PairVar::new(i, j).unwrap().index(n)))
            .collect();
        seen.sort();
        assert_eq!(seen, (0..10).collect::<Vec<_>>());
        assert_eq!(PairVar::new(2, 2), None);
        assert_eq!(PairVar::new(3, 1), PairVar::new(1, 3));
    }

    #[test]
    fn cyclic_channel_chains() {
        let ch = Channel::from_rows(vec![
            vec![rat(5, 8), rat(1, 8), rat(2, 8)],
            vec![rat(2, 8), rat(5, 8), rat(1, 8)],
            vec![rat(1, 8), rat(2, 8), rat(5, 8)],
        ])
        .unwrap();
        let g = extract_constraints(&ch, Mode::Distance);
        let mut expected = vec![(p(1, 2), p(1, 3)), (p(2, 3), p(1, 2)), (p(1, 3), p(2, 3))];
        expected.sort();
        assert_eq!(sorted_stricts(&g), expected);
        assert_eq!(g.pair_equalities().count(), 0);
        assert!(g.diagonal_ok && g.diagonal_strict);
    }

    #[test]
    fn metrizable_channel_chains() {
        let ch = Channel::from_rows(vec![
            vec![rat(5, 8), rat(3, 16), rat(3, 16)],
            vec![rat(1, 4), rat(1, 2), rat(1, 4)],
            vec![rat(1, 8), rat(2, 8), rat(5, 8)],
        ])
        .unwrap();
        let g = extract_constraints(&ch, Mode::Distance);
        let mut expected = vec![(p(1, 2), p(1, 3)), (p(2, 3), p(1, 2)), (p(2, 3), p(1, 3))];
        expected.sort();
        assert_eq!(sorted_stricts(&g), expected);
    }

    #[test]
    fn identity_channel_ties_everything() {
        let ch = Channel::from_rows(
            (0..3)
                .map(|i| (0..3).map(|j| int(i64::from(i == j))).collect())
                .collect(),
        )
        .unwrap();
        let g = extract_constraints(&ch, Mode::Metric);
        assert_eq!(g.pair_stricts().count(), 0);
        let eqs: Vec<_> = g.pair_equalities().collect();
        assert_eq!(eqs.len(), 3);
        assert!(g.diagonal_strict);
        // zero sits strictly below each pair in both of its columns
        assert_eq!(g.stricts.iter().filter(|e| e.from == Node::Zero).count(), 6);
    }
}

use num_traits::{One, ToPrimitive};

use super::cone::OrderCone;
use super::simplex::{minimize, Row, Sense};
use crate::rational::{int, Rat};
use crate::subsets::sym_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    /// `a·x = b`
    Equal,
    /// `a·x ≥ b`
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRow {
    pub coeffs: Vec<i64>,
    pub kind: RowKind,
    pub rhs: i64,
}

impl LinearRow {
    pub fn holds(&self, x: &[u64]) -> bool {
        let lhs: i64 = self.coeffs.iter().zip(x).map(|(&a, &v)| a * v as i64).sum();
        match self.kind {
            RowKind::Equal => lhs == self.rhs,
            RowKind::AtLeast => lhs >= self.rhs,
        }
    }
}

/// `min Σx` over nonnegative integers `x` with `Tx` ordered by the given classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpInstance {
    n: usize,
    t: Vec<Vec<i64>>,
    rows: Vec<LinearRow>,
}

impl IlpInstance {
    pub fn from_cone(cone: &OrderCone) -> Self {
        Self::from_classes(cone.n(), cone.classes())
    }

    /// Equal `Tx` within a class, a gap of at least 1 between consecutive
    /// classes, and `Tx ≥ 1` on the smallest class. Masks outside every
    /// class are unconstrained.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Self {
        let t = sym_matrix(n);
        let diff = |hi: usize, lo: usize| -> Vec<i64> {
            t[hi - 1].iter().zip(&t[lo - 1]).map(|(a, b)| a - b).collect()
        };
        let mut rows = Vec::new();
        for class in classes {
            for &m in &class[1..] {
                rows.push(LinearRow {
                    coeffs: diff(m, class[0]),
                    kind: RowKind::Equal,
                    rhs: 0,
                });
            }
        }
        for w in classes.windows(2) {
            rows.push(LinearRow {
                coeffs: diff(w[1][0], w[0][0]),
                kind: RowKind::AtLeast,
                rhs: 1,
            });
        }
        if let Some(first) = classes.first() {
            rows.push(LinearRow {
                coeffs: t[first[0] - 1].clone(),
                kind: RowKind::AtLeast,
                rhs: 1,
            });
        }
        Self { n, t, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> usize {
        self.t.len()
    }

    pub fn t_matrix(&self) -> &[Vec<i64>] {
        &self.t
    }

    pub fn rows(&self) -> &[LinearRow] {
        &self.rows
    }

    pub fn is_feasible(&self, x: &[u64]) -> bool {
        self.rows.iter().all(|r| r.holds(x))
    }

    /// LP lower bound on `Σ x[fixed..]` with `x[..fixed]` pinned; `None` if infeasible.
    fn relaxation(&self, x: &[u64], fixed: usize) -> Option<Rat> {
        let free = self.vars() - fixed;
        let rows: Vec<Row> = self
            .rows
            .iter()
            .map(|r| {
                let pinned: i64 = r.coeffs[..fixed].iter().zip(x).map(|(&a, &v)| a * v as i64).sum();
                Row {
                    coeffs: r.coeffs[fixed..].iter().map(|&a| int(a)).collect(),
                    sense: match r.kind {
                        RowKind::Equal => Sense::Eq,
                        RowKind::AtLeast => Sense::Ge,
                    },
                    rhs: int(r.rhs - pinned),
                }
            })
            .collect();
        minimize(&vec![Rat::one(); free], &rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpSolution {
    pub x: Vec<u64>,
    pub value: u64,
    pub nodes_explored: u64,
}

struct BranchAndBound<'a> {
    ilp: &'a IlpInstance,
    x: Vec<u64>,
    best: u64,
    best_x: Vec<u64>,
    found: bool,
    nodes: u64,
}

impl BranchAndBound<'_> {
    fn dfs(&mut self, pos: usize, sum: u64) {
        if pos == self.x.len() {
            if self.ilp.is_feasible(&self.x) && (sum < self.best || !self.found) {
                self.best = sum;
                self.best_x.clone_from(&self.x);
                self.found = true;
            }
            return;
        }
        let mut v = 0;
        while sum + v <= self.best {
            self.x[pos] = v;
            self.nodes += 1;
            if let Some(bound) = self.ilp.relaxation(&self.x, pos + 1) {
                let total = (bound + int((sum + v) as i64)).ceil().to_integer();
                if total.to_u64().is_some_and(|t| t <= self.best) {
                    self.dfs(pos + 1, sum + v);
                }
            }
            v += 1;
        }
        self.x[pos] = 0;
    }
}

/// Exact optimum, lexicographically smallest among optima (ascending-mask
/// order). `incumbent` must be feasible; it seeds the upper bound.
pub fn solve_ilp(ilp: &IlpInstance, incumbent: &[u64]) -> IlpSolution {
    debug_assert!(ilp.is_feasible(incumbent));
    let mut bb = BranchAndBound {
        ilp,
        x: vec![0; ilp.vars()],
        best: incumbent.iter().sum(),
        best_x: incumbent.to_vec(),
        found: false,
        nodes: 0,
    };
    bb.dfs(0, 0);
    IlpSolution {
        value: bb.best,
        x: bb.best_x,
        nodes_explored: bb.nodes,
    }
}


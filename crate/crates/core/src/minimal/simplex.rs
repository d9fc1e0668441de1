//! Dense two-phase simplex over exact rationals, Bland's rule throughout.

use num_traits::{One, Signed, Zero};

use crate::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Sense {
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub(crate) struct Row {
    pub coeffs: Vec<Rat>,
    pub sense: Sense,
    pub rhs: Rat,
}

struct Tableau {
    a: Vec<Vec<Rat>>,
    b: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.a[r][c].clone();
        for v in self.a[r].iter_mut() {
            *v /= &p;
        }
        self.b[r] /= &p;
        let (pivot_row, pivot_b) = (self.a[r].clone(), self.b[r].clone());
        for i in 0..self.a.len() {
            if i == r || self.a[i][c].is_zero() {
                continue;
            }
            let f = self.a[i][c].clone();
            for (v, pv) in self.a[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.b[i] -= &f * &pivot_b;
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost` over columns accepted by `allowed`. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Rat], allowed: impl Fn(usize) -> bool) -> bool {
        let cols = cost.len();
        loop {
            let entering = (0..cols).filter(|&j| allowed(j)).find(|&j| {
                let mut z = cost[j].clone();
                for (i, &bj) in self.basis.iter().enumerate() {
                    if !self.a[i][j].is_zero() {
                        z -= &cost[bj] * &self.a[i][j];
                    }
                }
                z.is_negative()
            });
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.a.len() {
                if self.a[i][c].is_positive() {
                    let ratio = &self.b[i] / &self.a[i][c];
                    let better = match &leave {
                        None => true,
                        Some((r, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r]),
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, c);
        }
    }

    fn value(&self, cost: &[Rat]) -> Rat {
        self.basis
            .iter()
            .zip(&self.b)
            .map(|(&j, b)| &cost[j] * b)
            .fold(Rat::zero(), |acc, v| acc + v)
    }
}

/// `min c·y` subject to `rows`, `y ≥ 0`; `None` if infeasible.
///
/// The objective must be bounded below on the feasible set.
pub(crate) fn minimize(c: &[Rat], rows: &[Row]) -> Option<Rat> {
    let vars = c.len();
    if vars == 0 {
        let ok = rows.iter().all(|r| match r.sense {
            Sense::Ge => r.rhs <= Rat::zero(),
            Sense::Eq => r.rhs.is_zero(),
        });
        return ok.then(Rat::zero);
    }
    let m = rows.len();
    let slacks = rows.iter().filter(|r| r.sense == Sense::Ge).count();
    let art0 = vars + slacks;
    let cols = art0 + m;
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    let mut slack = vars;
    for (i, row) in rows.iter().enumerate() {
        let mut line = vec![Rat::zero(); cols];
        line[..vars].clone_from_slice(&row.coeffs);
        if row.sense == Sense::Ge {
            line[slack] = -Rat::one();
            slack += 1;
        }
        let mut rhs = row.rhs.clone();
        if rhs.is_negative() {
            for v in line.iter_mut() {
                *v = -v.clone();
            }
            rhs = -rhs;
        }
        line[art0 + i] = Rat::one();
        a.push(line);
        b.push(rhs);
    }
    let mut t = Tableau {
        a,
        b,
        basis: (art0..cols).collect(),
    };
    let phase1: Vec<Rat> = (0..cols)
        .map(|j| if j >= art0 { Rat::one() } else { Rat::zero() })
        .collect();
    t.optimize(&phase1, |_| true);
    if !t.value(&phase1).is_zero() {
        return None;
    }
    let mut r = 0;
    while r < t.a.len() {
        if t.basis[r] >= art0 {
            match (0..art0).find(|&j| !t.a[r][j].is_zero()) {
                Some(c) => t.pivot(r, c),
                None => {
                    t.a.remove(r);
                    t.b.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    let mut phase2 = c.to_vec();
    phase2.resize(cols, Rat::zero());
    let bounded = t.optimize(&phase2, |j| j < art0);
    assert!(bounded, "objective unbounded below");
    Some(t.value(&phase2))
}

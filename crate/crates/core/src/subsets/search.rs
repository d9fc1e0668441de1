//! Bounded exhaustive search for realizations of partially specified set
//! patterns.

use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::family::{realize, SetFamily};
use super::vector::SubsetVector;
use crate::error::{Error, Result};
use crate::rational::{int, is_integer, Rat};

/// Largest `n` the exhaustive search accepts (31 minterm variables).
pub const SEARCH_MAX_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PatternKind {
    /// `|∩_{i∈J} A_i|`
    Cap,
    /// `|△_{i∈J} A_i|`
    Sym,
}

impl PatternKind {
    /// Coefficient of minterm `minterm` in the functional at `mask` (always 0 or 1).
    pub fn coefficient(self, mask: usize, minterm: usize) -> bool {
        match self {
            PatternKind::Cap => minterm & mask == mask,
            PatternKind::Sym => (minterm & mask).count_ones() % 2 == 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternConstraint {
    pub mask: usize,
    pub kind: PatternKind,
    pub value: Rat,
}

impl PatternConstraint {
    pub fn new(mask: usize, kind: PatternKind, value: Rat) -> Self {
        Self { mask, kind, value }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub minterms: SubsetVector,
    pub family: SetFamily,
}

struct Linear {
    target: u64,
    /// variable positions with coefficient 1
    support: Vec<bool>,
    /// suffix_cap[p] = Σ_{q ≥ p, support[q]} ub[q]
    suffix_cap: Vec<u64>,
}

type RawPredicate<'a> = Option<&'a dyn Fn(&[u64]) -> bool>;

struct Search<'a> {
    ub: Vec<u64>,
    rows: Vec<Linear>,
    predicate: RawPredicate<'a>,
    x: Vec<u64>,
    partial: Vec<u64>,
}

impl Search<'_> {
    fn dfs(&mut self, pos: usize) -> bool {
        if pos == self.x.len() {
            return self.predicate.is_none_or(|p| p(&self.x));
        }
        let mut hi = self.ub[pos];
        for (row, partial) in self.rows.iter().zip(&self.partial) {
            if row.support[pos] {
                hi = hi.min(row.target - partial);
            }
        }
        for value in 0..=hi {
            let feasible = self.rows.iter().zip(&self.partial).all(|(row, partial)| {
                let now = partial + if row.support[pos] { value } else { 0 };
                now + row.suffix_cap[pos + 1] >= row.target
            });
            if !feasible {
                continue;
            }
            self.x[pos] = value;
            for (row, partial) in self.rows.iter().zip(self.partial.iter_mut()) {
                if row.support[pos] {
                    *partial += value;
                }
            }
            if self.dfs(pos + 1) {
                return true;
            }
            for (row, partial) in self.rows.iter().zip(self.partial.iter_mut()) {
                if row.support[pos] {
                    *partial -= value;
                }
            }
        }
        self.x[pos] = 0;
        false
    }
}

/// Searches `x ∈ {0..bound}^{2^n-1}` in lexicographic (ascending mask)
/// order for a nonnegative integer minterm vector meeting every constraint
/// and the optional predicate; returns the first hit.
///
/// A variable's bound is `min(bound, value of every singleton constraint on
/// a member of its mask)`: a singleton `Cap` or `Sym` value is `|A_i|`,
/// which caps every minterm inside `A_i`. A variable left without any bound
/// is an error.
pub fn search_realization(
    n: usize,
    constraints: &[PatternConstraint],
    predicate: Option<&dyn Fn(&SubsetVector) -> bool>,
    bound: Option<u64>,
) -> Result<Option<Realization>> {
    if n == 0 || n > SEARCH_MAX_N {
        return Err(Error::Guard {
            what: "search n",
            value: n,
            limit: SEARCH_MAX_N,
        });
    }
    let vars = (1usize << n) - 1;
    for c in constraints {
        if c.mask == 0 || c.mask > vars {
            return Err(Error::IndexOutOfRange {
                index: c.mask,
                size: vars,
            });
        }
    }
    // A non-integral or negative target has no integer solution.
    if constraints
        .iter()
        .any(|c| !is_integer(&c.value) || c.value.is_negative())
    {
        return Ok(None);
    }
    let target = |c: &PatternConstraint| c.value.to_integer().to_u64().unwrap_or(u64::MAX);

    let mut ub = Vec::with_capacity(vars);
    for minterm in 1..=vars {
        let singleton = constraints
            .iter()
            .filter(|c| c.mask.count_ones() == 1 && c.mask & minterm != 0)
            .map(target)
            .min();
        let b = match (bound, singleton) {
            (Some(b), Some(s)) => b.min(s),
            (Some(b), None) => b,
            (None, Some(s)) => s,
            (None, None) => return Err(Error::Unbounded { mask: minterm }),
        };
        ub.push(b);
    }

    let rows: Vec<Linear> = constraints
        .iter()
        .map(|c| {
            let support: Vec<bool> = (1..=vars).map(|m| c.kind.coefficient(c.mask, m)).collect();
            let mut suffix_cap = vec![0u64; vars + 1];
            for p in (0..vars).rev() {
                suffix_cap[p] = suffix_cap[p + 1].saturating_add(if support[p] { ub[p] } else { 0 });
            }
            Linear {
                target: target(c),
                support,
                suffix_cap,
            }
        })
        .collect();

    let wrapped;
    let pred: RawPredicate = match predicate {
        Some(p) => {
            wrapped = move |x: &[u64]| p(&to_vector(n, x));
            Some(&wrapped)
        }
        None => None,
    };
    let mut search = Search {
        ub,
        partial: vec![0; rows.len()],
        rows,
        predicate: pred,
        x: vec![0; vars],
    };
    if !search.dfs(0) {
        return Ok(None);
    }
    let minterms = to_vector(n, &search.x);
    let family = realize(&minterms)?;
    Ok(Some(Realization { minterms, family }))
}

fn to_vector(n: usize, x: &[u64]) -> SubsetVector {
    SubsetVector::new(n, x.iter().map(|&v| int(v as i64)).collect()).expect("length")
}

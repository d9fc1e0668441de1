//! Intersection (`Cap`) and symmetric-difference transforms of minterm
//! vectors, and their exact inverses.
//!
//! Both transforms run as in-place sum-over-subsets passes over a full
//! `2^n` array (index 0 is the empty set and stays 0), O(n·2^n) each.

use num_traits::Zero;

use super::vector::SubsetVector;
use crate::rational::{pow2, Rat};

fn superset_sums(a: &mut [Rat]) {
    let mut bit = 1;
    while bit < a.len() {
        for mask in 0..a.len() {
            if mask & bit == 0 {
                let add = a[mask | bit].clone();
                a[mask] += add;
            }
        }
        bit <<= 1;
    }
}

fn inverse_superset_sums(a: &mut [Rat]) {
    let mut bit = 1;
    while bit < a.len() {
        for mask in 0..a.len() {
            if mask & bit == 0 {
                let sub = a[mask | bit].clone();
                a[mask] -= sub;
            }
        }
        bit <<= 1;
    }
}

fn subset_sums(a: &mut [Rat]) {
    let mut bit = 1;
    while bit < a.len() {
        for mask in 0..a.len() {
            if mask & bit != 0 {
                let add = a[mask ^ bit].clone();
                a[mask] += add;
            }
        }
        bit <<= 1;
    }
}

fn inverse_subset_sums(a: &mut [Rat]) {
    let mut bit = 1;
    while bit < a.len() {
        for mask in 0..a.len() {
            if mask & bit != 0 {
                let sub = a[mask ^ bit].clone();
                a[mask] -= sub;
            }
        }
        bit <<= 1;
    }
}

/// `(-2)^(|K| - 1)` for a nonempty mask.
fn alternating_weight(mask: usize) -> Rat {
    let size = mask.count_ones() as usize;
    let w = pow2(size - 1);
    if size.is_multiple_of(2) {
        -w
    } else {
        w
    }
}

/// `Cap_J(x) = Σ_{I ⊇ J} x_I`, the size of the `J`-wise intersection.
pub fn cap_transform(x: &SubsetVector) -> SubsetVector {
    let mut a = x.to_full();
    superset_sums(&mut a);
    a[0] = Rat::zero();
    SubsetVector::from_full(x.n(), a)
}

/// The unique `x` with `cap_transform(x) = c`, by Möbius inversion over supersets.
pub fn solve_cap(c: &SubsetVector) -> SubsetVector {
    let mut a = c.to_full();
    inverse_superset_sums(&mut a);
    a[0] = Rat::zero();
    SubsetVector::from_full(c.n(), a)
}

/// `△_J(x) = Σ_{∅≠K⊆J} (-2)^{|K|-1} Cap_K(x)`, the size of the `J`-wise
/// symmetric difference.
pub fn sym_transform(x: &SubsetVector) -> SubsetVector {
    let mut a = cap_transform(x).to_full();
    for (mask, v) in a.iter_mut().enumerate().skip(1) {
        *v *= alternating_weight(mask);
    }
    subset_sums(&mut a);
    SubsetVector::from_full(x.n(), a)
}

/// Recovers the `Cap` values from symmetric-difference values.
///
/// Each `Cap_J` is `△_J` minus the contributions of the proper nonempty
/// subsets of `J`, divided by `(-2)^{|J|-1}`; the subset Möbius pass does
/// the subtraction for all `J` at once.
pub fn cap_from_sym(delta: &SubsetVector) -> SubsetVector {
    let mut a = delta.to_full();
    inverse_subset_sums(&mut a);
    for (mask, v) in a.iter_mut().enumerate().skip(1) {
        *v /= alternating_weight(mask);
    }
    SubsetVector::from_full(delta.n(), a)
}

/// The unique `x` with `sym_transform(x) = delta`.
pub fn solve_sym(delta: &SubsetVector) -> SubsetVector {
    solve_cap(&cap_from_sym(delta))
}

/// The 0/1 matrix of [`sym_transform`] in ascending mask order:
/// row `J`, column `I` is 1 iff `|I ∩ J|` is odd.
pub fn sym_matrix(n: usize) -> Vec<Vec<i64>> {
    (1..1usize << n)
        .map(|row| {
            (1..1usize << n)
                .map(|col| i64::from((row & col).count_ones() % 2))
                .collect()
        })
        .collect()
}

/// The 0/1 matrix of [`cap_transform`]: row `J`, column `I` is 1 iff `J ⊆ I`.
pub fn cap_matrix(n: usize) -> Vec<Vec<i64>> {
    (1..1usize << n)
        .map(|row| (1..1usize << n).map(|col| i64::from(row & col == row)).collect())
        .collect()
}

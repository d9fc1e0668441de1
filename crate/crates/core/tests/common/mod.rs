#![allow(dead_code)]

use chanmetric::rational::{int, rat};
use chanmetric::{Channel, DistanceMatrix, Rat, SquareMatrix};
use proptest::prelude::*;

/// Symmetric distance from upper-triangle entries, row-major.
pub fn distance_from_upper(n: usize, upper: &[u8]) -> DistanceMatrix {
    let mut it = upper.iter();
    let mut values = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = *it.next().expect("enough entries") as i64;
            values[i][j] = v;
            values[j][i] = v;
        }
    }
    DistanceMatrix::from_rows(values.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
        .unwrap()
}

pub fn distance_strategy(ns: std::ops::RangeInclusive<usize>, values: std::ops::Range<u8>) -> impl Strategy<Value = DistanceMatrix> {
    ns.prop_flat_map(move |n| {
        prop::collection::vec(values.clone(), n * (n - 1) / 2).prop_map(move |u| distance_from_upper(n, &u))
    })
}

/// Row-stochastic channel from nonnegative integer weights per row.
pub fn channel_from_weights(n: usize, weights: &[u8]) -> Channel {
    let rows = weights
        .chunks(n)
        .map(|row| {
            let total: i64 = row.iter().map(|&w| w as i64).sum();
            row.iter().map(|&w| rat(w as i64, total)).collect()
        })
        .collect();
    Channel::from_rows(rows).unwrap()
}

pub fn channel_strategy(ns: std::ops::RangeInclusive<usize>, values: std::ops::Range<u8>) -> impl Strategy<Value = Channel> {
    ns.prop_flat_map(move |n| {
        prop::collection::vec(values.clone(), n * n)
            .prop_filter("rows need mass", move |w| w.chunks(n).all(|r| r.iter().any(|&v| v > 0)))
            .prop_map(move |w| channel_from_weights(n, &w))
    })
}

/// A channel whose columns rank senders by decreasing `d`: off-diagonal
/// mass shrinks with distance and the diagonal takes the rest.
pub fn channel_from_distance(d: &DistanceMatrix) -> Channel {
    let n = d.n();
    let max = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| d.get(i, j).clone())
        .max()
        .unwrap_or_else(|| int(0));
    let scale = int(n as i64) * (max.clone() + int(2));
    let off = |i: usize, j: usize| (max.clone() + int(1) - d.get(i, j)) / &scale;
    let rows = (0..n)
        .map(|i| {
            let rest: Rat = (0..n).filter(|&j| j != i).map(|j| off(i, j)).sum();
            (0..n)
                .map(|j| if i == j { int(1) - &rest } else { off(i, j) })
                .collect()
        })
        .collect();
    Channel::from_rows(rows).unwrap()
}

/// Column-wise agreement of two matrices by sign comparisons, no ranking.
/// `flip` compares the first matrix in reverse.
pub fn columns_agree(a: &SquareMatrix, b: &SquareMatrix, flip: bool) -> bool {
    let n = a.n();
    (0..n).all(|j| {
        (0..n).all(|i| {
            (0..n).all(|k| {
                let x = a.get(i, j).cmp(a.get(k, j));
                let x = if flip { x.reverse() } else { x };
                x == b.get(i, j).cmp(b.get(k, j))
            })
        })
    })
}


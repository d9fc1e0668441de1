use num_traits::Zero;

use super::linear::AffineScale;
use super::points::PointEmbedding;
use super::word::CubeWord;
use crate::error::{Error, Result};
use crate::orders::DistanceMatrix;
use crate::rational::{int, is_integer, Rat};
use crate::subsets::{search_realization, PatternConstraint, PatternKind};

pub const EXACT_MAX_N: usize = 5;

/// Decides whether `d` embeds isometrically (`m = 1`, `k = 0`) into some
/// Hamming cube. Point `n` goes to the zero word and point `i` to the
/// indicator of a set `A_i` with `|A_i| = d(i,n)` and
/// `|A_i ∩ A_j| = (d(i,n) + d(j,n) - d(i,j)) / 2`.
pub fn exact_embed(d: &DistanceMatrix) -> Result<Option<PointEmbedding>> {
    let n = d.n();
    if n > EXACT_MAX_N {
        return Err(Error::Guard {
            what: "exact embedding points",
            value: n,
            limit: EXACT_MAX_N,
        });
    }
    d.require_semimetric()?;
    for i in 0..n {
        for j in 0..n {
            if !is_integer(d.get(i, j)) {
                return Err(Error::NonIntegerDistance { row: i, col: j });
            }
        }
    }
    let scale = Some(AffineScale::new(int(1), Rat::zero()));
    if n == 1 {
        return PointEmbedding::new(vec![CubeWord::zero(0)], scale).map(Some);
    }
    let last = n - 1;
    let mut constraints = Vec::new();
    for i in 0..last {
        constraints.push(PatternConstraint::new(1 << i, PatternKind::Cap, d.get(i, last).clone()));
        for j in i + 1..last {
            let c = (d.get(i, last) + d.get(j, last) - d.get(i, j)) / int(2);
            if !is_integer(&c) {
                return Ok(None);
            }
            constraints.push(PatternConstraint::new(1 << i | 1 << j, PatternKind::Cap, c));
        }
    }
    let Some(found) = search_realization(last, &constraints, None, None)? else {
        return Ok(None);
    };
    let membership = found.family.membership();
    let mut images: Vec<CubeWord> = (0..last)
        .map(|i| CubeWord::from_bits(membership.iter().map(|&m| m >> i & 1 == 1)))
        .collect();
    images.push(CubeWord::zero(membership.len()));
    PointEmbedding::new(images, scale).map(Some)
}

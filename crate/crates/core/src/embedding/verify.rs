use num_traits::{Signed, Zero};

use super::linear::{AffineScale, LinearEmbedding};
use super::points::PointEmbedding;
use crate::error::{Error, Result};
use crate::orders::{dense_ranks, same_weak_order, DistanceMatrix, Direction, WeightVector};
use crate::rational::{int, Rat};
use crate::subsets::subset_label;

/// An item whose recomputed value misses the affine law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// `{1,3}` for a vector, `(1,2)` for a pair of points.
    pub item: String,
    pub target: Rat,
    pub expected: Rat,
    pub actual: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// Affine law holds with `m > 0`, `k ≥ 0` (vacuously with nothing to
    /// check), and the map is injective.
    pub ok: bool,
    /// The law checked against: declared, or solved from the data.
    pub scale: Option<AffineScale>,
    pub violations: Vec<Violation>,
    pub weak_order_preserved: bool,
    pub injective: bool,
}

struct Item {
    label: String,
    target: Rat,
    actual: usize,
}

fn solve_scale(items: &[Item]) -> Option<AffineScale> {
    let low = items.iter().min_by(|a, b| a.target.cmp(&b.target))?;
    let high = items
        .iter()
        .filter(|it| it.target > low.target)
        .min_by(|a, b| a.target.cmp(&b.target));
    let a0 = int(low.actual as i64);
    match high {
        Some(high) => {
            let m = (int(high.actual as i64) - &a0) / (&high.target - &low.target);
            let k = a0 - &m * &low.target;
            Some(AffineScale::new(m, k))
        }
        None if low.target.is_positive() => Some(AffineScale::new(a0 / &low.target, Rat::zero())),
        None => None,
    }
}

fn check(items: &[Item], declared: Option<&AffineScale>, weak_order_preserved: bool, injective: bool) -> EmbeddingReport {
    let scale = declared.cloned().or_else(|| solve_scale(items));
    let violations: Vec<Violation> = match &scale {
        Some(s) => items
            .iter()
            .filter_map(|it| {
                let expected = s.apply(&it.target);
                (expected != int(it.actual as i64)).then(|| Violation {
                    item: it.label.clone(),
                    target: it.target.clone(),
                    expected,
                    actual: it.actual,
                })
            })
            .collect(),
        None => Vec::new(),
    };
    let lawful = match &scale {
        Some(s) => s.m.is_positive() && !s.k.is_negative(),
        None => items.is_empty(),
    };
    EmbeddingReport {
        ok: lawful && violations.is_empty() && injective,
        scale,
        violations,
        weak_order_preserved,
        injective,
    }
}

/// Recomputes `|f(v)|` for every nonzero `v` and checks it against `weight`.
pub fn verify_linear(
    e: &LinearEmbedding,
    weight: &WeightVector,
    declared: Option<&AffineScale>,
) -> Result<EmbeddingReport> {
    if e.n() != weight.n() {
        return Err(Error::SizeMismatch {
            left: e.n(),
            right: weight.n(),
        });
    }
    let items: Vec<Item> = (1..1usize << e.n())
        .map(|mask| Item {
            label: subset_label(mask),
            target: weight.at(mask).clone(),
            actual: e.image(mask).weight(),
        })
        .collect();
    let zero = Rat::zero();
    let targets = std::iter::once(&zero).chain(items.iter().map(|it| &it.target));
    let actual: Vec<Rat> = std::iter::once(0)
        .chain(items.iter().map(|it| it.actual))
        .map(|a| int(a as i64))
        .collect();
    let preserved = dense_ranks(targets, Direction::Ascending) == dense_ranks(&actual, Direction::Ascending);
    let injective = items.iter().all(|it| it.actual > 0);
    Ok(check(&items, declared, preserved, injective))
}

/// Recomputes pairwise image distances and checks them against `d`.
pub fn verify_points(
    e: &PointEmbedding,
    d: &DistanceMatrix,
    declared: Option<&AffineScale>,
) -> Result<EmbeddingReport> {
    if e.n() != d.n() {
        return Err(Error::SizeMismatch {
            left: e.n(),
            right: d.n(),
        });
    }
    let induced = e.induced_distance();
    let mut items = Vec::new();
    for i in 0..d.n() {
        for j in i + 1..d.n() {
            items.push(Item {
                label: format!("({},{})", i + 1, j + 1),
                target: d.get(i, j).clone(),
                actual: e.images()[i].hamming(&e.images()[j])?,
            });
        }
    }
    let preserved = same_weak_order(d.matrix(), induced.matrix(), Direction::Ascending)?;
    let injective = items.iter().all(|it| it.actual > 0);
    Ok(check(&items, declared, preserved, injective))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{embed_weight, CubeWord};
    use crate::subsets::SubsetVector;

    fn sample_weight() -> WeightVector {
        WeightVector::new(SubsetVector::from_graded(3, [3, 2, 1, 3, 3, 2, 3].map(int).to_vec()).unwrap())
            .unwrap()
    }

    fn twelve() -> LinearEmbedding {
        let gens = ["111111110000", "000001111110", "000011000011"]
            .map(|s| s.parse::<CubeWord>().unwrap())
            .to_vec();
        LinearEmbedding::new(gens, None).unwrap()
    }

    #[test]
    fn twelve_bit_witness_passes() {
        let r = verify_linear(&twelve(), &sample_weight(), None).unwrap();
        assert!(r.ok);
        assert_eq!(r.scale, Some(AffineScale::new(int(2), int(2))));
        assert!(r.weak_order_preserved);
    }

    #[test]
    fn flipped_bit_names_a_violation() {
        let mut e = twelve();
        e.generators_mut()[2].flip(0);
        let r = verify_linear(&e, &sample_weight(), Some(&AffineScale::new(int(2), int(2)))).unwrap();
        assert!(!r.ok);
        assert!(r.violations.iter().any(|v| v.item == "{3}"));
    }

    #[test]
    fn identity_embedding() {
        let e = embed_weight(&WeightVector::hamming(3)).unwrap();
        let r = verify_linear(&e, &WeightVector::hamming(3), None).unwrap();
        assert!(r.ok);
        assert_eq!(r.scale, Some(AffineScale::new(int(1), int(0))));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(verify_linear(&twelve(), &WeightVector::hamming(2), None).is_err());
    }
}

use num_traits::One;

use super::linear::{embed_weight, AffineScale};
use super::word::CubeWord;
use crate::error::{Error, Result};
use crate::orders::{DistanceMatrix, SquareMatrix, WeightVector};
use crate::rational::{int, Rat};
use crate::subsets::{SubsetVector, MAX_SUBSET_N};

/// Images of `n` points in `H^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointEmbedding {
    len: usize,
    images: Vec<CubeWord>,
    scale: Option<AffineScale>,
}

impl PointEmbedding {
    pub fn new(images: Vec<CubeWord>, scale: Option<AffineScale>) -> Result<Self> {
        let len = images.first().ok_or(Error::Empty)?.len();
        if let Some(bad) = images.iter().find(|w| w.len() != len) {
            return Err(Error::WordLength {
                left: len,
                right: bad.len(),
            });
        }
        Ok(Self { len, images, scale })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn images(&self) -> &[CubeWord] {
        &self.images
    }

    pub fn images_mut(&mut self) -> &mut [CubeWord] {
        &mut self.images
    }

    pub fn scale(&self) -> Option<&AffineScale> {
        self.scale.as_ref()
    }

    /// Hamming distances between the images.
    pub fn induced_distance(&self) -> DistanceMatrix {
        let matrix = SquareMatrix::from_fn(self.n(), |i, j| {
            int(self.images[i].hamming(&self.images[j]).expect("same length") as i64)
        });
        DistanceMatrix::new(matrix).expect("Hamming distance is a distance")
    }
}

/// Weight over `F₂ⁿ` equal to `d(i,j)` on `e_i + e_j` and 1 elsewhere.
pub fn dummy_weight(d: &DistanceMatrix) -> Result<WeightVector> {
    let n = d.n();
    if n > MAX_SUBSET_N {
        return Err(Error::Guard {
            what: "points",
            value: n,
            limit: MAX_SUBSET_N,
        });
    }
    let values = SubsetVector::from_fn(n, |mask| {
        if mask.count_ones() == 2 {
            let i = mask.trailing_zeros() as usize;
            let j = (usize::BITS - 1 - mask.leading_zeros()) as usize;
            d.get(i, j).clone()
        } else {
            Rat::one()
        }
    });
    WeightVector::new(values)
}

/// Embeds a semimetric so that image distances are `m·d(i,j) + k`.
pub fn embed_points(d: &DistanceMatrix) -> Result<PointEmbedding> {
    d.require_semimetric()?;
    let linear = embed_weight(&dummy_weight(d)?)?;
    PointEmbedding::new(linear.generators().to_vec(), linear.scale().cloned())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{classify_distance, same_weak_order, Direction};
    use crate::rational::rat;

    fn assert_affine(e: &PointEmbedding, d: &DistanceMatrix) {
        let s = e.scale().unwrap();
        let induced = e.induced_distance();
        for i in 0..d.n() {
            for j in 0..d.n() {
                if i != j {
                    assert_eq!(induced.get(i, j), &s.apply(d.get(i, j)));
                }
            }
        }
        assert!(classify_distance(&induced).is_metric);
        assert!(same_weak_order(d.matrix(), induced.matrix(), Direction::Ascending).unwrap());
    }

    #[test]
    fn two_points() {
        let d = DistanceMatrix::from_pairs(2, |_, _| int(1)).unwrap();
        let e = embed_points(&d).unwrap();
        let s = e.scale().unwrap();
        assert_eq!(
            int(e.images()[0].hamming(&e.images()[1]).unwrap() as i64),
            &s.m + &s.k
        );
    }

    #[test]
    fn equilateral_images_are_equidistant() {
        let d = DistanceMatrix::from_pairs(3, |_, _| int(2)).unwrap();
        let e = embed_points(&d).unwrap();
        let induced = e.induced_distance();
        assert_eq!(induced.get(0, 1), induced.get(0, 2));
        assert_eq!(induced.get(0, 1), induced.get(1, 2));
        assert_affine(&e, &d);
    }

    #[test]
    fn sample_metric_keeps_pair_order() {
        let d = DistanceMatrix::from_pairs(3, |i, j| match (i, j) {
            (0, 1) => rat(3, 2),
            (0, 2) => int(2),
            _ => rat(5, 4),
        })
        .unwrap();
        let e = embed_points(&d).unwrap();
        assert_affine(&e, &d);
        let induced = e.induced_distance();
        assert!(induced.get(1, 2) < induced.get(0, 1));
        assert!(induced.get(0, 1) < induced.get(0, 2));
    }

    #[test]
    fn rejects_zero_distance() {
        let d = DistanceMatrix::from_pairs(3, |i, _| int(i as i64)).unwrap();
        assert!(embed_points(&d).is_err());
    }
}

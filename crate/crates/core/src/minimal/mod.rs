//! Minimum-dimension cube embeddings within a weak-order cone.

mod cone;
mod ilp;
mod simplex;

use num_traits::ToPrimitive;
use serde::Serialize;

pub use cone::{cone_of, OrderCone};
pub use ilp::{solve_ilp, IlpInstance, IlpSolution, LinearRow, RowKind};

use crate::embedding::{AffineScale, LinearEmbedding, PointEmbedding};
use crate::error::{Error, Result};
use crate::orders::{DistanceMatrix, WeightVector};
use crate::rational::{int, Rat};
use crate::subsets::{scale_shift, solve_sym, sym_transform, SubsetVector};

pub const MINIMIZE_MAX_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalityReport {
    pub n_star: u64,
    pub incumbent: u64,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalEmbedding {
    pub x_star: SubsetVector,
    pub embedding: LinearEmbedding,
    pub report: OptimalityReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalPointEmbedding {
    pub x_star: SubsetVector,
    pub embedding: PointEmbedding,
    pub report: OptimalityReport,
}

fn guard(n: usize, what: &'static str) -> Result<()> {
    if n == 0 || n > MINIMIZE_MAX_N {
        return Err(Error::Guard {
            what,
            value: n,
            limit: MINIMIZE_MAX_N,
        });
    }
    Ok(())
}

fn to_u64(v: &SubsetVector) -> Vec<u64> {
    v.values()
        .iter()
        .map(|x| x.to_integer().to_u64().expect("nonnegative integer"))
        .collect()
}

/// `(m, k)` with `actual = m·target + k` on every pair, if one exists.
fn fit_affine<'a>(pairs: impl IntoIterator<Item = (&'a Rat, Rat)>) -> Option<AffineScale> {
    let pairs: Vec<(&Rat, Rat)> = pairs.into_iter().collect();
    let (t0, a0) = pairs.iter().min_by(|a, b| a.0.cmp(b.0))?;
    let scale = match pairs.iter().filter(|p| p.0 > *t0).min_by(|a, b| a.0.cmp(b.0)) {
        Some((t1, a1)) => {
            let m = (a1 - a0) / (*t1 - *t0);
            AffineScale::new(m.clone(), a0 - m * *t0)
        }
        None => AffineScale::new(a0 / *t0, int(0)),
    };
    let lawful = scale.m > int(0) && scale.k >= int(0);
    (lawful && pairs.iter().all(|(t, a)| scale.apply(t) == *a)).then_some(scale)
}

/// Smallest `N` such that some linear `f: F₂ⁿ → H^N` has `|f(·)|` weak-order
/// equal to `w`.
pub fn minimize_dimension(w: &WeightVector) -> Result<OptimalEmbedding> {
    guard(w.n(), "minimize n")?;
    w.require_semimetric()?;
    let cone = cone_of(w.values())?;
    let ilp = IlpInstance::from_cone(&cone);
    let incumbent = to_u64(&scale_shift(&solve_sym(w.values())).x_prime);
    let solution = solve_ilp(&ilp, &incumbent);
    let x_star = SubsetVector::new(w.n(), solution.x.iter().map(|&v| int(v as i64)).collect())?;
    let image = sym_transform(&x_star);
    let scale = fit_affine(w.values().iter().map(|(m, t)| (t, image.get(m).clone())));
    let embedding = LinearEmbedding::from_minterms(&x_star, scale)?;
    Ok(OptimalEmbedding {
        x_star,
        embedding,
        report: OptimalityReport {
            n_star: solution.value,
            incumbent: incumbent.iter().sum(),
            nodes_explored: solution.nodes_explored,
        },
    })
}

/// Smallest `N` holding `n` points whose pairwise distances are weak-order
/// equal to `d` over pairs.
pub fn minimize_dimension_points(d: &DistanceMatrix) -> Result<OptimalPointEmbedding> {
    let n = d.n();
    guard(n, "minimize points")?;
    d.require_semimetric()?;
    let pairs = (1..1usize << n).filter(|m| m.count_ones() == 2);
    let pair_value = |m: usize| {
        let i = m.trailing_zeros() as usize;
        let j = (usize::BITS - 1 - m.leading_zeros()) as usize;
        d.get(i, j).clone()
    };
    let classes = cone::group_by_value(pairs, pair_value);
    let ilp = IlpInstance::from_classes(n, &classes);
    let dummy = crate::embedding::dummy_weight(d)?;
    let incumbent = to_u64(&scale_shift(&solve_sym(dummy.values())).x_prime);
    let solution = solve_ilp(&ilp, &incumbent);
    let x_star = SubsetVector::new(n, solution.x.iter().map(|&v| int(v as i64)).collect())?;
    let image = sym_transform(&x_star);
    let targets: Vec<(Rat, Rat)> = classes
        .iter()
        .flatten()
        .map(|&m| (pair_value(m), image.get(m).clone()))
        .collect();
    let scale = fit_affine(targets.iter().map(|(t, a)| (t, a.clone())));
    let linear = LinearEmbedding::from_minterms(&x_star, None)?;
    let embedding = PointEmbedding::new(linear.generators().to_vec(), scale)?;
    Ok(OptimalPointEmbedding {
        x_star,
        embedding,
        report: OptimalityReport {
            n_star: solution.value,
            incumbent: incumbent.iter().sum(),
            nodes_explored: solution.nodes_explored,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::verify_linear;
    use crate::rational::rat;

    fn sample_weight() -> WeightVector {
        WeightVector::new(SubsetVector::from_graded(3, [3, 2, 1, 3, 3, 2, 3].map(int).to_vec()).unwrap())
            .unwrap()
    }

    #[test]
    fn sample_optimum_is_eleven() {
        let opt = minimize_dimension(&sample_weight()).unwrap();
        assert_eq!(opt.report.n_star, 11);
        assert_eq!(opt.report.incumbent, 17);
        assert_eq!(opt.x_star.to_graded(), [3, 2, 1, 2, 1, 1, 1].map(int).to_vec());
        assert_eq!(opt.embedding.len(), 11);
        assert_eq!(
            sym_transform(&opt.x_star).to_graded(),
            [7, 6, 4, 7, 7, 6, 7].map(int).to_vec()
        );
        assert!(opt.embedding.scale().is_none());
        let report = verify_linear(&opt.embedding, &sample_weight(), None).unwrap();
        assert!(report.weak_order_preserved);
    }

    #[test]
    fn small_optima() {
        assert_eq!(minimize_dimension(&WeightVector::hamming(2)).unwrap().report.n_star, 2);
        let seven = WeightVector::new(SubsetVector::new(1, vec![int(7)]).unwrap()).unwrap();
        let opt = minimize_dimension(&seven).unwrap();
        assert_eq!(opt.report.n_star, 1);
        assert_eq!(opt.x_star.values(), &[int(1)]);
    }

    #[test]
    fn point_optima() {
        let equilateral = DistanceMatrix::from_pairs(3, |_, _| int(1)).unwrap();
        assert_eq!(minimize_dimension_points(&equilateral).unwrap().report.n_star, 3);
        let two = DistanceMatrix::from_pairs(2, |_, _| int(5)).unwrap();
        let opt = minimize_dimension_points(&two).unwrap();
        assert_eq!(opt.report.n_star, 1);
        let words: Vec<String> = opt.embedding.images().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["0", "1"]);
        let metric = DistanceMatrix::from_pairs(3, |i, j| match (i, j) {
            (0, 1) => rat(3, 2),
            (0, 2) => int(2),
            _ => rat(5, 4),
        })
        .unwrap();
        let opt = minimize_dimension_points(&metric).unwrap();
        assert_eq!(opt.report.n_star, 3);
        let induced = opt.embedding.induced_distance();
        assert!(induced.get(1, 2) < induced.get(0, 1) && induced.get(0, 1) < induced.get(0, 2));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            minimize_dimension(&WeightVector::hamming(5)),
            Err(Error::Guard { .. })
        ));
    }
}

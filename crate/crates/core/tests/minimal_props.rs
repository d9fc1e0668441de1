mod common;

use std::cmp::Ordering;

use chanmetric::minimal::{cone_of, minimize_dimension, minimize_dimension_points, IlpInstance};
use chanmetric::orders::{dense_ranks, same_weak_order};
use chanmetric::rational::int;
use chanmetric::subsets::{scale_shift, solve_sym, sym_transform};
use chanmetric::{Direction, DistanceMatrix, Rat, SubsetVector, WeightVector};
use common::*;
use proptest::prelude::*;

/// `|△_{i∈J} A_i|` for the family with minterm counts `x`, straight from parity.
fn sym_of(x: &[u64], mask: usize) -> u64 {
    x.iter()
        .enumerate()
        .filter(|(i, _)| ((i + 1) & mask).count_ones() % 2 == 1)
        .map(|(_, &v)| v)
        .sum()
}

fn ranks_of(values: impl IntoIterator<Item = Rat>) -> Vec<u32> {
    let v: Vec<Rat> = values.into_iter().collect();
    dense_ranks(&v, Direction::Ascending)
}

/// Pairwise comparisons must match `signs[i][j] = target[i].cmp(target[j])`.
fn same_signs(values: &[u64], signs: &[Vec<Ordering>]) -> bool {
    signs
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &s)| values[i].cmp(&values[j]) == s))
}

fn signs_of(values: &[Rat]) -> Vec<Vec<Ordering>> {
    values.iter().map(|a| values.iter().map(|b| a.cmp(b)).collect()).collect()
}

fn feasible(x: &[u64], signs: &[Vec<Ordering>]) -> bool {
    let image: Vec<u64> = (1..=x.len()).map(|m| sym_of(x, m)).collect();
    image.iter().all(|&v| v >= 1) && same_signs(&image, signs)
}

/// Lexicographically first feasible `x` with `Σx = total`, by plain enumeration.
fn first_with_sum(vars: usize, total: u64, ok: &dyn Fn(&[u64]) -> bool) -> Option<Vec<u64>> {
    fn go(x: &mut Vec<u64>, vars: usize, left: u64, ok: &dyn Fn(&[u64]) -> bool) -> bool {
        if x.len() == vars - 1 {
            x.push(left);
            if ok(x) {
                return true;
            }
            x.pop();
            return false;
        }
        for v in 0..=left {
            x.push(v);
            if go(x, vars, left - v, ok) {
                return true;
            }
            x.pop();
        }
        false
    }
    let mut x = Vec::new();
    go(&mut x, vars, total, ok).then_some(x)
}

fn exhaustive_optimum(vars: usize, cap: u64, ok: &dyn Fn(&[u64]) -> bool) -> Option<(u64, Vec<u64>)> {
    (0..=cap).find_map(|s| first_with_sum(vars, s, ok).map(|x| (s, x)))
}

fn weight3() -> impl Strategy<Value = WeightVector> {
    prop::collection::vec(1i64..4, 7)
        .prop_map(|v| WeightVector::new(SubsetVector::new(3, v.into_iter().map(int).collect()).unwrap()).unwrap())
}

fn as_u64(x: &SubsetVector) -> Vec<u64> {
    x.values().iter().map(|v| v.to_integer().try_into().unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn optimum_is_exact_and_lex_first(w in weight3()) {
        let opt = minimize_dimension(&w).unwrap();
        let cone = cone_of(w.values()).unwrap();
        let incumbent = as_u64(&scale_shift(&solve_sym(w.values())).x_prime);
        prop_assert!(IlpInstance::from_cone(&cone).is_feasible(&incumbent));
        prop_assert!(opt.report.n_star <= opt.report.incumbent);
        prop_assert!(cone.contains(&sym_transform(&opt.x_star)));

        let signs = signs_of(w.values().values());
        let ok = |x: &[u64]| feasible(x, &signs);
        let (best, first) = exhaustive_optimum(7, opt.report.n_star, &ok).unwrap();
        prop_assert_eq!(best, opt.report.n_star);
        prop_assert_eq!(first, as_u64(&opt.x_star));
        prop_assert_eq!(opt.embedding.len() as u64, best);
    }

    /// The shortcut of keeping `x` in the weak order of the canonical scaling witness
    /// only ever shrinks the feasible set.
    #[test]
    fn witness_order_shortcut_never_beats_the_cone(w in weight3()) {
        let opt = minimize_dimension(&w).unwrap();
        let witness = scale_shift(&solve_sym(w.values())).x_prime;
        let witness_order = signs_of(witness.values());
        let signs = signs_of(w.values().values());
        let ok = |x: &[u64]| same_signs(x, &witness_order) && feasible(x, &signs);
        let cap = opt.report.incumbent;
        let (shortcut, _) = exhaustive_optimum(7, cap, &ok).expect("the witness itself qualifies");
        prop_assert!(shortcut >= opt.report.n_star);
        if shortcut != opt.report.n_star {
            eprintln!("shortcut {} vs cone {} for {}", shortcut, opt.report.n_star, w.values());
        }
    }

    #[test]
    fn point_optimum_matches_placement(d in prop_oneof![
        distance_strategy(2..=2, 1..5),
        distance_strategy(3..=3, 1..4),
    ]) {
        let opt = minimize_dimension_points(&d).unwrap();
        let induced = opt.embedding.induced_distance();
        prop_assert!(same_weak_order(d.matrix(), induced.matrix(), Direction::Ascending).unwrap());
        prop_assert_eq!(opt.embedding.len() as u64, opt.report.n_star);
        prop_assert_eq!(Some(opt.report.n_star), smallest_placement(&d, 5));
    }
}

/// Smallest `N ≤ cap` holding distinct points with `d`'s pairwise order.
fn smallest_placement(d: &DistanceMatrix, cap: u32) -> Option<u64> {
    let n = d.n();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let target = ranks_of(pairs.iter().map(|&(i, j)| d.get(i, j).clone()));
    (0..=cap).find(|&len| {
        let size = 1u64 << len;
        (0..size.pow(n as u32)).any(|code| {
            let words: Vec<u64> = (0..n).map(|i| code / size.pow(i as u32) % size).collect();
            let dist: Vec<u64> = pairs.iter().map(|&(i, j)| (words[i] ^ words[j]).count_ones() as u64).collect();
            dist.iter().all(|&v| v > 0) && ranks_of(dist.iter().map(|&v| int(v as i64))) == target
        })
    }).map(u64::from)
}

#[test]
fn four_point_optima_match_placement() {
    for upper in [[1u8, 1, 1, 1, 1, 1], [1, 2, 2, 2, 2, 1], [2, 1, 1, 1, 1, 2], [1, 1, 2, 2, 1, 1]] {
        let d = distance_from_upper(4, &upper);
        let opt = minimize_dimension_points(&d).unwrap();
        assert_eq!(Some(opt.report.n_star), smallest_placement(&d, 4), "{upper:?}");
    }
}

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::family::check_realizable;
use super::vector::SubsetVector;
use crate::error::{Error, Result};
use crate::rational::{format_rat, lcm_of_denominators, pow2, Rat};

/// `x' = m·x + r·1` with `x'` a nonnegative integer vector.
///
/// Since the symmetric-difference transform sends `1` to `2^{n-1}·1`,
/// `sym(x') = m·sym(x) + k·1` with `k = r·2^{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingWitness {
    pub m: Rat,
    pub r: Rat,
    pub k: Rat,
    pub x_prime: SubsetVector,
}

impl ScalingWitness {
    /// Checks an arbitrary `(m, r)` choice for `x`.
    pub fn with(x: &SubsetVector, m: Rat, r: Rat) -> Result<Self> {
        if !m.is_positive() {
            return Err(Error::InvalidWitness(format!("m = {} is not positive", format_rat(&m))));
        }
        if r.is_negative() {
            return Err(Error::InvalidWitness(format!("r = {} is negative", format_rat(&r))));
        }
        let x_prime = x.map(|v| &m * v + &r);
        if !check_realizable(&x_prime) {
            return Err(Error::InvalidWitness(format!(
                "m·x + r = ({x_prime}) is not a nonnegative integer vector"
            )));
        }
        let k = &r * pow2(x.n() - 1);
        Ok(Self { m, r, k, x_prime })
    }
}

/// The canonical witness: `m` is the lcm of the denominators of `x`,
/// `r = max(0, -min(m·x))`.
pub fn scale_shift(x: &SubsetVector) -> ScalingWitness {
    let m = Rat::from_integer(lcm_of_denominators(x.values()));
    let min = x
        .values()
        .iter()
        .map(|v| &m * v)
        .min()
        .unwrap_or_else(Rat::zero);
    let r = if min.is_negative() { -min } else { Rat::zero() };
    debug_assert!(m >= Rat::one());
    ScalingWitness::with(x, m, r).expect("canonical witness is always valid")
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessSummary {
    pub m: String,
    pub r: String,
    pub k: String,
}

impl From<&ScalingWitness> for WitnessSummary {
    fn from(w: &ScalingWitness) -> Self {
        Self {
            m: format_rat(&w.m),
            r: format_rat(&w.r),
            k: format_rat(&w.k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::subsets::sym_transform;

    fn quarter_solution() -> SubsetVector {
        SubsetVector::from_graded(
            3,
            vec![rat(7, 4), rat(3, 4), rat(1, 4), rat(3, 4), rat(1, 4), rat(1, 4), rat(1, 4)],
        )
        .unwrap()
    }

    #[test]
    fn canonical_rule_on_quarters() {
        let w = scale_shift(&quarter_solution());
        assert_eq!((w.m.clone(), w.r.clone(), w.k.clone()), (int(4), int(0), int(0)));
        assert_eq!(w.x_prime.to_graded(), [7, 3, 1, 3, 1, 1, 1].map(int).to_vec());
    }

    #[test]
    fn alternative_half_shift_witness() {
        let x = quarter_solution();
        let w = ScalingWitness::with(&x, int(2), rat(1, 2)).unwrap();
        assert_eq!(w.k, int(2));
        assert_eq!(w.x_prime.to_graded(), [4, 2, 1, 2, 1, 1, 1].map(int).to_vec());
        let delta = sym_transform(&x);
        let expected = delta.map(|d| int(2) * d + int(2));
        assert_eq!(sym_transform(&w.x_prime), expected);
        assert!(ScalingWitness::with(&x, int(2), int(0)).is_err());
        assert!(ScalingWitness::with(&x, int(0), int(1)).is_err());
    }

    #[test]
    fn integer_inputs() {
        let x = SubsetVector::from_graded(3, [2, 0, 1, 2, 0, 1, 1].map(int).to_vec()).unwrap();
        let w = scale_shift(&x);
        assert_eq!((w.m, w.r), (int(1), int(0)));
        assert_eq!(w.x_prime, x);

        let neg = SubsetVector::from_graded(3, [-1, 0, 0, 2, 1, 3, 4].map(int).to_vec()).unwrap();
        let w = scale_shift(&neg);
        assert_eq!((w.m.clone(), w.r.clone(), w.k.clone()), (int(1), int(1), int(4)));
        assert_eq!(w.x_prime.to_graded(), [0, 1, 1, 3, 2, 4, 5].map(int).to_vec());
        assert_eq!(sym_transform(&w.x_prime), sym_transform(&neg).map(|v| v + int(4)));
    }
}

//! Exact rational scalars.
//!
//! Every probability, distance and minterm count in the crate is a [`Rat`].
//! `BigRational` keeps values reduced with a positive denominator, so
//! equality and ordering are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Builds `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Parses `"p/q"` or an integer literal. Decimal notation is rejected.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let parse_int = |s: &str| -> Option<BigInt> {
        let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    let num = parse_int(num)?;
    let den = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rat::new(num, den))
}

/// Formats reduced, as `p/q`, or `p` when the denominator is 1.
pub fn format_rat(value: &Rat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn is_integer(value: &Rat) -> bool {
    value.denom().is_one()
}

pub fn is_nonneg_integer(value: &Rat) -> bool {
    is_integer(value) && !value.is_negative()
}

pub(crate) fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// `2^exp` as a rational.
pub(crate) fn pow2(exp: usize) -> Rat {
    Rat::from_integer(BigInt::one() << exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rat("5/8"), Some(rat(5, 8)));
        assert_eq!(parse_rat("2/8"), Some(rat(1, 4)));
        assert_eq!(parse_rat("-3"), Some(int(-3)));
        assert_eq!(parse_rat(" 0 "), Some(int(0)));
        assert_eq!(parse_rat("1/-2"), Some(rat(-1, 2)));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "0.5", "1/0", "a", "1/", "/2", "1e3", "--1"] {
            assert_eq!(parse_rat(bad), None, "{bad:?}");
        }
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rat(&rat(6, 8)), "3/4");
        assert_eq!(format_rat(&rat(-4, 2)), "-2");
        assert_eq!(format_rat(&int(0)), "0");
    }

    #[test]
    fn lcm_of_quarters() {
        let xs = [rat(7, 4), rat(1, 2), int(3)];
        assert_eq!(lcm_of_denominators(&xs), BigInt::from(4));
    }
}

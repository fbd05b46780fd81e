//! Arbitrary-precision rational numbers.
//!
//! [`Rat`] is `num_rational::BigRational`: always stored reduced, with
//! a strictly positive denominator, and with exact add/mul/compare.
//! This module adds the canonical `"p/q"` text form used everywhere a
//! fraction crosses an interface boundary.

use alloc::string::String;

use num_bigint::BigInt;

/// Reduced arbitrary-precision fraction with positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand constructor from machine integers. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// A whole number as a `Rat`.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical text form: always `"p/q"`, even for whole numbers
/// (`0` prints as `"0/1"`). The inverse of [`parse_rat`].
pub fn to_pq_string(r: &Rat) -> String {
    alloc::format!("{}/{}", r.numer(), r.denom())
}

/// Parse `"p/q"` or a bare integer `"p"`. Signs are accepted on either
/// part; the result is reduced with a positive denominator.
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| crate::Error::ParseRational)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_round_trips() {
        for (p, q) in [(0, 1), (8, 3), (-7, 2), (675, 1126), (6, 4)] {
            let r = rat(p, q);
            assert_eq!(parse_rat(&to_pq_string(&r)).unwrap(), r);
        }
    }

    #[test]
    fn parse_accepts_integers_and_rejects_junk() {
        assert_eq!(parse_rat("8").unwrap(), rat_int(8));
        assert_eq!(parse_rat(" -3/9 ").unwrap(), rat(-1, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn always_reduced_with_positive_denominator() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert_eq!(to_pq_string(&r), "-3/2");
    }
}

//! Numeric scalars used for probabilities, weights and values.

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// A field-like number type the whole toolkit is generic over.
///
/// `BigRational` is the exact instantiation every reported answer uses.
/// `f64`/`f32` are provided for fast approximate runs, e.g. long value
/// iterations in divergence smoke tests.
pub trait Scalar:
    Num + Signed + PartialOrd + FromPrimitive + ToPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
    /// Whether arithmetic and comparison are exact.
    const EXACT: bool;

    /// Decimal rendering with exactly `places` fractional digits.
    fn to_decimal(&self, places: usize) -> String;

    fn from_nat(n: u64) -> Self {
        Self::from_u64(n).expect("every scalar type represents the naturals")
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn to_decimal(&self, places: usize) -> String {
        rational_to_decimal(self, places)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn to_decimal(&self, places: usize) -> String {
        format!("{self:.places$}")
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn to_decimal(&self, places: usize) -> String {
        format!("{self:.places$}")
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("invalid rational {text:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("invalid rational {text:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(BigRational::new(num, den))
}

/// Rounds half away from zero.
fn rational_to_decimal(r: &BigRational, places: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), places);
    let scaled = r.abs() * BigRational::from_integer(scale.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2u32));
    let rounded = (scaled + half).floor().to_integer();
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let sign = if r.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if places == 0 {
        return format!("{sign}{int_part}");
    }
    let frac = frac_part.to_str_radix(10);
    debug_assert!(frac_part.sign() != Sign::Minus);
    format!("{sign}{int_part}.{frac:0>places$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("2/3").unwrap(), q(2, 3));
        assert_eq!(parse_rational("4/6").unwrap(), q(2, 3));
        assert_eq!(parse_rational("-1/2").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn decimal_rendering_rounds_exactly() {
        assert_eq!(q(3, 1).to_decimal(6), "3.000000");
        assert_eq!(q(1, 3).to_decimal(6), "0.333333");
        assert_eq!(q(2, 3).to_decimal(6), "0.666667");
        assert_eq!(q(-2, 3).to_decimal(2), "-0.67");
        assert_eq!(q(5, 3).to_decimal(0), "2");
        assert_eq!(q(1, 2_000_000).to_decimal(6), "0.000001");
    }

    #[test]
    fn display_round_trips_through_parser() {
        for r in [q(5, 3), q(0, 1), q(-7, 9), q(12, 1)] {
            assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }
}

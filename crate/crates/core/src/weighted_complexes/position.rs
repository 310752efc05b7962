use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact point of `[0, 1]` or of the circle `[0, 1)`.
pub type Position = BigRational;

pub fn pos(numer: i64, denom: i64) -> Position {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero() -> Position {
    Position::zero()
}

pub fn one() -> Position {
    Position::one()
}

/// Accepts `p/q`, integers and finite decimals such as `0.25`.
pub fn parse_position(text: &str) -> Result<Position> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational number: `{text}`"));
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole = BigInt::from_str(if whole.is_empty() || whole == "-" { "0" } else { whole })
            .map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac = BigRational::new(BigInt::from_str(frac).map_err(|_| bad())?, scale);
        let whole = BigRational::from_integer(whole.abs());
        let value = whole + frac;
        return Ok(if negative { -value } else { value });
    }
    BigRational::from_str(t).map_err(|_| bad())
}

/// `0`, `1`, `1/3`: integers bare, fractions as `p/q`.
pub fn format_position(p: &Position) -> String {
    p.to_string()
}

pub fn in_unit_interval(p: &Position) -> bool {
    !p.is_negative() && *p <= one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_position("1/3").unwrap(), pos(1, 3));
        assert_eq!(parse_position("2/4").unwrap(), pos(1, 2));
        assert_eq!(parse_position("0.25").unwrap(), pos(1, 4));
        assert_eq!(parse_position("-1.5").unwrap(), pos(-3, 2));
        assert_eq!(parse_position("1").unwrap(), one());
        assert!(parse_position("x").is_err());
        assert!(parse_position("1.").is_err());
        assert_eq!(format_position(&pos(2, 6)), "1/3");
        assert_eq!(format_position(&zero()), "0");
    }
}

//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"` with optional leading `-`. Rejects zero denominators,
/// whitespace and empty components.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (text, None),
    };
    let num = parse_integer(num).ok_or_else(bad)?;
    let den = match den {
        Some(q) => parse_integer(q).ok_or_else(bad)?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(text).ok()
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Decimal rendering with at most `places` fractional digits (lossy).
pub fn format_decimal(value: &Rational, places: usize) -> String {
    if value.is_integer() {
        return value.to_integer().to_string();
    }
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = (value.abs() * Rational::from_integer(scale.clone()))
        .round()
        .to_integer();
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    let mut frac = format!("{:0>width$}", frac_part.to_string(), width = places);
    while frac.ends_with('0') {
        frac.pop();
    }
    let sign = if value.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if frac.is_empty() {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac}")
    }
}

/// Nearest `f64`, for display only.
pub fn approx_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("4/-8").unwrap(), ratio(-1, 2));
        assert_eq!(
            parse_rational("123456789012345678901234567890")
                .unwrap()
                .to_integer()
                .to_string(),
            "123456789012345678901234567890"
        );
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "", "/", "1/", "/2", "1/0", "1.5", " 1", "+1", "1/2/3", "--1", "a",
        ] {
            assert!(parse_rational(bad).is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&int(2)), "2");
        assert_eq!(format_rational(&ratio(-1, 3)), "-1/3");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(format_decimal(&ratio(1, 4), 6), "0.25");
        assert_eq!(format_decimal(&ratio(-3, 4), 6), "-0.75");
        assert_eq!(format_decimal(&ratio(1, 3), 4), "0.3333");
        assert_eq!(format_decimal(&int(5), 4), "5");
    }
}

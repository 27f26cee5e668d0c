use num::{BigInt, BigRational, One, Signed, Zero};

use super::{Field, FieldError};

/// The rational numbers, arbitrary precision.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            Err(FieldError::InversionOfZero)
        } else {
            Ok(a.recip())
        }
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn to_json(&self, a: &BigRational) -> serde_json::Value {
        serde_json::Value::String(format!("{}/{}", a.numer(), a.denom()))
    }

    fn from_json(&self, v: &serde_json::Value) -> Result<BigRational, FieldError> {
        match v {
            serde_json::Value::String(s) => parse_rational(s),
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(|i| self.from_i64(i))
                .ok_or_else(|| FieldError::Parse(format!("not an integer: {n}"))),
            other => Err(FieldError::Parse(format!("expected rational string, got {other}"))),
        }
    }

    fn sum(&self, terms: Vec<BigRational>) -> BigRational {
        terms.into_iter().fold(BigRational::zero(), |acc, t| acc + t)
    }
}

/// Parses `"a"` or `"a/b"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let s = s.trim();
    let bad = || FieldError::Parse(format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| bad())?;
    let den: BigInt = d.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(FieldError::ZeroDenominator);
    }
    let r = BigRational::new(num, den);
    debug_assert!(r.denom().is_positive());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let q = parse_rational("6/-4").unwrap();
        assert_eq!(q, BigRational::new(BigInt::from(-3), BigInt::from(2)));
        assert_eq!(Rationals.to_json(&q), serde_json::json!("-3/2"));
        assert_eq!(parse_rational("7").unwrap(), Rationals.from_i64(7));
        assert_eq!(parse_rational("1/0"), Err(FieldError::ZeroDenominator));
        assert!(parse_rational("x/2").is_err());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Rationals.inv(&Rationals.zero()), Err(FieldError::InversionOfZero));
    }
}

//! Exact rationals and their text form.
//!
//! Every rational that crosses a serialization boundary is written as a
//! decimal-free `"p/q"` string, always with an explicit denominator
//! (`"0/1"`, `"1/1"`). Parsing also accepts a bare integer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Largest distance, in turns, between a float and the rational it snaps to.
/// One turn is 2π radians, so this keeps the snapped value within 1e-12
/// radians of the input.
pub const SNAP_TOLERANCE_TURNS: f64 = 1e-13;

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn format(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn parse(input: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: input.to_string(),
    };
    let trimmed = input.trim();
    let (numer, denom) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| err())?;
    let denom: BigInt = denom.parse().map_err(|_| err())?;
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Snaps a float to the simplest rational within [`SNAP_TOLERANCE_TURNS`],
/// walking the continued-fraction convergents.
pub fn snap_f64(value: f64) -> Option<Rational> {
    if !value.is_finite() {
        return None;
    }
    let negative = value < 0.0;
    let x = value.abs();
    let (mut h_prev, mut h) = (BigInt::zero(), BigInt::one());
    let (mut k_prev, mut k) = (BigInt::one(), BigInt::zero());
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        let a_int = BigInt::from(a as u64);
        let h_next = &a_int * &h + &h_prev;
        let k_next = &a_int * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        let approx = Rational::new(h.clone(), k.clone());
        if (to_f64(&approx) - x).abs() <= SNAP_TOLERANCE_TURNS {
            break;
        }
        let frac = rest - a;
        if frac <= f64::EPSILON {
            break;
        }
        rest = 1.0 / frac;
    }
    let snapped = Rational::new(h, k);
    Some(if negative { -snapped } else { snapped })
}

/// Reduces `value` into `[0, period)`.
pub fn modulo(value: &Rational, period: &Rational) -> Rational {
    debug_assert!(period.is_positive());
    let quotient = (value / period).floor();
    value - quotient * period
}

pub(crate) mod serde_str {
    use super::Rational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse(&text).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse("-4").unwrap(), int(-4));
        assert_eq!(format(&int(0)), "0/1");
        assert!(parse("1/0").is_err());
        assert!(parse("0.5").is_err());
    }

    #[test]
    fn snapping_recovers_critical_ratios() {
        let third = 2.0 * std::f64::consts::PI / 3.0 / std::f64::consts::TAU;
        assert_eq!(snap_f64(third).unwrap(), ratio(1, 3));
        assert_eq!(snap_f64(0.5).unwrap(), ratio(1, 2));
        assert_eq!(snap_f64(0.0).unwrap(), int(0));
        let x = 2.2 / std::f64::consts::TAU;
        let snapped = snap_f64(x).unwrap();
        assert!((to_f64(&snapped) - x).abs() <= SNAP_TOLERANCE_TURNS);
    }

    #[test]
    fn modulo_wraps_negative_values() {
        assert_eq!(modulo(&ratio(-1, 4), &int(1)), ratio(3, 4));
        assert_eq!(modulo(&ratio(7, 3), &ratio(1, 3)), int(0));
    }
}

//! Exact rational scalars.
//!
//! Every coordinate, squared length and chord span is a [`Scalar`]. Floating
//! point only ever appears when a value is rendered for humans.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical reduced form.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` (optional leading minus, decimal digits only).
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = || Error::Rational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    let n = parse_int(num)?;
    let d = match den {
        Some(d) => {
            if d.starts_with('-') {
                return Err(bad());
            }
            parse_int(d)?
        }
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(v: &Scalar) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

pub fn to_f64(v: &Scalar) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        // Huge numerators and denominators: fall back on digit counts.
        let sign = if v.is_negative() { -1.0 } else { 1.0 };
        let n = v.numer().abs().to_string();
        let d = v.denom().to_string();
        let exp = n.len() as i32 - d.len() as i32;
        let lead = |s: &str| s[..s.len().min(15)].parse::<f64>().unwrap_or(0.0) / 10f64.powi(s.len().min(15) as i32 - 1);
        sign * lead(&n) / lead(&d) * 10f64.powi(exp)
    })
}

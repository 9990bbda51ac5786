//! Exact rational scalars.
//!
//! Everything except the wave model works over arbitrary-precision
//! rationals, always kept in lowest terms with the sign on the numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

/// Parses `"p/q"` or `"p"` with an optional leading minus sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Nearest rational to `x` whose denominator does not exceed `max_den`.
///
/// Walks the continued-fraction expansion and compares the last convergent
/// with the best admissible semiconvergent.
pub fn rationalize(x: f64, max_den: u64) -> Result<Rational> {
    if !x.is_finite() {
        return Err(Error::InvalidRational(x.to_string()));
    }
    assert!(max_den >= 1, "max_den must be positive");
    let target = exact_from_f64(x);
    let max_den = BigInt::from(max_den);

    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut rest = target.clone();
    loop {
        let a = rest.floor().to_integer();
        let q2 = &q0 + &a * &q1;
        if q2 > max_den {
            // Largest semiconvergent that still fits.
            let k = (&max_den - &q0) / &q1;
            let semi = Rational::new(&p0 + &k * &p1, &q0 + &k * &q1);
            let conv = Rational::new(p1, q1);
            let d_semi = (&semi - &target).abs();
            let d_conv = (&conv - &target).abs();
            return Ok(if d_semi < d_conv { semi } else { conv });
        }
        let p2 = &p0 + &a * &p1;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let frac = &rest - Rational::from_integer(a);
        if frac.is_zero() {
            return Ok(Rational::new(p1, q1));
        }
        rest = frac.recip();
    }
}

fn exact_from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

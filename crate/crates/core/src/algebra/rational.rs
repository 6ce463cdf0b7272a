//! Exact rationals. A thin layer over `num_rational::BigRational`, which
//! already keeps numerator and denominator reduced with a positive
//! denominator.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Parses `"p"` or `"p/q"` (optional leading minus sign).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Renders as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Integer power with a possibly negative exponent. Fails on `0^e`, `e < 0`.
pub fn pow_i64(base: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && base.is_zero() {
        return Err(Error::Domain("zero raised to a negative power".into()));
    }
    let mut acc = Rational::one();
    let b = if e < 0 { base.recip() } else { base.clone() };
    let mut k = e.unsigned_abs();
    let mut sq = b;
    while k > 0 {
        if k & 1 == 1 {
            acc *= &sq;
        }
        sq = &sq * &sq;
        k >>= 1;
    }
    Ok(acc)
}

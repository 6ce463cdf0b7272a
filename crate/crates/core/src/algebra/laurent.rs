//! Laurent polynomials in `q` with big-integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Number, Value};

use super::cyclotomic::{CyclotomicInt, RootOrder};
use super::rational::{pow_i64, Rational};
use super::ring::{ring_ops_via_std, Ring};
use crate::error::{Error, Result};

/// `Σ coeffs[k] q^(offset + k)`.
///
/// Stored trimmed: the first and last coefficients are nonzero, and the zero
/// polynomial has no coefficients and offset 0. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::from_coeffs(k, vec![c.into()])
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `Σ coeffs[k] q^(offset + k)`; zeros at either end are trimmed.
    pub fn from_coeffs(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(k, c)| (k, c.into())).collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in terms {
            coeffs[(k - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.offset)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i64 - 1)
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Ascending coefficients starting at `q^offset`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        let idx = k - self.offset;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.offset + k as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `p(1/q)`.
    pub fn reflect(&self) -> Self {
        match self.degree() {
            None => Self::zero(),
            Some(deg) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self::from_coeffs(-deg, coeffs)
            }
        }
    }

    /// `p(q^k)` for nonzero `k`.
    pub fn substitute_power(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("substitution q -> q^0 is not allowed".into()));
        }
        Ok(Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone()))))
    }

    /// Inverse of `substitute_power(k)` for `k >= 1`: `q^(kj) -> q^j`.
    /// Fails when some exponent is not a multiple of `k`.
    pub fn compress_exponents(&self, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidArgument("compression factor must be positive".into()));
        }
        let mut out = Vec::new();
        for (e, c) in self.terms() {
            if e.rem_euclid(k) != 0 {
                return Err(Error::Domain(format!("exponent {e} is not a multiple of {k}")));
            }
            out.push((e.div_euclid(k), c.clone()));
        }
        Ok(Self::from_terms(out))
    }

    /// True when the coefficient list reads the same in both directions,
    /// i.e. `q^(deg+val) p(1/q) = p(q)`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Sum of the coefficients whose exponent satisfies `pred`.
    pub fn coeff_sum_where(&self, pred: impl Fn(i64) -> bool) -> BigInt {
        self.terms().filter(|(e, _)| pred(*e)).map(|(_, c)| c.clone()).sum()
    }

    /// Exact division. Fails with `Internal` when the remainder is nonzero,
    /// and with `Domain` when dividing by zero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let a = &self.coeffs;
        let b = &divisor.coeffs;
        let inexact = || {
            Error::Internal(format!("{self} is not divisible by {divisor}"))
        };
        if a.len() < b.len() {
            return Err(inexact());
        }
        let lead = b.last().unwrap();
        let qlen = a.len() - b.len() + 1;
        let mut rem = a.clone();
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + b.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    rem[k + j] -= &qk * bj;
                }
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(inexact());
        }
        Ok(Self::from_coeffs(self.offset - divisor.offset, quot))
    }

    /// Value at an integer. Negative powers are allowed only at `q = ±1`.
    pub fn eval_integer(&self, q: &BigInt) -> Result<BigInt> {
        if self.offset < 0 && q.abs() != BigInt::one() {
            return Err(Error::Domain(format!(
                "q^{} has no integer value at q = {q}",
                self.offset
            )));
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        let shift = if self.offset < 0 {
            // q is ±1 here, so q^offset = q^(-offset).
            q.pow(self.offset.unsigned_abs() as u32)
        } else {
            q.pow(self.offset as u32)
        };
        Ok(acc * shift)
    }

    pub fn eval_i64(&self, q: i64) -> Result<BigInt> {
        self.eval_integer(&BigInt::from(q))
    }

    /// Value at a rational point; `q = 0` is a pole when negative powers occur.
    pub fn eval_rational(&self, q: &Rational) -> Result<Rational> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + Rational::from_integer(c.clone());
        }
        Ok(acc * pow_i64(q, self.offset)?)
    }

    /// Exact value at a primitive root of unity `ω` of order 3, 4 or 6.
    pub fn eval_at_root(&self, order: RootOrder) -> CyclotomicInt {
        let d = order.as_u32() as i64;
        let mut buckets = vec![BigInt::zero(); d as usize];
        for (e, c) in self.terms() {
            buckets[e.rem_euclid(d) as usize] += c;
        }
        let mut acc = CyclotomicInt::integer(order, 0);
        for (r, c) in buckets.into_iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &CyclotomicInt::omega_pow(order, r as i64).scale(&c);
            }
        }
        acc
    }

    /// Renders with descending exponents, e.g. `q^4 - q^3 - q + 1`.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(var);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self.coeffs.iter().map(bigint_to_json).collect();
        json!({"var": "q", "offset": self.offset, "coeffs": coeffs})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("laurent polynomial JSON: {what}"));
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        if obj.get("var").and_then(Value::as_str) != Some("q") {
            return Err(bad("\"var\" must be \"q\""));
        }
        let offset = obj
            .get("offset")
            .and_then(Value::as_i64)
            .ok_or_else(|| bad("missing integer \"offset\""))?;
        let coeffs = obj
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"coeffs\" array"))?
            .iter()
            .map(bigint_from_json)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(offset, coeffs))
    }
}

/// A big integer as a JSON number without loss of digits.
pub fn bigint_to_json(c: &BigInt) -> Value {
    let n: Number = c
        .to_string()
        .parse()
        .expect("decimal integers are valid JSON numbers");
    Value::Number(n)
}

pub fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| Error::Parse(format!("{n} is not an integer"))),
        other => Err(Error::Parse(format!("{other} is not an integer"))),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        LaurentPoly::from_json(&v).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (src, off) in [(&self.coeffs, self.offset), (&rhs.coeffs, rhs.offset)] {
            let base = (off - lo) as usize;
            for (k, c) in src.iter().enumerate() {
                coeffs[base + k] += c;
            }
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_coeffs(self.offset + rhs.offset, coeffs)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $atr<&LaurentPoly> for LaurentPoly {
            fn $am(&mut self, rhs: &LaurentPoly) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<LaurentPoly> for LaurentPoly {
            fn $am(&mut self, rhs: LaurentPoly) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

owned_binop!(Add, add, AddAssign, add_assign);
owned_binop!(Sub, sub, SubAssign, sub_assign);
owned_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(c)
    }
}

impl Ring for LaurentPoly {
    ring_ops_via_std!();
    fn to_json(&self) -> Value {
        LaurentPoly::to_json(self)
    }
    fn from_i64(v: i64) -> Self {
        LaurentPoly::constant(v)
    }
    /// The units of `Z[q, 1/q]` are `±q^k`.
    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && self.coeffs[0].abs().is_one() {
            Some(LaurentPoly::monomial(self.coeffs[0].clone(), -self.offset))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(offset: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(offset, c)
    }

    #[test]
    fn normalization_trims_both_ends() {
        let p = lp(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(p.offset(), 0);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(lp(5, &[0, 0]), LaurentPoly::zero());
        assert_eq!(LaurentPoly::zero().degree(), None);
    }

    #[test]
    fn display_descending() {
        let c2 = lp(0, &[1, -1, 0, -1, 1]);
        assert_eq!(c2.to_string(), "q^4 - q^3 - q + 1");
        assert_eq!(lp(-3, &[1, 0, 2]).to_string(), "2q^-1 + q^-3");
        assert_eq!(lp(0, &[-1]).to_string(), "-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(lp(1, &[-1]).to_string(), "-q");
    }

    #[test]
    fn arithmetic_basics() {
        let q = LaurentPoly::q();
        let one = LaurentPoly::one();
        let qm1 = &q - &one;
        assert_eq!((&qm1 * &qm1).to_string(), "q^2 - 2q + 1");
        assert_eq!(qm1.pow(3).to_string(), "q^3 - 3q^2 + 3q - 1");
        assert_eq!(&qm1 - &qm1, LaurentPoly::zero());
        let inv = q.unit_inverse().unwrap();
        assert_eq!(&inv * &q, one);
    }

    #[test]
    fn exact_division() {
        let c2 = lp(0, &[1, -1, 0, -1, 1]);
        let sq = lp(0, &[1, -2, 1]);
        assert_eq!(c2.div_exact(&sq).unwrap(), lp(0, &[1, 1, 1]));
        assert!(matches!(lp(0, &[1, 1]).div_exact(&sq), Err(Error::Internal(_))));
        assert!(matches!(lp(0, &[1]).div_exact(&LaurentPoly::zero()), Err(Error::Domain(_))));
        assert_eq!(lp(-3, &[2, 4]).div_exact(&lp(-1, &[2])).unwrap(), lp(-2, &[1, 2]));
    }

    #[test]
    fn evaluation() {
        let c2 = lp(0, &[1, -1, 0, -1, 1]);
        assert_eq!(c2.eval_i64(2).unwrap(), BigInt::from(7));
        assert_eq!(c2.eval_i64(-1).unwrap(), BigInt::from(4));
        let inv = lp(-1, &[1]);
        assert_eq!(inv.eval_i64(-1).unwrap(), BigInt::from(-1));
        assert!(inv.eval_i64(2).is_err());
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(inv.eval_rational(&half).unwrap(), Rational::from_integer(2.into()));
        assert!(inv.eval_rational(&Rational::zero()).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let qm1 = lp(0, &[-1, 1]);
        let v = qm1.eval_at_root(RootOrder::Four);
        assert_eq!((v.a().clone(), v.b().clone()), (BigInt::from(-1), BigInt::from(1)));
        let c2 = lp(0, &[1, -1, 0, -1, 1]);
        assert_eq!(c2.eval_at_root(RootOrder::Four), CyclotomicInt::integer(RootOrder::Four, 2));
        for order in [RootOrder::Three, RootOrder::Four, RootOrder::Six] {
            let d = order.as_u32() as i64;
            for k in -8..8 {
                assert_eq!(
                    LaurentPoly::monomial(1, k).eval_at_root(order),
                    LaurentPoly::monomial(1, k + d).eval_at_root(order)
                );
            }
        }
    }

    #[test]
    fn substitutions() {
        let p = lp(0, &[1, 1, 1]);
        let p2 = p.substitute_power(2).unwrap();
        assert_eq!(p2, lp(0, &[1, 0, 1, 0, 1]));
        assert_eq!(p2.compress_exponents(2).unwrap(), p);
        assert!(p.compress_exponents(2).is_err());
        assert_eq!(lp(1, &[1, 2]).reflect(), lp(-2, &[2, 1]));
        assert!(p.is_palindromic());
        assert!(!lp(0, &[1, 2]).is_palindromic());
    }

    #[test]
    fn json_round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = LaurentPoly::from_coeffs(-2, vec![big, BigInt::from(-3)]);
        let v = p.to_json();
        assert_eq!(v["offset"], json!(-2));
        assert_eq!(LaurentPoly::from_json(&v).unwrap(), p);
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains("123456789012345678901234567890"));
        let back: LaurentPoly = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
        assert!(LaurentPoly::from_json(&json!({"var": "t", "offset": 0, "coeffs": []})).is_err());
    }
}

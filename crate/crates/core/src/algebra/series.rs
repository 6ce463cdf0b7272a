//! Power series in `t` truncated after `t^N`, over any [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::rational::Rational;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Coefficients of `t^0, ..., t^N`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
#[derive(Clone, PartialEq)]
pub struct TruncSeries<R: Ring> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, R::one(), 0)
    }

    /// `c t^k`, which is zero when `k > order`.
    pub fn monomial(order: usize, c: R, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Pads with zeros or drops terms beyond `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncSeries { order, coeffs }
    }

    /// Builds from sparse `(exponent, coefficient)` terms; terms above
    /// `order` are dropped and repeated exponents accumulate.
    pub fn from_terms(order: usize, terms: impl IntoIterator<Item = (usize, R)>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in terms {
            if k <= order {
                s.coeffs[k] = s.coeffs[k].plus(&c);
            }
        }
        s
    }

    /// `1 - c t^k` with `k >= 1`.
    pub fn one_minus(order: usize, c: R, k: usize) -> Self {
        Self::from_terms(order, [(0, R::one()), (k, c.negated())])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    /// Indices of the nonzero coefficients.
    fn support(&self) -> Vec<usize> {
        (0..=self.order).filter(|&k| !self.coeffs[k].is_zero()).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order);
        for j in 0..=self.order {
            if j + k > self.order {
                break;
            }
            s.coeffs[j + k] = self.coeffs[j].clone();
        }
        s
    }

    /// `f(t^k)` for `k >= 1`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution t -> t^0 is not allowed");
        let mut s = Self::zero(self.order);
        for j in 0..=self.order / k {
            s.coeffs[j * k] = self.coeffs[j].clone();
        }
        s
    }

    /// `f(-t)`.
    pub fn negate_variable(&self) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        }
    }

    /// Coefficientwise ring map.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncSeries<S> {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<TruncSeries<S>> {
        Ok(TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let (sa, sb) = (self.support(), other.support());
        // Loop over the sparser operand's support.
        let (outer, outer_s, inner, inner_s) = if sa.len() <= sb.len() {
            (self, sa, other, sb)
        } else {
            (other, sb, self, sa)
        };
        let mut out = Self::zero(order);
        for &i in &outer_s {
            if i > order {
                break;
            }
            let a = &outer.coeffs[i];
            for &j in &inner_s {
                if i + j > order {
                    break;
                }
                let prod = a.times(&inner.coeffs[j]);
                out.coeffs[i + j] = out.coeffs[i + j].plus(&prod);
            }
        }
        out
    }

    /// `self / divisor`. The divisor's constant term must be a unit.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let order = self.order.min(divisor.order);
        let inv0 = divisor.coeffs[0].unit_inverse().ok_or_else(|| {
            Error::Domain(format!(
                "constant term {:?} of the divisor is not a unit",
                divisor.coeffs[0]
            ))
        })?;
        let tail: Vec<usize> = divisor.support().into_iter().filter(|&k| k >= 1).collect();
        let mut h: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for &k in &tail {
                if k > n {
                    break;
                }
                if !h[n - k].is_zero() {
                    acc = acc.minus(&divisor.coeffs[k].times(&h[n - k]));
                }
            }
            h.push(acc.times(&inv0));
        }
        Ok(TruncSeries { order, coeffs: h })
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.order).div(self)
    }

    /// Integer power; negative exponents need an invertible constant term.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut acc = Self::one(self.order);
        if e >= 0 {
            for _ in 0..e {
                acc = acc.mul(self);
            }
        } else {
            for _ in 0..e.unsigned_abs() {
                acc = acc.div(self)?;
            }
        }
        Ok(acc)
    }

    /// First index where the two series differ, up to the smaller order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        (0..=self.order.min(other.order)).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self.coeffs.iter().map(R::to_json).collect();
        json!({"var": "t", "order": self.order, "coeffs": coeffs})
    }
}

impl TruncSeries<BigInt> {
    pub fn from_i64s(order: usize, coeffs: &[i64]) -> Self {
        Self::from_coeffs(order, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl TruncSeries<Rational> {
    /// `exp(g)` for `g` with zero constant term, via `n f_n = Σ k g_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Domain("exp needs a zero constant term".into()));
        }
        let mut f: Vec<Rational> = vec![Rational::one()];
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * Rational::from_integer(k.into()) * &f[n - k];
                }
            }
            f.push(acc / Rational::from_integer(n.into()));
        }
        Ok(TruncSeries {
            order: self.order,
            coeffs: f,
        })
    }
}

/// `∏ f_k^{e_k}` truncated at `t^order`. Factors with a negative exponent
/// need a unit constant term.
pub fn series_product<R: Ring>(factors: &[(TruncSeries<R>, i64)], order: usize) -> Result<TruncSeries<R>> {
    let mut acc = TruncSeries::one(order);
    for (f, e) in factors {
        let f = f.truncate(order);
        acc = if *e >= 0 {
            (0..*e).fold(acc, |a, _| a.mul(&f))
        } else {
            let mut a = acc;
            for _ in 0..e.unsigned_abs() {
                a = a.div(&f)?;
            }
            a
        };
    }
    Ok(acc)
}

impl<R: Ring> fmt::Debug for TruncSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries(order {}, {:?})", self.order, self.coeffs)
    }
}

impl<'a, R: Ring> Add<&'a TruncSeries<R>> for &'a TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn add(self, rhs: &'a TruncSeries<R>) -> TruncSeries<R> {
        let order = self.order.min(rhs.order);
        TruncSeries {
            order,
            coeffs: (0..=order).map(|k| self.coeffs[k].plus(&rhs.coeffs[k])).collect(),
        }
    }
}

impl<'a, R: Ring> Sub<&'a TruncSeries<R>> for &'a TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn sub(self, rhs: &'a TruncSeries<R>) -> TruncSeries<R> {
        let order = self.order.min(rhs.order);
        TruncSeries {
            order,
            coeffs: (0..=order).map(|k| self.coeffs[k].minus(&rhs.coeffs[k])).collect(),
        }
    }
}

impl<R: Ring> Neg for &TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn neg(self) -> TruncSeries<R> {
        self.map(R::negated)
    }
}

impl<'a, R: Ring> Mul<&'a TruncSeries<R>> for &'a TruncSeries<R> {
    type Output = TruncSeries<R>;
    fn mul(self, rhs: &'a TruncSeries<R>) -> TruncSeries<R> {
        TruncSeries::mul(self, rhs)
    }
}

//! The coefficient-ring abstraction used by [`TruncSeries`](super::TruncSeries).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use serde_json::Value;

use super::laurent::bigint_to_json;
use super::rational::{format_rational, Rational};

/// A commutative ring with exact arithmetic. `zero`, `one` and `is_zero`
/// come from the `num_traits` supertraits.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + Zero + One + 'static {
    fn from_i64(v: i64) -> Self;
    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn to_json(&self) -> Value;
}

macro_rules! ring_ops_via_std {
    () => {
        fn plus(&self, other: &Self) -> Self {
            self + other
        }
        fn minus(&self, other: &Self) -> Self {
            self - other
        }
        fn times(&self, other: &Self) -> Self {
            self * other
        }
        fn negated(&self) -> Self {
            -self
        }
    };
}
pub(crate) use ring_ops_via_std;

impl Ring for BigInt {
    ring_ops_via_std!();
    fn to_json(&self) -> Value {
        bigint_to_json(self)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.abs() == One::one() {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Ring for Rational {
    ring_ops_via_std!();
    /// Rationals are encoded as `"p/q"` strings.
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

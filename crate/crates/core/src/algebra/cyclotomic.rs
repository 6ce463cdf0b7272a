//! The rings `Z[ω]` for `ω` a primitive root of unity of order 3, 4 or 6.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::laurent::bigint_to_json;
use super::ring::{ring_ops_via_std, Ring};
use crate::error::{invalid, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootOrder {
    Three,
    Four,
    Six,
}

impl RootOrder {
    pub const ALL: [RootOrder; 3] = [RootOrder::Three, RootOrder::Four, RootOrder::Six];

    pub fn from_u32(d: u32) -> Result<Self> {
        match d {
            3 => Ok(RootOrder::Three),
            4 => Ok(RootOrder::Four),
            6 => Ok(RootOrder::Six),
            _ => Err(invalid(format!("root order must be 3, 4 or 6, got {d}"))),
        }
    }

    pub fn as_u32(self) -> u32 {
        match self {
            RootOrder::Three => 3,
            RootOrder::Four => 4,
            RootOrder::Six => 6,
        }
    }

    /// `ω + 1/ω`, which is an ordinary integer. `ω^2 = trace·ω - 1`.
    pub fn trace(self) -> i64 {
        match self {
            RootOrder::Three => -1,
            RootOrder::Four => 0,
            RootOrder::Six => 1,
        }
    }
}

/// `a + b ω`.
///
/// Rational integers (`b = 0`) belong to every `Z[ω]`, so they compare equal
/// and combine freely across orders; mixing two genuinely non-real elements
/// of different orders is a programming error and panics.
#[derive(Clone)]
pub struct CyclotomicInt {
    order: RootOrder,
    a: BigInt,
    b: BigInt,
}

impl CyclotomicInt {
    pub fn new(order: RootOrder, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        CyclotomicInt {
            order,
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn integer(order: RootOrder, a: impl Into<BigInt>) -> Self {
        Self::new(order, a, 0)
    }

    pub fn omega(order: RootOrder) -> Self {
        Self::new(order, 0, 1)
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(order: RootOrder, k: i64) -> Self {
        let d = order.as_u32() as i64;
        let r = k.rem_euclid(d);
        let mut acc = Self::integer(order, 1);
        let w = Self::omega(order);
        for _ in 0..r {
            acc = &acc * &w;
        }
        acc
    }

    pub fn order(&self) -> RootOrder {
        self.order
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.order, &self.a * c, &self.b * c)
    }

    /// Complex conjugate: `ω̄ = trace - ω`.
    pub fn conj(&self) -> Self {
        let tr = BigInt::from(self.order.trace());
        Self::new(self.order, &self.a + &self.b * tr, -&self.b)
    }

    /// `|a + bω|^2 = a^2 + trace·ab + b^2`.
    pub fn norm(&self) -> BigInt {
        let tr = BigInt::from(self.order.trace());
        &self.a * &self.a + tr * &self.a * &self.b + &self.b * &self.b
    }

    /// Division by `ω^k`, always exact.
    pub fn div_omega_pow(&self, k: i64) -> Self {
        self * &Self::omega_pow(self.order, -k)
    }

    fn joint_order(&self, other: &Self) -> RootOrder {
        if self.b.is_zero() {
            other.order
        } else if other.b.is_zero() || other.order == self.order {
            self.order
        } else {
            panic!(
                "cannot combine elements of Z[ω] for orders {} and {}",
                self.order.as_u32(),
                other.order.as_u32()
            )
        }
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.order == other.order)
    }
}

impl Eq for CyclotomicInt {}

impl Hash for CyclotomicInt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.order.hash(state);
        }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        write!(f, "{} + {}·ω{}", self.a, self.b, self.order.as_u32())
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicInt({self})")
    }
}

impl<'a> Add<&'a CyclotomicInt> for &'a CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &'a CyclotomicInt) -> CyclotomicInt {
        CyclotomicInt::new(self.joint_order(rhs), &self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a CyclotomicInt> for &'a CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &'a CyclotomicInt) -> CyclotomicInt {
        CyclotomicInt::new(self.joint_order(rhs), &self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        CyclotomicInt::new(self.order, -&self.a, -&self.b)
    }
}

impl<'a> Mul<&'a CyclotomicInt> for &'a CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: &'a CyclotomicInt) -> CyclotomicInt {
        let order = self.joint_order(rhs);
        let tr = BigInt::from(order.trace());
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a - &bd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a + bd * tr;
        CyclotomicInt::new(order, a, b)
    }
}

impl Add for CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: CyclotomicInt) -> CyclotomicInt {
        &self + &rhs
    }
}

impl Mul for CyclotomicInt {
    type Output = CyclotomicInt;
    fn mul(self, rhs: CyclotomicInt) -> CyclotomicInt {
        &self * &rhs
    }
}

/// The order is irrelevant for rational integers; see the type docs.
impl Zero for CyclotomicInt {
    fn zero() -> Self {
        CyclotomicInt::integer(RootOrder::Four, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for CyclotomicInt {
    fn one() -> Self {
        CyclotomicInt::integer(RootOrder::Four, 1)
    }
}

impl Ring for CyclotomicInt {
    ring_ops_via_std!();
    fn from_i64(v: i64) -> Self {
        CyclotomicInt::integer(RootOrder::Four, v)
    }
    /// Units have norm 1, and then the inverse is the conjugate.
    fn unit_inverse(&self) -> Option<Self> {
        self.norm().is_one().then(|| self.conj())
    }
    fn to_json(&self) -> Value {
        json!({"d": self.order.as_u32(), "a": bigint_to_json(&self.a), "b": bigint_to_json(&self.b)})
    }
}

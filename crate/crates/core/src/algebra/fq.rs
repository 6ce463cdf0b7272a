//! Polynomials over a prime field `F_p`.

use std::fmt;

use crate::error::{invalid, Error, Result};

/// A validated prime modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus(u64);

impl Modulus {
    /// Accepts primes below `2^31`, so products of residues fit in a `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(invalid(format!("modulus {p} is too large")));
        }
        if p < 2 || (2..).take_while(|k| k * k <= p).any(|k| p.is_multiple_of(k)) {
            return Err(invalid(format!("{p} is not prime")));
        }
        Ok(Modulus(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.0 - a) % self.0
    }

    pub fn reduce(self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }

    /// Inverse of a nonzero residue via Fermat.
    pub fn inv(self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.0) {
            return None;
        }
        let mut acc = 1;
        let mut base = a % self.0;
        let mut e = self.0 - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        Some(acc)
    }
}

/// `Σ coeffs[k] y^k` over `F_p`, trimmed so the leading coefficient is
/// nonzero (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqPoly {
    p: Modulus,
    coeffs: Vec<u64>,
}

impl FqPoly {
    pub fn new(p: Modulus, coeffs: Vec<u64>) -> Self {
        let mut out = FqPoly {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p.get()).collect(),
        };
        out.trim();
        out
    }

    pub fn from_i64s(p: Modulus, coeffs: &[i64]) -> Self {
        Self::new(p, coeffs.iter().map(|&c| p.reduce(c)).collect())
    }

    pub fn zero(p: Modulus) -> Self {
        FqPoly { p, coeffs: Vec::new() }
    }

    pub fn constant(p: Modulus, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    /// `y^k`.
    pub fn monomial(p: Modulus, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        FqPoly { p, coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, y: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.p.add(self.p.mul(acc, y), c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.p.add(self.coeff(k), other.coeff(k)))
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.p.sub(self.coeff(k), other.coeff(k)))
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&c| self.p.neg(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.p.add(coeffs[i + j], self.p.mul(a, b));
            }
        }
        Self::new(self.p, coeffs)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&x| self.p.mul(x, c)).collect())
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = *divisor
            .coeffs
            .last()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let inv = self.p.inv(lead).expect("leading coefficient is nonzero");
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Self::zero(self.p), self.clone()));
        }
        let mut quot = vec![0; rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dlen - 1];
            if top == 0 {
                continue;
            }
            let c = self.p.mul(top, inv);
            quot[k] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = self.p.sub(rem[k + j], self.p.mul(c, b));
            }
        }
        Ok((Self::new(self.p, quot), Self::new(self.p, rem)))
    }

    /// Scales to leading coefficient 1 (the zero polynomial stays zero).
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => self.scale(self.p.inv(lead).expect("nonzero lead")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.gcd(other).degree() == Some(0)
    }

    /// Every polynomial of degree `< d`, lexicographic in the coefficient
    /// vector `(c_0, ..., c_{d-1})` with `c_0` varying slowest.
    pub fn all_below_degree(p: Modulus, d: usize) -> impl Iterator<Item = FqPoly> {
        let q = p.get();
        let total = q.pow(d as u32);
        (0..total).map(move |mut idx| {
            let mut coeffs = vec![0; d];
            for k in (0..d).rev() {
                coeffs[k] = idx % q;
                idx /= q;
            }
            FqPoly::new(p, coeffs)
        })
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "y")?,
                (1, _) => write!(f, "{c}y")?,
                (_, 1) => write!(f, "y^{k}")?,
                _ => write!(f, "{c}y^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FqPoly[F_{}]({self})", self.p.get())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, c: &[i64]) -> FqPoly {
        FqPoly::from_i64s(Modulus::new(p).unwrap(), c)
    }

    #[test]
    fn modulus_must_be_prime() {
        assert!(Modulus::new(4).is_err());
        assert!(Modulus::new(1).is_err());
        assert!(Modulus::new(0).is_err());
        assert!(Modulus::new(7).is_ok());
    }

    #[test]
    fn divrem_reconstructs() {
        let a = f(5, &[1, 2, 3, 4]);
        let b = f(5, &[2, 0, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(a.divrem(&FqPoly::zero(Modulus::new(5).unwrap())).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        // (y+1)(y+2) and (y+1)(y+3) over F_5.
        let a = f(5, &[1, 1]).mul(&f(5, &[2, 1]));
        let b = f(5, &[1, 1]).mul(&f(5, &[3, 1])).scale(3);
        assert_eq!(a.gcd(&b), f(5, &[1, 1]));
        assert!(f(2, &[1, 1]).is_coprime(&f(2, &[1])));
        assert!(!f(2, &[0, 1]).is_coprime(&f(2, &[0])));
        // y^2 + 1 = (y + 1)^2 over F_2.
        assert!(!f(2, &[1, 0, 1]).is_coprime(&f(2, &[1, 1])));
    }

    #[test]
    fn enumeration_by_degree() {
        let p = Modulus::new(3).unwrap();
        let all: Vec<FqPoly> = FqPoly::all_below_degree(p, 2).collect();
        assert_eq!(all.len(), 9);
        assert!(all[0].is_zero());
        assert_eq!(FqPoly::all_below_degree(p, 0).count(), 1);
    }

    #[test]
    fn evaluation() {
        assert_eq!(f(7, &[1, 2, 3]).eval(2), (1 + 4 + 12) % 7);
    }
}

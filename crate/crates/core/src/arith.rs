//! Arithmetic functions and the special values of `C_n` and `P_n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{CyclotomicInt, LaurentPoly, Rational, RootOrder};
use crate::census;
use crate::error::{invalid, Error, Result};

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `σ(n)`, the sum of divisors.
pub fn sigma(n: u64) -> u64 {
    divisors(n).iter().sum()
}

/// `σ_0(n)`, the number of divisors.
pub fn sigma0(n: u64) -> u64 {
    divisors(n).len() as u64
}

/// Prime factorization by trial division, as `(p, e)` with `p` increasing.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadForm {
    /// `x^2 + y^2`, counted by `r(n)`.
    SumOfTwoSquares,
    /// `x^2 + 2y^2`, counted by `r'(n)`.
    SquarePlusTwiceSquare,
    /// `x^2 + xy + y^2`, counted by `r_H(n)`.
    Hexagonal,
}

impl QuadForm {
    pub fn eval(self, x: i64, y: i64) -> i64 {
        match self {
            QuadForm::SumOfTwoSquares => x * x + y * y,
            QuadForm::SquarePlusTwiceSquare => x * x + 2 * y * y,
            QuadForm::Hexagonal => x * x + x * y + y * y,
        }
    }
}

/// Number of `(x, y) ∈ Z^2` with `form(x, y) = n`, by direct enumeration.
pub fn rep_count(form: QuadForm, n: u64) -> u64 {
    // Every form here satisfies form(x, y) >= 3/4 max(|x|, |y|)^2.
    let bound = (4 * n / 3).sqrt() as i64 + 1;
    let n = n as i64;
    let mut count = 0;
    for x in -bound..=bound {
        for y in -bound..=bound {
            if form.eval(x, y) == n {
                count += 1;
            }
        }
    }
    count
}

pub fn r2(n: u64) -> u64 {
    rep_count(QuadForm::SumOfTwoSquares, n)
}

pub fn r_prime(n: u64) -> u64 {
    rep_count(QuadForm::SquarePlusTwiceSquare, n)
}

pub fn r_hex(n: u64) -> u64 {
    rep_count(QuadForm::Hexagonal, n)
}

/// `E_1(n;3)`: divisors `≡ 1 (mod 3)` minus divisors `≡ 2 (mod 3)`.
pub fn excess_e1(n: u64) -> i64 {
    divisors(n)
        .into_iter()
        .map(|d| match d % 3 {
            1 => 1,
            2 => -1,
            _ => 0,
        })
        .sum()
}

/// `E_1(n/3;3)`, zero when `3 ∤ n`.
pub fn excess_e1_third(n: u64) -> i64 {
    if n.is_multiple_of(3) {
        excess_e1(n / 3)
    } else {
        0
    }
}

/// The multiplicative function with `λ(3^e) = -2`, `λ(p^e) = e + 1` for
/// `p ≡ 1 (mod 6)` and `λ(p^e) = (1 + (-1)^e)/2` for the other primes.
pub fn lambda_mult(n: u64) -> i64 {
    factorize(n)
        .into_iter()
        .map(|(p, e)| {
            if p == 3 {
                -2
            } else if p % 6 == 1 {
                e as i64 + 1
            } else if e % 2 == 0 {
                1
            } else {
                0
            }
        })
        .product()
}

/// `p(n)` by Euler's pentagonal recurrence.
pub fn partition_number(n: u32) -> BigInt {
    partition_numbers(n).pop().unwrap()
}

/// `p(0), ..., p(n)`.
pub fn partition_numbers(n: u32) -> Vec<BigInt> {
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n as i64 {
        let mut acc = BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_pos = k % 2 == 1;
            let mut add = p[(m - g1) as usize].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                add += &p[(m - g2) as usize];
            }
            if sign_pos {
                acc += add;
            } else {
                acc -= add;
            }
            k += 1;
        }
        p.push(acc);
    }
    p
}

/// Number of partitions of `n` into distinct odd parts, found by listing
/// them.
pub fn distinct_odd_parts_count(n: u32) -> u64 {
    fn go(remaining: u32, max_part: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        let mut part = max_part.min(remaining);
        if part.is_multiple_of(2) {
            part = part.saturating_sub(1);
        }
        while part >= 1 {
            total += go(remaining - part, part.saturating_sub(2));
            if part < 2 {
                break;
            }
            part -= 2;
        }
        total
    }
    go(n, if n % 2 == 1 { n } else { n.saturating_sub(1) })
}

/// `a_d(n) = C_n(ω)/ω^n` for `ω` a primitive `d`-th root of unity.
pub fn value_a_d(d: u32, n: u32) -> Result<BigInt> {
    value_a_d_of(d, n, &census::poly_c(n)?)
}

/// `a_d(n)` from a given `C_n`.
pub fn value_a_d_of(d: u32, n: u32, c_n: &LaurentPoly) -> Result<BigInt> {
    if d == 2 {
        let v = c_n.eval_i64(-1)?;
        return Ok(if n.is_multiple_of(2) { v } else { -v });
    }
    let order = RootOrder::from_u32(d).map_err(|_| invalid(format!("d must be 2, 3, 4 or 6, got {d}")))?;
    let v = c_n.eval_at_root(order).div_omega_pow(n as i64);
    v.as_integer().cloned().ok_or_else(|| {
        Error::TheoremViolation(format!("C_{n}(ω)/ω^{n} = {v} is not an integer (d = {d})"))
    })
}

/// `|p(ω)|` for a root of unity of order 2, 3, 4 or 6, which must be an
/// integer (its squared norm a perfect square).
pub fn abs_at_root(p: &LaurentPoly, d: u32) -> Result<BigInt> {
    if d == 1 || d == 2 {
        return Ok(p.eval_i64(if d == 1 { 1 } else { -1 })?.abs());
    }
    let order = RootOrder::from_u32(d)?;
    let norm = p.eval_at_root(order).norm();
    let root = norm.sqrt();
    if &root * &root != norm {
        return Err(Error::Domain(format!("|p(ω)|^2 = {norm} is not a perfect square")));
    }
    Ok(root)
}

/// `s_k(n)`: the sum of the coefficients of `q^{ki}` in `P_n(q)`.
pub fn section_direct(k: u32, p_n: &LaurentPoly) -> Result<BigInt> {
    if k == 0 {
        return Err(invalid("k must be at least 1"));
    }
    Ok(p_n.coeff_sum_where(|e| e.rem_euclid(k as i64) == 0))
}

/// The average of `p` over the `k`-th roots of unity, `k ∈ {1, 2, 3, 4, 6}`.
pub fn root_of_unity_average(k: u32, p: &LaurentPoly) -> Result<Rational> {
    let total: BigInt = match k {
        1 => p.eval_i64(1)?,
        2 => p.eval_i64(1)? + p.eval_i64(-1)?,
        3 | 4 | 6 => {
            let order = RootOrder::from_u32(k)?;
            let mut acc = CyclotomicInt::integer(order, p.eval_i64(1)?);
            for j in 1..k as i64 {
                acc = &acc + &p.substitute_power(j)?.eval_at_root(order);
            }
            acc.as_integer()
                .cloned()
                .ok_or_else(|| Error::Internal(format!("sum over roots of unity {acc} is not rational")))?
        }
        _ => return Err(invalid(format!("root-of-unity averages need k in {{1,2,3,4,6}}, got {k}"))),
    };
    Ok(Rational::new(total, BigInt::from(k)))
}

/// `s_k(n)` with every available cross-check asserted: the closed forms for
/// `k ≤ 3` and the root-of-unity average for `k ∈ {1, 2, 3, 4, 6}`.
pub fn section_s(k: u32, n: u32) -> Result<BigInt> {
    let p = census::poly_p(n)?;
    section_checked(k, n, &p)
}

pub fn section_checked(k: u32, n: u32, p: &LaurentPoly) -> Result<BigInt> {
    let s = section_direct(k, p)?;
    let as_rat = Rational::from_integer(s.clone());
    let nn = n as u64;
    let sig = Rational::from_integer(sigma(nn).into());
    let closed = match k {
        1 => Some(sig),
        2 => Some((sig + Rational::new(r2(nn).into(), 4.into())) / Rational::from_integer(2.into())),
        3 => Some((sig + Rational::new(r_hex(nn).into(), 3.into())) / Rational::from_integer(3.into())),
        _ => None,
    };
    if let Some(c) = closed {
        if c != as_rat {
            return Err(Error::TheoremViolation(format!(
                "s_{k}({n}) = {s} but the closed form gives {c}"
            )));
        }
    }
    if matches!(k, 1 | 2 | 3 | 4 | 6) {
        let avg = root_of_unity_average(k, p)?;
        if avg != as_rat {
            return Err(Error::TheoremViolation(format!(
                "s_{k}({n}) = {s} but the root-of-unity average is {avg}"
            )));
        }
    }
    Ok(s)
}

/// One row of the arithmetic table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArithRow {
    pub n: u64,
    pub sigma: u64,
    pub sigma0: u64,
    pub r: u64,
    pub r_prime: u64,
    pub r_hex: u64,
    pub e1: i64,
    pub lambda: i64,
    pub a2: String,
    pub a3: String,
    pub a4: String,
    pub a6: String,
    pub s1: String,
    pub s2: String,
    pub s3: String,
    pub s4: String,
    pub s6: String,
}

pub fn arith_row(n: u32) -> Result<ArithRow> {
    let c = census::poly_c(n)?;
    let p = census::poly_p(n)?;
    let nn = n as u64;
    let a = |d| value_a_d_of(d, n, &c).map(|v| v.to_string());
    let s = |k| section_checked(k, n, &p).map(|v| v.to_string());
    Ok(ArithRow {
        n: nn,
        sigma: sigma(nn),
        sigma0: sigma0(nn),
        r: r2(nn),
        r_prime: r_prime(nn),
        r_hex: r_hex(nn),
        e1: excess_e1(nn),
        lambda: lambda_mult(nn),
        a2: a(2)?,
        a3: a(3)?,
        a4: a(4)?,
        a6: a(6)?,
        s1: s(1)?,
        s2: s(2)?,
        s3: s(3)?,
        s4: s(4)?,
        s6: s(6)?,
    })
}

/// Converts a small big integer; the tables never leave `i64`.
pub fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::Internal(format!("{v} does not fit in i64")))
}

/// `n` is a perfect square `k^2`: returns `k`.
pub fn square_root_exact(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

/// `B_n°(-1) = (-1)^{k-1}` when `n = k^2`, else 0.
pub fn bcirc_at_minus_one_expected(n: u64) -> i64 {
    match square_root_exact(n) {
        Some(k) if k.is_odd() => 1,
        Some(_) => -1,
        None => 0,
    }
}

/// Which `a_d` column to print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootDegree(pub u32);

impl FromStr for RootDegree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<u32>() {
            Ok(d @ (2 | 3 | 4 | 6)) => Ok(RootDegree(d)),
            _ => Err(invalid(format!("d must be 2, 3, 4 or 6, got {s:?}"))),
        }
    }
}

impl fmt::Display for RootDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

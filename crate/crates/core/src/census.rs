//! Cell cardinalities and the counting polynomials `A_n`, `B_n`, `B_n°`,
//! `C_n`, `P_n`, `P_λ`, together with the closed-form coefficients
//! `a_{n,i}` and `c_{n,i}`.
//!
//! Every polynomial has more than one route. The cell sums run over all
//! partitions of `n`; since a cell cardinality depends only on `n`, `ℓ(λ)`
//! and the multiset of nonzero `d_i`, the sum is accumulated per profile
//! class. For large `n` the dispatching functions (`poly_c`, `poly_a`, ...)
//! switch to the closed forms or to a partition-by-length table.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{LaurentPoly, Partition};
use crate::error::{invalid, Error, Result};

/// Largest `n` served by the cell sum in the dispatching functions.
pub const CELL_SUM_DEFAULT_MAX_N: u32 = 64;
/// Hard ceiling for an explicit cell sum (`p(100)` is about 1.9e8).
pub const CELL_SUM_LIMIT: u32 = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    /// Ideals of `F_q[x,y]`.
    Affine,
    /// Ideals of `F_q[x,y,1/y]`.
    SemiInvertible,
    /// Ideals of `F_q[x,y,1/x,1/y]`.
    Invertible,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Affine, Flavor::SemiInvertible, Flavor::Invertible];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Affine => "affine",
            Flavor::SemiInvertible => "semi_invertible",
            Flavor::Invertible => "invertible",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "affine" | "none" => Ok(Flavor::Affine),
            "semi_invertible" | "semi-invertible" | "y_invertible" | "y-invertible" => {
                Ok(Flavor::SemiInvertible)
            }
            "invertible" | "xy_invertible" | "xy-invertible" => Ok(Flavor::Invertible),
            _ => Err(invalid(format!("unknown cell flavor {s:?}"))),
        }
    }
}

/// The cardinality of one Gröbner cell, as a polynomial in `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct CellCount {
    pub lambda: Partition,
    pub flavor: Flavor,
    pub value: LaurentPoly,
}

pub fn cell_count(lambda: &Partition, flavor: Flavor) -> Result<CellCount> {
    let value = match flavor {
        Flavor::Affine => cell_card_affine(lambda),
        Flavor::SemiInvertible => cell_card_semi_invertible(lambda),
        Flavor::Invertible => cell_card_invertible(lambda)?,
    };
    Ok(CellCount {
        lambda: lambda.clone(),
        flavor,
        value,
    })
}

fn q_minus_one() -> LaurentPoly {
    LaurentPoly::from_i64s(0, &[-1, 1])
}

fn q_minus_one_squared() -> LaurentPoly {
    LaurentPoly::from_i64s(0, &[1, -2, 1])
}

/// `q^{n+ℓ}`.
pub fn cell_card_affine(lambda: &Partition) -> LaurentPoly {
    affine_card(lambda.n(), lambda.ell())
}

/// `(q-1)^v q^{n+ℓ-v}`.
pub fn cell_card_semi_invertible(lambda: &Partition) -> LaurentPoly {
    semi_invertible_card(lambda.n(), lambda.ell(), lambda.v())
}

/// `(q-1)^{2v} q^{n-ℓ} ∏_{d_i ≥ 1} (q^{2d_i} - 1)/(q^2 - 1)`.
pub fn cell_card_invertible(lambda: &Partition) -> Result<LaurentPoly> {
    invertible_card(lambda.n(), lambda.ell(), &lambda.nonzero_d_sorted())
}

/// `P_λ = card C_λ^{x,y} / (q-1)^2`.
pub fn cell_poly_p(lambda: &Partition) -> Result<LaurentPoly> {
    cell_card_invertible(lambda)?.div_exact(&q_minus_one_squared())
}

pub(crate) fn affine_card(n: u32, ell: u32) -> LaurentPoly {
    LaurentPoly::monomial(1, (n + ell) as i64)
}

pub(crate) fn semi_invertible_card(n: u32, ell: u32, v: u32) -> LaurentPoly {
    q_minus_one().pow(v).shift((n + ell - v) as i64)
}

/// `(q^{2d} - 1)/(q^2 - 1)`, by exact division.
pub fn q_squared_bracket(d: u32) -> Result<LaurentPoly> {
    let num = LaurentPoly::from_terms([(2 * d as i64, 1), (0, -1)]);
    num.div_exact(&LaurentPoly::from_i64s(0, &[-1, 0, 1]))
}

/// The invertible cell cardinality from its profile data: `n`, `ℓ` and the
/// nonzero entries of the `d`-sequence.
pub fn invertible_card(n: u32, ell: u32, nonzero_d: &[u32]) -> Result<LaurentPoly> {
    invertible_card_with_exponent(nonzero_d, n as i64 - ell as i64)
}

pub(crate) fn invertible_card_with_exponent(nonzero_d: &[u32], q_exp: i64) -> Result<LaurentPoly> {
    let v = nonzero_d.len() as u32;
    let mut acc = q_minus_one_squared().pow(v).shift(q_exp);
    for &d in nonzero_d {
        acc = &acc * &q_squared_bracket(d)?;
    }
    Ok(acc)
}

/// A profile class of partitions: length `ℓ` and the sorted multiplicities
/// (equivalently, the sorted nonzero `d_i`). `v` is the number of entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellKey {
    pub ell: u32,
    pub mults: Vec<u32>,
}

impl CellKey {
    pub fn v(&self) -> u32 {
        self.mults.len() as u32
    }
}

/// Number of partitions of `n` in each profile class. Walks every partition
/// of `n` once, as a list of distinct parts with multiplicities.
pub fn cell_classes(n: u32) -> Result<BTreeMap<CellKey, u64>> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if n > CELL_SUM_LIMIT {
        return Err(invalid(format!(
            "cell sums are limited to n <= {CELL_SUM_LIMIT}, got {n}"
        )));
    }
    let mut counts: HashMap<CellKey, u64> = HashMap::new();
    let mut mults = Vec::new();
    walk(n, n, 0, &mut mults, &mut counts);
    Ok(counts.into_iter().collect())
}

fn walk(remaining: u32, max_part: u32, ell: u32, mults: &mut Vec<u32>, out: &mut HashMap<CellKey, u64>) {
    if remaining == 0 {
        let mut sorted = mults.clone();
        sorted.sort_unstable();
        *out.entry(CellKey { ell, mults: sorted }).or_insert(0) += 1;
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        let mut e = 1;
        while part * e <= remaining {
            mults.push(e);
            walk(remaining - part * e, part - 1, ell + e, mults, out);
            mults.pop();
            e += 1;
        }
    }
}

/// `Σ_{λ ⊢ n} card(λ)` with the cardinality supplied per profile class.
pub fn cell_sum_with(n: u32, card: impl Fn(u32, &CellKey) -> Result<LaurentPoly>) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero();
    for (key, count) in cell_classes(n)? {
        acc += card(n, &key)?.scale(&BigInt::from(count));
    }
    Ok(acc)
}

/// `Σ_{λ ⊢ n}` of the cell cardinality of the given flavor.
pub fn cell_sum(n: u32, flavor: Flavor) -> Result<LaurentPoly> {
    match flavor {
        Flavor::Affine => cell_sum_with(n, |n, k| Ok(affine_card(n, k.ell))),
        Flavor::SemiInvertible => cell_sum_with(n, |n, k| Ok(semi_invertible_card(n, k.ell, k.v()))),
        Flavor::Invertible => cell_sum_with(n, |n, k| invertible_card(n, k.ell, &k.mults)),
    }
}

/// `B_n° = Σ_{λ ⊢ n} (q-1)^{v-1} q^{ℓ-v}` as a cell sum.
pub fn cell_sum_bcirc(n: u32) -> Result<LaurentPoly> {
    cell_sum_with(n, |_, k| Ok(q_minus_one().pow(k.v() - 1).shift((k.ell - k.v()) as i64)))
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(invalid("n must be at least 1"))
    } else {
        Ok(())
    }
}

/// `A_n(q)`: cell sum for small `n`, partition-by-length table beyond.
pub fn poly_a(n: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    if n <= CELL_SUM_DEFAULT_MAX_N {
        cell_sum(n, Flavor::Affine)
    } else {
        Ok(LengthTable::new(n).poly_a(n))
    }
}

/// `B_n(q) = (q-1) q^n B_n°(q)`.
pub fn poly_b(n: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    if n <= CELL_SUM_DEFAULT_MAX_N {
        cell_sum(n, Flavor::SemiInvertible)
    } else {
        Ok((&q_minus_one() * &poly_bcirc(n)?).shift(n as i64))
    }
}

/// `B_n°(q)`: cell sum for small `n`, the product formula beyond.
pub fn poly_bcirc(n: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    if n <= CELL_SUM_DEFAULT_MAX_N {
        cell_sum_bcirc(n)
    } else {
        LengthTable::new(n).poly_bcirc(n)
    }
}

/// `C_n(q)`: cell sum for small `n`, the `c_{n,i}` closed form beyond.
pub fn poly_c(n: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    if n <= CELL_SUM_DEFAULT_MAX_N {
        cell_sum(n, Flavor::Invertible)
    } else {
        poly_c_from_c(n)
    }
}

/// `P_n(q) = C_n(q)/(q-1)^2`.
pub fn poly_p(n: u32) -> Result<LaurentPoly> {
    poly_c(n)?.div_exact(&q_minus_one_squared())
}

/// Partitions of `m` with exactly `ℓ` parts, for all `m, ℓ <= max_n`.
pub struct LengthTable {
    rows: Vec<Vec<BigInt>>,
}

impl LengthTable {
    pub fn new(max_n: u32) -> Self {
        let n = max_n as usize;
        let mut rows = vec![vec![BigInt::zero(); n + 1]; n + 1];
        rows[0][0] = BigInt::one();
        for m in 1..=n {
            for l in 1..=m {
                // Either a part equals 1 (remove it), or all parts exceed 1
                // (subtract 1 from each).
                let v = &rows[m - 1][l - 1] + &rows[m - l][l];
                rows[m][l] = v;
            }
        }
        LengthTable { rows }
    }

    pub fn max_n(&self) -> u32 {
        (self.rows.len() - 1) as u32
    }

    pub fn count(&self, m: u32, ell: u32) -> &BigInt {
        &self.rows[m as usize][ell as usize]
    }

    /// `Σ_ℓ p(n, ℓ) q^ℓ`.
    pub fn length_poly(&self, m: u32) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, self.rows[m as usize].clone())
    }

    /// `A_n = q^n Σ_ℓ p(n, ℓ) q^ℓ`.
    pub fn poly_a(&self, n: u32) -> LaurentPoly {
        self.length_poly(n).shift(n as i64)
    }

    /// `B_n°` from `∏ (1-t^i)/(1-q t^i)`: multiply `Σ_ℓ p(m, ℓ) q^ℓ t^m` by
    /// Euler's pentagonal series and divide the `t^n` coefficient by `q - 1`.
    pub fn poly_bcirc(&self, n: u32) -> Result<LaurentPoly> {
        check_n(n)?;
        let mut acc = LaurentPoly::zero();
        for (g, sign) in pentagonal_terms(n) {
            let term = self.length_poly(n - g);
            if sign > 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc.div_exact(&q_minus_one())
    }
}

/// Exponents `g <= n` and signs of `∏ (1 - t^i) = Σ_k (-1)^k t^{k(3k-1)/2}`.
pub fn pentagonal_terms(n: u32) -> Vec<(u32, i32)> {
    let mut out = vec![(0, 1)];
    let mut k: i64 = 1;
    loop {
        let sign = if k % 2 == 1 { -1 } else { 1 };
        let g1 = k * (3 * k - 1) / 2;
        let g2 = k * (3 * k + 1) / 2;
        if g1 > n as i64 {
            break;
        }
        out.push((g1 as u32, sign));
        if g2 <= n as i64 {
            out.push((g2 as u32, sign));
        }
        k += 1;
    }
    out
}

/// The `k >= 1` with `n = (i+1) + (i+2) + ... + (i+k) = k(k+2i+1)/2`, if any.
pub fn is_trapezoidal(n: u64, i: u64) -> Option<u64> {
    let s = 2 * i as u128 + 1;
    let disc = 8 * n as u128 + s * s;
    let delta = disc.sqrt();
    if delta * delta != disc || delta <= s {
        return None;
    }
    let k = (delta - s) / 2;
    (k >= 1).then_some(k as u64)
}

fn sign(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `c_{n,i}` for `0 <= i <= n`: the coefficient of `q^{n±i}` in `C_n(q)`.
pub fn coeff_c(n: u32, i: u32) -> Result<i64> {
    check_n(n)?;
    if i > n {
        return Err(invalid(format!("c_(n,i) needs i <= n, got n = {n}, i = {i}")));
    }
    let (n, i) = (n as u64, i as u64);
    if i == 0 {
        return Ok(is_trapezoidal(n, 0).map_or(0, |k| 2 * sign(k)));
    }
    match (is_trapezoidal(n, i), is_trapezoidal(n, i - 1)) {
        (Some(_), Some(_)) => Err(Error::TheoremViolation(format!(
            "{n} is both {i}- and {}-trapezoidal",
            i - 1
        ))),
        (Some(k), None) => Ok(sign(k)),
        (None, Some(k)) => Ok(-sign(k)),
        (None, None) => Ok(0),
    }
}

/// `a_{n,i}`: the number of divisors `d` of `n` with
/// `(i + √(2n+i²))/2 < d <= i + √(2n+i²)`, decided without radicals.
/// Zero for `i >= n`.
pub fn coeff_a(n: u32, i: u32) -> u64 {
    if n == 0 || i >= n {
        return 0;
    }
    let (n, i) = (n as i128, i as i128);
    (1..=n)
        .filter(|d| n % d == 0)
        .filter(|&d| 2 * d - i > 0 && 2 * d * (d - i) > n)
        .filter(|&d| d <= i || d * (d - 2 * i) <= 2 * n)
        .count() as u64
}

/// The coefficient vectors of `P_n` and `C_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientTable {
    pub n: u32,
    /// `a_{n,0}, ..., a_{n,n-1}`.
    pub a: Vec<u64>,
    /// `c_{n,0}, ..., c_{n,n}`.
    pub c: Vec<i64>,
}

pub fn coefficient_table(n: u32) -> Result<CoefficientTable> {
    check_n(n)?;
    Ok(CoefficientTable {
        n,
        a: (0..n).map(|i| coeff_a(n, i)).collect(),
        c: (0..=n).map(|i| coeff_c(n, i)).collect::<Result<_>>()?,
    })
}

/// `P_n(q) = q^{n-1} (a_{n,0} + Σ_{i ≥ 1} a_{n,i} (q^i + q^{-i}))`.
pub fn poly_p_from_a(n: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    let c = (n - 1) as i64;
    let mut terms = vec![(c, BigInt::from(coeff_a(n, 0)))];
    for i in 1..n {
        let a = BigInt::from(coeff_a(n, i));
        terms.push((c + i as i64, a.clone()));
        terms.push((c - i as i64, a));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// `C_n(q) = c_{n,0} q^n + Σ_{i ≥ 1} c_{n,i} (q^{n+i} + q^{n-i})`.
pub fn poly_c_from_c(n: u32) -> Result<LaurentPoly> {
    poly_c_from_coeffs(n, coeff_c)
}

/// The palindromic assembly of `C_n` from any coefficient function.
pub fn poly_c_from_coeffs(n: u32, coeff: impl Fn(u32, u32) -> Result<i64>) -> Result<LaurentPoly> {
    check_n(n)?;
    let c = n as i64;
    let mut terms = vec![(c, BigInt::from(coeff(n, 0)?))];
    for i in 1..=n {
        let v = BigInt::from(coeff(n, i)?);
        terms.push((c + i as i64, v.clone()));
        terms.push((c - i as i64, v));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// `P_n(q)` recovered from the signed interval sum for `P_n(q^2)` over the
/// factorizations `2n = km` with `k < m` of opposite parity.
pub fn poly_p_even_form(n: u32) -> Result<LaurentPoly> {
    poly_p_squared_even_form(n)?.compress_exponents(2)
}

/// `P_n(q^2) = Σ (-1)^{k-1} H([2n-1+k-m, 2n-3+m-k])`, where `H(I)` sums
/// `q^{2j}` over the even integers `2j` in `I`.
pub fn poly_p_squared_even_form(n: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    let two_n = 2 * n as i64;
    let mut terms: Vec<(i64, i64)> = Vec::new();
    for k in 1..=two_n {
        if two_n % k != 0 {
            continue;
        }
        let m = two_n / k;
        if k >= m || (k + m) % 2 == 0 {
            continue;
        }
        let s = if k % 2 == 1 { 1 } else { -1 };
        let lo = two_n - 1 + k - m;
        let hi = two_n - 3 + m - k;
        let first_even = lo + lo.rem_euclid(2);
        terms.extend((first_even..=hi).step_by(2).map(|e| (e, s)));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// Observed valuations of `B_n°` against the conjectured word
/// `0 ∏_{n ≥ 1} 0 1^{2n} 0 2^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationWord {
    pub observed: Vec<u8>,
    pub conjectured: Vec<u8>,
    pub agrees: bool,
    /// 1-based `n` of the first disagreement.
    pub first_disagreement: Option<usize>,
}

impl ValuationWord {
    pub fn observed_string(&self) -> String {
        self.observed.iter().map(|d| char::from(b'0' + d)).collect()
    }
}

/// The first `len` letters of `0 ∏_{n ≥ 1} 0 1^{2n} 0 2^n`.
pub fn conjectured_valuation_word(len: usize) -> Vec<u8> {
    let mut out = vec![0];
    let mut block = 1;
    while out.len() < len {
        out.push(0);
        out.extend(std::iter::repeat_n(1, 2 * block));
        out.push(0);
        out.extend(std::iter::repeat_n(2, block));
        block += 1;
    }
    out.truncate(len);
    out
}

/// Valuations `v_n` of `B_n°(q)` for `n = 1..=len`.
pub fn valuation_word(len: u32) -> Result<ValuationWord> {
    check_n(len)?;
    let table = LengthTable::new(len);
    let mut observed = Vec::with_capacity(len as usize);
    for n in 1..=len {
        let b = if n <= CELL_SUM_DEFAULT_MAX_N {
            cell_sum_bcirc(n)?
        } else {
            table.poly_bcirc(n)?
        };
        let v = b
            .valuation()
            .ok_or_else(|| Error::TheoremViolation(format!("B_{n}° vanishes")))?;
        observed.push(u8::try_from(v).map_err(|_| Error::Internal(format!("valuation {v} out of range")))?);
    }
    let conjectured = conjectured_valuation_word(len as usize);
    let first_disagreement = observed
        .iter()
        .zip(&conjectured)
        .position(|(a, b)| a != b)
        .map(|k| k + 1);
    Ok(ValuationWord {
        agrees: first_disagreement.is_none(),
        observed,
        conjectured,
        first_disagreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::enumerate_partitions;

    fn lp(c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_i64s(0, c)
    }

    #[test]
    fn cards_for_n2() {
        let ps = enumerate_partitions(2).unwrap();
        let (two, ones) = (&ps[0], &ps[1]);
        assert_eq!(cell_card_affine(ones), LaurentPoly::monomial(1, 4));
        assert_eq!(cell_card_affine(two), LaurentPoly::monomial(1, 3));
        assert_eq!(cell_card_semi_invertible(ones), lp(&[0, 0, 0, -1, 1]));
        assert_eq!(cell_card_semi_invertible(two), lp(&[0, 0, -1, 1]));
        assert_eq!(cell_card_invertible(ones).unwrap(), &q_minus_one_squared() * &lp(&[1, 0, 1]));
        assert_eq!(cell_card_invertible(two).unwrap(), q_minus_one_squared().shift(1));
    }

    #[test]
    fn remark_cell_with_negative_coefficients() {
        let lambda = Partition::from_d_sequence(&[1, 2]).unwrap();
        assert_eq!(cell_poly_p(&lambda).unwrap(), lp(&[0, 1, -2, 2, -2, 1]));
    }

    #[test]
    fn rectangular_cells() {
        for n in 1..=12u32 {
            for d in (1..=n).filter(|d| n % d == 0) {
                // d parts of size n/d.
                let lambda = Partition::rectangular(n / d, d).unwrap();
                let expect = q_squared_bracket(d).unwrap().shift((n - d) as i64);
                assert_eq!(cell_poly_p(&lambda).unwrap(), expect);
                assert_eq!(
                    cell_card_semi_invertible(&lambda),
                    q_minus_one().shift((n + d - 1) as i64)
                );
            }
        }
    }

    #[test]
    fn class_sums_match_literal_sums() {
        for n in 1..=14 {
            for flavor in Flavor::ALL {
                let mut literal = LaurentPoly::zero();
                for lambda in enumerate_partitions(n).unwrap() {
                    literal += cell_count(&lambda, flavor).unwrap().value;
                }
                assert_eq!(cell_sum(n, flavor).unwrap(), literal, "n = {n}, {flavor}");
            }
        }
    }

    #[test]
    fn class_counts_add_up() {
        let total: u64 = cell_classes(30).unwrap().values().sum();
        assert_eq!(total, 5604);
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(poly_c(6).unwrap(), lp(&[1, -1, 0, 0, 0, 1, -2, 1, 0, 0, 0, -1, 1]));
        assert_eq!(poly_p(5).unwrap(), lp(&[1, 1, 1, 0, 0, 0, 1, 1, 1]));
        assert_eq!(poly_bcirc(5).unwrap(), lp(&[-1, 0, 1, 1, 1]));
        assert_eq!(poly_a(6).unwrap(), LaurentPoly::from_i64s(7, &[1, 3, 3, 2, 1, 1]));
        assert_eq!(poly_b(2).unwrap(), lp(&[0, 0, -1, 0, 1]));
        assert!(poly_c(0).is_err());
    }

    #[test]
    fn trapezoidal_numbers() {
        assert_eq!(is_trapezoidal(3, 0), Some(2));
        assert_eq!(is_trapezoidal(5, 1), Some(2));
        assert_eq!(is_trapezoidal(4, 1), None);
        assert_eq!(is_trapezoidal(1, 1), None);
        for n in 1..=200u64 {
            for i in 0..=n {
                let direct = (1..=n).find(|&k| k * (k + 2 * i + 1) / 2 == n);
                assert_eq!(is_trapezoidal(n, i), direct, "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(coeff_c(1, 0).unwrap(), -2);
        assert_eq!(coeff_c(6, 0).unwrap(), -2);
        assert_eq!(coeff_c(5, 2).unwrap(), -1);
        assert!(coeff_c(3, 4).is_err());
        assert_eq!(coeff_a(6, 0), 2);
        assert_eq!(coeff_a(2, 0), 1);
        assert_eq!(coeff_a(2, 1), 1);
        assert_eq!(coeff_a(5, 5), 0);
        let t = coefficient_table(4).unwrap();
        assert_eq!(t.a.len(), 4);
        assert_eq!(t.c.len(), 5);
        assert_eq!(*t.c.last().unwrap(), 1);
    }

    #[test]
    fn closed_forms_small() {
        assert_eq!(poly_c_from_c(3).unwrap(), lp(&[1, -1, -1, 2, -1, -1, 1]));
        assert_eq!(poly_p_from_a(1).unwrap(), LaurentPoly::one());
        assert_eq!(poly_p_squared_even_form(2).unwrap(), lp(&[1, 0, 1, 0, 1]));
        assert_eq!(poly_p_even_form(1).unwrap(), LaurentPoly::one());
        for n in 1..=20 {
            let p = poly_p(n).unwrap();
            assert_eq!(poly_p_from_a(n).unwrap(), p, "n = {n}");
            assert_eq!(poly_p_even_form(n).unwrap(), p, "n = {n}");
            assert_eq!(poly_c_from_c(n).unwrap(), poly_c(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn length_table_routes() {
        let t = LengthTable::new(30);
        for n in 1..=30 {
            assert_eq!(t.poly_a(n), cell_sum(n, Flavor::Affine).unwrap());
            assert_eq!(t.poly_bcirc(n).unwrap(), cell_sum_bcirc(n).unwrap());
        }
        let b = cell_sum(9, Flavor::SemiInvertible).unwrap();
        assert_eq!(b, (&q_minus_one() * &cell_sum_bcirc(9).unwrap()).shift(9));
    }

    #[test]
    fn valuation_prefix() {
        let w = valuation_word(12).unwrap();
        assert_eq!(&w.observed[..6], &[0, 0, 1, 1, 0, 2]);
        assert_eq!(w.observed[4], 0);
        assert_eq!(w.observed[11], 0);
        assert!(w.agrees);
        assert_eq!(&conjectured_valuation_word(14), &[0, 0, 1, 1, 0, 2, 0, 1, 1, 1, 1, 0, 2, 2]);
    }

    #[test]
    fn flavor_parsing() {
        assert_eq!("invertible".parse::<Flavor>().unwrap(), Flavor::Invertible);
        assert_eq!("none".parse::<Flavor>().unwrap(), Flavor::Affine);
        assert!("bogus".parse::<Flavor>().is_err());
    }
}

//! Generating functions as truncated power series: the infinite products for
//! `A`, `B`, `C`, the coefficient series for `a_{n,i}` and `c_{n,i}`, eta
//! quotients and theta series.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebra::{series_product, CyclotomicInt, LaurentPoly, Partition, RootOrder, TruncSeries};
use crate::census;
use crate::error::{invalid, Error, Result};

type LSeries = TruncSeries<LaurentPoly>;
type ZSeries = TruncSeries<BigInt>;

fn lmono(c: i64, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(c, k)
}

fn one_minus_t_power<R: crate::algebra::Ring>(order: usize, i: usize) -> TruncSeries<R> {
    TruncSeries::one_minus(order, R::one(), i)
}

/// `∏_{i ≥ 1} (1 - t^i)^2 / (1 - (q + 1/q) t^i + t^{2i})`; the coefficient of
/// `t^n` is `C_n(q)/q^n`.
pub fn gf_c(order: usize) -> Result<LSeries> {
    let trace = &lmono(1, 1) + &lmono(1, -1);
    let mut factors = Vec::new();
    for i in 1..=order {
        factors.push((one_minus_t_power(order, i), 2));
        let den = TruncSeries::from_terms(order, [(0, LaurentPoly::one()), (i, -&trace), (2 * i, LaurentPoly::one())]);
        factors.push((den, -1));
    }
    series_product(&factors, order)
}

/// `∏_{i ≥ 1} (1 - t^i)/(1 - q t^i)`; the coefficient of `t^n` is
/// `(q - 1) B_n°(q)`.
pub fn gf_b(order: usize) -> Result<LSeries> {
    let mut factors = Vec::new();
    for i in 1..=order {
        factors.push((one_minus_t_power(order, i), 1));
        factors.push((TruncSeries::one_minus(order, LaurentPoly::q(), i), -1));
    }
    series_product(&factors, order)
}

/// `∏_{i ≥ 1} 1/(1 - q^{i+1} s^i)`; the coefficient of `s^n` is `A_n(q)`.
pub fn gf_a(order: usize) -> Result<LSeries> {
    let factors: Vec<_> = (1..=order)
        .map(|i| (TruncSeries::one_minus(order, lmono(1, i as i64 + 1), i), -1))
        .collect();
    series_product(&factors, order)
}

/// Both sides of the factor of the rectangular-cell product for part size
/// `i`: `1 + Σ_e card C^{x,y}_{i^e} s^e` and
/// `(1 - q^i s)^2 / ((1 - q^{i+1} s)(1 - q^{i-1} s))`.
pub fn gf_rect_factor(i: u32, order: usize) -> Result<(LSeries, LSeries)> {
    if i == 0 {
        return Err(invalid("part size must be at least 1"));
    }
    let mut lhs = vec![LaurentPoly::one()];
    for e in 1..=order as u32 {
        lhs.push(census::cell_card_invertible(&Partition::rectangular(i, e)?)?);
    }
    let lhs = TruncSeries::from_coeffs(order, lhs);
    let i = i as i64;
    let rhs = series_product(
        &[
            (TruncSeries::one_minus(order, lmono(1, i), 1), 2),
            (TruncSeries::one_minus(order, lmono(1, i + 1), 1), -1),
            (TruncSeries::one_minus(order, lmono(1, i - 1), 1), -1),
        ],
        order,
    )?;
    Ok((lhs, rhs))
}

/// `Σ_{k ≥ 1} (-1)^{k-1} t^{k(k+1)/2 + ki} / (1 - t^k)`; the coefficient of
/// `t^n` is `a_{n,i}`.
pub fn gf_a_coeff(i: u32, order: usize) -> Result<ZSeries> {
    let mut acc = ZSeries::zero(order);
    let i = i as usize;
    let mut k = 1;
    while k * (k + 1) / 2 + k * i <= order {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let num = ZSeries::monomial(order, BigInt::from(sign), k * (k + 1) / 2 + k * i);
        acc = &acc + &num.div(&one_minus_t_power(order, k))?;
        k += 1;
    }
    Ok(acc)
}

/// `Σ_n c_{n,i} t^n`: `2 Σ_k (-1)^k t^{k(k+1)/2}` for `i = 0`, and
/// `Σ_k (-1)^k (t^{k(k+2i+1)/2} - t^{k(k+2i-1)/2})` for `i ≥ 1`.
pub fn gf_c_coeff(i: u32, order: usize) -> ZSeries {
    let i = i as usize;
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    for k in 1..=order {
        let sign: i64 = if k % 2 == 0 { 1 } else { -1 };
        if i == 0 {
            terms.push((k * (k + 1) / 2, BigInt::from(2 * sign)));
        } else {
            terms.push((k * (k + 2 * i + 1) / 2, BigInt::from(sign)));
            terms.push((k * (k + 2 * i - 1) / 2, BigInt::from(-sign)));
        }
    }
    ZSeries::from_terms(order, terms)
}

/// `Σ_{k ≥ 1} (-1)^{k-1} t^{k(k+1)/2} (1 + t^k) / ((1 - q t^k)(1 - t^k/q))`;
/// the coefficient of `t^n` is `P_n(q)/q^{n-1}`.
pub fn gf_p_closed(order: usize) -> Result<LSeries> {
    let mut acc = LSeries::zero(order);
    let mut k = 1;
    while k * (k + 1) / 2 <= order {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let tri = k * (k + 1) / 2;
        let num = LSeries::from_terms(order, [(tri, lmono(sign, 0)), (tri + k, lmono(sign, 0))]);
        let term = num
            .div(&TruncSeries::one_minus(order, lmono(1, 1), k))?
            .div(&TruncSeries::one_minus(order, lmono(1, -1), k))?;
        acc = &acc + &term;
        k += 1;
    }
    Ok(acc)
}

/// A finite product `∏ η(t^m)^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaQuotient {
    /// `(m, e)` pairs.
    pub factors: Vec<(u32, i32)>,
}

impl EtaQuotient {
    pub fn new(factors: Vec<(u32, i32)>) -> Self {
        EtaQuotient { factors }
    }

    /// `24 ×` the exponent of the `t^{Σ me/24}` prefactor.
    pub fn prefactor_numerator(&self) -> i64 {
        self.factors.iter().map(|&(m, e)| m as i64 * e as i64).sum()
    }

    /// The eta quotient matching `C_n(ω)/ω^n` for `ω` of order `d`.
    pub fn for_root_order(d: u32) -> Result<Self> {
        Ok(EtaQuotient::new(match d {
            2 => vec![(1, 4), (2, -2)],
            3 => vec![(1, 3), (3, -1)],
            4 => vec![(1, 2), (2, 1), (4, -1)],
            6 => vec![(1, 1), (2, 1), (3, 1), (6, -1)],
            _ => return Err(invalid(format!("d must be 2, 3, 4 or 6, got {d}"))),
        }))
    }

    /// `η(q^2)^3 η(q^4)^3 / (η(q)^2 η(q^8)^2)`, the series of `|a_4(n)|`.
    pub fn abs_a4() -> Self {
        EtaQuotient::new(vec![(2, 3), (4, 3), (1, -2), (8, -2)])
    }
}

/// Expands `t^{Σme/24} ∏_{(m,e)} ∏_{n ≥ 1} (1 - t^{mn})^e`.
pub fn eta_quotient_expand(eta: &EtaQuotient, order: usize) -> Result<ZSeries> {
    let num = eta.prefactor_numerator();
    if num % 24 != 0 || num < 0 {
        return Err(invalid(format!(
            "prefactor exponent {num}/24 is not a nonnegative integer"
        )));
    }
    let shift = (num / 24) as usize;
    let mut factors = Vec::new();
    for &(m, e) in &eta.factors {
        if m == 0 {
            return Err(invalid("eta argument multiplier must be positive"));
        }
        let mut k = m as usize;
        while k <= order {
            factors.push((one_minus_t_power(order, k), e as i64));
            k += m as usize;
        }
    }
    Ok(series_product(&factors, order)?.shift(shift))
}

/// `φ(q) = Σ_{n ∈ Z} q^{n^2}`.
pub fn theta_phi(order: usize) -> ZSeries {
    let mut terms = vec![(0, BigInt::one())];
    let mut n = 1;
    while n * n <= order {
        terms.push((n * n, BigInt::from(2)));
        n += 1;
    }
    ZSeries::from_terms(order, terms)
}

/// `ψ(q) = Σ_{n ≥ 0} q^{n(n+1)/2}`.
pub fn theta_psi(order: usize) -> ZSeries {
    let mut terms = Vec::new();
    let mut n = 0;
    while n * (n + 1) / 2 <= order {
        terms.push((n * (n + 1) / 2, BigInt::one()));
        n += 1;
    }
    ZSeries::from_terms(order, terms)
}

/// Every coefficient of `C_n(ω)/ω^n`, `n <= order`, computed three ways:
/// specializing the Laurent coefficients of [`gf_c`] at `ω`, expanding the
/// product directly over `Z[ω]`, and expanding the matching eta quotient.
/// The coefficients must be rational integers and all three must agree.
pub fn gf_root_of_unity(d: u32, order: usize) -> Result<ZSeries> {
    let laurent = gf_c(order)?;
    let eta = eta_quotient_expand(&EtaQuotient::for_root_order(d)?, order)?;
    let specialized: ZSeries = if d == 2 {
        laurent.try_map(|c| c.eval_i64(-1))?
    } else {
        let root = RootOrder::from_u32(d)?;
        let direct = root_of_unity_product(root, order)?;
        let via_laurent = laurent.map(|c| c.eval_at_root(root));
        if let Some(k) = via_laurent.first_mismatch(&direct) {
            return Err(Error::TheoremViolation(format!(
                "d = {d}: specialized coefficient of t^{k} differs from the Z[ω] product"
            )));
        }
        via_laurent.try_map(|c| {
            c.as_integer().cloned().ok_or_else(|| {
                Error::TheoremViolation(format!("d = {d}: coefficient {c} is not a rational integer"))
            })
        })?
    };
    if let Some(k) = specialized.first_mismatch(&eta) {
        return Err(Error::TheoremViolation(format!(
            "d = {d}: coefficient of t^{k} differs from the eta quotient"
        )));
    }
    Ok(specialized)
}

/// `∏ (1 - t^i)^2 / ((1 - ω t^i)(1 - ω̄ t^i))` over `Z[ω]`.
pub fn root_of_unity_product(root: RootOrder, order: usize) -> Result<TruncSeries<CyclotomicInt>> {
    let w = CyclotomicInt::omega(root);
    let wbar = w.conj();
    let mut factors = Vec::new();
    for i in 1..=order {
        factors.push((one_minus_t_power(order, i), 2));
        factors.push((TruncSeries::one_minus(order, w.clone(), i), -1));
        factors.push((TruncSeries::one_minus(order, wbar.clone(), i), -1));
    }
    series_product(&factors, order)
}

/// Outcome of the checks tying `a_4(n)` to `φ(-q)φ(-q^2)`, `φ(q)φ(q^2)` and
/// `r'(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SomosReport {
    pub order: usize,
    /// `1 + Σ a_4(n) q^n = φ(-q) φ(-q^2)`.
    pub signed_product: bool,
    /// `1 + Σ |a_4(n)| q^n = φ(q) φ(q^2)`.
    pub abs_product: bool,
    /// `|a_4(n)| = r'(n)`.
    pub r_prime: bool,
    /// `a_4(n) = (-1)^{⌊(n+1)/2⌋} |a_4(n)|`.
    pub sign_rule: bool,
    /// `1 + Σ |a_4(n)| q^n` equals its eta-quotient expansion.
    pub abs_eta: bool,
    pub first_mismatch: Option<String>,
}

impl SomosReport {
    pub fn pass(&self) -> bool {
        self.signed_product && self.abs_product && self.r_prime && self.sign_rule && self.abs_eta
    }
}

pub fn somos_identity_check(order: usize) -> Result<SomosReport> {
    let a4 = gf_root_of_unity(4, order)?;
    somos_identity_check_on(&a4)
}

/// The same checks against a supplied `1 + Σ a_4(n) q^n`.
pub fn somos_identity_check_on(a4: &ZSeries) -> Result<SomosReport> {
    let order = a4.order();
    let phi = theta_phi(order);
    let phi_neg = phi.negate_variable();
    let signed = phi_neg.mul(&phi_neg.substitute_power(2));
    let absolute = phi.mul(&phi.substitute_power(2));
    let abs_a4 = a4.map(|c| c.abs());
    let abs_eta = eta_quotient_expand(&EtaQuotient::abs_a4(), order)?;
    let mut first_mismatch = None;
    let mut note = |what: &str, k: Option<usize>| {
        if let (None, Some(k)) = (&first_mismatch, k) {
            first_mismatch = Some(format!("{what} at n = {k}"));
        }
        k.is_none()
    };
    let signed_product = note("φ(-q)φ(-q^2)", a4.first_mismatch(&signed));
    let abs_product = note("φ(q)φ(q^2)", abs_a4.first_mismatch(&absolute));
    let r_bad = (1..=order).find(|&n| abs_a4.coeff(n) != &BigInt::from(crate::arith::r_prime(n as u64)));
    let r_prime = note("r'(n)", r_bad);
    let sign_bad = (1..=order).find(|&n| {
        let s = if n.div_ceil(2) % 2 == 0 { 1 } else { -1 };
        a4.coeff(n) != &(abs_a4.coeff(n) * BigInt::from(s))
    });
    let sign_rule = note("sign rule", sign_bad);
    let abs_eta_ok = note("eta quotient for |a_4|", abs_a4.first_mismatch(&abs_eta));
    Ok(SomosReport {
        order,
        signed_product,
        abs_product,
        r_prime,
        sign_rule,
        abs_eta: abs_eta_ok,
        first_mismatch,
    })
}

/// The empirically observed property of `a_6`: `a_6(n) = 0` whenever `n` is
/// not a sum of two squares. Returns the `n` where it fails (reported, not
/// asserted).
pub fn a6_zero_scan(order: usize) -> Result<Vec<usize>> {
    let a6 = gf_root_of_unity(6, order)?;
    Ok((1..=order)
        .filter(|&n| crate::arith::r2(n as u64) == 0 && !a6.coeff(n).is_zero())
        .collect())
}

/// `∏ (1 - t^i)/(1 + t^i)` as an integer series.
pub fn gauss_product(order: usize) -> Result<ZSeries> {
    let mut factors = Vec::new();
    for i in 1..=order {
        factors.push((one_minus_t_power(order, i), 1));
        factors.push((TruncSeries::one_minus(order, BigInt::from(-1), i), -1));
    }
    series_product(&factors, order)
}

/// `Σ_{k ∈ Z} (-1)^k t^{k^2}`.
pub fn gauss_sum(order: usize) -> ZSeries {
    theta_phi(order).negate_variable()
}

/// `∏ 1/(1 - s^{2m-1})` and `∏ (1 + s^i)`.
pub fn euler_pair(order: usize) -> Result<(ZSeries, ZSeries)> {
    let odd: Vec<_> = (1..=order)
        .step_by(2)
        .map(|k| (one_minus_t_power(order, k), -1))
        .collect();
    let distinct: Vec<_> = (1..=order)
        .map(|k| (TruncSeries::one_minus(order, BigInt::from(-1), k), 1))
        .collect();
    Ok((series_product(&odd, order)?, series_product(&distinct, order)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(order: usize, c: &[i64]) -> ZSeries {
        ZSeries::from_i64s(order, c)
    }

    #[test]
    fn gf_c_coefficients() {
        let s = gf_c(6).unwrap();
        assert_eq!(s.coeff(0), &LaurentPoly::one());
        assert_eq!(s.coeff(3), &LaurentPoly::from_i64s(-3, &[1, -1, -1, 2, -1, -1, 1]));
        assert_eq!(s.coeff(6), &census::poly_c(6).unwrap().shift(-6));
    }

    #[test]
    fn gf_b_and_a() {
        let b = gf_b(5).unwrap();
        assert_eq!(b.coeff(2), &LaurentPoly::from_i64s(0, &[-1, 0, 1]));
        let a = gf_a(4).unwrap();
        assert_eq!(a.coeff(1), &lmono(1, 2));
        assert_eq!(a.coeff(4), &LaurentPoly::from_i64s(5, &[1, 2, 1, 1]));
        let at_minus_one = gf_a(8).unwrap().try_map(|c| c.eval_i64(-1)).unwrap();
        assert_eq!(at_minus_one.coeff(8), &BigInt::from(2));
    }

    #[test]
    fn rect_factors() {
        for i in 1..=4 {
            let (l, r) = gf_rect_factor(i, 6).unwrap();
            assert_eq!(l, r, "i = {i}");
        }
        let (l, _) = gf_rect_factor(1, 2).unwrap();
        assert_eq!(l.coeff(1), &LaurentPoly::from_i64s(0, &[1, -2, 1]));
    }

    #[test]
    fn coefficient_series() {
        let c0 = gf_c_coeff(0, 10);
        assert_eq!(c0, z(10, &[0, -2, 0, 2, 0, 0, -2, 0, 0, 0, 2]));
        assert_eq!(gf_a_coeff(0, 8).unwrap().coeff(6), &BigInt::from(2));
        assert!(gf_a_coeff(5, 5).unwrap().coeffs().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn p_closed_form() {
        let s = gf_p_closed(4).unwrap();
        assert_eq!(s.coeff(1), &LaurentPoly::one());
        assert_eq!(s.coeff(2), &LaurentPoly::from_i64s(-1, &[1, 1, 1]));
        assert_eq!(s.coeff(4), &LaurentPoly::from_i64s(-3, &[1; 7]));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(gf_root_of_unity(2, 5).unwrap(), z(5, &[1, -4, 4, 0, 4, -8]));
        let a3: Vec<_> = gf_root_of_unity(3, 4).unwrap().coeffs().iter().map(|c| c.abs()).collect();
        assert_eq!(a3, [1, 3, 0, 6, 3].map(BigInt::from));
        let a6: Vec<_> = gf_root_of_unity(6, 5).unwrap().coeffs().iter().map(|c| c.abs()).collect();
        assert_eq!(a6, [1, 1, 2, 0, 1, 4].map(BigInt::from));
        assert!(gf_root_of_unity(5, 3).is_err());
    }

    #[test]
    fn eta_quotients() {
        let e3 = eta_quotient_expand(&EtaQuotient::for_root_order(3).unwrap(), 4).unwrap();
        assert_eq!(e3, z(4, &[1, -3, 0, 6, -3]));
        assert_eq!(eta_quotient_expand(&EtaQuotient::new(vec![]), 3).unwrap(), ZSeries::one(3));
        assert!(eta_quotient_expand(&EtaQuotient::new(vec![(1, 1)]), 3).is_err());
        // η(t)^24 carries t^1.
        let delta = eta_quotient_expand(&EtaQuotient::new(vec![(1, 24)]), 3).unwrap();
        assert_eq!(delta, z(3, &[0, 1, -24, 252]));
    }

    #[test]
    fn thetas() {
        assert_eq!(theta_phi(4), z(4, &[1, 2, 0, 0, 2]));
        assert_eq!(theta_psi(6), z(6, &[1, 1, 0, 1, 0, 0, 1]));
        let order = 20;
        let lhs = &theta_phi(order).substitute_power(4) + &theta_psi(order).substitute_power(8).shift(1).scale(&BigInt::from(2));
        assert_eq!(lhs, theta_phi(order));
    }

    #[test]
    fn somos() {
        let r = somos_identity_check(24).unwrap();
        assert!(r.pass(), "{r:?}");
        let a4: Vec<_> = gf_root_of_unity(4, 6).unwrap().coeffs().iter().map(|c| c.abs()).collect();
        assert_eq!(a4, [1, 2, 2, 4, 2, 0, 4].map(BigInt::from));
    }

    #[test]
    fn gauss_and_euler() {
        assert_eq!(gauss_product(9).unwrap(), z(9, &[1, -2, 0, 0, 2, 0, 0, 0, 0, -2]));
        assert_eq!(gauss_product(30).unwrap(), gauss_sum(30));
        let (a, b) = euler_pair(12).unwrap();
        assert_eq!(a, b);
    }
}

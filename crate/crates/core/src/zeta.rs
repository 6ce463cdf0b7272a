//! The local zeta function of the torus Hilbert scheme, kept in factored
//! form `∏_w (1 - q^w t)^{-c_w}`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{format_rational, series_product, Rational, TruncSeries};
use crate::census;
use crate::error::{invalid, Error, Result};

/// `∏_w (1 - q^w t)^{-c}` over the listed `(w, c)`; zero exponents are
/// omitted and weights increase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaFactorization {
    pub n: u32,
    pub factors: Vec<(u32, i64)>,
}

pub fn zeta_factorization(n: u32) -> Result<ZetaFactorization> {
    zeta_factorization_from(n, census::coeff_c)
}

/// The factorization built from any coefficient function `(n, i) ↦ c_{n,i}`.
pub fn zeta_factorization_from(n: u32, coeff: impl Fn(u32, u32) -> Result<i64>) -> Result<ZetaFactorization> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let mut factors = Vec::new();
    for w in 0..=2 * n {
        let i = w.abs_diff(n);
        let c = coeff(n, i)?;
        if c != 0 {
            factors.push((w, c));
        }
    }
    let z = ZetaFactorization { n, factors };
    z.check_symmetry()?;
    Ok(z)
}

fn t_factor(w: u32) -> String {
    match w {
        0 => "(1-t)".to_string(),
        1 => "(1-q t)".to_string(),
        _ => format!("(1-q^{w} t)"),
    }
}

fn product_string(items: &[(String, i64)]) -> String {
    let mut s = String::new();
    for (f, e) in items {
        s.push_str(f);
        if *e != 1 {
            let _ = write!(s, "^{e}");
        }
    }
    s
}

fn fraction_string(num: &[(String, i64)], den: &[(String, i64)]) -> String {
    let top = if num.is_empty() { "1".to_string() } else { product_string(num) };
    match den.len() {
        0 => top,
        1 if den[0].1 == 1 => format!("{top}/{}", product_string(den)),
        _ => format!("{top}/({})", product_string(den)),
    }
}

impl ZetaFactorization {
    /// Weights `w` with `c_w < 0`, as `(w, -c_w)`: the numerator factors.
    pub fn numerator(&self) -> Vec<(u32, i64)> {
        self.factors.iter().filter(|f| f.1 < 0).map(|&(w, c)| (w, -c)).collect()
    }

    /// Weights with `c_w > 0`: the denominator factors.
    pub fn denominator(&self) -> Vec<(u32, i64)> {
        self.factors.iter().filter(|f| f.1 > 0).copied().collect()
    }

    /// `w` and `2n - w` must carry the same exponent.
    pub fn check_symmetry(&self) -> Result<()> {
        let two_n = 2 * self.n;
        for &(w, c) in &self.factors {
            let mirror = self.factors.iter().find(|f| f.0 == two_n - w).map(|f| f.1);
            if mirror != Some(c) {
                return Err(Error::TheoremViolation(format!(
                    "weight {w} has exponent {c} but weight {} has {mirror:?}",
                    two_n - w
                )));
            }
        }
        Ok(())
    }

    /// Renders as `(1-q t)(1-q^2 t)/((1-t)(1-q^3 t)^2)`.
    pub fn render(&self) -> String {
        let num: Vec<_> = self.numerator().into_iter().map(|(w, e)| (t_factor(w), e)).collect();
        let den: Vec<_> = self.denominator().into_iter().map(|(w, e)| (t_factor(w), e)).collect();
        fraction_string(&num, &den)
    }

    pub fn to_json(&self) -> Value {
        let list = |v: Vec<(u32, i64)>| -> Vec<Value> {
            v.into_iter().map(|(w, e)| json!({"weight": w, "exponent": e})).collect()
        };
        json!({
            "n": self.n,
            "factors": list(self.factors.clone()),
            "numerator": list(self.numerator()),
            "denominator": list(self.denominator()),
        })
    }

    /// Exact value at `(q, t)`; a vanishing denominator factor is rejected.
    pub fn eval(&self, q: &BigInt, t: &Rational) -> Result<Rational> {
        let mut acc = Rational::one();
        for &(w, c) in &self.factors {
            let base = Rational::one() - Rational::from_integer(q.pow(w)) * t;
            if base.is_zero() {
                if c > 0 {
                    return Err(invalid(format!(
                        "t = {} is a pole of the factor {} at q = {q}",
                        format_rational(t),
                        t_factor(w)
                    )));
                }
                return Ok(Rational::zero());
            }
            acc *= crate::algebra::rational::pow_i64(&base, -c)?;
        }
        Ok(acc)
    }

    /// Expansion in `t` over the rationals, to `t^order`.
    pub fn expand(&self, q: &BigInt, order: usize) -> Result<TruncSeries<Rational>> {
        let factors: Vec<_> = self
            .factors
            .iter()
            .map(|&(w, c)| {
                let f = TruncSeries::one_minus(order, Rational::from_integer(q.pow(w)), 1);
                (f, -c)
            })
            .collect();
        series_product(&factors, order)
    }

    /// `ζ(s - w)^c` for every factor: the Hasse–Weil assembly.
    pub fn hasse_weil(&self) -> Result<HasseWeilFactors> {
        let hw = HasseWeilFactors {
            n: self.n,
            factors: self.factors.iter().map(|&(w, c)| (w as i64, c)).collect(),
        };
        hw.check_symmetry()?;
        Ok(hw)
    }
}

/// `∏ ζ(s - s_0)^c` over the listed `(s_0, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseWeilFactors {
    pub n: u32,
    pub factors: Vec<(i64, i64)>,
}

pub fn hasse_weil_factors(n: u32) -> Result<HasseWeilFactors> {
    zeta_factorization(n)?.hasse_weil()
}

fn zeta_factor(shift: i64) -> String {
    if shift == 0 {
        "ζ(s)".to_string()
    } else {
        format!("ζ(s-{shift})")
    }
}

impl HasseWeilFactors {
    /// The shift multiset must be symmetric under `s_0 ↦ 2n - s_0`.
    pub fn check_symmetry(&self) -> Result<()> {
        let two_n = 2 * self.n as i64;
        let mut a: Vec<_> = self.factors.clone();
        let mut b: Vec<_> = self.factors.iter().map(|&(s, c)| (two_n - s, c)).collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(Error::TheoremViolation(format!(
                "Hasse–Weil shifts for n = {} are not symmetric about {}",
                self.n, self.n
            )));
        }
        Ok(())
    }

    /// Renders as `ζ(s-3)^2 ζ(s) ζ(s-6)/(ζ(s-1) ζ(s-2) ζ(s-4) ζ(s-5))`: the
    /// central factor first, then increasing shifts.
    pub fn render(&self) -> String {
        let n = self.n as i64;
        let mut ordered = self.factors.clone();
        ordered.sort_by_key(|&(s, _)| (s != n, s));
        let pick = |positive: bool| -> Vec<String> {
            ordered
                .iter()
                .filter(|f| (f.1 > 0) == positive)
                .map(|&(s, c)| {
                    let e = c.abs();
                    if e == 1 {
                        zeta_factor(s)
                    } else {
                        format!("{}^{e}", zeta_factor(s))
                    }
                })
                .collect()
        };
        let num = pick(true);
        let den = pick(false);
        let top = if num.is_empty() { "1".to_string() } else { num.join(" ") };
        match den.len() {
            0 => top,
            1 => format!("{top}/{}", den[0]),
            _ => format!("{top}/({})", den.join(" ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpandReport {
    pub n: u32,
    pub q: u64,
    pub order: usize,
    pub pass: bool,
    pub first_mismatch: Option<usize>,
}

/// Compares the factored form against `exp(Σ_{m ≥ 1} C_n(q^m) t^m / m)`.
pub fn zeta_expand_check(n: u32, q: u64, order: usize) -> Result<ExpandReport> {
    zeta_expand_check_with(&zeta_factorization(n)?, &census::poly_c(n)?, q, order)
}

/// The same check with the factorization and `C_n` supplied.
pub fn zeta_expand_check_with(
    z: &ZetaFactorization,
    c_n: &crate::algebra::LaurentPoly,
    q: u64,
    order: usize,
) -> Result<ExpandReport> {
    if q < 2 {
        return Err(invalid("q must be at least 2"));
    }
    if order < 1 {
        return Err(invalid("expansion order must be at least 1"));
    }
    let qb = BigInt::from(q);
    let factored = z.expand(&qb, order)?;
    let mut log = vec![Rational::zero()];
    for m in 1..=order {
        let count = c_n.eval_integer(&qb.pow(m as u32))?;
        log.push(Rational::new(count, BigInt::from(m)));
    }
    let from_counts = TruncSeries::from_coeffs(order, log).exp()?;
    let first_mismatch = factored.first_mismatch(&from_counts);
    Ok(ExpandReport {
        n: z.n,
        q,
        order,
        pass: first_mismatch.is_none(),
        first_mismatch,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctionalEquationReport {
    pub n: u32,
    pub q: u64,
    pub t: String,
    pub value_at_t: String,
    pub value_at_reflected_t: String,
    /// `C_n(1) = 0`.
    pub vanishes_at_one: bool,
    /// `c_{n,0}` is even.
    pub central_exponent_even: bool,
    pub pass: bool,
}

/// `Z(1/(q^{2n} t)) = Z(t)`, evaluated exactly.
pub fn functional_equation_check(n: u32, q: u64, t: &Rational) -> Result<FunctionalEquationReport> {
    functional_equation_check_with(&zeta_factorization(n)?, &census::poly_c(n)?, q, t)
}

pub fn functional_equation_check_with(
    z: &ZetaFactorization,
    c_n: &crate::algebra::LaurentPoly,
    q: u64,
    t: &Rational,
) -> Result<FunctionalEquationReport> {
    if q < 2 {
        return Err(invalid("q must be at least 2"));
    }
    if t.is_zero() {
        return Err(invalid("t must be nonzero"));
    }
    let qb = BigInt::from(q);
    let reflected = (Rational::from_integer(qb.pow(2 * z.n)) * t).recip();
    let lhs = z.eval(&qb, &reflected)?;
    let rhs = z.eval(&qb, t)?;
    let vanishes_at_one = c_n.eval_i64(1)?.is_zero();
    let central = z.factors.iter().find(|f| f.0 == z.n).map_or(0, |f| f.1);
    let central_exponent_even = central % 2 == 0;
    Ok(FunctionalEquationReport {
        n: z.n,
        q,
        t: format_rational(t),
        value_at_t: format_rational(&rhs),
        value_at_reflected_t: format_rational(&lhs),
        vanishes_at_one,
        central_exponent_even,
        pass: lhs == rhs && vanishes_at_one && central_exponent_even,
    })
}

/// Seeded non-pole samples `(n, q, t)` with `n <= max_n`, `q ∈ {2, 3, 5}`
/// and `t = a/b`, `0 < |a| <= 40`, `1 <= b <= 40`.
pub fn functional_equation_samples(seed: u64, count: usize, max_n: u32) -> Result<Vec<(u32, u64, Rational)>> {
    if max_n == 0 {
        return Err(invalid("max_n must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=max_n);
        let q = [2u64, 3, 5][rng.gen_range(0..3)];
        let mut a: i64 = rng.gen_range(1..=40);
        if rng.gen_bool(0.5) {
            a = -a;
        }
        let b: i64 = rng.gen_range(1..=40);
        let t = Rational::new(a.into(), b.into());
        let z = zeta_factorization(n)?;
        let qb = BigInt::from(q);
        let reflected = (Rational::from_integer(qb.pow(2 * n)) * &t).recip();
        if z.eval(&qb, &t).is_ok() && z.eval(&qb, &reflected).is_ok() {
            out.push((n, q, t));
        }
    }
    Ok(out)
}

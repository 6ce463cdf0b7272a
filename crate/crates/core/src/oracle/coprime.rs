//! Tuples `(P, P_1, ..., P_h)` over `F_q[y]` with `P` monic of degree `d`,
//! `P(0) != 0`, `deg P_i < d` and `P` coprime to `P_1 Q_1 + ... + P_h Q_h`.
//! For coprime `Q_1, ..., Q_h` there are
//! `(q-1)^2 q^{(h-1)d} (q^{2d}-1)/(q^2-1)` of them.

use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::{count_accepted, work_size, OracleConfig, OracleReport, Timer};
use crate::algebra::{FqPoly, Modulus};
use crate::error::{invalid, Result};

/// `(q-1)^2 q^{(h-1)d} (q^{2d}-1)/(q^2-1)`.
pub fn coprime_formula(q: u64, d: u32, h: u32) -> Result<BigInt> {
    if d == 0 || h == 0 {
        return Err(invalid("d and h must be at least 1"));
    }
    let qb = BigInt::from(q);
    // (q^{2d}-1)/(q^2-1) = 1 + q^2 + ... + q^{2(d-1)}
    let bracket: BigInt = (0..d).map(|k| Pow::pow(&qb, 2 * k)).sum();
    let unit = &qb - BigInt::one();
    Ok(&unit * &unit * Pow::pow(&qb, (h - 1) * d) * bracket)
}

fn decode(p: Modulus, d: usize, mut idx: u64, out: &mut [Vec<u64>]) {
    let q = p.get();
    for poly in out.iter_mut().rev() {
        for k in (0..d).rev() {
            poly[k] = idx % q;
            idx /= q;
        }
    }
}

/// Brute-force count of the tuples, compared with [`coprime_formula`].
///
/// The index space lists `P` first, then `P_1, ..., P_h`; inside each
/// polynomial the constant coefficient varies slowest.
pub fn count_coprime_tuples(q: u64, d: u32, qs: &[FqPoly], cfg: &OracleConfig) -> Result<OracleReport> {
    let p = Modulus::new(q)?;
    let h = qs.len() as u32;
    if d == 0 || h == 0 {
        return Err(invalid("need d >= 1 and at least one Q"));
    }
    if qs.iter().any(|f| f.modulus() != p) {
        return Err(invalid(format!("every Q must live over F_{q}")));
    }
    let g = qs.iter().fold(FqPoly::zero(p), |acc, f| acc.gcd(f));
    if g.degree() != Some(0) {
        return Err(invalid(format!("Q polynomials are not coprime (gcd {g})")));
    }
    let required = work_size(q, (h + 1) * d);
    cfg.check_work(required)?;
    let timer = Timer::start();
    let du = d as usize;
    let accept = |idx: u64| -> Result<bool> {
        let mut polys = vec![vec![0u64; du]; h as usize + 1];
        decode(p, du, idx, &mut polys);
        if polys[0][0] == 0 {
            return Ok(false);
        }
        let mut big_p = polys[0].clone();
        big_p.push(1);
        let big_p = FqPoly::new(p, big_p);
        let mut combo = FqPoly::zero(p);
        for (coeffs, qi) in polys[1..].iter().zip(qs) {
            combo = combo.add(&FqPoly::new(p, coeffs.clone()).mul(qi));
        }
        Ok(big_p.is_coprime(&combo))
    };
    let count = count_accepted(required as u64, cfg, accept)?;
    let listing: Vec<String> = qs.iter().map(|f| f.to_string()).collect();
    Ok(OracleReport {
        kind: "coprime",
        input: format!("q={q} d={d} h={h} Q=({})", listing.join(", ")),
        count: BigInt::from(count),
        formula_value: coprime_formula(q, d, h)?,
        instances: required,
        elapsed: timer.elapsed(),
    })
}

/// A few coprime families `(Q_1, ..., Q_h)` over `F_p` for `h = 1, 2`.
pub fn sample_coprime_families(q: u64, h: u32) -> Result<Vec<Vec<FqPoly>>> {
    let p = Modulus::new(q)?;
    let poly = |c: &[i64]| FqPoly::from_i64s(p, c);
    let families = match h {
        1 => vec![vec![poly(&[1])], vec![poly(&[q as i64 - 1])]],
        2 => vec![
            vec![poly(&[1, 1]), poly(&[1])],
            vec![poly(&[0, 1]), poly(&[1, 1])],
            vec![poly(&[1, 0, 1]), poly(&[0, 1])],
            vec![poly(&[0, 0, 1]), poly(&[1, 1, 1])],
        ],
        _ => return Err(invalid("sample families exist for h = 1 and h = 2")),
    };
    Ok(families)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(q: u64, d: u32, qs: &[FqPoly]) -> OracleReport {
        count_coprime_tuples(q, d, qs, &OracleConfig::default()).unwrap()
    }

    #[test]
    fn single_unit_over_f2() {
        let p = Modulus::new(2).unwrap();
        let r = run(2, 1, &[FqPoly::constant(p, 1)]);
        assert_eq!(r.count, BigInt::from(1));
        assert!(r.matches());
        assert_eq!(r.instances, 4);
    }

    #[test]
    fn single_unit_over_f3() {
        let p = Modulus::new(3).unwrap();
        let r = run(3, 1, &[FqPoly::constant(p, 1)]);
        assert_eq!(r.count, BigInt::from(4));
        assert!(r.matches());
    }

    #[test]
    fn pair_over_f2() {
        let p = Modulus::new(2).unwrap();
        let r = run(2, 1, &[FqPoly::from_i64s(p, &[1, 1]), FqPoly::constant(p, 1)]);
        assert_eq!(r.formula_value, BigInt::from(2));
        assert_eq!(r.count, BigInt::from(2));
    }

    #[test]
    fn sample_families_agree_with_formula() {
        for q in [2, 3] {
            for h in 1..=2 {
                for qs in sample_coprime_families(q, h).unwrap() {
                    for d in 1..=2 {
                        let r = run(q, d, &qs);
                        assert!(r.matches(), "{}", r.summary());
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_common_factor() {
        let p = Modulus::new(2).unwrap();
        let y = FqPoly::monomial(p, 1);
        let err = count_coprime_tuples(2, 1, &[y.clone(), y.mul(&y)], &OracleConfig::default());
        assert!(err.is_err());
        assert!(count_coprime_tuples(2, 1, &[FqPoly::zero(p)], &OracleConfig::default()).is_err());
    }

    #[test]
    fn refuses_large_work() {
        let p = Modulus::new(3).unwrap();
        let cfg = OracleConfig::default().with_work_limit(80);
        let err = count_coprime_tuples(3, 2, &[FqPoly::constant(p, 1)], &cfg).unwrap_err();
        assert!(matches!(err, crate::Error::WorkBound { required: 81, limit: 80 }));
    }

    #[test]
    fn formula_small_values() {
        assert_eq!(coprime_formula(2, 1, 1).unwrap(), BigInt::from(1));
        assert_eq!(coprime_formula(3, 1, 1).unwrap(), BigInt::from(4));
        // (q-1)^2 (1 + q^2) at q = 2
        assert_eq!(coprime_formula(2, 2, 1).unwrap(), BigInt::from(5));
        assert_eq!(coprime_formula(3, 2, 2).unwrap(), BigInt::from(4 * 9 * 10));
    }
}

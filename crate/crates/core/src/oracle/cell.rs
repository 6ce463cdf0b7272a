//! Enumeration of Gröbner cells over `F_q`.
//!
//! The cell of `λ` is parametrized by the `(t+1) × t` matrix `M_λ` over
//! `F_q[x,y]` whose column `j` carries `y^{d_j} + p_j` on the diagonal,
//! `p_{j+1,j} - x` just below it and `p_{i,j}` further down, with
//! `deg p_{i,j} < d_j`. Columns with `d_j = 0` are `(0, ..., 1, -x, 0, ...)`.
//! The ideal is generated by the `t+1` maximal minors of `M_λ`.
//!
//! A point lies in the `y`-invertible part iff every `p_i(0)` with `d_i >= 1`
//! is nonzero, and in the torus part iff moreover `y^{d_i} + p_i` is coprime
//! to `μ_i`, the determinant of rows `i+1..t+1` and columns `i..t` of
//! `M_λ` at `x = 0`. [`CriterionRoute::Minors`] decides the same membership
//! from scratch: `y` (resp. `x`) is invertible modulo the ideal iff the
//! maximal minors at `y = 0` (resp. `x = 0`) have no common factor.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{count_accepted, work_size, OracleConfig, OracleReport, Timer};
use crate::algebra::{partitions, FqPoly, Modulus, Partition};
use crate::census::{cell_count, poly_a, poly_b, poly_c, Flavor};
use crate::error::{invalid, Error, Result};

/// One point of the cell of `λ` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMatrixInstance {
    lambda: Partition,
    p: Modulus,
    /// `columns[j-1][r] = p_{j+r,j}`; empty when `d_j = 0`.
    columns: Vec<Vec<FqPoly>>,
}

/// Number of free coefficients of `M_λ`; equals `n + ℓ(λ)`.
pub fn parameter_count(lambda: &Partition) -> u32 {
    let t = lambda.t();
    lambda
        .d()
        .iter()
        .enumerate()
        .map(|(k, &dj)| dj * (t + 1 - k as u32))
        .sum()
}

impl CellMatrixInstance {
    /// Builds an instance from explicit entries, `columns[j-1]` listing
    /// `p_{j,j}, p_{j+1,j}, ..., p_{t+1,j}`.
    pub fn new(lambda: Partition, p: Modulus, columns: Vec<Vec<FqPoly>>) -> Result<Self> {
        let t = lambda.t() as usize;
        if columns.len() != t {
            return Err(invalid(format!("expected {t} columns, got {}", columns.len())));
        }
        for (k, (col, &dj)) in columns.iter().zip(lambda.d()).enumerate() {
            let want = if dj == 0 { 0 } else { t + 1 - k };
            if col.len() != want {
                return Err(invalid(format!("column {} needs {want} entries", k + 1)));
            }
            for f in col {
                if f.modulus() != p {
                    return Err(invalid("entries must live over the instance field"));
                }
                if f.degree().is_some_and(|deg| deg >= dj as usize) {
                    return Err(invalid(format!("entry {f} of column {} has degree >= {dj}", k + 1)));
                }
            }
        }
        Ok(CellMatrixInstance { lambda, p, columns })
    }

    /// The instance with lexicographic index `idx` among the
    /// `q^{n+ℓ}` points. Columns come first to last, rows top to bottom,
    /// and inside each entry the constant coefficient varies slowest.
    pub fn from_index(lambda: &Partition, p: Modulus, mut idx: u64) -> Self {
        let q = p.get();
        let t = lambda.t() as usize;
        let d = lambda.d();
        let mut digits = vec![0u64; parameter_count(lambda) as usize];
        for slot in digits.iter_mut().rev() {
            *slot = idx % q;
            idx /= q;
        }
        let mut pos = 0;
        let mut columns = Vec::with_capacity(t);
        for (k, &dj) in d.iter().enumerate() {
            let dj = dj as usize;
            if dj == 0 {
                columns.push(Vec::new());
                continue;
            }
            let col = (0..t + 1 - k)
                .map(|_| {
                    let f = FqPoly::new(p, digits[pos..pos + dj].to_vec());
                    pos += dj;
                    f
                })
                .collect();
            columns.push(col);
        }
        CellMatrixInstance {
            lambda: lambda.clone(),
            p,
            columns,
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn modulus(&self) -> Modulus {
        self.p
    }

    /// `p_{i,j}` with 1-based indices (`1 <= i <= t+1`, `1 <= j <= t`).
    pub fn entry(&self, i: usize, j: usize) -> FqPoly {
        if i < j || self.columns[j - 1].is_empty() {
            return FqPoly::zero(self.p);
        }
        self.columns[j - 1][i - j].clone()
    }

    /// `y^{d_i} + p_i`.
    pub fn diagonal(&self, i: usize) -> FqPoly {
        let di = self.lambda.d()[i - 1] as usize;
        FqPoly::monomial(self.p, di).add(&self.entry(i, i))
    }

    /// `M_λ` with `x = 0`, a matrix over `F_q[y]`.
    pub fn matrix_at_x_zero(&self) -> Vec<Vec<FqPoly>> {
        let t = self.lambda.t() as usize;
        (1..=t + 1)
            .map(|i| {
                (1..=t)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => FqPoly::zero(self.p),
                        std::cmp::Ordering::Equal => self.diagonal(i),
                        std::cmp::Ordering::Greater => self.entry(i, j),
                    })
                    .collect()
            })
            .collect()
    }

    /// `M_λ` with `y = 0`, a matrix over `F_q[x]` (stored as [`FqPoly`] in
    /// the variable `x`).
    pub fn matrix_at_y_zero(&self) -> Vec<Vec<FqPoly>> {
        let t = self.lambda.t() as usize;
        let x = FqPoly::monomial(self.p, 1);
        (1..=t + 1)
            .map(|i| {
                (1..=t)
                    .map(|j| {
                        if i < j {
                            FqPoly::zero(self.p)
                        } else if i == j {
                            FqPoly::constant(self.p, self.diagonal(i).coeff(0))
                        } else {
                            let c = FqPoly::constant(self.p, self.entry(i, j).coeff(0));
                            if i == j + 1 {
                                c.sub(&x)
                            } else {
                                c
                            }
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `p_i(0) != 0` for every `i` with `d_i >= 1`.
    pub fn y_criterion(&self) -> bool {
        self.lambda
            .d()
            .iter()
            .enumerate()
            .all(|(k, &dk)| dk == 0 || self.entry(k + 1, k + 1).coeff(0) != 0)
    }

    /// `y^{d_i} + p_i` coprime to `μ_i` for every `i`.
    pub fn x_criterion(&self) -> Result<bool> {
        let mu = mu_determinants(self)?;
        for (k, mu_i) in mu.iter().enumerate() {
            if self.lambda.d()[k] == 0 {
                continue;
            }
            if !self.diagonal(k + 1).is_coprime(mu_i) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The maximal minors `f_0, ..., f_t` at `x = 0`, as polynomials in `y`.
    pub fn minors_at_x_zero(&self) -> Result<Vec<FqPoly>> {
        maximal_minors(self.p, &self.matrix_at_x_zero())
    }

    /// The maximal minors `f_0, ..., f_t` at `y = 0`, as polynomials in `x`.
    pub fn minors_at_y_zero(&self) -> Result<Vec<FqPoly>> {
        maximal_minors(self.p, &self.matrix_at_y_zero())
    }

    pub fn passes(&self, flavor: Flavor, route: CriterionRoute) -> Result<bool> {
        match (flavor, route) {
            (Flavor::Affine, _) => Ok(true),
            (Flavor::SemiInvertible, CriterionRoute::Criteria) => Ok(self.y_criterion()),
            (Flavor::Invertible, CriterionRoute::Criteria) => Ok(self.y_criterion() && self.x_criterion()?),
            (Flavor::SemiInvertible, CriterionRoute::Minors) => generate_unit(&self.minors_at_y_zero()?),
            (Flavor::Invertible, CriterionRoute::Minors) => {
                Ok(generate_unit(&self.minors_at_y_zero()?)? && generate_unit(&self.minors_at_x_zero()?)?)
            }
        }
    }
}

/// How membership in the invertible parts is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CriterionRoute {
    /// Constant terms of `p_i` and coprimality of `y^{d_i} + p_i` with `μ_i`.
    #[default]
    Criteria,
    /// gcd of all maximal minors after setting one variable to zero.
    Minors,
}

impl CriterionRoute {
    pub fn name(self) -> &'static str {
        match self {
            CriterionRoute::Criteria => "criteria",
            CriterionRoute::Minors => "minors",
        }
    }
}

impl fmt::Display for CriterionRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CriterionRoute {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "criteria" => Ok(CriterionRoute::Criteria),
            "minors" => Ok(CriterionRoute::Minors),
            _ => Err(invalid(format!("unknown criterion route {s:?}"))),
        }
    }
}

fn generate_unit(polys: &[FqPoly]) -> Result<bool> {
    let p = polys
        .first()
        .map(FqPoly::modulus)
        .ok_or_else(|| Error::Internal("no minors".into()))?;
    let g = polys.iter().fold(FqPoly::zero(p), |acc, f| acc.gcd(f));
    Ok(g.degree() == Some(0))
}

/// Determinant over `F_q[y]` by Bareiss fraction-free elimination.
pub fn determinant(p: Modulus, mut m: Vec<Vec<FqPoly>>) -> Result<FqPoly> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(invalid("determinant of a non-square matrix"));
    }
    if n == 0 {
        return Ok(FqPoly::constant(p, 1));
    }
    let mut negate = false;
    let mut prev = FqPoly::constant(p, 1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(FqPoly::zero(p)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                let (quot, rem) = num.divrem(&prev)?;
                if !rem.is_zero() {
                    return Err(Error::Internal("inexact Bareiss division".into()));
                }
                m[i][j] = quot;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Determinants of the `t+1` square matrices obtained by deleting one row
/// (row 1 first).
pub fn maximal_minors(p: Modulus, m: &[Vec<FqPoly>]) -> Result<Vec<FqPoly>> {
    (0..m.len())
        .map(|skip| {
            let sub = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != skip)
                .map(|(_, row)| row.clone())
                .collect();
            determinant(p, sub)
        })
        .collect()
}

/// `μ_1, ..., μ_t`: `μ_i` is the determinant of rows `i+1..t+1`, columns
/// `i..t` of `M_λ` at `x = 0`.
pub fn mu_determinants(inst: &CellMatrixInstance) -> Result<Vec<FqPoly>> {
    let m = inst.matrix_at_x_zero();
    let t = inst.lambda.t() as usize;
    (1..=t)
        .map(|i| {
            let sub = m[i..=t].iter().map(|row| row[i - 1..t].to_vec()).collect();
            determinant(inst.p, sub)
        })
        .collect()
}

fn describe(lambda: &Partition, q: u64, flavor: Flavor, route: CriterionRoute) -> String {
    format!("lambda={lambda} q={q} flavor={flavor} route={route}")
}

/// Counts the points of the cell of `λ` over `F_q` that satisfy the
/// criteria for `flavor`, compared with the closed cell formula at `q`.
pub fn cell_enumeration_count(lambda: &Partition, q: u64, flavor: Flavor, cfg: &OracleConfig) -> Result<OracleReport> {
    cell_enumeration_count_via(lambda, q, flavor, CriterionRoute::Criteria, cfg)
}

pub fn cell_enumeration_count_via(
    lambda: &Partition,
    q: u64,
    flavor: Flavor,
    route: CriterionRoute,
    cfg: &OracleConfig,
) -> Result<OracleReport> {
    let p = Modulus::new(q)?;
    let required = work_size(q, parameter_count(lambda));
    cfg.check_work(required)?;
    let timer = Timer::start();
    let count = count_accepted(required as u64, cfg, |idx| {
        CellMatrixInstance::from_index(lambda, p, idx).passes(flavor, route)
    })?;
    let formula_value = cell_count(lambda, flavor)?.value.eval_i64(q as i64)?;
    Ok(OracleReport {
        kind: "cell",
        input: describe(lambda, q, flavor, route),
        count: BigInt::from(count),
        formula_value,
        instances: required,
        elapsed: timer.elapsed(),
    })
}

/// Sum of the cell enumerations over all `λ ⊢ n`, compared with
/// `A_n(q)`, `B_n(q)` or `C_n(q)`.
pub fn cell_census(n: u32, q: u64, flavor: Flavor, cfg: &OracleConfig) -> Result<OracleReport> {
    let lambdas: Vec<Partition> = partitions(n)?.collect();
    let required = lambdas
        .iter()
        .map(|l| work_size(q, parameter_count(l)))
        .fold(0u128, u128::saturating_add);
    cfg.check_work(required)?;
    let timer = Timer::start();
    let mut count = BigInt::from(0);
    for lambda in &lambdas {
        count += cell_enumeration_count(lambda, q, flavor, &cfg.clone().with_work_limit(u128::MAX))?.count;
    }
    let total = match flavor {
        Flavor::Affine => poly_a(n)?,
        Flavor::SemiInvertible => poly_b(n)?,
        Flavor::Invertible => poly_c(n)?,
    };
    Ok(OracleReport {
        kind: "cell-census",
        input: format!("n={n} q={q} flavor={flavor}"),
        count,
        formula_value: total.eval_i64(q as i64)?,
        instances: required,
        elapsed: timer.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Modulus {
        Modulus::new(2).unwrap()
    }

    fn lam(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn c(p: Modulus, v: i64) -> FqPoly {
        FqPoly::from_i64s(p, &[v])
    }

    #[test]
    fn parameter_count_is_n_plus_length() {
        for n in 1..=8 {
            for l in partitions(n).unwrap() {
                assert_eq!(parameter_count(&l), n + l.ell(), "{l}");
            }
        }
    }

    #[test]
    fn single_column_mu() {
        let p = Modulus::new(5).unwrap();
        let inst = CellMatrixInstance::new(lam(&[1]), p, vec![vec![c(p, 2), c(p, 3)]]).unwrap();
        assert_eq!(mu_determinants(&inst).unwrap(), vec![c(p, 3)]);
    }

    #[test]
    fn two_one_example() {
        // M = [[y+a, 0], [b-x, y+d], [c, e-x]]
        let p = Modulus::new(7).unwrap();
        let (a, b, cc, d, e) = (2, 3, 4, 5, 6);
        let inst = CellMatrixInstance::new(
            lam(&[2, 1]),
            p,
            vec![vec![c(p, a), c(p, b), c(p, cc)], vec![c(p, d), c(p, e)]],
        )
        .unwrap();
        let mu = mu_determinants(&inst).unwrap();
        assert_eq!(mu[1], c(p, e));
        // μ_1 = det [[b, y+d], [c, e]] = be - c(y+d)
        assert_eq!(mu[0], FqPoly::from_i64s(p, &[b * e - cc * d, -cc]));
        let minors = inst.minors_at_x_zero().unwrap();
        let last = FqPoly::from_i64s(p, &[a, 1]).mul(&FqPoly::from_i64s(p, &[d, 1]));
        assert_eq!(minors[2], last);
        assert_eq!(minors[0], mu[0]);
        // Torus condition: a, d, e nonzero and ac - cd + be nonzero.
        let expect = a * cc - cc * d + b * e;
        assert_eq!(inst.passes(Flavor::Invertible, CriterionRoute::Criteria).unwrap(), expect % 7 != 0);
    }

    #[test]
    fn zero_instance_has_zero_mu() {
        let p = Modulus::new(3).unwrap();
        for l in partitions(5).unwrap() {
            if l.d().contains(&0) {
                continue;
            }
            let inst = CellMatrixInstance::from_index(&l, p, 0);
            assert!(mu_determinants(&inst).unwrap().iter().all(FqPoly::is_zero));
        }
    }

    #[test]
    fn one_box_over_f2() {
        let r = cell_enumeration_count(&lam(&[1]), 2, Flavor::Invertible, &OracleConfig::default()).unwrap();
        assert_eq!(r.count, BigInt::from(1));
        assert!(r.matches());
    }

    #[test]
    fn column_of_two_over_f2() {
        let r = cell_enumeration_count(&lam(&[1, 1]), 2, Flavor::Invertible, &OracleConfig::default()).unwrap();
        assert_eq!(r.count, BigInt::from(5));
        assert!(r.matches());
    }

    #[test]
    fn affine_counts_everything() {
        for l in partitions(4).unwrap() {
            let r = cell_enumeration_count(&l, 3, Flavor::Affine, &OracleConfig::default()).unwrap();
            assert_eq!(r.count, BigInt::from(3u64.pow(l.n() + l.ell())));
            assert!(r.matches());
        }
    }

    #[test]
    fn criteria_and_minors_agree_pointwise() {
        let p = Modulus::new(2).unwrap();
        for n in 1..=4 {
            for l in partitions(n).unwrap() {
                for idx in 0..2u64.pow(parameter_count(&l)) {
                    let inst = CellMatrixInstance::from_index(&l, p, idx);
                    for flavor in [Flavor::SemiInvertible, Flavor::Invertible] {
                        assert_eq!(
                            inst.passes(flavor, CriterionRoute::Criteria).unwrap(),
                            inst.passes(flavor, CriterionRoute::Minors).unwrap(),
                            "{l} {idx} {flavor}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let p = Modulus::new(5).unwrap();
        let m = vec![
            vec![FqPoly::from_i64s(p, &[1, 1]), c(p, 0), c(p, 2)],
            vec![c(p, 0), c(p, 0), FqPoly::from_i64s(p, &[0, 3])],
            vec![c(p, 4), FqPoly::from_i64s(p, &[1, 0, 1]), c(p, 1)],
        ];
        // Expansion along the second row: -3y * det[[y+1, 0], [4, y^2+1]].
        let want = FqPoly::from_i64s(p, &[0, -3])
            .mul(&FqPoly::from_i64s(p, &[1, 1]))
            .mul(&FqPoly::from_i64s(p, &[1, 0, 1]));
        assert_eq!(determinant(p, m).unwrap(), want);
    }

    #[test]
    fn census_over_f2_small_n() {
        for n in 1..=3 {
            for flavor in Flavor::ALL {
                let r = cell_census(n, 2, flavor, &OracleConfig::default()).unwrap();
                assert!(r.matches(), "{}", r.summary());
            }
        }
    }

    #[test]
    fn rejects_malformed_instances() {
        let p = f2();
        assert!(CellMatrixInstance::new(lam(&[1]), p, vec![vec![c(p, 1)]]).is_err());
        let deg_one = FqPoly::from_i64s(p, &[0, 1]);
        assert!(CellMatrixInstance::new(lam(&[1]), p, vec![vec![deg_one, c(p, 1)]]).is_err());
    }
}

//! Census of commuting matrix pairs with a cyclic vector.
//!
//! A codimension `n` ideal `I` of `k[x,y]` gives the pair of commuting
//! multiplication operators `(X, Y)` on `k[x,y]/I` together with the cyclic
//! vector `1`. Conversely every triple `(X, Y, v)` with `XY = YX` and `v`
//! cyclic arises this way, and `GL_n` acts freely on the triples with orbits
//! matching the ideals. Counting triples and dividing by `|GL_n(F_q)|`
//! therefore gives `A_n(q)`; requiring `Y` (resp. both) invertible gives
//! `B_n(q)` (resp. `C_n(q)`).

use num_bigint::BigInt;
use num_integer::Integer;

use super::{sum_over_indices, work_size, OracleConfig, OracleReport, Timer};
use crate::algebra::Modulus;
use crate::census::{poly_a, poly_b, poly_c, Flavor};
use crate::error::{invalid, Error, Result};

/// Square matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    p: Modulus,
    n: usize,
    entries: Vec<u64>,
}

impl FqMatrix {
    pub fn new(p: Modulus, n: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(invalid(format!("{n}x{n} matrix needs {} entries", n * n)));
        }
        let entries = entries.into_iter().map(|e| e % p.get()).collect();
        Ok(FqMatrix { p, n, entries })
    }

    pub fn identity(p: Modulus, n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FqMatrix { p, n, entries }
    }

    /// The matrix whose entries, read row by row, are the base-`q` digits
    /// of `idx` (most significant first).
    pub fn from_index(p: Modulus, n: usize, mut idx: u64) -> Self {
        let q = p.get();
        let mut entries = vec![0; n * n];
        for slot in entries.iter_mut().rev() {
            *slot = idx % q;
            idx /= q;
        }
        FqMatrix { p, n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = self.p.add(*e, self.p.mul(a, other.get(k, j)));
                }
            }
        }
        FqMatrix { p: self.p, n, entries }
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|i| (0..self.n).fold(0, |acc, j| self.p.add(acc, self.p.mul(self.get(i, j), v[j]))))
            .collect()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn rank(&self) -> usize {
        let mut span = Span::new(self.p, self.n);
        for i in 0..self.n {
            span.insert(self.entries[i * self.n..(i + 1) * self.n].to_vec());
        }
        span.dim()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }
}

/// A subspace of `F_p^n` kept in echelon form.
struct Span {
    p: Modulus,
    n: usize,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Span {
    fn new(p: Modulus, n: usize) -> Self {
        Span { p, n, rows: Vec::with_capacity(n) }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v`; returns the reduced vector if it was new.
    fn insert(&mut self, mut v: Vec<u64>) -> Option<Vec<u64>> {
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for k in 0..self.n {
                    v[k] = self.p.sub(v[k], self.p.mul(c, row[k]));
                }
            }
        }
        let pivot = v.iter().position(|&c| c != 0)?;
        let inv = self.p.inv(v[pivot]).expect("pivot is nonzero");
        for c in v.iter_mut() {
            *c = self.p.mul(*c, inv);
        }
        self.rows.push((pivot, v.clone()));
        Some(v)
    }
}

/// Whether the smallest `{X, Y}`-stable subspace containing `v` is the
/// whole space.
pub fn is_cyclic(x: &FqMatrix, y: &FqMatrix, v: &[u64]) -> bool {
    let mut span = Span::new(x.p, x.n);
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        if span.insert(w.clone()).is_some() {
            if span.dim() == x.n {
                return true;
            }
            queue.push(x.apply(&w));
            queue.push(y.apply(&w));
        }
    }
    false
}

/// `|GL_n(F_q)| = Π_{i<n} (q^n - q^i)`.
pub fn general_linear_order(q: u64, n: u32) -> BigInt {
    let qn = BigInt::from(q).pow(n);
    (0..n).map(|i| &qn - BigInt::from(q).pow(i)).product()
}

fn cyclic_vectors(x: &FqMatrix, y: &FqMatrix) -> u64 {
    let q = x.p.get();
    let n = x.n;
    let mut count = 0;
    for idx in 1..q.pow(n as u32) {
        let mut v = vec![0; n];
        let mut rest = idx;
        for slot in v.iter_mut().rev() {
            *slot = rest % q;
            rest /= q;
        }
        if is_cyclic(x, y, &v) {
            count += 1;
        }
    }
    count
}

/// Counts ideals of codimension `n` over `F_q` (of the ring selected by
/// `flavor`) through commuting matrix pairs, compared with `A_n(q)`,
/// `B_n(q)` or `C_n(q)`.
pub fn matrix_pair_census(n: u32, q: u64, flavor: Flavor, cfg: &OracleConfig) -> Result<OracleReport> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    let p = Modulus::new(q)?;
    let required = work_size(q, 2 * n * n);
    cfg.check_work(required)?;
    let timer = Timer::start();
    let nu = n as usize;
    let per_matrix = q.pow(n * n);
    let triples = sum_over_indices(required as u64, cfg, |idx| {
        let x = FqMatrix::from_index(p, nu, idx / per_matrix);
        let y = FqMatrix::from_index(p, nu, idx % per_matrix);
        if !x.commutes_with(&y) {
            return Ok(0);
        }
        let admissible = match flavor {
            Flavor::Affine => true,
            Flavor::SemiInvertible => y.is_invertible(),
            Flavor::Invertible => x.is_invertible() && y.is_invertible(),
        };
        Ok(if admissible { cyclic_vectors(&x, &y) } else { 0 })
    })?;
    let (count, rem) = BigInt::from(triples).div_rem(&general_linear_order(q, n));
    if rem != BigInt::from(0) {
        return Err(Error::Internal(format!(
            "{triples} cyclic triples is not a multiple of |GL_{n}(F_{q})|"
        )));
    }
    let poly = match flavor {
        Flavor::Affine => poly_a(n)?,
        Flavor::SemiInvertible => poly_b(n)?,
        Flavor::Invertible => poly_c(n)?,
    };
    Ok(OracleReport {
        kind: "matrix",
        input: format!("n={n} q={q} flavor={flavor}"),
        count,
        formula_value: poly.eval_i64(q as i64)?,
        instances: required,
        elapsed: timer.elapsed(),
    })
}

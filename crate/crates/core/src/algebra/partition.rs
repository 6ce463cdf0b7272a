//! Integer partitions together with the column profile used by the Gröbner
//! cell formulas.
//!
//! For a partition `λ` the Ferrers diagram has `t = λ_1` columns. Reading the
//! column heights from right to left gives the weakly increasing sequence
//! `0 = m_0 < m_1 <= ... <= m_t = ℓ(λ)`, and `d_i = m_i - m_{i-1}`. Every cell
//! formula is stated in terms of `t`, the `d_i`, `ℓ(λ)` and
//! `v(λ) = #{i : d_i >= 1}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{invalid, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
    m: Vec<u32>,
    d: Vec<u32>,
    v: u32,
    e: BTreeMap<u32, u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid("a partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Self::from_sorted_parts(parts))
    }

    /// Builds the partition whose column-difference sequence is `d`
    /// (`d_1 >= 1`, later entries may vanish).
    pub fn from_d_sequence(d: &[u32]) -> Result<Self> {
        if d.first().copied().unwrap_or(0) == 0 {
            return Err(invalid("d_1 must be at least 1"));
        }
        let mut m = Vec::with_capacity(d.len());
        let mut acc = 0;
        for &di in d {
            acc += di;
            m.push(acc);
        }
        // λ_j counts the columns of height >= j.
        let ell = acc;
        let parts = (1..=ell)
            .map(|j| m.iter().filter(|&&h| h >= j).count() as u32)
            .collect();
        Ok(Self::from_sorted_parts(parts))
    }

    /// The rectangular partition `i^e`: `e` parts all equal to `i`.
    pub fn rectangular(i: u32, e: u32) -> Result<Self> {
        if i == 0 || e == 0 {
            return Err(invalid("rectangular partition needs i, e >= 1"));
        }
        Ok(Self::from_sorted_parts(vec![i; e as usize]))
    }

    fn from_sorted_parts(parts: Vec<u32>) -> Self {
        let n = parts.iter().sum();
        let t = parts[0];
        // m_i is the height of column t - i + 1.
        let m: Vec<u32> = (1..=t)
            .map(|i| {
                let col = t - i + 1;
                parts.iter().take_while(|&&p| p >= col).count() as u32
            })
            .collect();
        let mut d = Vec::with_capacity(m.len());
        let mut prev = 0;
        for &mi in &m {
            d.push(mi - prev);
            prev = mi;
        }
        let v = d.iter().filter(|&&x| x >= 1).count() as u32;
        let mut e = BTreeMap::new();
        for &p in &parts {
            *e.entry(p).or_insert(0) += 1;
        }
        Partition { parts, n, m, d, v, e }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Column heights `m_1 <= ... <= m_t`.
    pub fn m(&self) -> &[u32] {
        &self.m
    }

    /// Number of columns, i.e. the largest part.
    pub fn t(&self) -> u32 {
        self.m.len() as u32
    }

    /// `d_i = m_i - m_{i-1}` for `i = 1..=t`.
    pub fn d(&self) -> &[u32] {
        &self.d
    }

    /// Number of parts.
    pub fn ell(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    /// Multiplicities: part size `i` occurs `e_i` times.
    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.e
    }

    pub fn is_rectangular(&self) -> bool {
        self.v == 1
    }

    /// Nonzero `d_i`, sorted. Equal to the sorted multiplicities `e_i`.
    pub fn nonzero_d_sorted(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.d.iter().copied().filter(|&x| x > 0).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Lazy enumeration of the partitions of `n` in decreasing lexicographic
/// order, starting with `(n)` and ending with `(1,...,1)`.
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = successor(&parts);
        Some(Partition::from_sorted_parts(parts))
    }
}

fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    // Rightmost part that can be decreased.
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let mut next: Vec<u32> = parts[..pos].to_vec();
    let k = parts[pos] - 1;
    let mut rest: u32 = parts[pos + 1..].iter().sum::<u32>() + 1;
    next.push(k);
    while rest > 0 {
        let take = rest.min(k);
        next.push(take);
        rest -= take;
    }
    Some(next)
}

pub fn partitions(n: u32) -> Result<Partitions> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    Ok(Partitions {
        current: Some(vec![n]),
    })
}

pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    Ok(partitions(n)?.collect())
}

//! Brute-force enumeration over small prime fields.
//!
//! Three oracles check the closed formulas without using them:
//!
//! * [`coprime`]: tuples `(P, P_1, ..., P_h)` with `P` coprime to
//!   `Σ P_i Q_i`;
//! * [`cell`]: every point of a Gröbner cell, tested with the invertibility
//!   criteria for `x` and `y` (or, independently, through the maximal minors);
//! * [`matrix`]: commuting matrix pairs with a cyclic vector, counted up to
//!   conjugation. This route does not depend on the cell parametrization at
//!   all. It relies on the standard bijection between codimension `n` ideals
//!   of `k[x,y]` and such pairs, which is folklore and is used here only as a
//!   cross-check.
//!
//! Every run declares its work (number of enumerated instances) up front and
//! refuses with [`Error::WorkBound`] when that exceeds the configured limit.
//! Enumeration is split into contiguous shards of the lexicographic index
//! range, so the count does not depend on the number of threads.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::laurent::bigint_to_json;
use crate::error::{invalid, Error, Result};

pub mod cell;
pub mod coprime;
pub mod matrix;

pub use cell::{cell_census, cell_enumeration_count, cell_enumeration_count_via, mu_determinants, CellMatrixInstance, CriterionRoute};
pub use coprime::{coprime_formula, count_coprime_tuples, sample_coprime_families};
pub use matrix::{matrix_pair_census, FqMatrix};

pub const DEFAULT_WORK_LIMIT: u128 = 1 << 24;
pub const WORK_LIMIT_ENV: &str = "HILBCOUNT_WORK_LIMIT";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest number of instances a single run may enumerate.
    pub work_limit: u128,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Number of contiguous index ranges the enumeration is cut into.
    pub shards: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            work_limit: DEFAULT_WORK_LIMIT,
            threads: None,
            shards: 64,
        }
    }
}

impl OracleConfig {
    /// Default configuration, with the work limit overridden by
    /// `HILBCOUNT_WORK_LIMIT` when that variable is set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = Self::default();
        if let Ok(raw) = std::env::var(WORK_LIMIT_ENV) {
            cfg.work_limit = raw
                .trim()
                .parse()
                .map_err(|_| invalid(format!("{WORK_LIMIT_ENV}={raw:?} is not a non-negative integer")))?;
        }
        Ok(cfg)
    }

    pub fn with_work_limit(mut self, limit: u128) -> Self {
        self.work_limit = limit;
        self
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = Some(threads.max(1));
        self
    }

    pub fn check_work(&self, required: u128) -> Result<()> {
        if required > self.work_limit {
            return Err(Error::WorkBound {
                required,
                limit: self.work_limit,
            });
        }
        Ok(())
    }
}

/// `q^e`, saturating at `u128::MAX`.
pub fn work_size(q: u64, e: u32) -> u128 {
    (q as u128).checked_pow(e).unwrap_or(u128::MAX)
}

/// Counts the indices in `0..total` accepted by `accept`, shard by shard.
pub(crate) fn count_accepted<F>(total: u64, cfg: &OracleConfig, accept: F) -> Result<u64>
where
    F: Fn(u64) -> Result<bool> + Sync,
{
    sum_over_indices(total, cfg, |idx| accept(idx).map(u64::from))
}

/// `Σ weight(idx)` over `0..total`, shard by shard.
pub(crate) fn sum_over_indices<F>(total: u64, cfg: &OracleConfig, weight: F) -> Result<u64>
where
    F: Fn(u64) -> Result<u64> + Sync,
{
    let shards = cfg.shards.clamp(1, total.max(1));
    let width = total.div_ceil(shards);
    let run_shard = |s: u64| -> Result<u64> {
        let lo = s * width;
        let hi = (lo + width).min(total);
        let mut acc = 0;
        for idx in lo..hi {
            acc += weight(idx)?;
        }
        Ok(acc)
    };
    let run = || (0..shards).into_par_iter().map(run_shard).try_reduce(|| 0, |a, b| Ok(a + b));
    match cfg.threads {
        None => run(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(run),
    }
}

/// Outcome of one oracle run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub kind: &'static str,
    /// Human-readable description of the input, e.g. `lambda=(2,1) q=3 flavor=invertible`.
    pub input: String,
    pub count: BigInt,
    pub formula_value: BigInt,
    pub instances: u128,
    pub elapsed: Duration,
}

impl OracleReport {
    pub fn matches(&self) -> bool {
        self.count == self.formula_value
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind,
            "input": self.input,
            "count": bigint_to_json(&self.count),
            "formula_value": bigint_to_json(&self.formula_value),
            "match": self.matches(),
            "instances": self.instances.to_string(),
            "elapsed": self.elapsed.as_secs_f64(),
        })
    }

    /// One line: `cell lambda=(1) q=2 flavor=invertible: count 1, formula 1, PASS`.
    pub fn summary(&self) -> String {
        format!(
            "{} {}: count {}, formula {}, {}",
            self.kind,
            self.input,
            self.count,
            self.formula_value,
            if self.matches() { "PASS" } else { "FAIL" }
        )
    }
}

pub(crate) struct Timer(Instant);

impl Timer {
    pub(crate) fn start() -> Self {
        Timer(Instant::now())
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.0.elapsed()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuses_above_limit() {
        let cfg = OracleConfig::default().with_work_limit(100);
        assert!(cfg.check_work(100).is_ok());
        assert_eq!(cfg.check_work(101), Err(Error::WorkBound { required: 101, limit: 100 }));
    }

    #[test]
    fn sharded_count_is_independent_of_threads() {
        let accept = |i: u64| Ok(i % 7 == 3 || i.count_ones() == 4);
        let serial = count_accepted(10_000, &OracleConfig::default().with_threads(1), accept).unwrap();
        let parallel = count_accepted(10_000, &OracleConfig::default().with_threads(4), accept).unwrap();
        let direct = (0..10_000u64).filter(|&i| accept(i).unwrap()).count() as u64;
        assert_eq!(serial, direct);
        assert_eq!(parallel, direct);
        let few = OracleConfig { shards: 1000, ..OracleConfig::default() };
        assert_eq!(count_accepted(5, &few, |_| Ok(true)).unwrap(), 5);
        assert_eq!(count_accepted(0, &few, |_| Ok(true)).unwrap(), 0);
    }

    #[test]
    fn errors_propagate_from_shards() {
        let res = count_accepted(100, &OracleConfig::default(), |i| {
            if i == 57 {
                Err(Error::Internal("boom".into()))
            } else {
                Ok(true)
            }
        });
        assert!(res.is_err());
    }

    #[test]
    fn work_size_saturates() {
        assert_eq!(work_size(2, 10), 1024);
        assert_eq!(work_size(3, 200), u128::MAX);
    }
}

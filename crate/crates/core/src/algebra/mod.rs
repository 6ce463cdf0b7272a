//! Exact arithmetic substrate.

pub mod cyclotomic;
pub mod fq;
pub mod laurent;
pub mod partition;
pub mod rational;
pub mod ring;
pub mod series;

pub use cyclotomic::{CyclotomicInt, RootOrder};
pub use fq::{FqPoly, Modulus};
pub use laurent::LaurentPoly;
pub use partition::{enumerate_partitions, partitions, Partition, Partitions};
pub use rational::{format_rational, parse_rational, Rational};
pub use ring::Ring;
pub use series::{series_product, TruncSeries};

//! Exact counting of finite-codimension ideals of `F_q[x,y]`, `F_q[x,y,1/y]`
//! and `F_q[x,y,1/x,1/y]`.
//!
//! The counts are polynomials in `q`: `A_n` (the plane), `B_n` and its
//! reduced form `B_n°` (the punctured plane), `C_n = (q-1)^2 P_n` (the
//! torus). Every polynomial is reachable through several independent routes
//! (sums over Gröbner cells, closed-form coefficients, infinite products)
//! and the crate carries the machinery to cross-check them, including
//! brute-force enumeration over small prime fields.
//!
//! All arithmetic is exact. There is no floating point anywhere.

pub mod algebra;
pub mod arith;
pub mod census;
mod error;
pub mod identities;
pub mod oracle;
pub mod tables;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};

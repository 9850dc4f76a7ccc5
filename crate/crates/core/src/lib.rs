//! Exact computation with q-fundamental quasisymmetric functions,
//! Hall–Littlewood `S`-functions and enriched P-partitions.
//!
//! All coefficients live in `Z[q]` with `q` formal, so identities are
//! checked as exact polynomial identities; evaluating at `q = 0` or `q = 1`
//! recovers the Gessel and Stembridge specializations.

pub mod check;
pub mod error;
pub mod exactpoly;
pub mod posets;
pub mod quasisym;
pub mod signed;
pub mod symmetric;
pub mod tableaux;

pub use check::Comparison;
pub use error::{Error, Result};

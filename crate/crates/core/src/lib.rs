//! Exact-arithmetic verification of a family of terminating hypergeometric
//! identities: Kummer's quadratic transformation, its eleven-case
//! generalization indexed by `j = -5..=5`, and the beta-integral theorem that
//! follows from it together with its explicit corollaries.
//!
//! Everything here is `no_std` (with `alloc`). Values are exact rationals;
//! there is no floating point anywhere in the evaluation paths, so every
//! comparison is an exact equality.
//!
//! Layout:
//! - [`exact`]: rationals, Pochhammer symbols and the Gamma-product simplifier
//! - [`series`]: truncated formal power series over the rationals
//! - [`hyper`]: `pFq` term generation, terminating sums and weighted sums
//! - [`identities`]: coefficient table, transformations, theorem, corollaries,
//!   the beta-integral pipeline and grid sweeps

#![no_std]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod hyper;
pub mod identities;
pub mod series;

pub use error::Error;
pub use exact::{gamma_simplify, pochhammer, pochhammer_duplication, GammaProduct, Rational};
pub use hyper::{HyperSpec, Polynomial, WeightedSumSpec};
pub use series::TruncatedSeries;

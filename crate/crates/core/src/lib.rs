//! Exact arithmetic for q-deformed arithmetical functions over untwisted
//! affine root systems.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`]: polynomials in `u = q⁻¹` with big-integer coefficients;
//! * [`partitions`]: partitions, multi-partitions and their statistics;
//! * [`qseries`]: truncated `t`-series and the deformed partition functions
//!   `ε_{q,n}`, `p_{q,n}`, Ramanujan's `τ`;
//! * [`rootdata`]: affine Cartan data, roots, weights and the real-root
//!   sequences `β_k` attached to a periodic reduced word;
//! * [`weyl`]: Weyl group elements, the dot action and bounded orbit
//!   enumeration;
//! * [`charseries`]: series graded by the positive root lattice and every
//!   identity built on them (product/sum formulas, deformed characters,
//!   deformed Kostant functions, basic specialization).
//!
//! Every verifier returns a [`report::Report`] instead of panicking, so a
//! failed identity carries the first disagreeing coefficient.

pub mod charseries;
pub mod error;
pub mod partitions;
pub mod poly;
pub mod qseries;
pub mod report;
pub mod rootdata;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{EvalPoint, QPoly};
pub use qseries::TSeries;
pub use report::Report;

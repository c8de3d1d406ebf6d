//! Compiles the guide's code blocks as doctests.
//!
//! mdbook cannot link a snippet against a local crate, so each chapter is
//! pulled in as the docs of an empty module and `cargo test --doc` runs it.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}
#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}
#[doc = include_str!("../../../book/src/root-data.md")]
pub mod root_data {}
#[doc = include_str!("../../../book/src/weyl.md")]
pub mod weyl {}
#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}
#[doc = include_str!("../../../book/src/identities.md")]
pub mod identities {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

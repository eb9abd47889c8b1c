//! mdbook cannot run a book's code blocks as tests with dependencies, so
//! this crate includes every chapter as a module doc and lets
//! `cargo test --doc` do it. One module per chapter keeps failures
//! attributable to their source file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}

#[doc = include_str!("../../../book/src/places-and-valuations.md")]
pub mod places_and_valuations {}

#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}

#[doc = include_str!("../../../book/src/gap-sequences.md")]
pub mod gap_sequences {}

#[doc = include_str!("../../../book/src/auxiliary-functions.md")]
pub mod auxiliary_functions {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

//! Exact computation of Taylor gap sequences of rational functions on the
//! projective line, with constructive verification of the sparsity bound
//! `a_n <= h(f) + (n-1)(#S1 + sum_{q in S2}(v_q(dx/dx_q) + 1))`.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals,
//! valuations are computed from polynomial multiplicities, and every bound
//! comparison is an integer comparison. See the guide in `book/` for a
//! walkthrough of the concepts.

pub mod algebra;
pub mod campaign;
pub mod error;
pub mod gaps;
pub mod lemma;
pub mod parse;
pub mod report;
pub mod series;

pub use algebra::{PlaceCluster, Polynomial, RationalFunction};
pub use error::{Error, Result};
pub use gaps::{BoundInputs, BoundReport, GapSequence};
pub use series::TruncatedSeries;

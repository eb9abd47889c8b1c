//! Exact arithmetic over the rationals: dense univariate polynomials,
//! reduced rational functions, and place/valuation machinery on the
//! projective line.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is freely shareable across threads.

mod place;
mod poly;
mod ratfn;
mod squarefree;

pub use place::{
    cluster_atlas, dxdxq_valuation, height, support, support_count, valuation, PlaceCluster,
};
pub use poly::Polynomial;
pub use ratfn::RationalFunction;
pub use squarefree::{coprime_refine, radical, squarefree_decomposition};

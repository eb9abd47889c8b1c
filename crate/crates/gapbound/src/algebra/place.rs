//! Places of the projective line and their discrete valuations.
//!
//! A finite place cluster is a monic squarefree nonconstant polynomial `c`:
//! it stands for the `deg c` complex points where `c` vanishes, all of which
//! carry identical valuation data whenever the functions involved have been
//! refined against `c`. The point at infinity is its own degree-one cluster.
//!
//! Valuations are normalized so that a local parameter at the place has
//! valuation exactly 1; at a finite cluster the local parameter is `t - root`,
//! at infinity it is `1/t`.

use std::fmt;

use num_rational::BigRational;

use crate::algebra::{coprime_refine, squarefree_decomposition, Polynomial, RationalFunction};
use crate::error::{Error, Result};

/// A bundle of complex points of the projective line sharing valuation data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PlaceCluster {
    /// The roots of a monic squarefree nonconstant polynomial.
    Finite(Polynomial),
    /// The point at infinity.
    Infinity,
}

impl PlaceCluster {
    /// Wraps a polynomial as a finite cluster, normalizing it to be monic and
    /// rejecting constants and polynomials with repeated roots.
    pub fn finite(c: Polynomial) -> Result<Self> {
        if c.is_constant() {
            return Err(Error::InvalidCluster(format!(
                "cluster polynomial must be nonconstant, got {c}"
            )));
        }
        let c = c.monic();
        if !c.is_squarefree() {
            return Err(Error::InvalidCluster(format!(
                "cluster polynomial must be squarefree, got {c}"
            )));
        }
        Ok(PlaceCluster::Finite(c))
    }

    /// The degree-one cluster at the rational point `p`, i.e. `t - p`.
    pub fn at_point(p: &BigRational) -> Self {
        PlaceCluster::Finite(Polynomial::new(vec![
            -p.clone(),
            num_traits::One::one(),
        ]))
    }

    /// Number of complex points in the cluster.
    pub fn degree(&self) -> usize {
        match self {
            PlaceCluster::Finite(c) => c.degree().expect("nonconstant"),
            PlaceCluster::Infinity => 1,
        }
    }
}

impl fmt::Display for PlaceCluster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlaceCluster::Finite(c) => write!(f, "{c}"),
            PlaceCluster::Infinity => write!(f, "infinity"),
        }
    }
}

/// Multiplicity of the cluster polynomial in `p`, with a homogeneity check:
/// after dividing out the full power of `c`, no root of `c` may remain.
fn homogeneous_multiplicity(p: &Polynomial, c: &Polynomial) -> Result<i64> {
    let (k, cofactor) = p.multiplicity_of(c)?;
    if !cofactor.gcd(c).is_constant() {
        return Err(Error::HeterogeneousCluster {
            cluster: c.to_string(),
        });
    }
    Ok(k as i64)
}

/// The discrete valuation `v_q(f)`.
///
/// At a finite cluster the value is the shared root multiplicity in the
/// numerator minus the one in the denominator; the call fails with
/// `HeterogeneousCluster` if the roots of the cluster do not share a single
/// multiplicity. At infinity the value is `deg den - deg num`.
pub fn valuation(f: &RationalFunction, q: &PlaceCluster) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    match q {
        PlaceCluster::Infinity => {
            Ok(f.den().degree().unwrap() as i64 - f.num().degree().unwrap() as i64)
        }
        PlaceCluster::Finite(c) => {
            let vn = homogeneous_multiplicity(f.num(), c)?;
            let vd = homogeneous_multiplicity(f.den(), c)?;
            Ok(vn - vd)
        }
    }
}

/// The height `h(f) = -sum_q min(v_q(f), 0)`, each cluster weighted by its
/// degree. Cross-checked against `max(deg num, deg den)`, which the valuation
/// sum must reproduce for every reduced function.
pub fn height(f: &RationalFunction) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let deg_num = f.num().degree().unwrap() as i64;
    let deg_den = f.den().degree().unwrap() as i64;
    // finite poles: every root of the denominator, counted with multiplicity
    let mut h = 0i64;
    for (c, m) in squarefree_decomposition(f.den())? {
        h += c.degree().unwrap() as i64 * m as i64;
    }
    // pole at infinity
    h += (deg_num - deg_den).max(0);
    debug_assert_eq!(h, deg_num.max(deg_den));
    if h != deg_num.max(deg_den) {
        return Err(Error::VerificationFailure(format!(
            "height cross-check failed for {f}: valuation sum {h}, degree bound {}",
            deg_num.max(deg_den)
        )));
    }
    Ok(h)
}

/// `v_q(dx/dx_q)` where `x_q` is a local parameter at the cluster.
///
/// At a finite cluster this is `v_q(dx/dt)`; at infinity the chain rule
/// through `x_inf = 1/t` contributes `dt/dx_inf = -t^2`, so the value is
/// `v_inf(dx/dt) - 2`.
pub fn dxdxq_valuation(x: &RationalFunction, q: &PlaceCluster) -> Result<i64> {
    if x.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let dx = x.derivative();
    debug_assert!(!dx.is_zero(), "nonconstant over characteristic zero");
    match q {
        PlaceCluster::Finite(_) => valuation(&dx, q),
        PlaceCluster::Infinity => Ok(valuation(&dx, q)? - 2),
    }
}

/// Zeros and poles of `x`: every cluster with `v_q(x) != 0`, including the
/// point at infinity when the degrees differ. The returned table satisfies
/// `sum degree(q) * v_q(x) = 0`.
pub fn support(x: &RationalFunction) -> Result<Vec<(PlaceCluster, i64)>> {
    if x.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let mut table = Vec::new();
    for (c, m) in squarefree_decomposition(x.num())? {
        table.push((PlaceCluster::Finite(c), m as i64));
    }
    for (c, m) in squarefree_decomposition(x.den())? {
        table.push((PlaceCluster::Finite(c), -(m as i64)));
    }
    let vinf = x.den().degree().unwrap() as i64 - x.num().degree().unwrap() as i64;
    if vinf != 0 {
        table.push((PlaceCluster::Infinity, vinf));
    }
    let total: i64 = table
        .iter()
        .map(|(q, v)| q.degree() as i64 * v)
        .sum();
    debug_assert_eq!(total, 0, "principal divisor must have degree zero");
    Ok(table)
}

/// Number of complex points in the support, i.e. the sum of cluster degrees.
pub fn support_count(x: &RationalFunction) -> Result<i64> {
    Ok(support(x)?
        .iter()
        .map(|(q, _)| q.degree() as i64)
        .sum())
}

/// A common refinement of the zeros and poles of all the given functions.
///
/// Every returned finite cluster is monic, squarefree, and pairwise coprime
/// with the others, and each listed function has a single well-defined
/// valuation on it (no `HeterogeneousCluster` possible). The point at
/// infinity is not included; scans add it separately.
pub fn cluster_atlas(fns: &[&RationalFunction]) -> Result<Vec<PlaceCluster>> {
    let mut parts = Vec::new();
    for f in fns {
        if f.is_zero() {
            continue;
        }
        for poly in [f.num(), f.den()] {
            for (c, _) in squarefree_decomposition(poly)? {
                parts.push(c);
            }
        }
    }
    Ok(coprime_refine(&parts)?
        .into_iter()
        .map(PlaceCluster::Finite)
        .collect())
}

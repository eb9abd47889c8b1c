//! Gap sequences and the sparsity bounds on their exponents.
//!
//! For `f` with `v_p(f) = 0` expanded in powers of a local parameter `x` at
//! `p`, the exponents `a_n` of the nonzero terms satisfy
//!
//! ```text
//! a_n <= h(f) + (n-1) * (#S1 + sum_{q in S2} (v_q(dx/dx_q) + 1))
//! ```
//!
//! where `S1` collects the poles of `f` at which `dx/dx_q` neither vanishes
//! nor has a pole, and `S2` the points where `x` has a nonzero regular value
//! but `dx/dx_q` vanishes. A coarser bound replaces the `S2` sum by
//! `2 * (#Supp{x} + 2g - 2)` with the genus `g = 0` here. Both right-hand
//! sides are proven upper bounds, so any observed violation is treated as a
//! fatal internal error rather than a mathematical discovery.

mod fastpath;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{
    cluster_atlas, dxdxq_valuation, height, support_count, valuation, PlaceCluster,
    RationalFunction,
};
use crate::error::{Error, Result};
use crate::series::{expand_at, ExpansionPoint, TruncatedSeries};

/// The strictly increasing exponents and nonzero coefficients of a truncated
/// expansion `f = sum alpha_n x^(a_n)` with `a_0 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GapSequence {
    exponents: Vec<i64>,
    coefficients: Vec<BigRational>,
    window: i64,
    terminated: bool,
}

impl GapSequence {
    /// Number of known terms.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `a_n`.
    pub fn exponent(&self, n: usize) -> i64 {
        self.exponents[n]
    }

    /// `alpha_n`.
    pub fn coefficient(&self, n: usize) -> &BigRational {
        &self.coefficients[n]
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    /// Exponents below this bound are completely enumerated.
    pub fn window(&self) -> i64 {
        self.window
    }

    /// True when no nonzero terms can exist beyond the window.
    pub fn terminated(&self) -> bool {
        self.terminated
    }

    /// Marks the sequence as complete. Only call when the expanded function
    /// is proven to be a polynomial in the parameter with every term inside
    /// the window (see [`polynomial_in_x_check`]).
    pub fn mark_terminated(&mut self) {
        self.terminated = true;
    }
}

/// Reads the gap sequence out of a series with `v = 0` and nonzero constant
/// term; rejects anything else with `NotNormalized`.
pub fn extract_gaps(s: &TruncatedSeries) -> Result<GapSequence> {
    if s.valuation() != Some(0) {
        return Err(Error::NotNormalized {
            valuation: s.valuation().unwrap_or(s.order()),
        });
    }
    let mut exponents = Vec::new();
    let mut coefficients = Vec::new();
    for (k, c) in s.terms() {
        exponents.push(k);
        coefficients.push(c.clone());
    }
    Ok(GapSequence {
        exponents,
        coefficients,
        window: s.order(),
        terminated: false,
    })
}

/// The ingredients of the two bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundInputs {
    pub height: i64,
    pub s1_count: i64,
    pub s2_count: i64,
    pub s2_sum: i64,
    pub supp_x_count: i64,
    genus: i64,
}

impl BoundInputs {
    pub fn new(height: i64, s1_count: i64, s2_count: i64, s2_sum: i64, supp_x_count: i64) -> Self {
        assert!(height >= 0 && s1_count >= 0 && s2_count >= 0 && s2_sum >= 0);
        BoundInputs {
            height,
            s1_count,
            s2_count,
            s2_sum,
            supp_x_count,
            // the projective line: every formula below carries the genus
            // symbolically but only this value is constructible
            genus: 0,
        }
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }
}

/// `#S1`: total degree of the clusters where `f` has a pole and `dx/dx_q`
/// has valuation zero, the point at infinity included in the scan.
pub fn compute_s1(f: &RationalFunction, x: &RationalFunction) -> Result<i64> {
    if f.is_constant() || x.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let dx = x.derivative();
    let mut clusters = cluster_atlas(&[f, x, &dx])?;
    clusters.push(PlaceCluster::Infinity);
    let mut s1 = 0i64;
    for q in &clusters {
        if valuation(f, q)? < 0 && dxdxq_valuation(x, q)? == 0 {
            s1 += q.degree() as i64;
        }
    }
    Ok(s1)
}

/// `(#S2, sum over S2 of (v_q(dx/dx_q) + 1))`, degree-weighted: the clusters
/// where `x` has a nonzero regular value but `dx/dx_q` vanishes.
pub fn compute_s2_sum(x: &RationalFunction) -> Result<(i64, i64)> {
    if x.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let dx = x.derivative();
    let mut clusters = cluster_atlas(&[x, &dx])?;
    clusters.push(PlaceCluster::Infinity);
    let mut count = 0i64;
    let mut sum = 0i64;
    for q in &clusters {
        let w = dxdxq_valuation(x, q)?;
        if w > 0 && valuation(x, q)? == 0 {
            let d = q.degree() as i64;
            count += d;
            sum += d * (w + 1);
        }
    }
    Ok((count, sum))
}

/// Assembles every bound ingredient for the pair `(f, x)`.
pub fn bound_inputs(f: &RationalFunction, x: &RationalFunction) -> Result<BoundInputs> {
    let (s2_count, s2_sum) = compute_s2_sum(x)?;
    Ok(BoundInputs::new(
        height(f)?,
        compute_s1(f, x)?,
        s2_count,
        s2_sum,
        support_count(x)?,
    ))
}

/// `h + (n-1)(#S1 + s2_sum)` for `n >= 1`.
pub fn theorem_bound(b: &BoundInputs, n: i64) -> i64 {
    debug_assert!(n >= 1);
    b.height + (n - 1) * (b.s1_count + b.s2_sum)
}

/// `h + (n-1)(#S1 + 2(#Supp{x} + 2g - 2))` for `n >= 1`, `g = 0`.
pub fn corollary_bound(b: &BoundInputs, n: i64) -> Result<i64> {
    debug_assert!(n >= 1);
    let weight = b.supp_x_count + 2 * b.genus - 2;
    if weight < 0 {
        // impossible for nonconstant x at genus 0: the support has at least
        // one zero and one pole
        return Err(Error::NegativeWeight);
    }
    Ok(b.height + (n - 1) * (b.s1_count + 2 * weight))
}

/// Exact test for `f in Q[x]`: reads the candidate coefficients from the
/// expansion of `f` in powers of `x` up to the degree bound `h(f)` and then
/// verifies the polynomial identity on exact rational functions, never on a
/// finite window alone.
pub fn polynomial_in_x_check(
    f: &RationalFunction,
    x: &RationalFunction,
    p: &BigRational,
) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if x.is_constant() || x.valuation_at_point(p)? != 1 {
        return Err(Error::NotALocalParameter);
    }
    if f.valuation_at_point(p)? < 0 {
        // any polynomial in x is regular at p since x vanishes there
        return Ok(false);
    }
    let degree_bound = height(f)?;
    let s = crate::series::expand_in_x(f, x, p, degree_bound + 1)?;
    let mut candidate = RationalFunction::zero();
    let mut power = RationalFunction::one();
    let mut next = 0i64;
    for (k, c) in s.terms() {
        while next < k {
            power = &power * x;
            next += 1;
        }
        candidate = &candidate + &power.scale_by(c);
    }
    Ok(&candidate == f)
}

/// One row of a bound report.
#[derive(Clone, Debug, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub a_n: i64,
    #[serde(serialize_with = "crate::report::serialize_rational")]
    pub alpha_n: BigRational,
    pub theorem_rhs: i64,
    pub corollary_rhs: i64,
    pub slack: i64,
}

/// Verification outcome for one `(f, x, p)` input.
#[derive(Clone, Debug)]
pub struct BoundReport {
    /// The function actually analyzed (differs from the input only when
    /// normalization divided out a power of `x`).
    pub analyzed: RationalFunction,
    /// Exponent divided out, when normalization was requested and needed.
    pub normalized_exponent: Option<i64>,
    pub inputs: BoundInputs,
    pub gaps: GapSequence,
    pub rows: Vec<BoundRow>,
    pub max_n: usize,
    /// Every checked slack was zero.
    pub is_sharp: bool,
    /// `a_N / N` for the last checked index.
    pub limsup_estimate: Option<BigRational>,
    /// `#S1 + s2_sum`, the proven bound on `limsup a_n / n`.
    pub limsup_bound: i64,
    /// Smallest slack seen (meaningful when rows is nonempty).
    pub min_slack: Option<i64>,
}

/// Reusable per-parameter state: the reversion series of `x` at `p` and the
/// bound data that does not depend on `f`.
pub struct ParameterContext {
    x: RationalFunction,
    p: BigRational,
    tau: TruncatedSeries,
    order: i64,
    s2_count: i64,
    s2_sum: i64,
    supp_x_count: i64,
}

impl ParameterContext {
    pub fn new(x: &RationalFunction, p: &BigRational, order: i64) -> Result<Self> {
        if x.is_constant() {
            return Err(Error::NotALocalParameter);
        }
        if x.valuation_at_point(p)? != 1 {
            return Err(Error::NotALocalParameter);
        }
        let sx = expand_at(x, &ExpansionPoint::Finite(p.clone()), order)?;
        let tau = sx.reverse()?;
        let (s2_count, s2_sum) = compute_s2_sum(x)?;
        Ok(ParameterContext {
            x: x.clone(),
            p: p.clone(),
            tau,
            order,
            s2_count,
            s2_sum,
            supp_x_count: support_count(x)?,
        })
    }

    pub fn x(&self) -> &RationalFunction {
        &self.x
    }

    pub fn point(&self) -> &BigRational {
        &self.p
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Expansion of `f` (with `v_p(f) = 0`) in powers of `x`, through the
    /// integer fast path when the inputs allow it. Equal to
    /// [`crate::series::expand_in_x`] wherever both apply.
    pub fn expand_unit(&self, f: &RationalFunction, order: i64) -> Result<TruncatedSeries> {
        debug_assert!(order <= self.order);
        debug_assert_eq!(f.valuation_at_point(&self.p), Ok(0));
        let num = f.num().shift(&self.p);
        let den = f.den().shift(&self.p);
        let tau = self.tau.truncate(order);
        if num.is_integral() && den.is_integral() && tau.coeffs().iter().all(|c| c.is_integer()) {
            return Ok(fastpath::expand_unit_integer(&num, &den, &tau, order));
        }
        let pad = |poly: &crate::algebra::Polynomial| {
            let mut coeffs = poly.coeffs().to_vec();
            coeffs.resize(coeffs.len().max(order as usize), BigRational::zero());
            TruncatedSeries::new(0, coeffs)
        };
        let ns = pad(&num).compose(&tau)?;
        let ds = pad(&den).compose(&tau)?;
        ns.div(&ds)
    }

    fn bound_inputs_for(&self, f: &RationalFunction) -> Result<BoundInputs> {
        Ok(BoundInputs::new(
            height(f)?,
            compute_s1(f, &self.x)?,
            self.s2_count,
            self.s2_sum,
            self.supp_x_count,
        ))
    }
}

/// Runs the full bound verification for `f` against the parameter context.
///
/// With `normalize` set, an `f` with `v_p(f) != 0` is replaced by
/// `f / x^(v_p(f))` and the substitution is recorded; otherwise such inputs
/// are rejected. Inputs that are polynomials in `x` are rejected: their gap
/// sequence terminates and the bounds say nothing about them.
pub fn verify_bounds_with(
    ctx: &ParameterContext,
    f: &RationalFunction,
    normalize: bool,
) -> Result<BoundReport> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    // a polynomial in x stays one under division by x^v, so one check on the
    // raw input settles the hypothesis before any normalization
    if polynomial_in_x_check(f, &ctx.x, &ctx.p)? {
        return Err(Error::PolynomialInParameter);
    }
    let vf = f.valuation_at_point(&ctx.p)?;
    let (g, normalized_exponent) = if vf == 0 {
        (f.clone(), None)
    } else if normalize {
        (f.div(&ctx.x.pow(vf)?)?, Some(vf))
    } else {
        return Err(Error::NotNormalized { valuation: vf });
    };
    debug_assert_eq!(g.valuation_at_point(&ctx.p), Ok(0));
    let series = ctx.expand_unit(&g, ctx.order)?;
    let gaps = extract_gaps(&series)?;
    let inputs = ctx.bound_inputs_for(&g)?;

    let mut rows = Vec::with_capacity(gaps.len().saturating_sub(1));
    let mut min_slack: Option<i64> = None;
    for n in 1..gaps.len() {
        let a_n = gaps.exponent(n);
        let theorem_rhs = theorem_bound(&inputs, n as i64);
        let corollary_rhs = corollary_bound(&inputs, n as i64)?;
        let slack = theorem_rhs - a_n;
        if slack < 0 || corollary_rhs < theorem_rhs {
            return Err(Error::BoundViolation(format!(
                "f = {f}, x = {x}, p = {p}, n = {n}: a_n = {a_n}, \
                 theorem rhs = {theorem_rhs}, corollary rhs = {corollary_rhs}, \
                 inputs = {inputs:?}, gaps = {:?}",
                gaps.exponents(),
                x = ctx.x,
                p = ctx.p,
            )));
        }
        min_slack = Some(min_slack.map_or(slack, |m: i64| m.min(slack)));
        rows.push(BoundRow {
            n,
            a_n,
            alpha_n: gaps.coefficient(n).clone(),
            theorem_rhs,
            corollary_rhs,
            slack,
        });
    }
    let max_n = rows.last().map(|r| r.n).unwrap_or(0);
    let is_sharp = !rows.is_empty() && rows.iter().all(|r| r.slack == 0);
    let limsup_estimate = rows.last().map(|r| {
        BigRational::new(r.a_n.into(), (r.n as i64).into())
    });
    Ok(BoundReport {
        analyzed: g,
        normalized_exponent,
        limsup_bound: inputs.s1_count + inputs.s2_sum,
        inputs,
        gaps,
        rows,
        max_n,
        is_sharp,
        limsup_estimate,
        min_slack,
    })
}

/// One-shot form of [`verify_bounds_with`].
pub fn verify_bounds(
    f: &RationalFunction,
    x: &RationalFunction,
    p: &BigRational,
    order: i64,
    normalize: bool,
) -> Result<BoundReport> {
    let ctx = ParameterContext::new(x, p, order)?;
    verify_bounds_with(&ctx, f, normalize)
}

/// Helper used by reports: `a_N/N <= limsup_bound + h/N` rearranged as an
/// exact rational comparison.
pub fn limsup_witness_holds(report: &BoundReport) -> bool {
    match (&report.limsup_estimate, report.max_n) {
        (Some(est), n) if n >= 1 => {
            let h = BigRational::from_integer(report.inputs.height.into());
            let bound = BigRational::from_integer(report.limsup_bound.into());
            let n = BigRational::from_integer((n as i64).into());
            est <= &(&bound + &(h / n))
        }
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use num_bigint::BigInt;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(
            Polynomial::from_integers(num),
            Polynomial::from_integers(den),
        )
        .unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn sharp_family(k: usize, m: usize) -> RationalFunction {
        let mut num = vec![0i64; k + 1];
        num[k] = 1;
        let mut den = vec![0i64; m + 1];
        den[0] = 1;
        den[m] = -1;
        &RationalFunction::one() + &rf(&num, &den)
    }

    #[test]
    fn extract_gaps_examples() {
        let s = TruncatedSeries::new(
            0,
            [1, 0, 0, 1, 0, 1, 0, 1].iter().map(|&c| rat(c)).collect(),
        );
        let g = extract_gaps(&s).unwrap();
        assert_eq!(g.exponents(), &[0, 3, 5, 7]);
        assert_eq!(g.coefficients(), &[rat(1), rat(1), rat(1), rat(1)]);
        assert!(!g.terminated());
        assert_eq!(g.window(), 8);

        let constant = TruncatedSeries::new(0, vec![rat(1)]);
        let gc = extract_gaps(&constant).unwrap();
        assert_eq!(gc.exponents(), &[0]);

        let dense = TruncatedSeries::new(0, vec![rat(1), rat(-2), rat(1)]);
        let gd = extract_gaps(&dense).unwrap();
        assert_eq!(gd.exponents(), &[0, 1, 2]);
        assert_eq!(gd.coefficients(), &[rat(1), rat(-2), rat(1)]);
    }

    #[test]
    fn extract_gaps_requires_unit() {
        let s = TruncatedSeries::new(1, vec![rat(1)]);
        assert_eq!(
            extract_gaps(&s),
            Err(Error::NotNormalized { valuation: 1 })
        );
    }

    #[test]
    fn s1_examples() {
        let t = RationalFunction::variable();
        assert_eq!(compute_s1(&sharp_family(3, 2), &t).unwrap(), 2);
        assert_eq!(compute_s1(&rf(&[1], &[1, 0, 1]), &t).unwrap(), 2);
        // t^2 only has its pole at infinity, where dx/dx_q = -2 fails the test
        assert_eq!(compute_s1(&rf(&[0, 0, 1], &[1]), &t).unwrap(), 0);
    }

    #[test]
    fn s2_examples() {
        let t = RationalFunction::variable();
        assert_eq!(compute_s2_sum(&t).unwrap(), (0, 0));
        assert_eq!(compute_s2_sum(&rf(&[0, 1, 0, 1], &[1])).unwrap(), (2, 4));
        assert_eq!(compute_s2_sum(&rf(&[0, 1], &[1, -1])).unwrap(), (0, 0));
        // equal degrees put infinity itself in S2: x = (t^2+1)/(t^2+2) has
        // dx/dt = 2t/(t^2+2)^2 with a simple zero at t = 0 and one at infinity
        assert_eq!(compute_s2_sum(&rf(&[1, 0, 1], &[2, 0, 1])).unwrap(), (2, 4));
    }

    #[test]
    fn bound_arithmetic() {
        let b = BoundInputs::new(3, 2, 0, 0, 3);
        assert_eq!(theorem_bound(&b, 4), 9);
        assert_eq!(theorem_bound(&b, 1), 3);
        let b2 = BoundInputs::new(1, 1, 2, 4, 2);
        assert_eq!(theorem_bound(&b2, 3), 11);
        // corollary at supp = 2: weight 0
        assert_eq!(corollary_bound(&b2, 5).unwrap(), 5); // 1 + 4 * (1 + 2*0)
        assert_eq!(corollary_bound(&b2, 1).unwrap(), 1);
        // x = t + t^3 has supp count 4
        let b3 = BoundInputs::new(1, 1, 2, 4, 4);
        assert_eq!(corollary_bound(&b3, 2).unwrap(), 6);
        assert_eq!(theorem_bound(&b3, 2), 6);
    }

    #[test]
    fn polynomial_detection() {
        let t = RationalFunction::variable();
        let zero = rat(0);
        assert!(polynomial_in_x_check(&rf(&[1, 1, 1], &[1]), &t, &zero).unwrap());
        assert!(!polynomial_in_x_check(&rf(&[1], &[1, -1]), &t, &zero).unwrap());
        // f = x for a curved parameter
        let x = rf(&[0, 1, 0, 1], &[1]);
        assert!(polynomial_in_x_check(&x, &x, &zero).unwrap());
        // f = 1 + x^2 - 5x^3 in a rational parameter
        let xr = rf(&[0, 1], &[1, -1]);
        let f = &(&RationalFunction::one() + &(&xr * &xr)).clone()
            - &(&(&xr * &xr) * &xr).scale_by(&rat(5));
        assert!(polynomial_in_x_check(&f, &xr, &zero).unwrap());
        // and a non-polynomial in the same parameter
        let g = &f + &rf(&[1], &[1, 0, -3]).clone();
        assert!(!polynomial_in_x_check(&g, &xr, &zero).unwrap());
    }

    #[test]
    fn verify_sharp_family_is_sharp() {
        let t = RationalFunction::variable();
        let report = verify_bounds(&sharp_family(3, 2), &t, &rat(0), 50, false).unwrap();
        assert_eq!(report.inputs.height, 3);
        assert_eq!(report.inputs.s1_count, 2);
        assert!(report.is_sharp);
        for (n, row) in report.rows.iter().enumerate() {
            assert_eq!(row.n, n + 1);
            assert_eq!(row.a_n, 3 + n as i64 * 2);
            assert_eq!(row.slack, 0);
        }
        assert!(limsup_witness_holds(&report));
    }

    #[test]
    fn sharp_family_grid_achieves_the_bound() {
        let t = RationalFunction::variable();
        for k in 2..=8usize {
            for m in 1..k {
                let report =
                    verify_bounds(&sharp_family(k, m), &t, &rat(0), 60, false).unwrap();
                assert_eq!(report.inputs.height, k as i64, "h for k={k}, m={m}");
                assert_eq!(report.inputs.s1_count, m as i64, "#S1 for k={k}, m={m}");
                assert!(report.is_sharp, "not sharp for k={k}, m={m}");
                for row in &report.rows {
                    assert_eq!(row.a_n, (k + (row.n - 1) * m) as i64);
                }
            }
        }
    }

    #[test]
    fn verify_geometric_series() {
        let t = RationalFunction::variable();
        let report = verify_bounds(&rf(&[1], &[1, -1]), &t, &rat(0), 30, false).unwrap();
        assert_eq!(report.inputs.height, 1);
        assert_eq!(report.inputs.s1_count, 1);
        for row in &report.rows {
            assert_eq!(row.a_n, row.n as i64);
            assert_eq!(row.theorem_rhs, row.n as i64);
            assert_eq!(row.slack, 0);
        }
    }

    #[test]
    fn verify_with_curved_parameter() {
        let x = rf(&[0, 1, 0, 1], &[1]); // t + t^3
        let report = verify_bounds(&rf(&[1], &[1, -1]), &x, &rat(0), 40, false).unwrap();
        // h = 1, s1 = 1, s2_sum = 4: rhs = 1 + 5(n-1)
        for row in &report.rows {
            assert_eq!(row.theorem_rhs, 1 + 5 * (row.n as i64 - 1));
            assert!(row.slack >= 0);
            assert!(row.corollary_rhs >= row.theorem_rhs);
        }
    }

    #[test]
    fn normalization_flag() {
        let t = RationalFunction::variable();
        // f = t/(1-t): valuation 1 at the origin
        let f = rf(&[0, 1], &[1, -1]);
        assert!(matches!(
            verify_bounds(&f, &t, &rat(0), 20, false),
            Err(Error::NotNormalized { valuation: 1 })
        ));
        let report = verify_bounds(&f, &t, &rat(0), 20, true).unwrap();
        assert_eq!(report.normalized_exponent, Some(1));
        assert_eq!(report.analyzed, rf(&[1], &[1, -1]));
    }

    #[test]
    fn polynomials_in_x_rejected() {
        let t = RationalFunction::variable();
        assert!(matches!(
            verify_bounds(&rf(&[1, 0, 1], &[1]), &t, &rat(0), 20, false),
            Err(Error::PolynomialInParameter)
        ));
    }

    #[test]
    fn scaling_f_preserves_exponents() {
        let t = RationalFunction::variable();
        let f = rf(&[1, 3, 0, -2], &[2, 0, 0, 5]);
        let a = verify_bounds(&f, &t, &rat(0), 24, false).unwrap();
        let b = verify_bounds(&f.scale_by(&BigRational::new(7.into(), 3.into())), &t, &rat(0), 24, false)
            .unwrap();
        assert_eq!(a.gaps.exponents(), b.gaps.exponents());
    }

    #[test]
    fn fast_path_matches_contract_route() {
        // rational expansion point and non-integral data exercise the
        // generic branch; integral data the BigInt branch
        let x = rf(&[0, 1, 1], &[1]); // t + t^2
        let f = rf(&[1, 2], &[3, -1, 1]);
        let p = rat(0);
        let ctx = ParameterContext::new(&x, &p, 20).unwrap();
        let fast = ctx.expand_unit(&f, 20).unwrap();
        let contract = crate::series::expand_in_x(&f, &x, &p, 20).unwrap();
        assert_eq!(fast, contract);
        // non-integral tau: x with leading series coefficient 2
        let x2 = rf(&[0, 2, 1], &[1]);
        let ctx = ParameterContext::new(&x2, &rat(0), 16).unwrap();
        let fast = ctx.expand_unit(&f, 16).unwrap();
        let contract = crate::series::expand_in_x(&f, &x2, &rat(0), 16).unwrap();
        assert_eq!(fast, contract);
    }
}

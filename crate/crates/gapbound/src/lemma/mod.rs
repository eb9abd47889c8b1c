//! Constructive verification of the machinery behind the gap bound.
//!
//! Given the first `n+1` terms of a gap sequence, a matrix built from
//! falling factorials of the exponents has a nontrivial kernel whose vector
//! `c` assembles an auxiliary function
//!
//! ```text
//! F = c_0 + c_1 f + c_2 x f' + ... + c_n x^(n-1) f^(n-1)
//! ```
//!
//! (derivatives with respect to `x`) that vanishes at the expansion point to
//! order exactly `a_n`. Everything this module computes is proven: a failed
//! check is an implementation bug, never a mathematical discovery, which is
//! what makes these constructions useful test oracles.

mod nullspace;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{
    cluster_atlas, dxdxq_valuation, height, support_count, valuation, PlaceCluster,
    RationalFunction,
};
use crate::error::{Error, Result};
use crate::gaps::{bound_inputs, theorem_bound, GapSequence};
use crate::series::{derivative_wrt_x, expand_at, ExpansionPoint};

/// Falling factorial `(a)_j = a (a-1) ... (a-j+1)`, with `(a)_0 = 1`.
pub fn falling_factorial(a: i64, j: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..j as i64 {
        acc *= BigInt::from(a - i);
    }
    acc
}

/// The `(n+1) x (n+1)` matrix whose kernel produces the auxiliary function.
///
/// Row 0 is `(1, alpha_0, 0, ..., 0)`; row `i >= 1` is
/// `(0, alpha_i (a_i)_0, alpha_i (a_i)_1, ..., alpha_i (a_i)_{n-1})`. The
/// monomial factors `x^(a_i)` of the underlying expansion are dropped: that
/// is a row scaling, so the kernel is unchanged.
#[derive(Clone, Debug)]
pub struct GapMatrix {
    entries: Vec<Vec<BigRational>>,
    n: usize,
    source: GapSequence,
}

impl GapMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn source(&self) -> &GapSequence {
        &self.source
    }
}

/// Builds the gap matrix from the first `n+1` terms of the sequence.
pub fn build_gap_matrix(gaps: &GapSequence, n: usize) -> Result<GapMatrix> {
    if gaps.len() < n + 1 {
        return Err(Error::InsufficientGapTerms {
            needed: n + 1,
            have: gaps.len(),
        });
    }
    let mut entries = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let a_i = gaps.exponent(i);
        let alpha_i = gaps.coefficient(i);
        let mut row = Vec::with_capacity(n + 1);
        row.push(if i == 0 {
            BigRational::one()
        } else {
            BigRational::zero()
        });
        for j in 1..=n {
            let ff = falling_factorial(a_i, (j - 1) as u32);
            row.push(alpha_i * BigRational::from_integer(ff));
        }
        entries.push(row);
    }
    Ok(GapMatrix {
        entries,
        n,
        source: gaps.clone(),
    })
}

/// A primitive integer kernel vector of the first `n` rows.
///
/// The system is underdetermined (`n` rows, `n+1` columns), so a nonzero
/// vector always exists; the reduced-echelon solve with the last free column
/// set to one makes the choice deterministic.
pub fn nullspace_vector(m: &GapMatrix) -> Vec<BigInt> {
    nullspace::kernel_vector(&m.entries[..m.n])
        .expect("an n x (n+1) system always has a nonzero kernel vector")
}

/// Exact nonvanishing test for the determinant of the lower-right `n x n`
/// minor `(alpha_i (a_i)_j)`, the Wronskian of the gap monomials. Strictly
/// increasing exponents force linear independence, so a `false` return is a
/// fatal self-check failure in the caller.
pub fn wronskian_nonvanishing(m: &GapMatrix) -> bool {
    let n = m.n;
    let minor: Vec<Vec<BigRational>> = (1..=n)
        .map(|i| m.entries[i][1..=n].to_vec())
        .collect();
    !determinant(minor).is_zero()
}

/// Determinant by rational Gaussian elimination.
fn determinant(mut rows: Vec<Vec<BigRational>>) -> BigRational {
    let n = rows.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pr) = (col..n).find(|&i| !rows[i][col].is_zero()) else {
            return BigRational::zero();
        };
        if pr != col {
            rows.swap(col, pr);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det *= &pivot;
        let pivot_row = rows[col].clone();
        for row in rows.iter_mut().skip(col + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot;
            for (j, pv) in pivot_row.iter().enumerate().skip(col) {
                let sub = &factor * pv;
                row[j] -= sub;
            }
        }
    }
    det
}

/// The assembled auxiliary function together with the kernel vector that
/// produced it and its verified vanishing order at the expansion point.
#[derive(Clone, Debug)]
pub struct AuxiliaryFunction {
    coefficients: Vec<BigInt>,
    function: RationalFunction,
    achieved_valuation: i64,
}

impl AuxiliaryFunction {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn function(&self) -> &RationalFunction {
        &self.function
    }

    pub fn achieved_valuation(&self) -> i64 {
        self.achieved_valuation
    }

    pub fn height(&self) -> Result<i64> {
        height(&self.function)
    }
}

/// Assembles `F = c_0 + sum c_i x^(i-1) f^(i-1)` and verifies that its
/// vanishing order at `p` is exactly `expected_valuation`, by two
/// independent routes: the multiplicity of `t - p` in the reduced rational
/// function, and the leading exponent of its series expansion.
pub fn assemble_f(
    f: &RationalFunction,
    x: &RationalFunction,
    p: &BigRational,
    c: &[BigInt],
    expected_valuation: i64,
) -> Result<AuxiliaryFunction> {
    if c.iter().all(|v| v.is_zero()) {
        return Err(Error::VerificationFailure(
            "kernel vector must be nonzero".into(),
        ));
    }
    let mut func = RationalFunction::constant(BigRational::from_integer(c[0].clone()));
    let mut x_power = RationalFunction::one();
    let mut deriv = f.clone();
    for (i, ci) in c.iter().enumerate().skip(1) {
        if i >= 2 {
            x_power = &x_power * x;
            deriv = derivative_wrt_x(&deriv, x, 1)?;
        }
        if !ci.is_zero() {
            let term = (&x_power * &deriv).scale_by(&BigRational::from_integer(ci.clone()));
            func = &func + &term;
        }
    }
    if func.is_zero() {
        return Err(Error::VerificationFailure(format!(
            "auxiliary function vanished identically for c = {c:?}, f = {f}, x = {x}"
        )));
    }
    let rational_route = func.valuation_at_point(p)?;
    let series = expand_at(&func, &ExpansionPoint::Finite(p.clone()), expected_valuation + 2)?;
    let series_route = series.valuation().unwrap_or(i64::MIN);
    if rational_route != expected_valuation || series_route != expected_valuation {
        return Err(Error::ValuationMismatch {
            expected: expected_valuation,
            rational: rational_route,
            series: series_route,
        });
    }
    Ok(AuxiliaryFunction {
        coefficients: c.to_vec(),
        function: func,
        achieved_valuation: rational_route,
    })
}

/// Full construction for index `n`: matrix, Wronskian self-check, kernel
/// vector, assembly, and the valuation assertion against `a_n`.
pub fn lemma2_construction(
    f: &RationalFunction,
    x: &RationalFunction,
    p: &BigRational,
    gaps: &GapSequence,
    n: usize,
) -> Result<AuxiliaryFunction> {
    let matrix = build_gap_matrix(gaps, n)?;
    if !wronskian_nonvanishing(&matrix) {
        return Err(Error::VerificationFailure(format!(
            "Wronskian minor vanished for exponents {:?}",
            &gaps.exponents()[..=n]
        )));
    }
    let c = nullspace_vector(&matrix);
    assemble_f(f, x, p, &c, gaps.exponent(n))
}

/// One derivative-valuation comparison
/// `v_q(d^n f / dx^n) >= v_q(f) - n (v_q(dx/dx_q) + 1)`.
///
/// `lhs` is `None` when the derivative vanishes identically, in which case
/// the inequality holds trivially.
#[derive(Clone, Debug, Serialize)]
pub struct DerivativeValuationCheck {
    pub cluster: String,
    pub n: u32,
    pub lhs: Option<i64>,
    pub rhs: i64,
    pub holds: bool,
}

pub fn check_derivative_valuation(
    f: &RationalFunction,
    x: &RationalFunction,
    q: &PlaceCluster,
    n: u32,
) -> Result<DerivativeValuationCheck> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    if x.is_constant() {
        return Err(Error::ConstantParameter);
    }
    let rhs = valuation(f, q)? - n as i64 * (dxdxq_valuation(x, q)? + 1);
    let g = derivative_wrt_x(f, x, n)?;
    let (lhs, holds) = if g.is_zero() {
        (None, true)
    } else {
        let v = valuation(&g, q)?;
        (Some(v), v >= rhs)
    };
    Ok(DerivativeValuationCheck {
        cluster: q.to_string(),
        n,
        lhs,
        rhs,
        holds,
    })
}

/// Runs the derivative-valuation check for every order up to `n_max` on
/// every cluster in the combined support of `f`, `x`, `dx/dt` and the
/// derivatives themselves (the refinement keeps every valuation homogeneous),
/// plus the point at infinity.
pub fn derivative_valuation_sweep(
    f: &RationalFunction,
    x: &RationalFunction,
    n_max: u32,
) -> Result<Vec<DerivativeValuationCheck>> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    if x.is_constant() {
        return Err(Error::ConstantParameter);
    }
    let dx = x.derivative();
    let mut derivs = vec![f.clone()];
    for _ in 1..=n_max {
        let next = derivative_wrt_x(derivs.last().unwrap(), x, 1)?;
        if next.is_zero() {
            break;
        }
        derivs.push(next);
    }
    let mut fns: Vec<&RationalFunction> = vec![f, x, &dx];
    fns.extend(derivs.iter().skip(1));
    let mut clusters = cluster_atlas(&fns)?;
    clusters.push(PlaceCluster::Infinity);

    let mut out = Vec::new();
    for q in &clusters {
        let v_f = valuation(f, q)?;
        let w = dxdxq_valuation(x, q)?;
        for n in 0..=n_max {
            let rhs = v_f - n as i64 * (w + 1);
            let (lhs, holds) = match derivs.get(n as usize) {
                Some(g) => {
                    let v = valuation(g, q)?;
                    (Some(v), v >= rhs)
                }
                None => (None, true),
            };
            out.push(DerivativeValuationCheck {
                cluster: q.to_string(),
                n,
                lhs,
                rhs,
                holds,
            });
        }
    }
    Ok(out)
}

/// The degree-sum identity for the coordinate differential at genus zero:
/// summed over the clusters outside the support of `x`,
/// `sum v_q(dx/dx_q) = #Supp{x} - 2`.
#[derive(Clone, Debug, Serialize)]
pub struct RrIdentity {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

pub fn check_rr_identity(x: &RationalFunction) -> Result<RrIdentity> {
    if x.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let dx = x.derivative();
    let mut clusters = cluster_atlas(&[x, &dx])?;
    clusters.push(PlaceCluster::Infinity);
    let mut lhs = 0i64;
    for q in &clusters {
        if valuation(x, q)? != 0 {
            continue;
        }
        let w = dxdxq_valuation(x, q)?;
        lhs += q.degree() as i64 * w;
    }
    let rhs = support_count(x)? - 2;
    Ok(RrIdentity {
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

/// Contribution of one case of the height decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct CaseContribution {
    /// `-sum min(v_q(F), 0)` over the clusters in the case, degree-weighted.
    pub aux_pole_part: i64,
    /// `-sum min(v_q(f), 0)` over the same clusters.
    pub f_pole_part: i64,
    /// The case's multiplier data: `#S1` for case 1, the weighted `S2` sum
    /// for case 2, zero otherwise.
    pub weight: i64,
    /// The proven upper bound on `aux_pole_part`.
    pub bound: i64,
    pub holds: bool,
}

/// The four-case pole partition of the auxiliary function's support.
#[derive(Clone, Debug, Serialize)]
pub struct HeightDecomposition {
    pub cases: [CaseContribution; 4],
    pub aux_height: i64,
    pub theorem_rhs: i64,
    pub holds: bool,
}

/// Partitions every cluster relevant to `F` into the four proof cases and
/// verifies each case's height contribution, plus the total
/// `h(F) <= theorem bound`. Violations are implementation bugs and come back
/// as errors.
pub fn check_height_decomposition(
    aux: &AuxiliaryFunction,
    f: &RationalFunction,
    x: &RationalFunction,
    n: usize,
) -> Result<HeightDecomposition> {
    if n < 1 {
        return Err(Error::Config("decomposition index must be >= 1".into()));
    }
    let func = aux.function();
    let dx = x.derivative();
    let mut clusters = cluster_atlas(&[f, x, &dx, func])?;
    clusters.push(PlaceCluster::Infinity);

    let mut aux_pole = [0i64; 4];
    let mut f_pole = [0i64; 4];
    let mut s1_size = 0i64;
    let mut s2_weight = 0i64;
    for q in &clusters {
        let deg = q.degree() as i64;
        let v_f = valuation(f, q)?;
        let v_aux = valuation(func, q)?;
        let v_x = valuation(x, q)?;
        let w = dxdxq_valuation(x, q)?;
        let case = if w == 0 {
            if v_f < 0 {
                0
            } else {
                2
            }
        } else if v_x != 0 {
            3
        } else if w > 0 {
            1
        } else {
            return Err(Error::PartitionGap {
                cluster: q.to_string(),
            });
        };
        aux_pole[case] += deg * (-v_aux.min(0));
        f_pole[case] += deg * (-v_f.min(0));
        match case {
            0 => s1_size += deg,
            1 => s2_weight += deg * (w + 1),
            _ => {}
        }
    }

    let nm1 = (n as i64) - 1;
    let bounds = [
        f_pole[0] + nm1 * s1_size,
        f_pole[1] + nm1 * s2_weight,
        0,
        f_pole[3],
    ];
    let weights = [s1_size, s2_weight, 0, 0];
    let cases: Vec<CaseContribution> = (0..4)
        .map(|i| CaseContribution {
            aux_pole_part: aux_pole[i],
            f_pole_part: f_pole[i],
            weight: weights[i],
            bound: bounds[i],
            holds: aux_pole[i] <= bounds[i],
        })
        .collect();

    let aux_height = height(func)?;
    debug_assert_eq!(aux_height, aux_pole.iter().sum::<i64>());
    let inputs = bound_inputs(f, x)?;
    debug_assert_eq!(inputs.s1_count, s1_size);
    debug_assert_eq!(inputs.s2_sum, s2_weight);
    let theorem_rhs = theorem_bound(&inputs, n as i64);
    let all_hold = cases.iter().all(|c| c.holds) && aux_height <= theorem_rhs;
    let record = HeightDecomposition {
        cases: cases.try_into().expect("four cases"),
        aux_height,
        theorem_rhs,
        holds: all_hold,
    };
    if !all_hold {
        return Err(Error::VerificationFailure(format!(
            "height decomposition violated for f = {f}, x = {x}, n = {n}: {record:?}"
        )));
    }
    Ok(record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::gaps::extract_gaps;
    use crate::series::expand_in_x;

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

    fn geometric_gaps(order: i64) -> GapSequence {
        let f = rf(&[1], &[1, -1]);
        let s = expand_in_x(&f, &RationalFunction::variable(), &rat(0), order).unwrap();
        extract_gaps(&s).unwrap()
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 0), BigInt::from(1));
        assert_eq!(falling_factorial(5, 2), BigInt::from(20));
        assert_eq!(falling_factorial(0, 1), BigInt::from(0));
        assert_eq!(falling_factorial(3, 4), BigInt::from(0));
    }

    #[test]
    fn matrix_rows_match_construction() {
        let gaps = geometric_gaps(8);
        let m = build_gap_matrix(&gaps, 2).unwrap();
        let expect: Vec<Vec<i64>> = vec![vec![1, 1, 0], vec![0, 1, 1], vec![0, 1, 2]];
        for (i, row) in expect.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(m.entry(i, j), &rat(*v));
            }
        }
        // 2 x 2 case: ((1, alpha_0), (0, alpha_1))
        let m1 = build_gap_matrix(&gaps, 1).unwrap();
        assert_eq!(m1.entry(0, 0), &rat(1));
        assert_eq!(m1.entry(0, 1), &rat(1));
        assert_eq!(m1.entry(1, 0), &rat(0));
        assert_eq!(m1.entry(1, 1), &rat(1));
    }

    #[test]
    fn insufficient_terms_rejected() {
        let gaps = geometric_gaps(3);
        assert!(matches!(
            build_gap_matrix(&gaps, 5),
            Err(Error::InsufficientGapTerms { needed: 6, have: 3 })
        ));
    }

    #[test]
    fn kernel_of_geometric_matrix() {
        let gaps = geometric_gaps(8);
        let m = build_gap_matrix(&gaps, 2).unwrap();
        let c = nullspace_vector(&m);
        assert_eq!(c, vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        let m1 = build_gap_matrix(&gaps, 1).unwrap();
        assert_eq!(nullspace_vector(&m1), vec![BigInt::from(-1), BigInt::from(1)]);
    }

    #[test]
    fn kernel_scales_with_alpha() {
        let f = rf(&[2], &[1, -1]); // 2/(1-t): alpha_0 = 2
        let s = expand_in_x(&f, &RationalFunction::variable(), &rat(0), 6).unwrap();
        let gaps = extract_gaps(&s).unwrap();
        let m = build_gap_matrix(&gaps, 1).unwrap();
        assert_eq!(nullspace_vector(&m), vec![BigInt::from(-2), BigInt::from(1)]);
    }

    #[test]
    fn wronskian_examples() {
        let gaps = geometric_gaps(8);
        for n in 1..=4 {
            let m = build_gap_matrix(&gaps, n).unwrap();
            assert!(wronskian_nonvanishing(&m));
        }
    }

    #[test]
    fn determinant_small_cases() {
        let m = vec![vec![rat(1), rat(1)], vec![rat(1), rat(2)]];
        assert_eq!(determinant(m), rat(1));
        // a = (1,2,3), alpha = 1: 3x3 falling factorial determinant is 2
        let rows = vec![
            vec![rat(1), rat(1), rat(0)],
            vec![rat(1), rat(2), rat(2)],
            vec![rat(1), rat(3), rat(6)],
        ];
        assert_eq!(determinant(rows), rat(2));
        let singular = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(determinant(singular), rat(0));
    }

    #[test]
    fn auxiliary_function_for_geometric_series() {
        let f = rf(&[1], &[1, -1]);
        let t = RationalFunction::variable();
        let gaps = geometric_gaps(8);
        let aux = lemma2_construction(&f, &t, &rat(0), &gaps, 2).unwrap();
        // F = 1 - f + t f' = t^2/(1-t)^2
        assert_eq!(aux.function(), &rf(&[0, 0, 1], &[1, -2, 1]));
        assert_eq!(aux.achieved_valuation(), 2);
        assert_eq!(aux.height().unwrap(), 2);
        // n = 1: F = f - 1 scaled, valuation a_1 = 1
        let aux1 = lemma2_construction(&f, &t, &rat(0), &gaps, 1).unwrap();
        assert_eq!(aux1.achieved_valuation(), 1);
    }

    #[test]
    fn auxiliary_function_for_sharp_family() {
        // k = 3, m = 2: F at n = 1 is f - 1 = t^3/(1-t^2), valuation 3
        let f = &RationalFunction::one() + &rf(&[0, 0, 0, 1], &[1, 0, -1]);
        let t = RationalFunction::variable();
        let s = expand_in_x(&f, &t, &rat(0), 12).unwrap();
        let gaps = extract_gaps(&s).unwrap();
        let aux = lemma2_construction(&f, &t, &rat(0), &gaps, 1).unwrap();
        assert_eq!(aux.achieved_valuation(), 3);
        assert_eq!(aux.height().unwrap(), 3);
        let expected = rf(&[0, 0, 0, 1], &[1, 0, -1]);
        let scaled = aux.function().scale_by(&expected.num().coeff(3).recip());
        // F is a rational multiple of t^3/(1-t^2)
        assert_eq!(
            scaled.num().monic(),
            expected.num().monic()
        );
    }

    #[test]
    fn derivative_valuation_examples() {
        let f = rf(&[1], &[1, -1]);
        let t = RationalFunction::variable();
        let q = PlaceCluster::finite(Polynomial::from_integers(&[-1, 1])).unwrap();
        let check = check_derivative_valuation(&f, &t, &q, 3).unwrap();
        assert_eq!(check.lhs, Some(-4));
        assert_eq!(check.rhs, -4);
        assert!(check.holds);
        // n = 0 is the base case lhs = rhs = v_q(f)
        let base = check_derivative_valuation(&f, &t, &q, 0).unwrap();
        assert_eq!(base.lhs, Some(-1));
        assert_eq!(base.rhs, -1);
        // curved parameter at the cluster t^2 + 1/3
        let x3 = rf(&[0, 1, 0, 1], &[1]);
        let q3 = PlaceCluster::finite(Polynomial::new(vec![
            BigRational::new(1.into(), 3.into()),
            BigRational::zero(),
            BigRational::one(),
        ]))
        .unwrap();
        let c3 = check_derivative_valuation(&f, &x3, &q3, 1).unwrap();
        assert_eq!(c3.rhs, -2);
        assert_eq!(c3.lhs, Some(-1));
        assert!(c3.holds);
    }

    #[test]
    fn zero_derivative_holds_trivially() {
        let f = rf(&[0, 0, 1], &[1]); // t^2
        let t = RationalFunction::variable();
        let q = PlaceCluster::finite(Polynomial::from_integers(&[-1, 1])).unwrap();
        let check = check_derivative_valuation(&f, &t, &q, 3).unwrap();
        assert_eq!(check.lhs, None);
        assert!(check.holds);
    }

    #[test]
    fn sweep_covers_all_clusters() {
        let f = rf(&[1], &[1, -1]);
        let x = rf(&[0, 1, 1], &[1]);
        let checks = derivative_valuation_sweep(&f, &x, 4).unwrap();
        assert!(checks.iter().all(|c| c.holds));
        assert!(checks.iter().any(|c| c.cluster == "infinity"));
    }

    #[test]
    fn rr_identity_instances() {
        let t = RationalFunction::variable();
        let r = check_rr_identity(&t).unwrap();
        assert_eq!((r.lhs, r.rhs), (0, 0));
        let x2 = rf(&[0, -1, 1], &[1]); // t^2 - t
        let r2 = check_rr_identity(&x2).unwrap();
        assert_eq!((r2.lhs, r2.rhs), (1, 1));
        let x3 = rf(&[0, 1, 0, 1], &[1]); // t + t^3
        let r3 = check_rr_identity(&x3).unwrap();
        assert_eq!((r3.lhs, r3.rhs), (2, 2));
        assert!(r.holds && r2.holds && r3.holds);
    }

    #[test]
    fn height_decomposition_geometric() {
        let f = rf(&[1], &[1, -1]);
        let t = RationalFunction::variable();
        let gaps = geometric_gaps(8);
        let aux = lemma2_construction(&f, &t, &rat(0), &gaps, 2).unwrap();
        let rec = check_height_decomposition(&aux, &f, &t, 2).unwrap();
        assert!(rec.holds);
        // S1 = {t - 1}: F pole part 2 <= 1 + 1*1
        assert_eq!(rec.cases[0].aux_pole_part, 2);
        assert_eq!(rec.cases[0].bound, 2);
        // S4 = {infinity}: v_inf(F) = 0 contributes nothing
        assert_eq!(rec.cases[3].aux_pole_part, 0);
        assert_eq!(rec.aux_height, 2);
        assert_eq!(rec.theorem_rhs, 2);
    }

    #[test]
    fn height_decomposition_sharp_family() {
        let f = &RationalFunction::one() + &rf(&[0, 0, 0, 1], &[1, 0, -1]);
        let t = RationalFunction::variable();
        let s = expand_in_x(&f, &t, &rat(0), 12).unwrap();
        let gaps = extract_gaps(&s).unwrap();
        let aux = lemma2_construction(&f, &t, &rat(0), &gaps, 2).unwrap();
        let rec = check_height_decomposition(&aux, &f, &t, 2).unwrap();
        assert!(rec.holds);
        assert_eq!(rec.theorem_rhs, 5);
        assert!(rec.aux_height <= 5);
    }
}

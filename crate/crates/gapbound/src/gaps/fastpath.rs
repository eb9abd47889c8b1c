//! Integer-deferred series pipeline for the bound verifier.
//!
//! Composing a rational function with the reversion series and dividing is
//! the hot loop of a campaign. When every input has integer coefficients the
//! whole computation runs over `BigInt` with one scaling denominator, so no
//! gcd is taken until the final coefficients are assembled.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::Polynomial;
use crate::series::TruncatedSeries;

/// Truncated product of integer coefficient slices.
fn mul_z(a: &[BigInt], b: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); n.min(a.len() + b.len() - 1)];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() || i >= out.len() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= out.len() {
                break;
            }
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// `poly(tau) mod t^n` where `tau` is indexed by exponent with `tau[0] = 0`.
fn compose_poly_z(poly: &[BigInt], tau: &[BigInt], n: usize) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); n];
    let mut power: Option<(usize, Vec<BigInt>)> = None;
    for (k, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if k == 0 {
            acc[0] += c;
            continue;
        }
        let pw = match power.take() {
            None => {
                let mut p = tau[..n.min(tau.len())].to_vec();
                for _ in 1..k {
                    p = mul_z(&p, tau, n);
                }
                p
            }
            Some((kp, mut p)) => {
                for _ in kp..k {
                    p = mul_z(&p, tau, n);
                }
                p
            }
        };
        for (i, v) in pw.iter().enumerate() {
            if i < n && !v.is_zero() {
                acc[i] += c * v;
            }
        }
        power = Some((k, pw));
    }
    acc
}

/// Scaled series quotient: returns `(c, b0)` where the true coefficient of
/// `a/b` at exponent `k` is `c[k] / b0^(k+1)`, with `b0 = b[0]` nonzero.
///
/// Derived from the division recurrence `q_k b0 = a_k - sum b_j q_{k-j}` by
/// clearing `b0` powers; everything stays integral.
fn div_scaled_z(a: &[BigInt], b: &[BigInt], n: usize) -> (Vec<BigInt>, BigInt) {
    let b0 = b[0].clone();
    debug_assert!(!b0.is_zero());
    // bt[j] = b[j] * b0^(j-1) for j >= 1
    let mut bt: Vec<BigInt> = Vec::with_capacity(n);
    bt.push(BigInt::zero()); // unused j = 0 slot
    let mut pw = BigInt::one();
    for j in 1..n {
        bt.push(b.get(j).cloned().unwrap_or_else(BigInt::zero) * &pw);
        pw *= &b0;
    }
    let mut c: Vec<BigInt> = Vec::with_capacity(n);
    let mut a_scale = BigInt::one(); // b0^k
    for k in 0..n {
        let mut acc = a.get(k).cloned().unwrap_or_else(BigInt::zero) * &a_scale;
        for j in 1..=k {
            if !bt[j].is_zero() && !c[k - j].is_zero() {
                acc -= &bt[j] * &c[k - j];
            }
        }
        c.push(acc);
        a_scale *= &b0;
    }
    (c, b0)
}

fn integer_coeffs(p: &Polynomial) -> Vec<BigInt> {
    p.coeffs().iter().map(|c| c.numer().clone()).collect()
}

/// Expansion of `num/den` in powers of the parameter whose reversion series
/// is `tau`, valid when all three are integral, `tau` has valuation >= 1,
/// and `den` has a nonzero constant term. Returns exponents `0..order`.
pub(crate) fn expand_unit_integer(
    num: &Polynomial,
    den: &Polynomial,
    tau: &TruncatedSeries,
    order: i64,
) -> TruncatedSeries {
    debug_assert!(num.is_integral() && den.is_integral() && tau.offset() >= 1);
    let n = order as usize;
    let mut tau_vec = vec![BigInt::zero(); n];
    for (k, c) in tau.terms() {
        if (k as usize) < n {
            tau_vec[k as usize] = c.numer().clone();
        }
    }
    let nc = compose_poly_z(&integer_coeffs(num), &tau_vec, n);
    let dc = compose_poly_z(&integer_coeffs(den), &tau_vec, n);
    let (scaled, b0) = div_scaled_z(&nc, &dc, n);
    let mut denom_power = b0.clone();
    let mut coeffs = Vec::with_capacity(n);
    for c in scaled {
        if c.is_zero() {
            coeffs.push(BigRational::zero());
        } else {
            coeffs.push(BigRational::new(c, denom_power.clone()));
        }
        denom_power *= &b0;
    }
    TruncatedSeries::new(0, coeffs)
}

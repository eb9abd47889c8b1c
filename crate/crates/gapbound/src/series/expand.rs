//! Local expansion of rational functions.
//!
//! `expand_at` produces the Laurent expansion of `f` in the local parameter
//! at a rational point (the shifted coordinate `t - p`) or at infinity (the
//! substitution `t -> 1/t`). `expand_in_x` rewrites `f` in powers of an
//! arbitrary local parameter `x` by composing the expansion of `f` with the
//! compositional inverse of the expansion of `x`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{Polynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Where to expand: a rational point of the affine line, or infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExpansionPoint {
    Finite(BigRational),
    Infinity,
}

impl ExpansionPoint {
    pub fn origin() -> Self {
        ExpansionPoint::Finite(BigRational::zero())
    }
}

/// Reverses the coefficient list: `p(1/t) * t^(deg p)`.
fn reversed(p: &Polynomial) -> Polynomial {
    let mut coeffs: Vec<BigRational> = p.coeffs().to_vec();
    coeffs.reverse();
    Polynomial::new(coeffs)
}

/// Division of exact polynomials as power series: `len` coefficients of
/// `num/den` where `den` has nonzero constant term.
fn poly_series_div(num: &Polynomial, den: &Polynomial, len: usize) -> Vec<BigRational> {
    debug_assert!(!den.coeff(0).is_zero());
    let d0 = den.coeff(0);
    let mut q: Vec<BigRational> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = num.coeff(k);
        for j in 1..=k {
            let dj = den.coeff(j);
            if dj.is_zero() {
                continue;
            }
            let qk = &q[k - j];
            if qk.is_zero() {
                continue;
            }
            acc -= dj * qk;
        }
        q.push(acc / &d0);
    }
    q
}

/// Laurent expansion of `f` at `p` with window `order`: the result `s`
/// satisfies `f - s = O(local_parameter^order)` and its coefficients are
/// exact through every exponent below `order`.
pub fn expand_at(
    f: &RationalFunction,
    p: &ExpansionPoint,
    order: i64,
) -> Result<TruncatedSeries> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let (num, den, extra) = match p {
        ExpansionPoint::Finite(c) => (f.num().shift(c), f.den().shift(c), 0i64),
        ExpansionPoint::Infinity => {
            let d = f.den().degree().unwrap() as i64 - f.num().degree().unwrap() as i64;
            (reversed(f.num()), reversed(f.den()), d)
        }
    };
    let vn = num.trailing_zero_count();
    let vd = den.trailing_zero_count();
    let offset = extra + vn as i64 - vd as i64;
    if order <= offset {
        return Err(Error::WindowTooSmall {
            order,
            valuation: offset,
        });
    }
    let num_unit = Polynomial::new(num.coeffs()[vn..].to_vec());
    let den_unit = Polynomial::new(den.coeffs()[vd..].to_vec());
    let coeffs = poly_series_div(&num_unit, &den_unit, (order - offset) as usize);
    Ok(TruncatedSeries::new(offset, coeffs))
}

/// The expansion of `f` in powers of the local parameter `x` at the rational
/// point `p`, through exponent `order - 1`.
///
/// Computed as the composition of `expand_at(f, p, ..)` with the reversion of
/// `expand_at(x, p, ..)`; the windows of the two expansions are chosen so the
/// composed window reaches `order` even when `f` has a pole at `p`.
pub fn expand_in_x(
    f: &RationalFunction,
    x: &RationalFunction,
    p: &BigRational,
    order: i64,
) -> Result<TruncatedSeries> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    if x.is_constant() || x.valuation_at_point(p)? != 1 {
        return Err(Error::NotALocalParameter);
    }
    let vf = f.valuation_at_point(p)?;
    if order <= vf {
        return Err(Error::WindowTooSmall {
            order,
            valuation: vf,
        });
    }
    let x_window = if vf < 0 { order + 1 - vf } else { order };
    let point = ExpansionPoint::Finite(p.clone());
    let sf = expand_at(f, &point, order)?;
    let sx = expand_at(x, &point, x_window)?;
    let inverse = sx.reverse()?;
    let composed = sf.compose(&inverse)?;
    debug_assert!(composed.order() >= order);
    Ok(composed.truncate(order))
}

/// `i`-fold derivative of `f` with respect to `x`, as an exact rational
/// function: each step maps `g` to `(dg/dt) / (dx/dt)`.
pub fn derivative_wrt_x(
    f: &RationalFunction,
    x: &RationalFunction,
    i: u32,
) -> Result<RationalFunction> {
    if x.is_constant() {
        return Err(Error::ConstantParameter);
    }
    let dx = x.derivative();
    let mut g = f.clone();
    for _ in 0..i {
        g = g.derivative().div(&dx)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
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

    fn ser(offset: i64, coeffs: &[i64]) -> TruncatedSeries {
        TruncatedSeries::new(offset, coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn geometric_series_at_origin() {
        let f = rf(&[1], &[1, -1]);
        let s = expand_at(&f, &ExpansionPoint::origin(), 5).unwrap();
        assert_eq!(s, ser(0, &[1, 1, 1, 1, 1]));
    }

    #[test]
    fn expansion_at_shifted_point() {
        // 1/t around t = 1: 1 - (t-1) + (t-1)^2
        let f = rf(&[1], &[0, 1]);
        let s = expand_at(&f, &ExpansionPoint::Finite(rat(1)), 3).unwrap();
        assert_eq!(s, ser(0, &[1, -1, 1]));
    }

    #[test]
    fn laurent_pole_at_origin() {
        let f = rf(&[1], &[0, 1]);
        let s = expand_at(&f, &ExpansionPoint::origin(), 2).unwrap();
        assert_eq!(s.offset(), -1);
        assert_eq!(s.coeffs(), &[rat(1), rat(0), rat(0)]);
        assert_eq!(s.order(), 2);
    }

    #[test]
    fn window_must_exceed_valuation() {
        let f = rf(&[0, 0, 0, 1], &[1]); // t^3
        assert!(matches!(
            expand_at(&f, &ExpansionPoint::origin(), 3),
            Err(Error::WindowTooSmall { .. })
        ));
    }

    #[test]
    fn expansion_at_infinity() {
        // t/(t - 1) = 1 + u + u^2 + ... in u = 1/t
        let f = rf(&[0, 1], &[-1, 1]);
        let s = expand_at(&f, &ExpansionPoint::Infinity, 4).unwrap();
        assert_eq!(s, ser(0, &[1, 1, 1, 1]));
        // t^2 has a double pole at infinity
        let g = rf(&[0, 0, 1], &[1]);
        let sg = expand_at(&g, &ExpansionPoint::Infinity, 1).unwrap();
        assert_eq!(sg.offset(), -2);
        assert_eq!(sg.coeff(-2), Some(rat(1)));
    }

    #[test]
    fn expand_in_identity_parameter_is_bit_identical() {
        let f = rf(&[3, 0, 1], &[1, 1, 0, 2]);
        let direct = expand_at(&f, &ExpansionPoint::origin(), 12).unwrap();
        let via_x = expand_in_x(&f, &RationalFunction::variable(), &rat(0), 12).unwrap();
        assert_eq!(direct, via_x);
    }

    #[test]
    fn sharp_family_exponents() {
        // 1 + t^3/(1 - t^2) = 1 + t^3 + t^5 + t^7 + O(t^8)
        let one = RationalFunction::one();
        let f = &one + &rf(&[0, 0, 0, 1], &[1, 0, -1]);
        let s = expand_in_x(&f, &RationalFunction::variable(), &rat(0), 8).unwrap();
        assert_eq!(s, ser(0, &[1, 0, 0, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn expansion_in_cubic_parameter() {
        // f = t, x = t + t^3: t = x - x^3 + 3x^5 + O(x^6)
        let f = RationalFunction::variable();
        let x = rf(&[0, 1, 0, 1], &[1]);
        let s = expand_in_x(&f, &x, &rat(0), 6).unwrap();
        assert_eq!(s, ser(1, &[1, 0, -1, 0, 3]));
    }

    #[test]
    fn expansion_with_pole_in_x_powers() {
        // f = 1/t, x = t: expansion is x^-1; Laurent windows work through
        // the composition path as well
        let f = rf(&[1], &[0, 1]);
        let s = expand_in_x(&f, &RationalFunction::variable(), &rat(0), 3).unwrap();
        assert_eq!(s.offset(), -1);
        assert_eq!(s.coeff(-1), Some(rat(1)));
        assert_eq!(s.coeff(2), Some(rat(0)));
        assert_eq!(s.order(), 3);
        // and with a genuinely curved parameter
        let x = rf(&[0, 1, 1], &[1]); // t + t^2
        let sl = expand_in_x(&f, &x, &rat(0), 3).unwrap();
        // 1/t in powers of x = t+t^2: t = x - x^2 + 2x^3 - ...,
        // 1/t = x^-1 * 1/(1 - x + 2x^2 - ...) = x^-1 (1 + x - x^2 ...) emm
        // verify by multiplying back instead of hand expansion below
        let back = sl.mul(&expand_in_x(&x, &x, &rat(0), 4).unwrap());
        // f * x = 1/t * (t + t^2) = 1 + t which in x-powers equals 1 + x - x^2 + ...
        let expected = expand_in_x(&rf(&[1, 1], &[1]), &x, &rat(0), back.order()).unwrap();
        assert_eq!(back, expected.truncate(back.order()));
    }

    #[test]
    fn rejects_non_local_parameters() {
        let f = rf(&[1], &[1, -1]);
        let x2 = rf(&[0, 0, 1], &[1]); // t^2: valuation 2 at origin
        assert_eq!(
            expand_in_x(&f, &x2, &rat(0), 8),
            Err(Error::NotALocalParameter)
        );
        let c = rf(&[5], &[1]);
        assert_eq!(
            expand_in_x(&f, &c, &rat(0), 8),
            Err(Error::NotALocalParameter)
        );
    }

    #[test]
    fn derivative_wrt_x_examples() {
        let t = RationalFunction::variable();
        // f = t^2, x = t, one derivative: 2t
        let f = rf(&[0, 0, 1], &[1]);
        assert_eq!(derivative_wrt_x(&f, &t, 1).unwrap(), rf(&[0, 2], &[1]));
        // f = 1/(1-t): n-th derivative is n!/(1-t)^(n+1)
        let g = rf(&[1], &[1, -1]);
        let mut factorial = 1i64;
        for n in 1..=4u32 {
            factorial *= n as i64;
            let d = derivative_wrt_x(&g, &t, n).unwrap();
            let denom = Polynomial::from_integers(&[1, -1]).pow(n + 1);
            let expected = RationalFunction::new(
                Polynomial::from_integers(&[factorial]),
                denom,
            )
            .unwrap();
            assert_eq!(d, expected);
        }
        // chain rule: f = t, x = t + t^3 gives 1/(1 + 3t^2)
        let x3 = rf(&[0, 1, 0, 1], &[1]);
        assert_eq!(
            derivative_wrt_x(&t, &x3, 1).unwrap(),
            rf(&[1], &[1, 0, 3])
        );
        // constant parameter rejected
        assert_eq!(
            derivative_wrt_x(&f, &c_const(), 1),
            Err(Error::ConstantParameter)
        );
    }

    fn c_const() -> RationalFunction {
        RationalFunction::constant(rat(9))
    }
}

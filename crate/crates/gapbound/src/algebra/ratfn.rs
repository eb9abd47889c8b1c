//! Rational functions in reduced normal form.
//!
//! The numerator and denominator are kept coprime and the denominator monic,
//! so equality of values is equality of representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::Polynomial;
use crate::error::{Error, Result};

/// A quotient of polynomials with `gcd(num, den) = 1` and monic denominator.
///
/// ```
/// use gapbound::algebra::{Polynomial, RationalFunction};
///
/// let f = RationalFunction::new(
///     Polynomial::from_integers(&[-1, 0, 1]), // t^2 - 1
///     Polynomial::from_integers(&[-1, 1]),    // t - 1
/// ).unwrap();
/// assert_eq!(f.to_string(), "t + 1");
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num / den` to normal form. Fails on a zero denominator.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivideByZeroPolynomial);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            let (n, _) = num.divrem(&g)?;
            let (d, _) = den.divrem(&g)?;
            (n, d)
        };
        let lc = den.leading_coeff().expect("den nonzero").clone();
        Ok(RationalFunction {
            num: num.scale(&lc.recip()),
            den: den.monic(),
        })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    /// The coordinate function `t`.
    pub fn variable() -> Self {
        Self::from_polynomial(Polynomial::variable())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when numerator and denominator both have integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.num.is_integral() && self.den.is_integral()
    }

    /// Scales by a rational constant.
    pub fn scale_by(&self, c: &BigRational) -> RationalFunction {
        if c.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivideByZeroPolynomial);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivideByZeroPolynomial);
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = RationalFunction::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Derivative with respect to `t` by the quotient rule.
    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction::new(n, &self.den * &self.den).expect("den nonzero")
    }

    /// Evaluates at a point where the denominator does not vanish.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivideByZeroPolynomial);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Order of vanishing at the rational point `p` (negative at a pole).
    /// The zero function has no valuation.
    pub fn valuation_at_point(&self, p: &BigRational) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let shifted_num = self.num.shift(p);
        let shifted_den = self.den.shift(p);
        Ok(shifted_num.trailing_zero_count() as i64 - shifted_den.trailing_zero_count() as i64)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(n, &self.den * &rhs.den).expect("den nonzero")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let n = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::new(n, &self.den * &rhs.den).expect("den nonzero")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("den nonzero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

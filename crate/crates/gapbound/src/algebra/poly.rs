//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored by ascending exponent in the variable `t`. The
//! stored leading coefficient is always nonzero; the zero polynomial is the
//! empty coefficient list and its degree is `None`, which orders below every
//! finite degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `t` with exact rational coefficients.
///
/// ```
/// use gapbound::algebra::Polynomial;
///
/// let p = Polynomial::from_integers(&[-1, 0, 1]); // t^2 - 1
/// assert_eq!(p.degree(), Some(2));
/// assert_eq!(p.to_string(), "t^2 - 1");
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    /// Builds a polynomial from coefficients by ascending exponent,
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    /// The variable `t` itself.
    pub fn variable() -> Self {
        Polynomial::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// Convenience constructor from integer coefficients by ascending exponent.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Degree, or `None` for the zero polynomial (below every finite degree).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map(|c| c.is_one()).unwrap_or(false)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                Polynomial {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Taylor shift: returns `p(t + c)`.
    pub fn shift(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() || self.is_constant() {
            return self.clone();
        }
        // Horner in (t + c): acc <- acc * (t + c) + a_k from the top down.
        let mut acc: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // acc * t
            acc.insert(0, BigRational::zero());
            // + c * acc (the shifted copy)
            for k in 0..acc.len() - 1 {
                let add = &acc[k + 1] * c;
                acc[k] += add;
            }
            acc[0] += a;
        }
        Polynomial::new(acc)
    }

    /// Multiplicity of `t` as a factor, i.e. the number of leading zero
    /// coefficients. Zero polynomial reports 0.
    pub fn trailing_zero_count(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Quotient and remainder with `deg r < deg d`.
    pub fn divrem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        if d.is_zero() {
            return Err(Error::DivideByZeroPolynomial);
        }
        let dd = d.degree().unwrap();
        if self.coeffs.len() < d.coeffs.len() {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); self.coeffs.len() - d.coeffs.len() + 1];
        let lead = d.leading_coeff().unwrap().clone();
        for k in (0..quo.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let sub = dc * &c;
                rem[k + i] -= sub;
            }
            quo[k] = c;
        }
        Ok((Polynomial::new(quo), Polynomial::new(rem)))
    }

    /// True when `d` divides `self` exactly.
    pub fn is_divisible_by(&self, d: &Polynomial) -> bool {
        match self.divrem(d) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Largest `k` with `d^k | self`, together with the cofactor `self / d^k`.
    /// Requires `d` nonconstant; the zero polynomial is not a valid input.
    pub fn multiplicity_of(&self, d: &Polynomial) -> Result<(u32, Polynomial)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        debug_assert!(!d.is_constant());
        let mut k = 0u32;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.divrem(d)?;
            if !r.is_zero() {
                return Ok((k, cur));
            }
            k += 1;
            cur = q;
        }
    }

    /// Monic greatest common divisor via the primitive pseudo-remainder
    /// sequence over the integers, which keeps intermediate coefficients far
    /// smaller than rational elimination would.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = integer_primitive(self);
        let mut b = integer_primitive(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_rem_primitive(&a, &b);
            a = b;
            b = r;
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
        }
        if !b.is_empty() {
            // a nonzero constant remainder means the inputs are coprime
            return Polynomial::one();
        }
        Polynomial::new(
            a.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
        .monic()
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// True when the polynomial has no repeated roots.
    pub fn is_squarefree(&self) -> bool {
        if self.coeffs.len() <= 2 {
            return !self.is_zero();
        }
        self.gcd(&self.derivative()).is_constant()
    }
}

/// Coefficients scaled to integers and divided by their content (sign
/// normalized to a positive leading coefficient).
fn integer_primitive(p: &Polynomial) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::from(0);
    for v in &ints {
        content = content.gcd(v);
    }
    if let Some(last) = ints.last() {
        if last.is_negative() {
            content = -content;
        }
    }
    if !content.is_zero() && content != BigInt::from(1) {
        for v in ints.iter_mut() {
            *v = &*v / &content;
        }
    }
    ints
}

/// Primitive part of the pseudo-remainder of `a` by `b`, for integer
/// coefficient slices with `len(a) >= len(b) >= 2`.
fn pseudo_rem_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    use num_integer::Integer;
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem: Vec<BigInt> = a.to_vec();
    for k in (db..rem.len()).rev() {
        let coef = rem[k].clone();
        if coef.is_zero() {
            continue;
        }
        // rem <- lead * rem - coef * t^(k - db) * b
        for v in rem.iter_mut() {
            *v *= lead;
        }
        let shift = k - db;
        for (i, bi) in b.iter().enumerate() {
            let sub = bi * &coef;
            rem[shift + i] -= sub;
        }
        debug_assert!(rem[k].is_zero());
    }
    while rem.last().map(|v| v.is_zero()).unwrap_or(false) {
        rem.pop();
    }
    let mut content = BigInt::from(0);
    for v in &rem {
        content = content.gcd(v);
    }
    if let Some(last) = rem.last() {
        if last.is_negative() {
            content = -content;
        }
    }
    if !content.is_zero() && content != BigInt::from(1) {
        for v in rem.iter_mut() {
            *v = &*v / &content;
        }
    }
    rem
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Renders one coefficient for use inside a term, e.g. `3` or `1/2`.
fn rat_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Canonical form: descending exponents, explicit `*`, no implicit
    /// multiplication, so the output reparses to an equal polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_part = if mag.is_one() && k > 0 {
                None
            } else {
                Some(rat_string(&mag))
            };
            match (coeff_part, k) {
                (Some(s), 0) => write!(f, "{s}")?,
                (Some(s), 1) => write!(f, "{s}*t")?,
                (Some(s), _) => write!(f, "{s}*t^{k}")?,
                (None, 1) => write!(f, "t")?,
                (None, _) => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_integers(coeffs)
    }

    #[test]
    fn degree_of_zero_is_below_all() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert!(Polynomial::zero().degree() < Some(0));
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn gcd_common_root() {
        // gcd(t^2 - 1, t^2 - 2t + 1) = t - 1
        let g = p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
    }

    #[test]
    fn shift_squares() {
        // shift(t^2, -1) = (t - 1)^2 = t^2 - 2t + 1
        let s = p(&[0, 0, 1]).shift(&BigRational::from_integer((-1).into()));
        assert_eq!(s, p(&[1, -2, 1]));
    }

    #[test]
    fn divrem_matches_reconstruction() {
        let a = p(&[1, 2, 0, 5, -3]);
        let d = p(&[-1, 0, 2]);
        let (q, r) = a.divrem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn divrem_by_zero_rejected() {
        assert_eq!(
            p(&[1]).divrem(&Polynomial::zero()),
            Err(Error::DivideByZeroPolynomial)
        );
    }

    #[test]
    fn multiplicity_counts_powers() {
        // (t-1)^2 * (t+2) has multiplicity 2 at t-1
        let f = &p(&[1, -2, 1]) * &p(&[2, 1]);
        let (k, cof) = f.multiplicity_of(&p(&[-1, 1])).unwrap();
        assert_eq!(k, 2);
        assert_eq!(cof, p(&[2, 1]));
    }

    #[test]
    fn display_round_trip_shapes() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "t^2 - 2*t + 1");
        assert_eq!(p(&[0, 1]).to_string(), "t");
        assert_eq!(p(&[-7]).to_string(), "-7");
        let half = Polynomial::new(vec![BigRational::new(1.into(), 2.into())]);
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn eval_horner() {
        let f = p(&[1, 0, -1]); // 1 - t^2
        assert_eq!(
            f.eval(&BigRational::from_integer(3.into())),
            BigRational::from_integer((-8).into())
        );
    }
}

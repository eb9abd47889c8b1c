//! Exact truncated Laurent/Taylor series at a point.
//!
//! A `TruncatedSeries` stores a window of exactly known coefficients: the
//! exponent of the first stored coefficient (`offset`, possibly negative),
//! the coefficients themselves, and implicitly the order `N = offset + len`,
//! meaning every exponent `< N` is exactly known. Binary operations compute
//! the largest window justified by their inputs' windows rather than assuming
//! the inputs share one, so precision is never silently overstated.
//!
//! Series are normalized: if any stored coefficient is nonzero, the first one
//! is nonzero (so `offset` is the valuation). A window in which every known
//! coefficient is zero is represented with an empty coefficient list and
//! reported by [`TruncatedSeries::is_zero_window`].

mod expand;

pub use expand::{derivative_wrt_x, expand_at, expand_in_x, ExpansionPoint};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    offset: i64,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Builds a series from the first stored exponent and the coefficients,
    /// normalizing leading zeros into the offset.
    pub fn new(offset: i64, coeffs: Vec<BigRational>) -> Self {
        let mut s = TruncatedSeries { offset, coeffs };
        s.normalize();
        s
    }

    /// The empty window: nothing known below `order`, everything known below
    /// it is zero.
    pub fn zero_window(order: i64) -> Self {
        TruncatedSeries {
            offset: order,
            coeffs: Vec::new(),
        }
    }

    /// The identity series `t + O(t^order)`.
    pub fn identity(order: i64) -> Self {
        if order < 2 {
            return TruncatedSeries::zero_window(order);
        }
        let mut coeffs = vec![BigRational::zero(); (order - 1) as usize];
        coeffs[0] = BigRational::one();
        TruncatedSeries { offset: 1, coeffs }
    }

    /// A constant known exactly through the given order.
    pub fn constant(c: BigRational, order: i64) -> Self {
        if order <= 0 {
            return TruncatedSeries::zero_window(order);
        }
        let mut coeffs = vec![BigRational::zero(); order as usize];
        coeffs[0] = c;
        TruncatedSeries::new(0, coeffs)
    }

    fn normalize(&mut self) {
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len());
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.offset += lead as i64;
        }
    }

    /// Exponent of the first stored coefficient. After normalization this is
    /// the valuation when the window is nonzero, and equals the order when it
    /// is all zero.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// All exponents `< order` are exactly known.
    pub fn order(&self) -> i64 {
        self.offset + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True when every known coefficient in the window is zero.
    pub fn is_zero_window(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Valuation of the known part; `None` for an all-zero window.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero_window() {
            None
        } else {
            Some(self.offset)
        }
    }

    /// Coefficient of `t^k`; `None` when `k` lies at or beyond the order.
    pub fn coeff(&self, k: i64) -> Option<BigRational> {
        if k >= self.order() {
            return None;
        }
        if k < self.offset {
            return Some(BigRational::zero());
        }
        Some(self.coeffs[(k - self.offset) as usize].clone())
    }

    /// Nonzero known terms as `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.offset + i as i64, c))
    }

    /// Shrinks the window to `new_order` (never extends knowledge).
    pub fn truncate(&self, new_order: i64) -> Self {
        if new_order >= self.order() {
            return self.clone();
        }
        if new_order <= self.offset {
            return TruncatedSeries::zero_window(new_order);
        }
        TruncatedSeries::new(
            self.offset,
            self.coeffs[..(new_order - self.offset) as usize].to_vec(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return TruncatedSeries::zero_window(self.order());
        }
        TruncatedSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Multiplies the series by `t^delta`.
    pub fn shift_exponents(&self, delta: i64) -> Self {
        TruncatedSeries {
            offset: self.offset + delta,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Sum on the shared window `min(order, other.order)`.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let offset = self.offset.min(other.offset).min(order);
        let len = (order - offset) as usize;
        let mut coeffs = vec![BigRational::zero(); len];
        for (src_off, src) in [(self.offset, &self.coeffs), (other.offset, &other.coeffs)] {
            for (i, c) in src.iter().enumerate() {
                let k = src_off + i as i64;
                if k < order && !c.is_zero() {
                    coeffs[(k - offset) as usize] += c;
                }
            }
        }
        TruncatedSeries::new(offset, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product; the resulting window is
    /// `min(self.order + other.offset, other.order + self.offset)`.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_to(other, i64::MAX)
    }

    /// Product truncated to at most `cap` (saves work when the caller only
    /// needs a smaller window).
    pub fn mul_to(&self, other: &Self, cap: i64) -> Self {
        let offset = self.offset + other.offset;
        let order = (self.order() + other.offset)
            .min(other.order() + self.offset)
            .min(cap);
        let len = (order - offset).max(0) as usize;
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries::new(offset, coeffs)
    }

    /// Integer power by binary exponentiation, truncated to at most `cap`.
    pub fn pow_to(&self, e: u64, cap: i64) -> Self {
        if e == 0 {
            // windows beyond a million coefficients are out of scope; the
            // clamp keeps an uncapped call from allocating absurdly
            return TruncatedSeries::constant(BigRational::one(), cap.min(1 << 20));
        }
        let mut base = self.truncate(cap);
        let mut acc: Option<TruncatedSeries> = None;
        let mut e = e;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul_to(&base, cap),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul_to(&base, cap);
        }
        acc.unwrap()
    }

    /// Quotient. The divisor's leading known coefficient must be nonzero
    /// (an all-zero window cannot be inverted). The resulting window length
    /// is `min` of the two input lengths.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero_window() {
            return Err(Error::DivisorNotUnit);
        }
        let offset = self.offset - other.offset;
        let len = self.coeffs.len().min(other.coeffs.len());
        if self.is_zero_window() {
            return Ok(TruncatedSeries::zero_window(self.order() - other.offset));
        }
        let b0 = &other.coeffs[0];
        let mut q: Vec<BigRational> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero);
            for j in 1..=k {
                if let Some(bj) = other.coeffs.get(j) {
                    if !bj.is_zero() && !q[k - j].is_zero() {
                        acc -= bj * &q[k - j];
                    }
                }
            }
            q.push(acc / b0);
        }
        Ok(TruncatedSeries::new(offset, q))
    }

    /// Formal derivative with respect to `t`; the window shrinks by one.
    pub fn derivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = self.offset + i as i64;
            coeffs.push(c * BigRational::from_integer(BigInt::from(k)));
        }
        // exponent k maps to k-1; the order drops from N to N-1
        let mut s = TruncatedSeries {
            offset: self.offset - 1,
            coeffs,
        };
        // the t^0 term of the input contributes nothing; drop the trailing
        // slot so the order is exactly order-1
        s.normalize();
        s.truncate(self.order() - 1)
    }

    /// Substitutes `inner` for the variable: `self(inner(t))`.
    ///
    /// Requires the inner series to vanish at the origin (offset >= 1).
    /// Laurent outer series are supported by inverting the inner series.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.is_zero_window() {
            if inner.order() < 1 {
                return Err(Error::InnerSeriesNotVanishing);
            }
            if self.offset < 0 {
                // a genuinely zero inner series cannot be inverted
                return Err(Error::DivisorNotUnit);
            }
            if self.order() < 1 {
                return Err(Error::InnerSeriesNotVanishing);
            }
            return Ok(TruncatedSeries::constant(
                self.coeff(0).expect("order >= 1"),
                inner.order(),
            ));
        }
        let v = inner.offset;
        if v < 1 {
            return Err(Error::InnerSeriesNotVanishing);
        }
        // window cap: truncation error of the outer series enters at
        // order * v; the inner series' own window enters through its powers
        let outer_cap = self.order().saturating_mul(v);
        let k_lo = if self.offset < 0 {
            Some(self.offset)
        } else {
            self.terms().map(|(k, _)| k).find(|&k| k >= 1)
        };
        let cap = match k_lo {
            Some(k) => outer_cap.min(inner.order().saturating_add((k - 1).saturating_mul(v))),
            None => outer_cap,
        };

        let mut acc = TruncatedSeries::zero_window(cap);
        // non-negative exponents, ascending, with incremental powers
        let mut power: Option<(i64, TruncatedSeries)> = None;
        for (k, c) in self.terms().filter(|(k, _)| *k >= 0) {
            if k == 0 {
                acc = acc.add(&TruncatedSeries::constant(c.clone(), cap));
                continue;
            }
            let pw = match power.take() {
                Some((kp, p)) => p.mul_to(&inner.pow_to((k - kp) as u64, cap), cap),
                None => inner.pow_to(k as u64, cap),
            };
            acc = acc.add(&pw.scale(c));
            power = Some((k, pw));
        }
        // negative exponents, descending, through powers of the inverse
        if self.offset < 0 {
            let one = TruncatedSeries::constant(BigRational::one(), inner.order());
            let inv = one.div(inner)?;
            let mut pw: Option<TruncatedSeries> = None;
            for k in 1..=(-self.offset) {
                let p = match pw.take() {
                    None => inv.clone(),
                    Some(p) => p.mul_to(&inv, cap),
                };
                if let Some(c) = self.coeff(-k) {
                    if !c.is_zero() {
                        acc = acc.add(&p.scale(&c));
                    }
                }
                pw = Some(p);
            }
        }
        Ok(acc.truncate(cap))
    }

    /// Compositional inverse of a local parameter series (offset exactly 1,
    /// nonzero leading coefficient): returns `r` with `self(r) = r(self) = t`
    /// through the full window.
    ///
    /// Newton iteration with doubling precision; each step solves
    /// `r <- r - (self(r) - t)/self'(r)`.
    pub fn reverse(&self) -> Result<Self> {
        if self.is_zero_window() || self.offset != 1 {
            return Err(Error::NotALocalParameter);
        }
        let n = self.order();
        let s1 = &self.coeffs[0];
        let mut r = TruncatedSeries::new(1, vec![s1.recip()]);
        let mut precision = 2i64;
        if n <= precision {
            return Ok(r.truncate(n));
        }
        let sd = self.derivative();
        while precision < n {
            let target = (precision * 2).min(n);
            // pad the iterate with zero coefficients: the padding error is
            // part of the error Newton contracts quadratically
            let mut padded = r.coeffs.clone();
            padded.resize((target - 1) as usize, BigRational::zero());
            let rp = TruncatedSeries::new(1, padded);
            let srp = self.truncate(target).compose(&rp)?;
            let residual = srp.sub(&TruncatedSeries::identity(target));
            debug_assert!(
                residual.is_zero_window() || residual.offset >= precision,
                "Newton invariant: residual valuation at least current precision"
            );
            if residual.is_zero_window() {
                r = rp;
            } else {
                let deriv = sd.truncate(target).compose(&rp)?;
                let delta = residual.div(&deriv)?;
                r = rp.sub(&delta);
            }
            r = r.truncate(target);
            precision = target;
        }
        Ok(r)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (k, c) in self.terms() {
            let mag = c.abs();
            if any {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            any = true;
            let coeff = if mag.is_one() && k != 0 {
                None
            } else if mag.is_integer() {
                Some(mag.numer().to_string())
            } else {
                Some(format!("{}/{}", mag.numer(), mag.denom()))
            };
            match (coeff, k) {
                (Some(s), 0) => write!(f, "{s}")?,
                (Some(s), 1) => write!(f, "{s}*t")?,
                (Some(s), k) => write!(f, "{s}*t^{k}")?,
                (None, 1) => write!(f, "t")?,
                (None, k) => write!(f, "t^{k}")?,
            }
        }
        if !any {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order())
    }
}

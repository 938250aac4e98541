//! Truncated formal power series about the origin.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients `c_0..=c_N`; every
//! term of degree above `N` is unknown and is dropped by each operation. Binary
//! operations truncate to the smaller of the two operand orders.
//!
//! Two coefficient fields are used throughout the crate: exact rationals
//! ([`Rational`]) for integer trace identities and [`Complex64`] for the
//! fractional routes. Transcendental operations (`log`, `exp` with a nonzero
//! constant, `powc`) exist only for the complex field.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Truncation order used when a caller has no better choice.
pub const DEFAULT_ORDER: usize = 64;

/// Coefficient field of a [`PowerSeries`].
pub trait Coeff:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_int(n: i64) -> Self;
}

impl Coeff for Rational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Coeff for Complex64 {
    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
}

#[derive(Clone, PartialEq)]
pub struct PowerSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> PowerSeries<T> {
    /// Builds a series of the given order, zero-padding or truncating `coeffs`.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c * z^k`, or the zero series when `k` exceeds the order.
    pub fn monomial(c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `z^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order.min(self.order()))
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> PowerSeries<U> {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| self.coeffs[k].clone() - other.coeffs[k].clone())
            .collect();
        Self { coeffs }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![T::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse, `a * b = 1` through the truncation order.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = T::one() / a0.clone();
        let mut b: Vec<T> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for k in 1..=n {
            let mut acc = T::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * b[k - j].clone();
                }
            }
            b.push(-(acc * inv0.clone()));
        }
        Ok(Self { coeffs: b })
    }

    /// Integer power; negative exponents go through [`Self::reciprocal`].
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.reciprocal()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            k >>= 1;
            if k > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// `f(g(z))` by Horner's scheme; `g` must vanish at the origin.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        let g = inner.truncate(n);
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().take(n + 1).rev() {
            acc = acc.mul(&g);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Termwise antiderivative with zero constant term. The result has order
    /// one higher than the input since every input coefficient is known.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / T::from_int(k as i64 + 1));
        }
        Self { coeffs }
    }

    /// Termwise derivative; the order drops by one (floored at zero).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_int(k as i64))
            .collect();
        Self { coeffs }
    }

    /// Divides by `z^k`. The dropped leading coefficients must be zero.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InvalidArgument(format!(
                "cannot divide a series of order {} by z^{k}",
                self.order()
            )));
        }
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidArgument(format!(
                "series is not divisible by z^{k}"
            )));
        }
        Ok(Self {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![T::zero(); n + 1];
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        Self { coeffs }
    }

    /// `f(-z)`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Self { coeffs }
    }

    /// `exp(a)` for a series with zero constant term, via `b' = a' b`.
    pub fn exp_nilpotent(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        Ok(self.exp_shifted())
    }

    fn exp_shifted(&self) -> Self {
        let n = self.order();
        let mut b = vec![T::zero(); n + 1];
        b[0] = T::one();
        for k in 1..=n {
            let mut acc = T::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + T::from_int(j as i64) * self.coeffs[j].clone() * b[k - j].clone();
                }
            }
            b[k] = acc / T::from_int(k as i64);
        }
        Self { coeffs: b }
    }

    /// Evaluates the truncated polynomial by Horner's rule.
    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }
}

impl PowerSeries<Complex64> {
    /// Principal logarithm; requires a nonzero constant term.
    pub fn log(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 == Complex64::zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.order();
        let mut c = vec![Complex64::zero(); n + 1];
        c[0] = a0.ln();
        for k in 1..=n {
            let mut acc = self.coeffs[k] * k as f64;
            for (j, cj) in c.iter().enumerate().take(k).skip(1) {
                acc -= cj * (j as f64) * self.coeffs[k - j];
            }
            c[k] = acc / (a0 * k as f64);
        }
        Ok(Self { coeffs: c })
    }

    pub fn exp(&self) -> Self {
        let a0 = self.coeffs[0];
        let mut shifted = self.clone();
        shifted.coeffs[0] = Complex64::zero();
        shifted.exp_shifted().scale(&a0.exp())
    }

    /// `a^s = exp(s log a)` with the principal logarithm of `a(0)`.
    pub fn powc(&self, s: Complex64) -> Result<Self> {
        Ok(self.log()?.scale(&s).exp())
    }
}

impl PowerSeries<Rational> {
    pub fn to_complex(&self) -> PowerSeries<Complex64> {
        self.map(|c| Complex64::new(rational_to_f64(c), 0.0))
    }
}

/// Nearest double to an exact rational.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or an integer literal into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::MalformedRational(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl<T: Coeff> fmt::Debug for PowerSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSeries{:?} + O(z^{})", self.coeffs, self.order() + 1)
    }
}

impl<T: Coeff> Add for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn add(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::add(self, rhs)
    }
}

impl<T: Coeff> Sub for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn sub(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::sub(self, rhs)
    }
}

impl<T: Coeff> Mul for &PowerSeries<T> {
    type Output = PowerSeries<T>;
    fn mul(self, rhs: Self) -> PowerSeries<T> {
        PowerSeries::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        BigRational::new(p.into(), d.into())
    }

    fn rs(c: &[i64], order: usize) -> PowerSeries<Rational> {
        PowerSeries::new(c.iter().map(|&x| Rational::from_int(x)).collect(), order)
    }

    #[test]
    fn difference_of_squares() {
        let a = rs(&[1, 1], 2);
        let b = rs(&[1, -1], 2);
        assert_eq!(&a * &b, rs(&[1, 0, -1], 2));
        assert_eq!(&a + &b, rs(&[2], 2));
        let c = rs(&[1, 2, 3], 2);
        assert_eq!(&c * &PowerSeries::one(2), c);
    }

    #[test]
    fn truncation_takes_min_order() {
        let a = rs(&[1, 1, 1, 1], 3);
        let b = rs(&[1, 1], 1);
        assert_eq!((&a * &b).order(), 1);
        assert_eq!((&a + &b).order(), 1);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(rs(&[1, 1], 3).reciprocal().unwrap(), rs(&[1, -1, 1, -1], 3));
        assert_eq!(rs(&[1, 0, 3], 4).reciprocal().unwrap(), rs(&[1, 0, -3, 0, 9], 4));
        let half = PowerSeries::constant(Rational::from_int(2), 0).reciprocal().unwrap();
        assert_eq!(half.coeff(0), q(1, 2));
        assert_eq!(rs(&[0, 1], 3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn compose_examples() {
        let f = rs(&[1, 1], 4);
        let g = rs(&[0, 0, 1], 4);
        assert_eq!(f.compose(&g).unwrap(), rs(&[1, 0, 1], 4));

        let exp = PowerSeries::new(vec![q(1, 1), q(1, 1), q(1, 2)], 2);
        let neg_z = rs(&[0, -1], 2);
        assert_eq!(
            exp.compose(&neg_z).unwrap(),
            PowerSeries::new(vec![q(1, 1), q(-1, 1), q(1, 2)], 2)
        );

        let geom = rs(&[0, 1, 1, 1, 1], 4);
        assert_eq!(geom.compose(&rs(&[0, 1], 4)).unwrap(), geom);

        assert_eq!(f.compose(&rs(&[1, 1], 4)), Err(Error::NonzeroInnerConstant));
    }

    #[test]
    fn integrate_example() {
        let phi = rs(&[1, 0, 3], 2).integrate();
        assert_eq!(phi, rs(&[0, 1, 0, 1], 3));
        assert_eq!(phi.derivative(), rs(&[1, 0, 3], 2));
    }

    #[test]
    fn powc_examples() {
        let a = PowerSeries::new(vec![Complex64::new(1.0, 0.0), 0.0.into(), 1.0.into()], 4);
        let p = a.powc(Complex64::new(-1.0, 0.0)).unwrap();
        let want = [1.0, 0.0, -1.0, 0.0, 1.0];
        for (k, w) in want.iter().enumerate() {
            assert!((p.coeff(k) - w).norm() < 1e-15);
        }

        // binomial series (1+z)^{1/2} = 1 + z/2 - z^2/8 + ...
        let b = PowerSeries::new(vec![Complex64::new(1.0, 0.0), 1.0.into()], 2)
            .powc(Complex64::new(0.5, 0.0))
            .unwrap();
        assert!((b.coeff(0) - 1.0).norm() < 1e-15);
        assert!((b.coeff(1) - 0.5).norm() < 1e-15);
        assert!((b.coeff(2) + 0.125).norm() < 1e-15);

        let z = PowerSeries::new(vec![Complex64::zero(), Complex64::one()], 2);
        assert_eq!(z.log(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn rational_text_roundtrip() {
        assert_eq!(parse_rational(" -3/6 ").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7, 1));
        assert_eq!(format_rational(&q(-25, 12)), "-25/12");
        assert_eq!(format_rational(&q(4, 1)), "4");
        for bad in ["", "1/0", "x", "1.5", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn shifts() {
        let a = rs(&[0, 0, 1, 2], 3);
        assert_eq!(a.shift_down(2).unwrap(), rs(&[1, 2], 1));
        assert!(a.shift_down(3).is_err());
        assert_eq!(rs(&[1, 2], 3).shift_up(2), rs(&[0, 0, 1, 2], 3));
        assert_eq!(rs(&[1, 2, 3, 4], 3).reflect(), rs(&[1, -2, 3, -4], 3));
    }
}

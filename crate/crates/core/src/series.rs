//! Truncated power series about the origin with complex coefficients.
//!
//! A [`ComplexSeries`] of order `N` stores the coefficients of `z^0 .. z^N`
//! and nothing beyond. Binary operations truncate to the smaller order of
//! their operands, so no unknown tail coefficient is ever invented.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeries {
    coeffs: Vec<Complex64>,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl ComplexSeries {
    /// Builds a series from its coefficients; index `n` is the coefficient of `z^n`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::DegenerateOrder { order: 0, required: 0 });
        }
        check_finite(&coeffs)?;
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub(crate) fn from_vec(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// Builds a series by evaluating `f(n)` for every index up to `order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Complex64) -> Result<Self> {
        Self::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_vec(vec![ZERO; order + 1])
    }

    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut coeffs = vec![ZERO; order + 1];
        coeffs[0] = c;
        Self::from_vec(coeffs)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ONE, order)
    }

    /// The series `z` (the identity map) at the given order.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, order)
    }

    /// `z^k` truncated at `order` (zero if `k > order`).
    pub fn monomial(k: usize, order: usize) -> Self {
        let mut coeffs = vec![ZERO; order + 1];
        if k <= order {
            coeffs[k] = ONE;
        }
        Self::from_vec(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Coefficient of `z^n`, or `None` beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Option<Complex64> {
        self.coeffs.get(n).copied()
    }

    pub fn constant_term(&self) -> Complex64 {
        self.coeffs[0]
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self::from_vec(self.coeffs[..=n].to_vec())
    }

    /// Extends the series with zero coefficients. Only meaningful when the
    /// series is known to be a polynomial of degree at most its order.
    pub fn pad(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if order > self.order() {
            coeffs.resize(order + 1, ZERO);
        }
        Self::from_vec(coeffs)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_vec(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn scale_real(&self, c: f64) -> Self {
        Self::from_vec(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Term-wise derivative. The result has order one less than `self`.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() < 1 {
            return Err(Error::DegenerateOrder { order: self.order(), required: 1 });
        }
        Ok(Self::from_vec(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, &c)| c * n as f64)
                .collect(),
        ))
    }

    /// Term-wise antiderivative with zero constant term; order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| c / (n as f64 + 1.0)),
        );
        Self::from_vec(coeffs)
    }

    /// `self / z`, valid only when the constant term vanishes exactly.
    pub fn divide_by_z(&self) -> Result<Self> {
        if self.coeffs[0] != ZERO {
            return Err(Error::NotDivisible);
        }
        if self.order() == 0 {
            return Err(Error::DegenerateOrder { order: 0, required: 1 });
        }
        Ok(Self::from_vec(self.coeffs[1..].to_vec()))
    }

    /// `z * self`; order grows by one.
    pub fn multiply_by_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_vec(coeffs)
    }

    /// Multiplicative inverse. Requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 == ZERO {
            return Err(Error::NonInvertible);
        }
        let inv0 = a0.inv();
        let mut b = Vec::with_capacity(self.coeffs.len());
        b.push(inv0);
        for n in 1..=self.order() {
            let acc: Complex64 = (1..=n).map(|k| self.coeffs[k] * b[n - k]).sum();
            b.push(-acc * inv0);
        }
        check_finite(&b)?;
        Ok(Self::from_vec(b))
    }

    /// `exp` of the series via `b' = a' b`, with `b_0 = exp(a_0)`.
    pub fn exp(&self) -> Self {
        let a = &self.coeffs;
        let mut b = Vec::with_capacity(a.len());
        b.push(a[0].exp());
        for n in 1..a.len() {
            let acc: Complex64 = (1..=n).map(|k| a[k] * b[n - k] * k as f64).sum();
            b.push(acc / n as f64);
        }
        Self::from_vec(b)
    }

    /// Principal logarithm of the series; inverse of [`ComplexSeries::exp`].
    pub fn ln(&self) -> Result<Self> {
        let a = &self.coeffs;
        if a[0] == ZERO {
            return Err(Error::BranchPoint);
        }
        let mut b = Vec::with_capacity(a.len());
        b.push(a[0].ln());
        for n in 1..a.len() {
            let acc: Complex64 = (1..n).map(|k| b[k] * a[n - k] * k as f64).sum();
            b.push((a[n] * n as f64 - acc) / (a[0] * n as f64));
        }
        check_finite(&b)?;
        Ok(Self::from_vec(b))
    }

    /// Principal-branch real power `exp(gamma * ln(self))`.
    pub fn powf(&self, gamma: f64) -> Result<Self> {
        let e = self.ln()?.scale_real(gamma).exp();
        check_finite(&e.coeffs)?;
        Ok(e)
    }

    /// `self ∘ inner`, accumulated Horner-style in the series ring.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.coeffs[0] != ZERO {
            return Err(Error::CompositionDomain);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order], order);
        for &c in self.coeffs[..order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// The Schwarzian `(f''/f')' - (f''/f')^2 / 2` as a series of order `order - 3`.
    pub fn schwarzian(&self) -> Result<Self> {
        if self.order() < 3 {
            return Err(Error::DegenerateOrder { order: self.order(), required: 3 });
        }
        if self.coeffs[1] == ZERO {
            return Err(Error::CriticalPoint);
        }
        let d1 = self.derivative()?;
        let d2 = d1.derivative()?;
        let pre = &d2 * &d1.reciprocal()?;
        let pre_sq = &pre * &pre;
        let s = &pre.derivative()? - &pre_sq.scale_real(0.5);
        check_finite(&s.coeffs)?;
        Ok(s)
    }

    /// Largest coefficient-wise distance to `other` over their common orders.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

fn check_finite(coeffs: &[Complex64]) -> Result<()> {
    match coeffs.iter().position(|c| !c.is_finite()) {
        Some(index) => Err(Error::NonFinite { index }),
        None => Ok(()),
    }
}

impl Add for &ComplexSeries {
    type Output = ComplexSeries;

    fn add(self, rhs: &ComplexSeries) -> ComplexSeries {
        ComplexSeries::from_vec(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ComplexSeries {
    type Output = ComplexSeries;

    fn sub(self, rhs: &ComplexSeries) -> ComplexSeries {
        ComplexSeries::from_vec(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ComplexSeries {
    type Output = ComplexSeries;

    fn neg(self) -> ComplexSeries {
        ComplexSeries::from_vec(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Mul for &ComplexSeries {
    type Output = ComplexSeries;

    /// Cauchy product truncated to the smaller order.
    fn mul(self, rhs: &ComplexSeries) -> ComplexSeries {
        let order = self.order().min(rhs.order());
        let (a, b) = (&self.coeffs, &rhs.coeffs);
        ComplexSeries::from_vec(
            (0..=order)
                .map(|n| (0..=n).map(|k| a[k] * b[n - k]).sum())
                .collect(),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for ComplexSeries {
            type Output = ComplexSeries;
            fn $method(self, rhs: ComplexSeries) -> ComplexSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

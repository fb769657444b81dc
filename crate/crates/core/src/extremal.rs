//! Extremal functions of `K(φ)` defined by `1 + z f''/f' = φ(z^k)`.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::generators::{phi_series, GeneratorSpec};
use crate::series::ComplexSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalFunction {
    /// Normalized: `f(0) = 0`, `f'(0) = 1`.
    pub f: ComplexSeries,
    pub spec: GeneratorSpec,
    pub omega_exponent: usize,
}

/// Solves `1 + z f''/f' = φ(z^k)` with `f(0) = 0`, `f'(0) = 1`:
/// `f' = exp(∫ (φ(z^k) - 1)/z)`, `f = ∫ f'`.
pub fn build_extremal(spec: &GeneratorSpec, k: usize, order: usize) -> Result<ExtremalFunction> {
    if k < 1 {
        return Err(domain(format!("omega exponent must be >= 1, got {k}")));
    }
    if order < 7 {
        return Err(domain(format!("extremal order must be >= 7, got {order}")));
    }
    // Work two orders higher so both integrations land on `order`.
    let work = order + 2;
    let phi_k = phi_series(spec, work)?.compose(&ComplexSeries::monomial(k, work))?;
    let pre = (&phi_k - &ComplexSeries::one(work)).divide_by_z()?;
    let f_prime = pre.integrate().exp();
    let f = f_prime.integrate().truncate(order);
    Ok(ExtremalFunction { f, spec: spec.clone(), omega_exponent: k })
}

/// Largest coefficient mismatch between `1 + z f''/f'` and `φ(z^k)`,
/// compared up to `order(f) - 2`.
pub fn verify_subordination_ode(e: &ExtremalFunction) -> Result<f64> {
    let d1 = e.f.derivative()?;
    let d2 = d1.derivative()?;
    let n = d2.order();
    let lhs = &(&d2 * &d1.reciprocal()?).multiply_by_z().truncate(n) + &ComplexSeries::one(n);
    let rhs = phi_series(&e.spec, n.max(1))?
        .truncate(n)
        .compose(&ComplexSeries::monomial(e.omega_exponent, n))?;
    Ok(lhs.max_abs_diff(&rhs))
}

/// `S_f(0)`, the constant term of the Schwarzian series.
pub fn schwarzian_at_origin(f: &ComplexSeries) -> Result<Complex64> {
    Ok(f.schwarzian()?.constant_term())
}

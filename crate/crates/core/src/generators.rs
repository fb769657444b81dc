//! Generator functions `φ` with `φ(0) = 1` that define the convex classes
//! `K(φ)`: strongly convex of order α, uniformly convex, half-plane of order
//! `a`, and arbitrary user-supplied Taylor coefficients.
//!
//! Also hosts Mocanu's order map `γ(β)` with its inverse and the crossing of
//! `sin(π γ⁻¹(α)/2) - α`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::numeric::bisect;
use crate::series::ComplexSeries;

/// `8 / π²`, the coefficient of `z` in the uniformly convex generator.
pub const EIGHT_OVER_PI_SQ: f64 = 8.0 / (PI * PI);

const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorKind {
    /// `((1+z)/(1-z))^α`
    StronglyConvex { alpha: f64 },
    /// `1 + (2/π²) (log((1+√z)/(1-√z)))²`
    UniformlyConvex,
    /// `(1 + (1-2a) z)/(1-z)`, i.e. `Re φ > a`
    HalfPlane { a: f64 },
    /// Polynomial generator given by its coefficients.
    Custom(ComplexSeries),
}

/// A validated generator. Construct through the named constructors.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    kind: GeneratorKind,
}

impl GeneratorSpec {
    pub fn strongly_convex(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidGenerator(format!(
                "strongly convex order must lie in (0, 1], got {alpha}"
            )));
        }
        Ok(Self { kind: GeneratorKind::StronglyConvex { alpha } })
    }

    pub fn uniformly_convex() -> Self {
        Self { kind: GeneratorKind::UniformlyConvex }
    }

    pub fn half_plane(a: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&a) {
            return Err(Error::InvalidGenerator(format!(
                "half-plane order must lie in [0, 1), got {a}"
            )));
        }
        Ok(Self { kind: GeneratorKind::HalfPlane { a } })
    }

    /// A custom generator. The constant coefficient must be exactly 1.
    /// Order-0 input is padded to order 1 so that `φ'` is defined.
    pub fn custom(coeffs: ComplexSeries) -> Result<Self> {
        if coeffs.constant_term() != ONE {
            return Err(Error::InvalidGenerator(format!(
                "custom generator must satisfy phi(0) = 1, got {}",
                coeffs.constant_term()
            )));
        }
        let coeffs = if coeffs.order() == 0 { coeffs.pad(1) } else { coeffs };
        Ok(Self { kind: GeneratorKind::Custom(coeffs) })
    }

    pub fn kind(&self) -> &GeneratorKind {
        &self.kind
    }

    /// True when every Taylor coefficient is real, so `φ(z̄) = conj φ(z)`.
    pub fn has_real_coefficients(&self) -> bool {
        match &self.kind {
            GeneratorKind::Custom(s) => s.is_real(),
            _ => true,
        }
    }

    /// The known sharp value of `N(φ)` where one is established: `2α`,
    /// `8/π²`, and `8a(1-a)` for half-planes with `a ≥ 1/2`.
    pub fn known_sharp_bound(&self) -> Option<f64> {
        match self.kind {
            GeneratorKind::StronglyConvex { alpha } => Some(2.0 * alpha),
            GeneratorKind::UniformlyConvex => Some(EIGHT_OVER_PI_SQ),
            GeneratorKind::HalfPlane { a } if a >= 0.5 => Some(8.0 * a * (1.0 - a)),
            _ => None,
        }
    }

    /// Short human-readable label.
    pub fn label(&self) -> String {
        match &self.kind {
            GeneratorKind::StronglyConvex { alpha } => format!("strongly convex (alpha = {alpha})"),
            GeneratorKind::UniformlyConvex => "uniformly convex".to_string(),
            GeneratorKind::HalfPlane { a } => format!("half-plane (a = {a})"),
            GeneratorKind::Custom(s) => format!("custom (order {})", s.order()),
        }
    }
}

fn check_disk(z: Complex64) -> Result<()> {
    if z.norm() < 1.0 {
        Ok(())
    } else {
        Err(domain(format!("|z| must be < 1, got |z| = {}", z.norm())))
    }
}

fn strongly_convex_value(alpha: f64, z: Complex64) -> Complex64 {
    (((ONE + z) / (ONE - z)).ln() * alpha).exp()
}

/// `φ(z)` on the open unit disk.
pub fn phi_eval(spec: &GeneratorSpec, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    Ok(match &spec.kind {
        GeneratorKind::StronglyConvex { alpha } => strongly_convex_value(*alpha, z),
        GeneratorKind::UniformlyConvex => {
            let g = g_eval(z)?;
            ONE + z * g * g * EIGHT_OVER_PI_SQ
        }
        GeneratorKind::HalfPlane { a } => (ONE + z * (1.0 - 2.0 * a)) / (ONE - z),
        GeneratorKind::Custom(s) => s.eval(z),
    })
}

/// `φ'(z)` on the open unit disk.
pub fn phi_prime_eval(spec: &GeneratorSpec, z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    Ok(match &spec.kind {
        GeneratorKind::StronglyConvex { alpha } => {
            strongly_convex_value(*alpha, z) * (2.0 * alpha) / (ONE - z * z)
        }
        GeneratorKind::UniformlyConvex => g_eval(z)? * EIGHT_OVER_PI_SQ / (ONE - z),
        GeneratorKind::HalfPlane { a } => {
            let w = ONE - z;
            Complex64::new(2.0 - 2.0 * a, 0.0) / (w * w)
        }
        GeneratorKind::Custom(s) => s.derivative()?.eval(z),
    })
}

/// `2zφ' + 1 - φ²` from the series of `φ`, at the order of `phi`.
pub(crate) fn q_from_phi(phi: &ComplexSeries) -> Result<ComplexSeries> {
    let order = phi.order();
    let zdp = phi.derivative()?.multiply_by_z().scale_real(2.0);
    Ok(&(&zdp + &ComplexSeries::one(order)) - &(phi * phi))
}

/// Radius inside which [`PhiEvaluator`] uses Taylor series.
const NEAR_RADIUS: f64 = 0.25;
const NEAR_ORDER: usize = 64;

/// Cancellation-free evaluation of `φ - 1`, `φ'` and `Q = 2zφ' + 1 - φ²`.
///
/// Near the origin `Q = O(z²)` while `1 - φ²` and `2zφ'` are `O(z)`, so
/// forming `Q` from closed-form values loses absolute accuracy that later
/// gets divided by `t²`. Inside `NEAR_RADIUS` (everywhere for custom
/// polynomial generators) the series are summed instead; their leading
/// coefficients cancel exactly.
pub(crate) struct PhiEvaluator<'a> {
    spec: &'a GeneratorSpec,
    near_radius: f64,
    u: ComplexSeries,
    dphi: ComplexSeries,
    q: ComplexSeries,
}

/// Degree beyond which the tail is below `1e-17 r³` (`Q = O(r²)` or smaller).
fn near_degree(r: f64) -> usize {
    if r == 0.0 {
        return 0;
    }
    if r >= 1.0 {
        return usize::MAX;
    }
    let extra = (17.0 * std::f64::consts::LN_10 / -r.ln()).ceil();
    if extra >= 1e6 {
        usize::MAX
    } else {
        3 + extra as usize
    }
}

impl<'a> PhiEvaluator<'a> {
    /// Horner on the three series at once, truncated at `degree`.
    fn near(&self, degree: usize, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let (u, dp, q) = (self.u.coeffs(), self.dphi.coeffs(), self.q.coeffs());
        let zero = Complex64::new(0.0, 0.0);
        let (mut acc_u, mut acc_dp, mut acc_q) = (zero, zero, zero);
        for n in (0..=degree.min(q.len() - 1)).rev() {
            acc_q = acc_q * z + q[n];
            acc_u = acc_u * z + u.get(n).copied().unwrap_or(zero);
            acc_dp = acc_dp * z + dp.get(n).copied().unwrap_or(zero);
        }
        (acc_u, acc_dp, acc_q)
    }

    pub(crate) fn new(spec: &'a GeneratorSpec) -> Result<Self> {
        let (near_radius, phi) = match &spec.kind {
            GeneratorKind::Custom(s) => (f64::INFINITY, s.pad(2 * s.order())),
            _ => (NEAR_RADIUS, phi_series(spec, NEAR_ORDER)?),
        };
        let u = &phi - &ComplexSeries::one(phi.order());
        let dphi = phi.derivative()?;
        let q = q_from_phi(&phi)?;
        Ok(Self { spec, near_radius, u, dphi, q })
    }

    /// `(φ(z) - 1, φ'(z), Q(z))`.
    pub(crate) fn eval(&self, z: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
        check_disk(z)?;
        let r = z.norm();
        if r <= self.near_radius {
            return Ok(self.near(near_degree(r), z));
        }
        let (phi, dphi) = match &self.spec.kind {
            GeneratorKind::StronglyConvex { alpha } => {
                let p = strongly_convex_value(*alpha, z);
                (p, p * (2.0 * alpha) / (ONE - z * z))
            }
            GeneratorKind::UniformlyConvex => {
                let g = g_eval(z)?;
                (ONE + z * g * g * EIGHT_OVER_PI_SQ, g * EIGHT_OVER_PI_SQ / (ONE - z))
            }
            _ => (phi_eval(self.spec, z)?, phi_prime_eval(self.spec, z)?),
        };
        Ok((phi - ONE, dphi, z * dphi * 2.0 + 1.0 - phi * phi))
    }
}

/// `2α Σ z^{2n-1}/(2n-1)`, the series of `α log((1+z)/(1-z))`.
fn scaled_log_ratio(alpha: f64, order: usize) -> ComplexSeries {
    ComplexSeries::from_fn(order, |n| {
        if n % 2 == 1 {
            Complex64::new(2.0 * alpha / n as f64, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
    .expect("finite coefficients")
}

/// Taylor expansion of `φ` to the requested order.
pub fn phi_series(spec: &GeneratorSpec, order: usize) -> Result<ComplexSeries> {
    if order < 1 {
        return Err(Error::DegenerateOrder { order, required: 1 });
    }
    Ok(match &spec.kind {
        GeneratorKind::StronglyConvex { alpha } => scaled_log_ratio(*alpha, order).exp(),
        GeneratorKind::UniformlyConvex => {
            let g = g_series(order);
            let zg2 = (&g * &g).multiply_by_z().truncate(order);
            let mut p = zg2.scale_real(EIGHT_OVER_PI_SQ);
            p = &p + &ComplexSeries::one(order);
            p
        }
        GeneratorKind::HalfPlane { a } => ComplexSeries::from_fn(order, |n| {
            Complex64::new(if n == 0 { 1.0 } else { 2.0 - 2.0 * a }, 0.0)
        })?,
        GeneratorKind::Custom(s) => s.pad(order).truncate(order),
    })
}

/// `G(z) = Σ zⁿ/(2n+1) = atanh(√z)/√z`.
///
/// Sums the series for `|z| ≤ 1/2`; uses the closed form further out, where
/// the series converges too slowly.
pub fn g_eval(z: Complex64) -> Result<Complex64> {
    check_disk(z)?;
    if z.norm() <= 0.5 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut power = ONE;
        for n in 0..200usize {
            let term = power / (2 * n + 1) as f64;
            sum += term;
            if term.norm() < 1e-17 {
                break;
            }
            power *= z;
        }
        Ok(sum)
    } else {
        // atanh(w)/w is even in w, so either square root works.
        let w = z.sqrt();
        Ok(w.atanh() / w)
    }
}

pub fn g_series(order: usize) -> ComplexSeries {
    ComplexSeries::from_fn(order, |n| Complex64::new(1.0 / (2 * n + 1) as f64, 0.0))
        .expect("finite coefficients")
}

/// Mocanu's order map: `K_{γ(β)} ⊂ S*_β`.
pub fn gamma_of_beta(beta: f64) -> Result<f64> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(domain(format!("beta must lie in (0, 1), got {beta}")));
    }
    let half = FRAC_PI_2 * beta;
    let denom = (1.0 + beta).powf(0.5 * (1.0 + beta)) * (1.0 - beta).powf(0.5 * (1.0 - beta)) * half.cos();
    Ok((half.tan() + beta / denom).atan() / FRAC_PI_2)
}

const GAMMA_INVERSE_MAX_ITER: usize = 200;

/// Inverse of [`gamma_of_beta`] by bisection on `(0, 1)`.
pub fn gamma_inverse(alpha: f64, tol: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(domain(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..GAMMA_INVERSE_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        let g = gamma_of_beta(mid)?;
        if (g - alpha).abs() <= tol || mid == lo || mid == hi {
            return Ok(mid);
        }
        if g < alpha {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence { iterations: GAMMA_INVERSE_MAX_ITER })
}

/// `sin(π γ⁻¹(α)/2) - α`: the quasiconformal constant obtained through
/// Mocanu's inclusion minus the sharp constant `α`.
pub fn figure1_value(alpha: f64) -> Result<f64> {
    Ok((FRAC_PI_2 * gamma_inverse(alpha, 1e-15)?).sin() - alpha)
}

/// Root of [`figure1_value`] in `(0.1, 0.9)`, bracketed to width `tol`.
pub fn figure1_crossing(tol: f64) -> Result<f64> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(domain(format!("tolerance must be positive, got {tol}")));
    }
    bisect(figure1_value, 0.1, 0.9, tol, 200)
}

/// `sin(π γ⁻¹(α)/2)`, the extension constant reached through Mocanu's
/// inclusion; `k₁` at `α = 1/2`.
pub fn mocanu_qc_constant(alpha: f64) -> Result<f64> {
    Ok((FRAC_PI_2 * gamma_inverse(alpha, 1e-15)?).sin())
}

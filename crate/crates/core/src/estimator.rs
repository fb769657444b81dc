//! Circle suprema `A(s)`, `B(s)`, the two-variable functional `F(s, t)`,
//! the sampled supremum `N(φ) = sup F`, and the hyperbolic sup-norm
//! `sup (1-|z|²)² |S_f(z)|` of a concrete function.
//!
//! All suprema here are found by sampling followed by golden-section
//! refinement, so every reported value is a lower bound of the true one.

use std::collections::HashMap;
use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::generators::{phi_prime_eval, GeneratorKind, GeneratorSpec, PhiEvaluator};
use crate::numeric::golden_max;
use crate::series::ComplexSeries;

/// Smallest `t` on the `N(φ)` grid; stands in for the `t → 0` corner.
pub const T_MIN: f64 = 1e-4;
/// Largest `t` on the `N(φ)` grid.
pub const T_MAX: f64 = 1.0 - 1e-4;
/// Largest `λ = s/t` on the `N(φ)` grid; stands in for the `s → t` edge.
pub const LAMBDA_MAX: f64 = 1.0 - 1e-10;

const GOLDEN_STEPS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialBound {
    pub s: f64,
    /// `A(s) = sup_{|z|=s} |2zφ'(z) + 1 - φ(z)²|`
    pub a_value: f64,
    /// `B(s) = sup_{|z|=s} |φ'(z)|`
    pub b_value: f64,
    pub a_arg: f64,
    pub b_arg: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// `(s, t)` for `N(φ)`.
    Pair { s: f64, t: f64 },
    /// A point of the disk for the hyperbolic norm.
    Point { re: f64, im: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormEstimate {
    pub value: f64,
    pub witness: Witness,
    pub grid_resolution: usize,
    pub refinement_steps: usize,
    pub is_lower_bound: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleConfig {
    pub samples: usize,
    pub refine_iters: usize,
}

impl Default for CircleConfig {
    fn default() -> Self {
        Self { samples: 512, refine_iters: 40 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NPhiConfig {
    /// Points per axis of the `(λ, t)` grid.
    pub grid: usize,
    /// Alternating coordinate passes around the best grid cell.
    pub refine_iters: usize,
    pub circle: CircleConfig,
}

impl Default for NPhiConfig {
    fn default() -> Self {
        Self { grid: 256, refine_iters: 40, circle: CircleConfig::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypNormConfig {
    pub radial_samples: usize,
    pub angular_samples: usize,
    /// Search radius cap; truncated series are unreliable near the boundary.
    pub r_max: f64,
    pub refine_iters: usize,
}

impl Default for HypNormConfig {
    fn default() -> Self {
        Self { radial_samples: 128, angular_samples: 256, r_max: 0.8, refine_iters: 20 }
    }
}

/// Suprema of `|2zφ' + 1 - φ²|` and `|φ'|` over the circle `|z| = s`.
pub fn circle_sup(spec: &GeneratorSpec, s: f64, samples: usize, refine_iters: usize) -> Result<RadialBound> {
    circle_sup_with(&PhiEvaluator::new(spec)?, spec, s, samples, refine_iters)
}

fn circle_sup_with(
    ev: &PhiEvaluator<'_>,
    spec: &GeneratorSpec,
    s: f64,
    samples: usize,
    refine_iters: usize,
) -> Result<RadialBound> {
    if !(0.0..1.0).contains(&s) {
        return Err(domain(format!("radius must lie in [0, 1), got {s}")));
    }
    if samples < 8 {
        return Err(domain(format!("need at least 8 circle samples, got {samples}")));
    }
    if s == 0.0 {
        let b = phi_prime_eval(spec, Complex64::new(0.0, 0.0))?.norm();
        return Ok(RadialBound { s, a_value: 0.0, b_value: b, a_arg: 0.0, b_arg: 0.0 });
    }

    // Conjugate symmetry halves the circle for real-coefficient generators.
    let count = if spec.has_real_coefficients() { samples / 2 + 1 } else { samples };
    let step = TAU / samples as f64;
    let eval = |theta: f64| -> Result<(f64, f64)> {
        let z = Complex64::from_polar(s, theta);
        let (_, dphi, q) = ev.eval(z)?;
        Ok((q.norm(), dphi.norm()))
    };

    let mut best_a = (0.0, f64::NEG_INFINITY);
    let mut best_b = (0.0, f64::NEG_INFINITY);
    for k in 0..count {
        let theta = k as f64 * step;
        let (a, b) = eval(theta)?;
        if a > best_a.1 {
            best_a = (theta, a);
        }
        if b > best_b.1 {
            best_b = (theta, b);
        }
    }

    if refine_iters > 0 {
        // Errors cannot occur on |z| = s < 1; treat any as -inf.
        let a_obj = |th: f64| eval(th).map(|v| v.0).unwrap_or(f64::NEG_INFINITY);
        let b_obj = |th: f64| eval(th).map(|v| v.1).unwrap_or(f64::NEG_INFINITY);
        let cand = golden_max(a_obj, best_a.0 - step, best_a.0 + step, refine_iters);
        if cand.1 > best_a.1 {
            best_a = cand;
        }
        let cand = golden_max(b_obj, best_b.0 - step, best_b.0 + step, refine_iters);
        if cand.1 > best_b.1 {
            best_b = cand;
        }
    }

    Ok(RadialBound {
        s,
        a_value: best_a.1,
        b_value: best_b.1,
        a_arg: best_a.0.rem_euclid(TAU),
        b_arg: best_b.0.rem_euclid(TAU),
    })
}

/// `F(s, t) = (1-t²)²/(2t²) A(s) + (1-t²)(1 - s²/t²) B(s)` with `s = radial.s`.
pub fn f_value(radial: &RadialBound, t: f64) -> Result<f64> {
    let s = radial.s;
    if !(t > s && t < 1.0) {
        return Err(domain(format!("need 0 <= s < t < 1, got s = {s}, t = {t}")));
    }
    let t2 = t * t;
    let x = 1.0 - t2;
    Ok(x * x / (2.0 * t2) * radial.a_value + x * (1.0 - s * s / t2) * radial.b_value)
}

/// `F(s, t)` with `A(s)`, `B(s)` obtained by [`circle_sup`].
pub fn f_sampled(spec: &GeneratorSpec, s: f64, t: f64, circle: &CircleConfig) -> Result<f64> {
    f_value(&circle_sup(spec, s, circle.samples, circle.refine_iters)?, t)
}

fn f_sampled_with(ev: &PhiEvaluator<'_>, spec: &GeneratorSpec, s: f64, t: f64, circle: &CircleConfig) -> Result<f64> {
    f_value(&circle_sup_with(ev, spec, s, circle.samples, circle.refine_iters)?, t)
}

/// `F(s, t)` from `φ(s)` and `φ'(s)` on the positive axis.
///
/// Valid when `A(s)` and `B(s)` are attained at `z = s`, which holds for
/// generators whose `φ` and `2zφ' + 1 - φ²` have non-negative coefficients.
pub fn f_closed_form(spec: &GeneratorSpec, s: f64, t: f64) -> Result<f64> {
    if let GeneratorKind::Custom(_) = spec.kind() {
        return Err(Error::InvalidGenerator(
            "closed-form F needs a generator with non-negative coefficients".into(),
        ));
    }
    if !(s >= 0.0 && t > s && t < 1.0) {
        return Err(domain(format!("need 0 <= s < t < 1, got s = {s}, t = {t}")));
    }
    let (u, dphi, _) = PhiEvaluator::new(spec)?.eval(Complex64::new(s, 0.0))?;
    let (u, dphi) = (u.re, dphi.re);
    // 1 - φ² = -u(2 + u) with u = φ - 1 keeps small-s accuracy.
    let t2 = t * t;
    let x = 1.0 - t2;
    Ok(-x * x / (2.0 * t2) * u * (2.0 + u) + x * (1.0 - s) * (s + t2) / t2 * dphi)
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    value: f64,
    lambda: f64,
    t: f64,
    s: f64,
}

impl Candidate {
    /// Larger value wins; ties go to smaller `t`, then smaller `s`.
    fn better_than(&self, other: &Candidate) -> bool {
        if self.value != other.value {
            return self.value > other.value;
        }
        if self.t != other.t {
            return self.t < other.t;
        }
        self.s < other.s
    }

    fn max(self, other: Candidate) -> Candidate {
        if other.better_than(&self) {
            other
        } else {
            self
        }
    }
}

fn lambda_at(i: usize, grid: usize) -> f64 {
    LAMBDA_MAX * i as f64 / (grid - 1) as f64
}

fn t_at(j: usize, grid: usize) -> f64 {
    T_MIN + (T_MAX - T_MIN) * j as f64 / (grid - 1) as f64
}

/// Sampled supremum of `F(s, t)` over `0 <= s < t < 1`.
///
/// Searches the coordinates `(λ, t)` with `s = λt`, on a uniform grid with
/// `λ ∈ [0, LAMBDA_MAX]` and `t ∈ [T_MIN, T_MAX]`, then runs alternating
/// golden-section passes around the best cell.
pub fn n_phi(spec: &GeneratorSpec, config: &NPhiConfig) -> Result<NormEstimate> {
    let grid = config.grid;
    if grid < 16 {
        return Err(domain(format!("grid must be at least 16, got {grid}")));
    }
    let circle = config.circle;
    if circle.samples < 8 {
        return Err(domain(format!("need at least 8 circle samples, got {}", circle.samples)));
    }

    let cells: Vec<(usize, usize, f64)> = (0..grid)
        .flat_map(|i| (0..grid).map(move |j| (i, j, lambda_at(i, grid) * t_at(j, grid))))
        .collect();

    let mut radii: Vec<f64> = cells.iter().map(|c| c.2).collect();
    radii.sort_by(f64::total_cmp);
    radii.dedup();
    let ev = PhiEvaluator::new(spec)?;
    let bounds: HashMap<u64, RadialBound> = radii
        .par_iter()
        .map(|&s| circle_sup_with(&ev, spec, s, circle.samples, circle.refine_iters).map(|rb| (s.to_bits(), rb)))
        .collect::<Result<_>>()?;

    let seed = Candidate { value: f64::NEG_INFINITY, lambda: 0.0, t: T_MIN, s: 0.0 };
    let mut best = cells
        .par_iter()
        .map(|&(i, j, s)| {
            let t = t_at(j, grid);
            let value = f_value(&bounds[&s.to_bits()], t).unwrap_or(f64::NEG_INFINITY);
            Candidate { value, lambda: lambda_at(i, grid), t, s }
        })
        .reduce(|| seed, Candidate::max);

    let d_lambda = LAMBDA_MAX / (grid - 1) as f64;
    let d_t = (T_MAX - T_MIN) / (grid - 1) as f64;
    let objective = |lambda: f64, t: f64| -> f64 {
        f_sampled_with(&ev, spec, lambda * t, t, &circle).unwrap_or(f64::NEG_INFINITY)
    };
    for _ in 0..config.refine_iters {
        let t = best.t;
        let lo = (best.lambda - d_lambda).max(0.0);
        let hi = (best.lambda + d_lambda).min(LAMBDA_MAX);
        let (lambda, value) = golden_max(|l| objective(l, t), lo, hi, GOLDEN_STEPS);
        let cand = Candidate { value, lambda, t, s: lambda * t };
        best = best.max(cand);

        let lambda = best.lambda;
        let lo = (best.t - d_t).max(T_MIN);
        let hi = (best.t + d_t).min(T_MAX);
        let (t, value) = golden_max(|t| objective(lambda, t), lo, hi, GOLDEN_STEPS);
        let cand = Candidate { value, lambda, t, s: lambda * t };
        best = best.max(cand);
    }

    Ok(NormEstimate {
        value: best.value,
        witness: Witness::Pair { s: best.s, t: best.t },
        grid_resolution: grid,
        refinement_steps: config.refine_iters,
        is_lower_bound: true,
    })
}

/// Sampled `sup_{|z| <= r_max} (1-|z|²)² |S_f(z)|`.
pub fn hyperbolic_norm(f: &ComplexSeries, config: &HypNormConfig) -> Result<NormEstimate> {
    let HypNormConfig { radial_samples, angular_samples, r_max, refine_iters } = *config;
    if !(r_max > 0.0 && r_max < 1.0) {
        return Err(domain(format!("r_max must lie in (0, 1), got {r_max}")));
    }
    if radial_samples < 2 || angular_samples < 4 {
        return Err(domain("need at least 2 radial and 4 angular samples"));
    }
    let schwarzian = f.schwarzian()?;
    let objective = |r: f64, theta: f64| -> f64 {
        let z = Complex64::from_polar(r, theta);
        let w = 1.0 - r * r;
        w * w * schwarzian.eval(z).norm()
    };

    let d_theta = TAU / angular_samples as f64;
    let n_theta = if schwarzian.is_real() { angular_samples / 2 + 1 } else { angular_samples };
    let d_r = r_max / (radial_samples - 1) as f64;

    // (value, r, theta); ties go to smaller r, then smaller theta.
    let pick = |a: (f64, f64, f64), b: (f64, f64, f64)| {
        if b.0 > a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
            b
        } else {
            a
        }
    };
    let mut best = (0..radial_samples)
        .into_par_iter()
        .map(|i| {
            let r = d_r * i as f64;
            let angles = if i == 0 { 1 } else { n_theta };
            (0..angles)
                .map(|k| {
                    let theta = k as f64 * d_theta;
                    (objective(r, theta), r, theta)
                })
                .fold((f64::NEG_INFINITY, 0.0, 0.0), pick)
        })
        .reduce(|| (f64::NEG_INFINITY, 0.0, 0.0), pick);

    for _ in 0..refine_iters {
        let theta = best.2;
        let (r, v) = golden_max(
            |r| objective(r, theta),
            (best.1 - d_r).max(0.0),
            (best.1 + d_r).min(r_max),
            GOLDEN_STEPS,
        );
        if v > best.0 {
            best = (v, r, theta);
        }
        let r = best.1;
        let (theta, v) = golden_max(
            |th| objective(r, th),
            best.2 - d_theta,
            best.2 + d_theta,
            GOLDEN_STEPS,
        );
        if v > best.0 {
            best = (v, r, theta.rem_euclid(TAU));
        }
    }

    let z = Complex64::from_polar(best.1, best.2);
    Ok(NormEstimate {
        value: best.0,
        witness: Witness::Point { re: z.re, im: z.im },
        grid_resolution: radial_samples,
        refinement_steps: refine_iters,
        is_lower_bound: true,
    })
}

/// Ahlfors–Weill: `‖S_f‖ ≤ 2k` gives a `k`-quasiconformal extension.
pub fn qc_extension_constant(norm_bound: f64) -> f64 {
    norm_bound / 2.0
}

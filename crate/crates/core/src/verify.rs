//! Numerical checks of the coefficient lemmas and inequalities behind the
//! sharp bounds, plus the half-plane cross-check against `8a(1-a)`.
//!
//! Every check returns a [`VerificationReport`]; failures are reported, never
//! raised.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::estimator::{f_closed_form, n_phi, CircleConfig, NPhiConfig, Witness};
use crate::generators::{g_eval, g_series, phi_eval, phi_series, q_from_phi, GeneratorSpec};
use crate::series::ComplexSeries;

/// Slack for Cauchy products of provably non-negative quantities.
pub const NONNEG_TOL: f64 = 1e-12;

/// Order sweep used by the coefficient-sign lemmas.
pub const LEMMA_ALPHAS: [f64; 6] = [0.1, 0.25, 0.5, 0.75, 0.9, 1.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Location {
    Index(usize),
    Point(f64),
    Pair(f64, f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub passed: bool,
    pub worst_value: f64,
    pub worst_location: Option<Location>,
    pub range_tested: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// `A_n ≤ 1`, `B_n ≤ 2/3` and their cross-checks.
    Sum,
    /// Non-negative coefficients of `P_α`, `Q_α` and the Löwner bound.
    StronglyConvex,
    /// Non-negative coefficients of `P`, `Q` and the inner inequality.
    UniformlyConvex,
    /// Positivity and monotonicity of `h(s)`.
    H,
    /// `G(s)` against the quadratic-discriminant lower bound.
    Last,
    /// `F(s, t)` below the sharp constant on a grid.
    FBound,
    /// `N(φ_a) = 8a(1-a)` for `a ∈ {0.5, 0.6, 0.75}`.
    Suita,
}

impl Lemma {
    pub const ALL: [Lemma; 7] = [
        Lemma::Sum,
        Lemma::StronglyConvex,
        Lemma::UniformlyConvex,
        Lemma::H,
        Lemma::Last,
        Lemma::FBound,
        Lemma::Suita,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// Upper index for `A_n` and the `B_n` cross-check.
    pub max_n: usize,
    /// Upper index for the `B_n ≤ 2/3` sweep.
    pub b_max_n: usize,
    /// Order of the coefficient-sign checks.
    pub series_order: usize,
    /// Order of the Löwner bound sweep.
    pub lowner_order: usize,
    /// Points per axis for the `F` sweeps and the `N(φ)` grid.
    pub grid: usize,
    pub suita_tol: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max_n: 1000, b_max_n: 10_000, series_order: 200, lowner_order: 96, grid: 256, suita_tol: 1e-3 }
    }
}

/// `A_n = Σ_{k+l+m=n} 1/((2k+1)(2l+1)(2m+1))` by direct enumeration.
pub fn sum_a(n: usize) -> f64 {
    let mut acc = 0.0;
    for k in 0..=n {
        for l in 0..=(n - k) {
            let m = n - k - l;
            acc += 1.0 / ((2 * k + 1) as f64 * (2 * l + 1) as f64 * (2 * m + 1) as f64);
        }
    }
    acc
}

/// `B_n = (1/(n+1)) Σ_{k≤n} 1/(2k+1)`.
pub fn sum_b(n: usize) -> f64 {
    let h: f64 = (0..=n).map(|k| 1.0 / (2 * k + 1) as f64).sum();
    h / (n + 1) as f64
}

/// `B_n` as the double sum `Σ_{k+l=n} 1/((2k+1)(2l+1))`.
pub fn sum_b_direct(n: usize) -> f64 {
    (0..=n).map(|k| 1.0 / ((2 * k + 1) as f64 * (2 * (n - k) + 1) as f64)).sum()
}

/// `2zφ'(z) + 1 - φ(z)²` to the requested order.
pub fn q_series(spec: &GeneratorSpec, order: usize) -> Result<ComplexSeries> {
    if order < 2 {
        return Err(domain(format!("q_series needs order >= 2, got {order}")));
    }
    q_from_phi(&phi_series(spec, order)?)
}

/// `h(s) = α((1-α) P_α(s)² + 2α(1-s)/(1+s) P_α(s) - (1+α))`.
pub fn h_eval(alpha: f64, s: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(domain(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    if !(0.0..1.0).contains(&s) {
        return Err(domain(format!("s must lie in [0, 1), got {s}")));
    }
    let p = phi_eval(&GeneratorSpec::strongly_convex(alpha)?, Complex64::new(s, 0.0))?.re;
    Ok(alpha * ((1.0 - alpha) * p * p + 2.0 * alpha * (1.0 - s) / (1.0 + s) * p - (1.0 + alpha)))
}

/// Both sides of `G(s) ≥ π(√((1-s)² + 16s/π) - 1 + s)/(8s)`.
pub fn check_eq_last(s: f64) -> Result<(f64, f64)> {
    if !(s > 0.0 && s < 1.0) {
        return Err(domain(format!("s must lie in (0, 1), got {s}")));
    }
    let lhs = g_eval(Complex64::new(s, 0.0))?.re;
    let rhs = PI * (((1.0 - s) * (1.0 - s) + 16.0 * s / PI).sqrt() - 1.0 + s) / (8.0 * s);
    Ok((lhs, rhs))
}

/// Reports the most negative real part among the coefficients.
pub fn check_nonnegative(name: &str, series: &ComplexSeries, tol: f64) -> VerificationReport {
    let (idx, worst) = series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| (n, c.re))
        .fold((0, f64::INFINITY), |acc, (n, v)| if v < acc.1 { (n, v) } else { acc });
    VerificationReport {
        name: name.to_string(),
        passed: worst >= -tol,
        worst_value: worst,
        worst_location: Some(Location::Index(idx)),
        range_tested: format!("coefficients z^0..z^{}", series.order()),
    }
}

/// Compares `N(φ_a)` with Suita's `8a(1-a)`; `a` must lie in `[1/2, 1)`.
pub fn suita_check(a: f64, tol: f64, grid: usize) -> Result<VerificationReport> {
    if !(0.5..1.0).contains(&a) {
        return Err(domain(format!("Suita's bound covers 1/2 <= a < 1, got {a}")));
    }
    let sharp = 8.0 * a * (1.0 - a);
    let est = n_phi(
        &GeneratorSpec::half_plane(a)?,
        &NPhiConfig { grid, refine_iters: 40, circle: CircleConfig::default() },
    )?;
    let gap = est.value - sharp;
    let loc = match est.witness {
        Witness::Pair { s, t } => Location::Pair(s, t),
        Witness::Point { re, .. } => Location::Point(re),
    };
    Ok(VerificationReport {
        name: format!("suita[a={a}]"),
        passed: gap.abs() <= tol,
        worst_value: gap,
        worst_location: Some(loc),
        range_tested: format!("N(phi_a) on a {grid}x{grid} grid against 8a(1-a) = {sharp}"),
    })
}

/// Runs every check with `b_max_n = 10 * max_n` and default orders.
pub fn run_all(max_n: usize, grid: usize) -> Vec<VerificationReport> {
    run_with(&Lemma::ALL, &VerifyConfig { max_n, b_max_n: 10 * max_n, grid, ..VerifyConfig::default() })
}

pub fn run_with(lemmas: &[Lemma], config: &VerifyConfig) -> Vec<VerificationReport> {
    lemmas.iter().flat_map(|&l| run_lemma(l, config)).collect()
}

pub fn run_lemma(lemma: Lemma, config: &VerifyConfig) -> Vec<VerificationReport> {
    match lemma {
        Lemma::Sum => sum_reports(config),
        Lemma::StronglyConvex => strongly_convex_reports(config),
        Lemma::UniformlyConvex => ucv_reports(config),
        Lemma::H => vec![h_report()],
        Lemma::Last => vec![eq_last_report()],
        Lemma::FBound => f_bound_reports(config.grid.max(2)),
        Lemma::Suita => [0.5, 0.6, 0.75]
            .iter()
            .map(|&a| {
                suita_check(a, config.suita_tol, config.grid).unwrap_or_else(|e| VerificationReport {
                    name: format!("suita[a={a}]"),
                    passed: false,
                    worst_value: f64::INFINITY,
                    worst_location: None,
                    range_tested: format!("estimation failed: {e}"),
                })
            })
            .collect(),
    }
}

/// Smallest value with its location; the first one wins ties.
fn worst_by<T: Copy>(items: impl Iterator<Item = (f64, T)>) -> Option<(f64, T)> {
    items.fold(None, |acc, (v, loc)| match acc {
        Some((w, _)) if w <= v => acc,
        _ => Some((v, loc)),
    })
}

fn sum_reports(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let n_max = cfg.max_n;
    let a: Vec<f64> = (0..=n_max).map(sum_a).collect();
    let b: Vec<f64> = (0..=cfg.b_max_n.max(n_max)).map(sum_b).collect();
    let mut out = Vec::new();

    // A_n <= 1, with equality at n = 0, 1 and A_2 = 14/15.
    let (worst, idx) = a
        .iter()
        .enumerate()
        .map(|(n, &v)| (v, n))
        .fold((f64::NEG_INFINITY, 0), |acc, x| if x.0 > acc.0 { x } else { acc });
    let anchors = [(0, 1.0), (1, 1.0), (2, 14.0 / 15.0)]
        .iter()
        .filter(|(n, _)| *n <= n_max)
        .all(|&(n, v)| (a[n] - v).abs() <= 1e-12);
    out.push(VerificationReport {
        name: "sum_a_bound".into(),
        passed: worst <= 1.0 + 1e-12 && anchors,
        worst_value: worst,
        worst_location: Some(Location::Index(idx)),
        range_tested: format!("A_n <= 1 for 0 <= n <= {n_max}"),
    });

    // A_n = 3/(2n+3) Σ_{j≤n} B_j
    let mut prefix = 0.0;
    let (diff, idx) = a
        .iter()
        .enumerate()
        .map(|(n, &v)| {
            prefix += b[n];
            ((v - 3.0 / (2 * n + 3) as f64 * prefix).abs(), n)
        })
        .fold((0.0, 0), |acc, x| if x.0 > acc.0 { x } else { acc });
    out.push(VerificationReport {
        name: "sum_a_partial_fractions".into(),
        passed: diff <= 1e-12,
        worst_value: diff,
        worst_location: Some(Location::Index(idx)),
        range_tested: format!("A_n = 3/(2n+3) sum B_j for 0 <= n <= {n_max}"),
    });

    // G^3 = Σ A_n z^n
    let g = g_series(n_max);
    let g3 = &(&g * &g) * &g;
    let (diff, idx) = g3
        .coeffs()
        .iter()
        .zip(&a)
        .enumerate()
        .map(|(n, (c, &v))| ((c.re - v).abs(), n))
        .fold((0.0, 0), |acc, x| if x.0 > acc.0 { x } else { acc });
    out.push(VerificationReport {
        name: "g_cubed_coefficients".into(),
        passed: diff <= 1e-12,
        worst_value: diff,
        worst_location: Some(Location::Index(idx)),
        range_tested: format!("coefficients of G^3 against A_n for 0 <= n <= {n_max}"),
    });

    // B_0 = 1 and B_n <= 2/3 for n >= 1
    let (worst, idx) = (1..=cfg.b_max_n)
        .map(|n| (b[n], n))
        .fold(None, |acc: Option<(f64, usize)>, x| match acc {
            Some(a) if a.0 >= x.0 => Some(a),
            _ => Some(x),
        })
        .unwrap_or((b[0], 0));
    let tail_ok = cfg.b_max_n == 0 || worst <= 2.0 / 3.0 + 1e-12;
    out.push(VerificationReport {
        name: "sum_b_bound".into(),
        passed: (b[0] - 1.0).abs() <= 1e-15 && tail_ok,
        worst_value: worst,
        worst_location: Some(Location::Index(idx)),
        range_tested: format!("B_0 = 1 and B_n <= 2/3 for 1 <= n <= {}", cfg.b_max_n),
    });

    let (diff, idx) = (0..=n_max)
        .map(|n| ((b[n] - sum_b_direct(n)).abs(), n))
        .fold((0.0, 0), |acc, x| if x.0 > acc.0 { x } else { acc });
    out.push(VerificationReport {
        name: "sum_b_closed_form".into(),
        passed: diff <= 1e-12,
        worst_value: diff,
        worst_location: Some(Location::Index(idx)),
        range_tested: format!("closed form against direct double sum for 0 <= n <= {n_max}"),
    });
    out
}

fn strongly_convex_reports(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let order = cfg.series_order.max(2);
    let mut p_worst = Vec::new();
    let mut q_worst = Vec::new();
    for &alpha in &LEMMA_ALPHAS {
        let spec = GeneratorSpec::strongly_convex(alpha).expect("valid order");
        let p = phi_series(&spec, order).expect("series");
        let q = q_series(&spec, order).expect("series");
        p_worst.extend(p.coeffs().iter().enumerate().map(|(n, c)| (c.re, (alpha, n))));
        q_worst.extend(q.coeffs().iter().enumerate().map(|(n, c)| (c.re, (alpha, n))));
    }
    let mut out = Vec::new();
    for (name, items, what) in [("p_alpha_nonneg", p_worst, "P_alpha"), ("q_alpha_nonneg", q_worst, "Q_alpha")] {
        let (v, (alpha, n)) = worst_by(items.into_iter()).expect("non-empty sweep");
        out.push(VerificationReport {
            name: name.into(),
            passed: v >= -NONNEG_TOL,
            worst_value: v,
            worst_location: Some(Location::Pair(alpha, n as f64)),
            range_tested: format!("{what} coefficients to z^{order}, alpha in {LEMMA_ALPHAS:?}"),
        });
    }

    // 0 <= a_n <= 2α; the margin is min(a_n, 2α - a_n).
    let alphas: Vec<f64> = (1..=10).map(|i| i as f64 / 10.0).collect();
    let lowner = cfg.lowner_order.max(1);
    let items = alphas.iter().flat_map(|&alpha| {
        let p = phi_series(&GeneratorSpec::strongly_convex(alpha).expect("valid order"), lowner).expect("series");
        p.coeffs()[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| (c.re.min(2.0 * alpha - c.re), (alpha, (i + 1) as f64)))
            .collect::<Vec<_>>()
    });
    let (v, (alpha, n)) = worst_by(items).expect("non-empty sweep");
    out.push(VerificationReport {
        name: "lowner_bound".into(),
        passed: v >= -NONNEG_TOL,
        worst_value: v,
        worst_location: Some(Location::Pair(alpha, n)),
        range_tested: format!("0 <= a_n <= 2 alpha for 1 <= n <= {lowner}, alpha in 0.1..=1.0"),
    });
    out
}

fn ucv_reports(cfg: &VerifyConfig) -> Vec<VerificationReport> {
    let order = cfg.series_order.max(2);
    let spec = GeneratorSpec::uniformly_convex();
    let p = phi_series(&spec, order).expect("series");
    let q = q_series(&spec, order).expect("series");
    let mut out = vec![
        check_nonnegative("ucv_p_nonneg", &p, NONNEG_TOL),
        check_nonnegative("ucv_q_nonneg", &q, NONNEG_TOL),
    ];

    // (π²/4)(2n+2)/(2n+3) >= π²/6 > 1 >= A_n
    let floor = PI * PI / 6.0;
    let mut ok = floor > 1.0;
    let items = (0..=cfg.max_n).map(|n| {
        let lhs = PI * PI / 4.0 * (2 * n + 2) as f64 / (2 * n + 3) as f64;
        let a = sum_a(n);
        ok &= lhs >= floor - 1e-12 && a <= 1.0 + 1e-12;
        (lhs - a, n)
    });
    let (v, n) = worst_by(items).expect("non-empty range");
    out.push(VerificationReport {
        name: "ucv_inner_inequality".into(),
        passed: ok && v > 0.0,
        worst_value: v,
        worst_location: Some(Location::Index(n)),
        range_tested: format!("(pi^2/4)(2n+2)/(2n+3) >= pi^2/6 > 1 >= A_n for 0 <= n <= {}", cfg.max_n),
    });
    out
}

fn h_report() -> VerificationReport {
    // margin: h(0) must vanish, then every step on the 0.01-grid must increase h.
    let mut ok = true;
    let mut items = Vec::new();
    for alpha in [0.25, 0.5, 0.75] {
        let h0 = h_eval(alpha, 0.0).expect("in domain");
        ok &= h0.abs() <= 1e-12;
        let mut prev = h0;
        for i in 1..100 {
            let s = i as f64 / 100.0;
            let h = h_eval(alpha, s).expect("in domain");
            items.push((h - prev, (alpha, s)));
            prev = h;
        }
    }
    let (v, (alpha, s)) = worst_by(items.into_iter()).expect("non-empty sweep");
    VerificationReport {
        name: "h_monotone".into(),
        passed: ok && v > 0.0,
        worst_value: v,
        worst_location: Some(Location::Pair(alpha, s)),
        range_tested: "h(0) = 0 and h strictly increasing on s = 0.01..0.99, alpha in {0.25, 0.5, 0.75}".into(),
    }
}

fn eq_last_report() -> VerificationReport {
    let items = (1..1000).map(|i| {
        let s = i as f64 / 1000.0;
        let (lhs, rhs) = check_eq_last(s).expect("in domain");
        let margin = (lhs - rhs).min(1.0 - rhs).min(lhs - 1.0);
        (margin, s)
    });
    let (v, s) = worst_by(items).expect("non-empty sweep");
    VerificationReport {
        name: "eq_last".into(),
        passed: v > 0.0,
        worst_value: v,
        worst_location: Some(Location::Point(s)),
        range_tested: "G(s) >= rhs(s), rhs(s) < 1 < G(s) on s = 0.001..0.999".into(),
    }
}

fn f_bound_reports(grid: usize) -> Vec<VerificationReport> {
    let mut specs: Vec<(String, GeneratorSpec)> = [0.25, 0.5, 0.75, 1.0]
        .iter()
        .map(|&a| (format!("f_bound_strongly_convex[alpha={a}]"), GeneratorSpec::strongly_convex(a).unwrap()))
        .collect();
    specs.push(("f_bound_ucv".into(), GeneratorSpec::uniformly_convex()));
    specs
        .into_iter()
        .map(|(name, spec)| {
            let bound = spec.known_sharp_bound().expect("sharp bound known");
            let items = (1..grid).flat_map(|j| {
                let t = j as f64 / grid as f64;
                let spec = &spec;
                (0..j).map(move |i| {
                    let s = i as f64 / grid as f64;
                    let f = f_closed_form(spec, s, t).expect("in domain");
                    (bound - f, (s, t))
                })
            });
            let (v, (s, t)) = worst_by(items).expect("non-empty grid");
            VerificationReport {
                name,
                passed: v >= -1e-12,
                worst_value: v,
                worst_location: Some(Location::Pair(s, t)),
                range_tested: format!("sharp bound minus F(s, t) on the {grid}-grid over 0 <= s < t < 1"),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::EIGHT_OVER_PI_SQ;

    #[test]
    fn sum_a_examples() {
        assert_eq!(sum_a(0), 1.0);
        assert!((sum_a(1) - 1.0).abs() < 1e-15);
        // 3·(1/5) + 3·(1/9)
        assert!((sum_a(2) - 14.0 / 15.0).abs() < 1e-15);
    }

    #[test]
    fn sum_b_examples() {
        assert_eq!(sum_b(0), 1.0);
        assert!((sum_b(1) - 2.0 / 3.0).abs() < 1e-15);
        for n in 0..=200 {
            assert!((sum_b(n) - sum_b_direct(n)).abs() < 1e-14);
        }
        assert!((1..=2000).all(|n| sum_b(n) <= 2.0 / 3.0 + 1e-15));
    }

    #[test]
    fn q_series_examples() {
        for alpha in [0.2, 0.5, 1.0] {
            let q = q_series(&GeneratorSpec::strongly_convex(alpha).unwrap(), 8).unwrap();
            assert!(q.coeff(0).unwrap().norm() < 1e-15);
            assert!(q.coeff(1).unwrap().norm() < 1e-15);
        }
        let q = q_series(&GeneratorSpec::uniformly_convex(), 8).unwrap();
        let expected = 16.0 / (PI * PI) * (2.0 / 3.0 - 4.0 / (PI * PI));
        assert!(expected > 0.0);
        assert!((q.coeff(2).unwrap().re - expected).abs() < 1e-14);
        // Q = (16/π²) z G (1/(1-z) - G - (4z/π²) G³) as an independent route
        let n = 40;
        let g = g_series(n);
        let geo = ComplexSeries::from_fn(n, |_| Complex64::new(1.0, 0.0)).unwrap();
        let g3 = &(&g * &g) * &g;
        let inner = &(&geo - &g) - &g3.multiply_by_z().truncate(n).scale_real(4.0 / (PI * PI));
        let alt = (&g * &inner).multiply_by_z().truncate(n).scale_real(2.0 * EIGHT_OVER_PI_SQ);
        let q = q_series(&GeneratorSpec::uniformly_convex(), n).unwrap();
        assert!(q.max_abs_diff(&alt) < 1e-14);

        let q = q_series(&GeneratorSpec::strongly_convex(0.5).unwrap(), 200).unwrap();
        assert!(q.coeffs().iter().all(|c| c.re >= -NONNEG_TOL));
        assert!(q_series(&GeneratorSpec::uniformly_convex(), 1).is_err());
    }

    #[test]
    fn h_examples() {
        for alpha in [0.25, 0.5, 0.75] {
            assert!(h_eval(alpha, 0.0).unwrap().abs() < 1e-15);
            let mut prev = 0.0;
            for i in 1..100 {
                let h = h_eval(alpha, i as f64 / 100.0).unwrap();
                assert!(h > prev);
                prev = h;
            }
        }
        assert!(h_eval(0.5, 0.5).unwrap() > 0.0);
        assert!(h_eval(1.0, 0.5).is_err());
        assert!(h_eval(0.5, 1.0).is_err());
    }

    #[test]
    fn eq_last_examples() {
        let (lhs, rhs) = check_eq_last(0.5).unwrap();
        // 50-digit oracle values
        assert!((lhs - 1.2464504802804610).abs() < 1e-14);
        assert!((rhs - 0.9206968584358256).abs() < 1e-14);
        assert!(lhs >= rhs);
        assert!(check_eq_last(0.0).is_err());
        assert!(check_eq_last(1.0).is_err());
    }

    #[test]
    fn suita_domain() {
        assert!(suita_check(0.4, 1e-3, 32).is_err());
        assert!(suita_check(1.0, 1e-3, 32).is_err());
    }

    #[test]
    fn suita_examples() {
        for (a, expected) in [(0.5, 2.0), (0.75, 1.5), (0.6, 1.92)] {
            let r = suita_check(a, 1e-3, 64).unwrap();
            assert!(r.passed, "{r:?}");
            assert!((r.worst_value).abs() <= 1e-3 && (8.0 * a * (1.0 - a) - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn corrupted_coefficient_is_caught() {
        let q = q_series(&GeneratorSpec::strongly_convex(0.5).unwrap(), 50).unwrap();
        let mut coeffs = q.into_coeffs();
        coeffs[17] = Complex64::new(-0.01, 0.0);
        let bad = ComplexSeries::new(coeffs).unwrap();
        let r = check_nonnegative("q_series", &bad, NONNEG_TOL);
        assert!(!r.passed);
        assert_eq!(r.worst_location, Some(Location::Index(17)));
    }

    #[test]
    fn zero_max_n_checks_only_trivial_sums() {
        let cfg = VerifyConfig { max_n: 0, b_max_n: 0, ..VerifyConfig::default() };
        let reports = run_lemma(Lemma::Sum, &cfg);
        assert!(reports.iter().all(|r| r.passed), "{reports:#?}");
        let a = reports.iter().find(|r| r.name == "sum_a_bound").unwrap();
        assert_eq!(a.worst_value, 1.0);
        let b = reports.iter().find(|r| r.name == "sum_b_bound").unwrap();
        assert_eq!(b.worst_value, 1.0);
    }

    #[test]
    fn report_serializes_to_expected_shape() {
        let r = VerificationReport {
            name: "x".into(),
            passed: true,
            worst_value: 0.5,
            worst_location: Some(Location::Pair(0.25, 3.0)),
            range_tested: "r".into(),
        };
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"name":"x","passed":true,"worst_value":0.5,"worst_location":[0.25,3.0],"range_tested":"r"}"#
        );
    }
}

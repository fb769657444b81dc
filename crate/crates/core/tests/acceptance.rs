//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schwarzian_core::verify::{run_with, sum_a, Lemma, VerifyConfig};
use schwarzian_core::{
    build_extremal, figure1_crossing, hyperbolic_norm, mocanu_qc_constant, n_phi, qc_extension_constant,
    schwarzian_at_origin, Complex64, ComplexSeries, GeneratorSpec, HypNormConfig, NPhiConfig, EIGHT_OVER_PI_SQ,
};

const ALPHAS: [f64; 4] = [0.25, 0.5, 0.75, 1.0];
const SUITA_A: [f64; 3] = [0.5, 0.6, 0.75];

struct Criterion {
    passed: bool,
    detail: String,
}

fn check(passed: bool, detail: impl Into<String>) -> Criterion {
    Criterion { passed, detail: detail.into() }
}

fn all(parts: Vec<Criterion>) -> Criterion {
    let passed = parts.iter().all(|c| c.passed);
    let failures: Vec<&str> = parts.iter().filter(|c| !c.passed).map(|c| c.detail.as_str()).collect();
    let detail = if passed {
        parts.iter().map(|c| c.detail.as_str()).collect::<Vec<_>>().join("; ")
    } else {
        failures.join("; ")
    };
    Criterion { passed, detail }
}

/// `N(φ)` values shared by criteria 1, 2, 3 and 8.
struct Estimates {
    strongly_convex: Vec<(f64, f64)>,
    strongly_convex_secs: f64,
    ucv: f64,
    ucv_secs: f64,
    half_plane: Vec<(f64, f64)>,
}

fn estimates() -> Estimates {
    let config = NPhiConfig::default();
    let clock = Instant::now();
    let strongly_convex = ALPHAS
        .iter()
        .map(|&a| (a, n_phi(&GeneratorSpec::strongly_convex(a).unwrap(), &config).unwrap().value))
        .collect();
    let strongly_convex_secs = clock.elapsed().as_secs_f64();
    let clock = Instant::now();
    let ucv = n_phi(&GeneratorSpec::uniformly_convex(), &config).unwrap().value;
    let ucv_secs = clock.elapsed().as_secs_f64();
    let half_plane = SUITA_A
        .iter()
        .map(|&a| (a, n_phi(&GeneratorSpec::half_plane(a).unwrap(), &config).unwrap().value))
        .collect();
    Estimates { strongly_convex, strongly_convex_secs, ucv, ucv_secs, half_plane }
}

fn criterion_1(est: &Estimates) -> Criterion {
    let mut parts: Vec<Criterion> = est
        .strongly_convex
        .iter()
        .map(|&(a, v)| {
            let sharp = 2.0 * a;
            check(v >= sharp - 1e-3 && v <= sharp + 1e-9, format!("alpha={a}: N={v:.12} vs {sharp}"))
        })
        .collect();
    parts.push(check(est.strongly_convex_secs < 30.0, format!("{:.1}s", est.strongly_convex_secs)));
    all(parts)
}

fn criterion_2(est: &Estimates) -> Criterion {
    let v = est.ucv;
    all(vec![
        check(
            v >= EIGHT_OVER_PI_SQ - 1e-3 && v <= EIGHT_OVER_PI_SQ + 1e-9,
            format!("N={v:.12} vs 8/pi^2={EIGHT_OVER_PI_SQ:.12}"),
        ),
        check(est.ucv_secs < 10.0, format!("{:.1}s", est.ucv_secs)),
    ])
}

fn criterion_3(est: &Estimates) -> Criterion {
    let mut parts: Vec<Criterion> = est
        .half_plane
        .iter()
        .map(|&(a, v)| {
            let sharp = 8.0 * a * (1.0 - a);
            check((v - sharp).abs() <= 1e-3, format!("a={a}: N={v:.6} vs {sharp}"))
        })
        .collect();
    let at_half = est.half_plane[0].1;
    parts.push(check((at_half - 2.0).abs() <= 1e-3, format!("a=0.5 gives {at_half:.6}")));
    all(parts)
}

fn criterion_4() -> Criterion {
    let mut parts = Vec::new();
    let norm_cfg = HypNormConfig { r_max: 0.8, ..HypNormConfig::default() };
    for a in ALPHAS {
        let f = build_extremal(&GeneratorSpec::strongly_convex(a).unwrap(), 2, 96).unwrap().f;
        let coeff = |n: usize| f.coeff(n).unwrap();
        let expected = [(3, a / 3.0), (5, a * a / 5.0), (7, a * (1.0 + 8.0 * a * a) / 63.0)];
        let worst = expected.iter().map(|&(n, e)| (coeff(n) - Complex64::new(e, 0.0)).norm()).fold(0.0, f64::max);
        parts.push(check(worst <= 1e-12, format!("f_{a} coefficient error {worst:.1e}")));
        let s0 = schwarzian_at_origin(&f).unwrap();
        parts.push(check((s0 - Complex64::new(2.0 * a, 0.0)).norm() <= 1e-12, format!("S(0)={:.15}", s0.re)));
        let norm = hyperbolic_norm(&f, &norm_cfg).unwrap().value;
        let sharp = 2.0 * a;
        parts.push(check(norm >= sharp - 1e-2 && norm <= sharp + 1e-9, format!("||S||={norm:.9}")));
    }

    let f0 = build_extremal(&GeneratorSpec::uniformly_convex(), 2, 96).unwrap().f;
    let pi2 = PI * PI;
    let expected = [(3, 4.0 / (3.0 * pi2)), (5, 4.0 / (15.0 * pi2) + 8.0 / (5.0 * pi2 * pi2))];
    let worst = expected
        .iter()
        .map(|&(n, e)| (f0.coeff(n).unwrap() - Complex64::new(e, 0.0)).norm())
        .fold(0.0, f64::max);
    parts.push(check(worst <= 1e-12, format!("f_0 coefficient error {worst:.1e}")));
    let s0 = schwarzian_at_origin(&f0).unwrap();
    parts.push(check((s0 - Complex64::new(EIGHT_OVER_PI_SQ, 0.0)).norm() <= 1e-12, format!("S_f0(0)={:.15}", s0.re)));
    let norm = hyperbolic_norm(&f0, &norm_cfg).unwrap().value;
    parts.push(check(
        norm >= EIGHT_OVER_PI_SQ - 1e-2 && norm <= EIGHT_OVER_PI_SQ + 1e-9,
        format!("||S_f0||={norm:.9}"),
    ));
    all(parts)
}

fn criterion_5() -> Criterion {
    let root = figure1_crossing(1e-12).unwrap();
    let k1 = mocanu_qc_constant(0.5).unwrap();
    let qc = qc_extension_constant(GeneratorSpec::uniformly_convex().known_sharp_bound().unwrap());
    all(vec![
        check(root > 0.3354 && root < 0.3355, format!("crossing {root:.10}")),
        check((k1 - 0.52311).abs() <= 5e-5, format!("k1={k1:.8}")),
        check((qc - 0.40528).abs() <= 5e-5, format!("4/pi^2={qc:.8}")),
    ])
}

fn criterion_6() -> Criterion {
    let lemmas = [Lemma::Sum, Lemma::StronglyConvex, Lemma::UniformlyConvex, Lemma::H, Lemma::Last];
    let reports = run_with(&lemmas, &VerifyConfig::default());
    let mut parts: Vec<Criterion> =
        reports.iter().map(|r| check(r.passed, format!("{} worst {:.3e}", r.name, r.worst_value))).collect();
    let required = [
        "sum_a_bound",
        "sum_b_bound",
        "p_alpha_nonneg",
        "q_alpha_nonneg",
        "ucv_p_nonneg",
        "ucv_q_nonneg",
        "h_monotone",
        "eq_last",
        "lowner_bound",
    ];
    for name in required {
        parts.push(check(reports.iter().any(|r| r.name == name), format!("{name} present")));
    }
    parts.push(check(sum_a(0) == 1.0 && sum_a(1) == 1.0, "A_0 = A_1 = 1"));
    parts.push(check((sum_a(2) - 14.0 / 15.0).abs() <= 1e-12, format!("A_2={}", sum_a(2))));
    let ok = parts.iter().all(|c| c.passed);
    if ok {
        check(true, format!("{} reports passed", reports.len()))
    } else {
        all(parts)
    }
}

fn random_complex(rng: &mut ChaCha8Rng, scale: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

/// `z + Σ_{n=2}^{degree} a_n zⁿ` with `|a_n|` small enough that `f'` has
/// no zeros near the closed disk.
fn random_polynomial(rng: &mut ChaCha8Rng, degree: usize, order: usize) -> ComplexSeries {
    let mut c = vec![Complex64::new(0.0, 0.0); order + 1];
    c[1] = Complex64::new(1.0, 0.0);
    for (n, slot) in c.iter_mut().enumerate().take(degree + 1).skip(2) {
        *slot = random_complex(rng, 0.05 / n as f64);
    }
    ComplexSeries::new(c).unwrap()
}

fn mobius_invariance(rng: &mut ChaCha8Rng) -> f64 {
    let order = 24;
    let f = random_polynomial(rng, 8, order);
    let (p, q, r, s) = loop {
        let p = rng.gen_range(-1.0..1.0);
        let q = rng.gen_range(-1.0..1.0);
        let r = rng.gen_range(-0.5..0.5);
        let s: f64 = rng.gen_range(1.0..2.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        if (p * s - q * r).abs() >= 0.1 {
            break (p, q, r, s);
        }
    };
    let one = ComplexSeries::one(order);
    let num = &f.scale_real(p) + &one.scale_real(q);
    let den = &f.scale_real(r) + &one.scale_real(s);
    let mf = &num * &den.reciprocal().unwrap();
    mf.schwarzian().unwrap().max_abs_diff(&f.schwarzian().unwrap())
}

/// Coefficients of `f(c + w)` for a polynomial `f`.
fn taylor_shift(f: &ComplexSeries, c: Complex64) -> ComplexSeries {
    let a = f.coeffs();
    let n = a.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (j, &aj) in a.iter().enumerate() {
        let mut binom = 1.0;
        let mut cpow = Complex64::new(1.0, 0.0);
        // term aj * C(j, k) c^{j-k} w^k, for k from j down to 0
        for k in (0..=j).rev() {
            out[k] += aj * binom * cpow;
            binom = binom * k as f64 / (j - k + 1) as f64;
            cpow *= c;
        }
    }
    ComplexSeries::new(out).unwrap()
}

fn chain_rule(rng: &mut ChaCha8Rng) -> f64 {
    let order = 64;
    let f = random_polynomial(rng, 6, order);
    // Real c keeps g an automorphism of the disk, so g(z) stays where the
    // series of S_f converges.
    let c = Complex64::new(rng.gen_range(-0.6..0.6), 0.0);
    let one = Complex64::new(1.0, 0.0);
    // g(z) - c = z (1 - c²) / (1 + c z)
    let denom = ComplexSeries::new({
        let mut v = vec![Complex64::new(0.0, 0.0); order + 1];
        v[0] = one;
        v[1] = c;
        v
    })
    .unwrap();
    let inner = denom.reciprocal().unwrap().multiply_by_z().truncate(order).scale(one - c * c);
    let fg = taylor_shift(&f, c).compose(&inner).unwrap();
    let s_fg = fg.schwarzian().unwrap();
    let s_f = f.schwarzian().unwrap();
    let mut worst: f64 = 0.0;
    for _ in 0..8 {
        let z = loop {
            let z = random_complex(rng, 0.5);
            if z.norm() <= 0.5 {
                break z;
            }
        };
        let g = (z + c) / (one + c * z);
        let dg = (one - c * c) / ((one + c * z) * (one + c * z));
        worst = worst.max((s_fg.eval(z) - s_f.eval(g) * dg * dg).norm());
    }
    worst
}

fn criterion_7() -> Criterion {
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    let mobius = (0..100).map(|_| mobius_invariance(&mut rng)).fold(0.0, f64::max);
    let chain = (0..100).map(|_| chain_rule(&mut rng)).fold(0.0, f64::max);
    let koebe = ComplexSeries::from_fn(96, |n| Complex64::new(n as f64, 0.0)).unwrap();
    let norm = hyperbolic_norm(&koebe, &HypNormConfig::default()).unwrap().value;
    all(vec![
        check(mobius <= 1e-9, format!("Mobius invariance worst {mobius:.1e}")),
        check(chain <= 1e-8, format!("chain rule worst {chain:.1e}")),
        check((norm - 6.0).abs() <= 2e-2, format!("Koebe norm {norm:.6}")),
    ])
}

fn criterion_8(est: &Estimates) -> Criterion {
    let mut cases: Vec<(GeneratorSpec, f64)> =
        est.strongly_convex.iter().map(|&(a, v)| (GeneratorSpec::strongly_convex(a).unwrap(), v)).collect();
    cases.push((GeneratorSpec::uniformly_convex(), est.ucv));
    cases.extend(est.half_plane.iter().map(|&(a, v)| (GeneratorSpec::half_plane(a).unwrap(), v)));

    let mut parts = Vec::new();
    for (spec, bound) in cases {
        let sf = build_extremal(&spec, 2, 96).unwrap().f.schwarzian().unwrap();
        let mut worst = f64::NEG_INFINITY;
        for i in 1..=7 {
            let t = i as f64 / 10.0;
            for k in 0..720 {
                let z = Complex64::from_polar(t, k as f64 * PI / 360.0);
                let v = (1.0 - t * t).powi(2) * sf.eval(z).norm();
                worst = worst.max(v - bound);
            }
        }
        parts.push(check(worst <= 5e-3, format!("{}: max excess {worst:.3e}", spec.label())));
    }
    let ok = parts.iter().all(|c| c.passed);
    if ok {
        check(true, format!("{} specs within N(phi) + 5e-3", parts.len()))
    } else {
        all(parts)
    }
}

fn main() -> ExitCode {
    let est = estimates();
    let results = [
        ("1 strongly convex sharp bound", criterion_1(&est)),
        ("2 uniformly convex sharp bound", criterion_2(&est)),
        ("3 half-plane comparison", criterion_3(&est)),
        ("4 extremal witnesses", criterion_4()),
        ("5 figure-1 constants", criterion_5()),
        ("6 lemma suite", criterion_6()),
        ("7 series property suite", criterion_7()),
        ("8 subordination end-to-end", criterion_8(&est)),
    ];
    let mut failed = 0;
    for (name, c) in &results {
        println!("{} criterion {name}: {}", if c.passed { "PASS" } else { "FAIL" }, c.detail);
        if !c.passed {
            failed += 1;
        }
    }
    println!("acceptance: {}/{} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

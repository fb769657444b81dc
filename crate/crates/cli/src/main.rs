//! `schwarzian`: command-line front end for the Schwarzian-norm library.
//!
//! Exit codes: 0 success, 1 numeric or check failure, 2 usage, 3 I/O.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schwarzian_core::coeff_io::{read_coefficients, write_coefficients};
use schwarzian_core::verify::{run_with, Lemma, VerifyConfig};
use schwarzian_core::{
    build_extremal, figure1_crossing, figure1_value, hyperbolic_norm, mocanu_qc_constant, n_phi,
    qc_extension_constant, schwarzian_at_origin, verify_subordination_ode, CircleConfig, ComplexSeries, Error,
    GeneratorKind, GeneratorSpec, HypNormConfig, NPhiConfig, DEFAULT_ORDER,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "schwarzian", version, about = "Sharp Schwarzian-norm bounds for convex classes K(phi)")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Series truncation order.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    order: usize,
    /// Points per axis of search grids.
    #[arg(long, global = true, default_value_t = 256)]
    grid: usize,
    /// Refinement passes around the best grid point.
    #[arg(long, global = true, default_value_t = 40)]
    refine: usize,
    /// Reserved; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Estimate N(phi), the sharp bound on the Schwarzian norm over K(phi).
    Nphi(ClassArgs),
    /// Build the extremal function 1 + z f''/f' = phi(z^k).
    Extremal {
        #[command(flatten)]
        class: ClassArgs,
        /// Exponent k of omega(z) = z^k.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Coefficient file to write.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hyperbolic sup-norm of the Schwarzian of f read from a coefficient file.
    Hypnorm {
        /// Coefficients of f, one "re im" pair per line.
        #[arg(long)]
        input: PathBuf,
        /// Search radius cap.
        #[arg(long, default_value_t = 0.8)]
        r_max: f64,
    },
    /// Run the numerical lemma checks.
    Verify {
        /// Run every check (the default when no lemma is given).
        #[arg(long)]
        all: bool,
        /// Run one group of checks; may be repeated.
        #[arg(long, value_enum)]
        lemma: Vec<LemmaArg>,
        /// Upper index for the coefficient sums.
        #[arg(long, default_value_t = 1000)]
        max_n: usize,
    },
    /// Sample sin(pi gamma^{-1}(alpha)/2) - alpha.
    Figure1 {
        /// CSV destination; stdout when omitted in text mode.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 0.001)]
        step: f64,
        /// Also locate the zero crossing.
        #[arg(long)]
        crossing: bool,
    },
    /// Print the Taylor coefficients of a generator phi.
    Coeffs {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[arg(long, value_enum)]
    class: ClassArg,
    /// Order of strong convexity, in (0, 1].
    #[arg(long)]
    alpha: Option<f64>,
    /// Half-plane parameter, in [0, 1).
    #[arg(long)]
    a: Option<f64>,
    /// Coefficients of a custom phi.
    #[arg(long)]
    coeffs: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum ClassArg {
    Kalpha,
    Ucv,
    Halfplane,
    Custom,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
enum LemmaArg {
    Sum,
    StronglyConvex,
    UniformlyConvex,
    H,
    Last,
    FBound,
    Suita,
}

impl From<LemmaArg> for Lemma {
    fn from(l: LemmaArg) -> Self {
        match l {
            LemmaArg::Sum => Lemma::Sum,
            LemmaArg::StronglyConvex => Lemma::StronglyConvex,
            LemmaArg::UniformlyConvex => Lemma::UniformlyConvex,
            LemmaArg::H => Lemma::H,
            LemmaArg::Last => Lemma::Last,
            LemmaArg::FBound => Lemma::FBound,
            LemmaArg::Suita => Lemma::Suita,
        }
    }
}

#[derive(Serialize)]
struct OutputRecord {
    command: &'static str,
    inputs: Value,
    result: Value,
    elapsed_ms: f64,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    fn io(path: &Path, err: impl std::fmt::Display) -> Self {
        Self { code: 3, message: format!("{}: {err}", path.display()) }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) => 3,
            Error::Domain(_) | Error::InvalidGenerator(_) | Error::Parse { .. } => 2,
            _ => 1,
        };
        Self { code, message: e.to_string() }
    }
}

/// Text lines for the human-readable report, plus whether the command
/// should exit with status 1 after printing.
struct Outcome {
    inputs: Value,
    result: Value,
    text: Vec<String>,
    failed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let command = match cli.command {
        Command::Nphi(_) => "nphi",
        Command::Extremal { .. } => "extremal",
        Command::Hypnorm { .. } => "hypnorm",
        Command::Verify { .. } => "verify",
        Command::Figure1 { .. } => "figure1",
        Command::Coeffs { .. } => "coeffs",
    };
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                let record = OutputRecord {
                    command,
                    inputs: outcome.inputs,
                    result: outcome.result,
                    elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
                };
                println!("{}", serde_json::to_string(&record).expect("serializable record"));
            } else {
                for line in &outcome.text {
                    println!("{line}");
                }
            }
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Nphi(class) => cmd_nphi(cli, class),
        Command::Extremal { class, k, out } => cmd_extremal(cli, class, *k, out.as_deref()),
        Command::Hypnorm { input, r_max } => cmd_hypnorm(cli, input, *r_max),
        Command::Verify { all, lemma, max_n } => cmd_verify(cli, *all, lemma, *max_n),
        Command::Figure1 { csv, step, crossing } => cmd_figure1(cli, csv.as_deref(), *step, *crossing),
        Command::Coeffs { class, out } => cmd_coeffs(cli, class, out.as_deref()),
    }
}

fn read_series(path: &Path) -> Result<ComplexSeries, Failure> {
    let file = File::open(path).map_err(|e| Failure::io(path, e))?;
    read_coefficients(BufReader::new(file)).map_err(|e| match e {
        Error::Io(msg) => Failure::io(path, msg),
        other => Failure::usage(format!("{}: {other}", path.display())),
    })
}

fn write_series(path: &Path, series: &ComplexSeries) -> Result<(), Failure> {
    let file = File::create(path).map_err(|e| Failure::io(path, e))?;
    write_coefficients(BufWriter::new(file), series).map_err(|e| Failure::io(path, e))
}

fn build_spec(class: &ClassArgs) -> Result<GeneratorSpec, Failure> {
    let spec = match class.class {
        ClassArg::Kalpha => {
            let alpha = class.alpha.ok_or_else(|| Failure::usage("--class kalpha requires --alpha"))?;
            GeneratorSpec::strongly_convex(alpha)?
        }
        ClassArg::Ucv => GeneratorSpec::uniformly_convex(),
        ClassArg::Halfplane => {
            let a = class.a.ok_or_else(|| Failure::usage("--class halfplane requires --a"))?;
            GeneratorSpec::half_plane(a)?
        }
        ClassArg::Custom => {
            let path = class.coeffs.as_deref().ok_or_else(|| Failure::usage("--class custom requires --coeffs"))?;
            GeneratorSpec::custom(read_series(path)?)?
        }
    };
    Ok(spec)
}

fn class_inputs(class: &ClassArgs) -> Value {
    json!({
        "class": class.class,
        "alpha": class.alpha,
        "a": class.a,
        "coeffs": class.coeffs.as_ref().map(|p| p.display().to_string()),
    })
}

fn coefficient_pairs(series: &ComplexSeries) -> Value {
    Value::from(series.coeffs().iter().map(|c| json!([c.re, c.im])).collect::<Vec<_>>())
}

fn cmd_nphi(cli: &Cli, class: &ClassArgs) -> Result<Outcome, Failure> {
    let spec = build_spec(class)?;
    let config = NPhiConfig { grid: cli.grid, refine_iters: cli.refine, circle: CircleConfig::default() };
    let est = n_phi(&spec, &config)?;
    let sharp = spec.known_sharp_bound();
    let gap = sharp.map(|v| est.value - v);
    let qc = qc_extension_constant(sharp.unwrap_or(est.value));
    let mocanu = match spec.kind() {
        GeneratorKind::StronglyConvex { alpha } if *alpha < 1.0 => Some(mocanu_qc_constant(*alpha)?),
        _ => None,
    };

    let mut text = vec![format!("class: {}", spec.label()), format!("N(phi) >= {}", est.value)];
    text.push(format!("witness: {}", serde_json::to_string(&est.witness).expect("serializable witness")));
    if let (Some(s), Some(g)) = (sharp, gap) {
        text.push(format!("sharp value: {s}"));
        text.push(format!("gap: {g:e}"));
    }
    text.push(format!("qc extension constant: {qc}"));
    if let Some(m) = mocanu {
        text.push(format!("constant via Mocanu's inclusion: {m}"));
    }

    let mut inputs = class_inputs(class);
    inputs["grid"] = json!(cli.grid);
    inputs["refine"] = json!(cli.refine);
    Ok(Outcome {
        inputs,
        result: json!({
            "estimate": est,
            "sharp": sharp,
            "gap": gap,
            "qc_constant": qc,
            "mocanu_constant": mocanu,
        }),
        text,
        failed: false,
    })
}

fn cmd_extremal(cli: &Cli, class: &ClassArgs, k: usize, out: Option<&Path>) -> Result<Outcome, Failure> {
    let spec = build_spec(class)?;
    let e = build_extremal(&spec, k, cli.order)?;
    let s0 = schwarzian_at_origin(&e.f)?;
    let mismatch = verify_subordination_ode(&e)?;
    let norm = hyperbolic_norm(&e.f, &HypNormConfig::default())?;
    if let Some(path) = out {
        write_series(path, &e.f)?;
    }

    let mut text = vec![
        format!("class: {}  omega = z^{k}  order {}", spec.label(), cli.order),
        format!("S_f(0) = {} {:+}i", s0.re, s0.im),
        format!("hyperbolic norm (|z| <= {}) >= {}", HypNormConfig::default().r_max, norm.value),
        format!("subordination ODE mismatch: {mismatch:e}"),
    ];
    match out {
        Some(path) => text.push(format!("coefficients written to {}", path.display())),
        None => text.extend(e.f.coeffs().iter().map(|c| format!("{:?} {:?}", c.re, c.im))),
    }

    let mut inputs = class_inputs(class);
    inputs["k"] = json!(k);
    inputs["order"] = json!(cli.order);
    inputs["out"] = json!(out.map(|p| p.display().to_string()));
    Ok(Outcome {
        inputs,
        result: json!({
            "schwarzian_at_origin": [s0.re, s0.im],
            "hyperbolic_norm": norm,
            "ode_mismatch": mismatch,
            "coefficients": coefficient_pairs(&e.f),
        }),
        text,
        failed: false,
    })
}

fn cmd_hypnorm(cli: &Cli, input: &Path, r_max: f64) -> Result<Outcome, Failure> {
    if !(r_max > 0.0 && r_max < 1.0) {
        return Err(Failure::usage(format!("--r-max must lie in (0, 1), got {r_max}")));
    }
    let f = read_series(input)?.truncate(cli.order);
    let config = HypNormConfig { r_max, refine_iters: cli.refine.min(HypNormConfig::default().refine_iters), ..Default::default() };
    let norm = hyperbolic_norm(&f, &config)?;
    Ok(Outcome {
        inputs: json!({ "input": input.display().to_string(), "r_max": r_max, "order": cli.order }),
        result: json!(norm),
        text: vec![
            format!("hyperbolic norm (|z| <= {r_max}) >= {}", norm.value),
            format!("witness: {}", serde_json::to_string(&norm.witness).expect("serializable witness")),
        ],
        failed: false,
    })
}

fn cmd_verify(cli: &Cli, all: bool, lemmas: &[LemmaArg], max_n: usize) -> Result<Outcome, Failure> {
    let selected: Vec<Lemma> =
        if all || lemmas.is_empty() { Lemma::ALL.to_vec() } else { lemmas.iter().map(|&l| l.into()).collect() };
    let config = VerifyConfig { max_n, b_max_n: 10 * max_n, grid: cli.grid, ..VerifyConfig::default() };
    let reports = run_with(&selected, &config);
    let failed = reports.iter().any(|r| !r.passed);
    let mut text: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "{} {:<40} worst {:e}  [{}]",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.worst_value,
                r.range_tested
            )
        })
        .collect();
    let passed = reports.iter().filter(|r| r.passed).count();
    text.push(format!("{passed}/{} checks passed", reports.len()));
    Ok(Outcome {
        inputs: json!({
            "all": all || lemmas.is_empty(),
            "lemma": lemmas,
            "max_n": max_n,
            "grid": cli.grid,
        }),
        result: json!(reports),
        text,
        failed,
    })
}

fn figure1_alphas(step: f64) -> Vec<f64> {
    let n = (1.0 / step).round();
    if (n * step - 1.0).abs() < 1e-9 {
        (1..n as usize).map(|i| i as f64 / n).collect()
    } else {
        (1..).map(|i| i as f64 * step).take_while(|&a| a <= 1.0 - step).collect()
    }
}

fn cmd_figure1(cli: &Cli, csv: Option<&Path>, step: f64, crossing: bool) -> Result<Outcome, Failure> {
    if !(step > 0.0 && step < 0.5) {
        return Err(Failure::usage(format!("--step must lie in (0, 0.5), got {step}")));
    }
    let alphas = figure1_alphas(step);
    let mut rows = String::from("alpha,value\n");
    for &a in &alphas {
        rows.push_str(&format!("{a},{}\n", figure1_value(a)?));
    }

    let mut text = Vec::new();
    match csv {
        Some(path) => {
            let mut file = File::create(path).map_err(|e| Failure::io(path, e))?;
            file.write_all(rows.as_bytes()).map_err(|e| Failure::io(path, e))?;
            text.push(format!("wrote {} rows to {}", alphas.len(), path.display()));
        }
        None if !cli.json => {
            let stdout = io::stdout();
            stdout.lock().write_all(rows.as_bytes()).map_err(|e| Failure::io(Path::new("<stdout>"), e))?;
        }
        None => {}
    }

    let k1 = mocanu_qc_constant(0.5)?;
    let crossing_value = if crossing {
        let root = figure1_crossing(1e-13)?;
        let lo = (root * 1e4).floor() / 1e4;
        let hi = lo + 1e-4;
        text.push(format!("crossing at alpha = {root}, inside ({lo:.4}, {hi:.4})"));
        text.push(format!("k1 = sin(pi gamma^-1(1/2)/2) = {k1}"));
        Some(json!({ "root": root, "bracket": [lo, hi] }))
    } else {
        None
    };

    Ok(Outcome {
        inputs: json!({
            "csv": csv.map(|p| p.display().to_string()),
            "step": step,
            "crossing": crossing,
        }),
        result: json!({ "rows": alphas.len(), "crossing": crossing_value, "k1": k1 }),
        text,
        failed: false,
    })
}

fn cmd_coeffs(cli: &Cli, class: &ClassArgs, out: Option<&Path>) -> Result<Outcome, Failure> {
    let spec = build_spec(class)?;
    let phi = schwarzian_core::phi_series(&spec, cli.order)?;
    let mut text = Vec::new();
    match out {
        Some(path) => {
            write_series(path, &phi)?;
            text.push(format!("wrote {} coefficients to {}", phi.order() + 1, path.display()));
        }
        None => text.extend(phi.coeffs().iter().map(|c| format!("{:?} {:?}", c.re, c.im))),
    }
    let mut inputs = class_inputs(class);
    inputs["order"] = json!(cli.order);
    inputs["out"] = json!(out.map(|p| p.display().to_string()));
    Ok(Outcome { inputs, result: json!({ "coefficients": coefficient_pairs(&phi) }), text, failed: false })
}

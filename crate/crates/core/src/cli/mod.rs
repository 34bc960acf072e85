//! Command-line front end.
//!
//! Every command prints one JSON document (`--output json`, the default)
//! or a short text report. Exit status is 0 on success, 1 when a `verify`
//! suite finds a violation and 2 on bad input.

mod parse;
pub mod verify;

pub use parse::{parse_components, parse_curve, parse_poly, ParseError};
pub use verify::{run_suite, Suite, SuiteReport};

use crate::algebra::{format_rational, parse_rational, HPoly, Rational};
use crate::arrangements::{
    generate_family, random_coordinate_change, random_params, recognize, to_rational_matrix,
    trial_rng, CurveInput, FamilyTag,
};
use crate::eigenscheme::{blowup_class, eigenscheme_degree, jacobian_to_tensor, EigenError};
use crate::jacobian::{analyze, Freeness, JacobianReport};
use crate::polar::{polar_report, sample_fibers};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "syzlab", version, about = "Jacobian syzygies, Tjurina numbers, eigenschemes and polar maps of plane curves")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Syzygy degree, Tjurina number, bounds and freeness of a curve.
    Analyze {
        /// A polynomial, or a file with one component per line.
        input: String,
    },
    /// A member of one of the nine families.
    Generate {
        tag: String,
        /// Number of conics, or of lines through the common point for L.
        #[arg(long)]
        m: usize,
        #[arg(long)]
        random_coords: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Explicit comma-separated parameters instead of random ones.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Option<Vec<String>>,
    },
    /// Family tag of a factored conic-line arrangement.
    Recognize { file: String },
    /// Whether the Jacobian ideal is the ideal of an eigenscheme.
    Eigen { input: String },
    /// Contracted lines, polar degree, Hessian divisibility and fibers.
    Polar {
        file: String,
        #[arg(long, default_value_t = 20)]
        fibers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Runs a seeded invariant suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A failure reported with exit status 2.
struct InputError {
    kind: &'static str,
    message: String,
}

fn input_error(kind: &'static str, e: impl std::fmt::Display) -> InputError {
    InputError {
        kind,
        message: e.to_string(),
    }
}

struct Outcome {
    input: Value,
    result: Value,
    text: String,
    violation: bool,
}

/// Reads a curve given inline or as a factored file.
fn read_curve(src: &str) -> Result<CurveInput, InputError> {
    let path = Path::new(src);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| input_error("io", e))?;
        let comps = parse_components(&text)
            .map_err(|(line, e)| input_error("parse", format!("line {line}: {e}")))?;
        if comps.is_empty() {
            return Err(input_error("parse", "the file has no components"));
        }
        Ok(CurveInput::new(comps))
    } else {
        let f = parse_curve(src).map_err(|e| input_error("parse", e))?;
        Ok(CurveInput::new(vec![f]))
    }
}

fn read_factored(src: &str) -> Result<CurveInput, InputError> {
    let c = read_curve(src)?;
    crate::arrangements::validate(&c, false).map_err(|e| input_error("invalid-curve", e))?;
    Ok(c)
}

fn polys(ps: &[HPoly]) -> Value {
    ps.iter().map(|p| Value::String(p.to_string())).collect()
}

fn rationals(qs: &[Rational]) -> Value {
    qs.iter().map(|q| Value::String(format_rational(q))).collect()
}

fn curve_input_json(src: &str, c: &CurveInput) -> Value {
    json!({ "source": src, "components": polys(c.components()), "degree": c.degree() })
}

fn exponents(f: &Freeness) -> Value {
    match f {
        Freeness::Free { d1, d2 } | Freeness::NearlyFree { d1, d2 } => json!([d1, d2]),
        Freeness::Neither { generator_degrees, .. } => json!(generator_degrees),
        Freeness::ConcurrentLines => Value::Null,
    }
}

pub fn report_json(r: &JacobianReport) -> Value {
    json!({
        "d": r.d,
        "r": r.r,
        "tau": r.tau,
        "dpw_lower": r.dpw_lower,
        "dpw_upper": r.dpw_upper,
        "freeness": r.freeness.to_string(),
        "exponents": exponents(&r.freeness),
        "hilbert_table": r.hilbert_table,
    })
}

fn report_text(r: &JacobianReport) -> String {
    let dpw = match (r.dpw_lower, r.dpw_upper) {
        (Some(l), Some(u)) => format!("[{l}, {u}]"),
        _ => "n/a (concurrent lines)".into(),
    };
    let table: Vec<String> = r.hilbert_table.iter().map(|(t, v)| format!("{t}:{v}")).collect();
    format!(
        "d = {}\nr = {}\ntau = {}\ndpw = {}\nfreeness = {}\nhilbert = {}\n",
        r.d,
        r.r,
        r.tau,
        dpw,
        r.freeness,
        table.join(" ")
    )
}

fn cmd_analyze(src: &str) -> Result<Outcome, InputError> {
    let c = read_factored(src)?;
    let r = analyze(c.product()).map_err(|e| input_error("analysis", e))?;
    Ok(Outcome {
        input: curve_input_json(src, &c),
        result: report_json(&r),
        text: report_text(&r),
        violation: false,
    })
}

fn cmd_generate(
    tag: &str,
    m: usize,
    random_coords: bool,
    seed: u64,
    params: Option<&[String]>,
) -> Result<Outcome, InputError> {
    let tag: FamilyTag = tag.parse().map_err(|e| input_error("tag", e))?;
    let mut rng = trial_rng(seed, 0);
    let params: Vec<Rational> = match params {
        Some(ps) => ps
            .iter()
            .map(|s| parse_rational(s).ok_or_else(|| input_error("parameter", format!("not a rational: {s:?}"))))
            .collect::<Result<_, _>>()?,
        None => random_params(tag, m, &mut rng),
    };
    let normal = generate_family(tag, &params).map_err(|e| input_error("parameter", e))?;
    let (coords, curve) = if random_coords {
        let a = random_coordinate_change(&mut rng);
        (Some(a), normal.transform(&to_rational_matrix(&a)))
    } else {
        (None, normal)
    };
    let mut text = format!("# {tag}, degree {}\n", curve.degree());
    for c in curve.components() {
        text.push_str(&format!("{c}\n"));
    }
    Ok(Outcome {
        input: json!({ "tag": tag.name(), "m": m, "random_coords": random_coords, "seed": seed }),
        result: json!({
            "tag": tag.name(),
            "params": rationals(&params),
            "coordinates": coords,
            "degree": curve.degree(),
            "components": polys(curve.components()),
            "product": curve.product().to_string(),
        }),
        text,
        violation: false,
    })
}

fn cmd_recognize(src: &str) -> Result<Outcome, InputError> {
    let c = read_curve(src)?;
    let tag = recognize(&c).map_err(|e| input_error("recognition", e))?;
    Ok(Outcome {
        input: curve_input_json(src, &c),
        result: json!({ "tag": tag.name() }),
        text: format!("{tag}\n"),
        violation: false,
    })
}

fn cmd_eigen(src: &str) -> Result<Outcome, InputError> {
    let c = read_factored(src)?;
    let f = c.product();
    let d = f.degree();
    let class = blowup_class(d)
        .ok()
        .map(|(a, b, c)| rationals(&[a, b, c]))
        .unwrap_or(Value::Null);
    let (result, text) = match jacobian_to_tensor(f) {
        Ok(t) => {
            let len = eigenscheme_degree(&t).map_err(|e| input_error("eigenscheme", e))?;
            (
                json!({
                    "is_eigenscheme": true,
                    "tensor": polys(t.entries()),
                    "reason": Value::Null,
                    "eigenscheme_degree": len,
                    "blowup_class": class,
                }),
                format!("eigenscheme: yes\ntensor = {t}\nlength = {len}\nblowup class = {class}\n"),
            )
        }
        Err(EigenError::NotEigenscheme(reason)) => (
            json!({
                "is_eigenscheme": false,
                "tensor": Value::Null,
                "reason": reason,
                "eigenscheme_degree": Value::Null,
                "blowup_class": class,
            }),
            format!("eigenscheme: no ({reason})\nblowup class = {class}\n"),
        ),
        Err(e) => return Err(input_error("eigenscheme", e)),
    };
    Ok(Outcome {
        input: curve_input_json(src, &c),
        result,
        text,
        violation: false,
    })
}

fn cmd_polar(src: &str, fibers: usize, seed: u64) -> Result<Outcome, InputError> {
    let c = read_factored(src)?;
    let r = polar_report(&c).map_err(|e| input_error("polar", e))?;
    let mut rng = trial_rng(seed, 0);
    let fib = match sample_fibers(c.product(), fibers, &mut rng) {
        Ok(sample) => {
            let max = sample.iter().map(|(_, f)| f.roots_distinct).max();
            json!({
                "sampled": sample.len(),
                "max_distinct_roots": max,
                "samples": sample.iter().map(|(q, f)| json!({
                    "q": rationals(q),
                    "line": f.line.to_string(),
                    "roots_total": f.roots_total,
                    "roots_distinct": f.roots_distinct,
                })).collect::<Vec<_>>(),
            })
        }
        Err(e) => json!({ "unavailable": e.to_string() }),
    };
    let vars = r
        .hessian_quotient_vars
        .as_ref()
        .map(|vs| vs.iter().map(|v| v.name().to_string()).collect::<Vec<_>>());
    let text = format!(
        "polar degree (quasihomogeneous) = {}\ncontracted lines = [{}]\nhessian divisible by components {:?}\nhessian/f variables = {}\nfibers: max distinct roots = {}\n",
        r.degree_estimate.degree,
        r.contracted_lines.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(", "),
        r.hessian_divisible_by,
        vars.as_ref().map_or("n/a".into(), |v| v.join(",")),
        fib.get("max_distinct_roots").cloned().unwrap_or(Value::Null),
    );
    Ok(Outcome {
        input: curve_input_json(src, &c),
        result: json!({
            "degree_estimate": r.degree_estimate.degree,
            "quasihomogeneous_assumed": r.degree_estimate.quasihomogeneous_assumed,
            "contracted_lines": polys(&r.contracted_lines),
            "hessian_divisible_by": r.hessian_divisible_by,
            "hessian_quotient_vars": vars,
            "fibers": fib,
        }),
        text,
        violation: false,
    })
}

fn cmd_verify(suite: Suite, trials: u64, seed: u64) -> Outcome {
    let rep = run_suite(suite, trials, seed);
    let mut text = String::new();
    for c in &rep.checks {
        text.push_str(&format!(
            "{} trial {} {} d={}: {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.trial,
            c.label,
            c.degree,
            c.detail
        ));
    }
    text.push_str(&format!(
        "{}: {} checks, {} violations\n",
        suite,
        rep.checks.len(),
        rep.violations
    ));
    Outcome {
        input: json!({ "suite": suite, "trials": trials, "seed": seed }),
        result: serde_json::to_value(&rep).expect("serializable report"),
        text,
        violation: rep.violations > 0,
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze { .. } => "analyze",
        Command::Generate { .. } => "generate",
        Command::Recognize { .. } => "recognize",
        Command::Eigen { .. } => "eigen",
        Command::Polar { .. } => "polar",
        Command::Verify { .. } => "verify",
    }
}

/// Parses `args` (program name first), runs the command and writes the
/// report. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    let name = command_name(&cli.command);
    let outcome = match &cli.command {
        Command::Analyze { input } => cmd_analyze(input),
        Command::Generate {
            tag,
            m,
            random_coords,
            seed,
            params,
        } => cmd_generate(tag, *m, *random_coords, *seed, params.as_deref()),
        Command::Recognize { file } => cmd_recognize(file),
        Command::Eigen { input } => cmd_eigen(input),
        Command::Polar { file, fibers, seed } => cmd_polar(file, *fibers, *seed),
        Command::Verify {
            suite,
            trials,
            seed,
        } => Ok(cmd_verify(*suite, *trials, *seed)),
    };
    match (outcome, cli.output) {
        (Ok(o), OutputFormat::Json) => {
            let doc = json!({
                "schema_version": 1,
                "command": name,
                "input": o.input,
                "result": o.result,
                "diagnostics": [],
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
            i32::from(o.violation)
        }
        (Ok(o), OutputFormat::Text) => {
            let _ = write!(out, "{}", o.text);
            i32::from(o.violation)
        }
        (Err(e), OutputFormat::Json) => {
            let doc = json!({
                "schema_version": 1,
                "command": name,
                "input": Value::Null,
                "result": Value::Null,
                "diagnostics": [{ "kind": e.kind, "message": e.message }],
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"));
            let _ = writeln!(err, "error: {}", e.message);
            2
        }
        (Err(e), OutputFormat::Text) => {
            let _ = writeln!(err, "error: {}", e.message);
            2
        }
    }
}

/// Entry point for the binary.
pub fn main_with_env() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

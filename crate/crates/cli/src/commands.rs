//! Command dispatch for the `suq2` binary.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use suq2_core::corep::{
    corep_build, corep_check, corep_dsum, corep_tensor, corep_weights, weight_decompose, Corep,
    Decomposition, WeightFunction,
};
use suq2_core::dual::{conv_left, conv_right, Functional, Named};
use suq2_core::hopf::{antipode, counit, delta};
use suq2_core::infinitesimal::{inf_build, inf_equivalent, inf_verify, CMatrix, InfSystem};
use suq2_core::scalars::rational_to_f64;
use suq2_core::su2::{sl2_build, sl2_verify};
use suq2_core::{AlgebraElement, Rational};

use crate::parse::{parse_element, ParseError};
use crate::suites::{all_passed, run_suite, SuiteConfig, SUITES};

#[derive(Parser, Debug)]
#[command(name = "suq2", version, about = "Exact computations in the quantum group SU_q(2)")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Fixed value of q for numeric and rational checks.
    #[arg(long, global = true, default_value = "1/2", value_parser = parse_q)]
    pub q: Rational,
    /// Truncation bound for functional equality.
    #[arg(long, global = true, default_value_t = 3)]
    pub bound: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bring an expression to normal form.
    Normalize { expr: String },
    /// Multiply two expressions.
    Mul { lhs: String, rhs: String },
    /// Comultiplication.
    Delta { expr: String },
    /// Counit.
    Counit { expr: String },
    /// Antipode.
    Antipode { expr: String },
    /// Convolve a functional with an element, e.g. `conv chi0*f0 "a c"`.
    Conv {
        func: String,
        expr: String,
        #[arg(long, value_enum, default_value = "left")]
        side: Side,
    },
    /// Evaluate a functional on an element.
    Eval { func: String, expr: String },
    /// Corepresentations U_n.
    Corep {
        #[command(subcommand)]
        action: CorepAction,
    },
    /// Weight function of a corep expression such as `U1 x U1 + U0`.
    Weights { expr: String },
    /// Decompose a weight map such as `{-2:1,0:2,2:1}`.
    Decompose { weights: String },
    /// Infinitesimal representations.
    Inf {
        #[command(subcommand)]
        action: InfAction,
    },
    /// The classical sl(2) irreducible of dimension n + 1.
    Sl2 { n: u32 },
    /// Run a verification suite.
    Verify { suite: String },
}

#[derive(Subcommand, Debug)]
pub enum CorepAction {
    Build { n: u32 },
    Check { n: u32 },
    Tensor { m: u32, n: u32 },
}

#[derive(Subcommand, Debug)]
pub enum InfAction {
    Build { n: u32 },
    Verify { n: u32 },
    /// Compare the canonical system with the one of U_n.
    Equiv { n: u32 },
}

/// Parses `1/2`, `3` or a decimal such as `0.5` exactly.
pub fn parse_q(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let num: Rational = digits.parse().map_err(|_| format!("invalid number {s}"))?;
        let den: Rational = format!("1{}", "0".repeat(frac.len()))
            .parse()
            .map_err(|_| format!("invalid number {s}"))?;
        return Ok(num / den);
    }
    s.parse().map_err(|_| format!("invalid rational {s}"))
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: 2, stdout: String::new(), stderr: msg.into() }
    }
}

fn parse_arg(text: &str) -> Result<AlgebraElement, Outcome> {
    parse_element(text).map_err(|e: ParseError| Outcome::usage(format!("error: {e}\n  {text}\n  {}^\n", " ".repeat(e.pos))))
}

/// `NAME('^*')? ('*' NAME('^*')?)*`, convolution read left to right.
pub fn parse_functional(text: &str) -> Result<Functional, String> {
    let mut out: Option<Functional> = None;
    // `^*` contains the separator, so scan tokens by hand
    let mut rest = text.trim();
    while !rest.is_empty() {
        let end = rest.find(|c: char| !(c.is_alphanumeric() || c == 'ε' || c == 'χ')).unwrap_or(rest.len());
        let name = &rest[..end];
        let named = Named::parse(name).ok_or_else(|| format!("unknown functional '{name}'"))?;
        let mut f = Functional::Named(named);
        rest = rest[end..].trim_start();
        if let Some(r) = rest.strip_prefix("^*") {
            f = f.star();
            rest = r.trim_start();
        }
        out = Some(match out {
            None => f,
            Some(g) => g.conv(&f),
        });
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix('*')
            .ok_or_else(|| format!("expected '*' before '{rest}'"))?
            .trim_start();
        if rest.is_empty() {
            return Err("trailing '*'".into());
        }
    }
    out.ok_or_else(|| "empty functional".into())
}

/// Corep expressions: `sum := prod ('+' prod)*`, `prod := atom ('x' atom)*`,
/// `atom := U<n> | '(' sum ')'`.
pub fn parse_corep_expr(text: &str) -> Result<Corep, String> {
    fn sum(s: &mut &str) -> Result<Corep, String> {
        let mut acc = prod(s)?;
        while let Some(r) = s.trim_start().strip_prefix('+') {
            *s = r;
            acc = corep_dsum(&acc, &prod(s)?);
        }
        Ok(acc)
    }
    fn prod(s: &mut &str) -> Result<Corep, String> {
        let mut acc = atom(s)?;
        while let Some(r) = s.trim_start().strip_prefix(['x', '⊠']) {
            *s = r;
            acc = corep_tensor(&acc, &atom(s)?);
        }
        Ok(acc)
    }
    fn atom(s: &mut &str) -> Result<Corep, String> {
        let t = s.trim_start();
        if let Some(r) = t.strip_prefix('(') {
            *s = r;
            let inner = sum(s)?;
            *s = s
                .trim_start()
                .strip_prefix(')')
                .ok_or("expected ')'")?;
            return Ok(inner);
        }
        let r = t.strip_prefix('U').ok_or_else(|| format!("expected U<n> at '{t}'"))?;
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        let n: u32 = r[..end].parse().map_err(|_| format!("expected a dimension at '{r}'"))?;
        *s = &r[end..];
        corep_build(n).map_err(|e| e.to_string())
    }
    let mut s = text;
    let u = sum(&mut s)?;
    if !s.trim().is_empty() {
        return Err(format!("unexpected '{}'", s.trim()));
    }
    Ok(u)
}

/// `{k:m, ...}`.
pub fn parse_weight_map(text: &str) -> Result<WeightFunction, String> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or("weight maps look like {k:mult,...}")?;
    let mut pairs = Vec::new();
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, m) = item.split_once(':').ok_or_else(|| format!("bad entry '{item}'"))?;
        let k: i64 = k.trim().parse().map_err(|_| format!("bad weight '{k}'"))?;
        let m: u64 = m.trim().parse().map_err(|_| format!("bad multiplicity '{m}'"))?;
        pairs.push((k, m));
    }
    Ok(WeightFunction::from_pairs(pairs))
}

pub fn render_decomposition(d: &Decomposition) -> String {
    let parts: Vec<String> = d.iter().rev().map(|(n, m)| format!("{n}:{m}")).collect();
    format!("{{{}}}", parts.join(","))
}

fn element_json(x: &AlgebraElement) -> Value {
    json!({ "text": x.to_string(), "terms": x.to_records() })
}

fn cmatrix_rows(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

fn cmatrix_text(m: &CMatrix) -> String {
    let mut s = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{:>12.6}", m[(i, j)].re)).collect();
        let _ = writeln!(s, "  [{}]", row.join(" "));
    }
    s
}

fn verdict(json: bool, value: Value, text: String, passed: bool) -> Outcome {
    let stdout = if json {
        serde_json::to_string_pretty(&value).expect("json") + "\n"
    } else {
        text
    };
    Outcome { code: if passed { 0 } else { 1 }, stdout, stderr: String::new() }
}

pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { Outcome::ok(text) } else { Outcome::usage(text) };
        }
    };
    match dispatch(&cli) {
        Ok(o) => o,
        Err(o) => o,
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Outcome> {
    let json = cli.json;
    let plain = |value: Value, text: String| Ok(verdict(json, value, text, true));
    match &cli.command {
        Command::Normalize { expr } => {
            let x = parse_arg(expr)?;
            plain(element_json(&x), format!("{x}\n"))
        }
        Command::Mul { lhs, rhs } => {
            let x = &parse_arg(lhs)? * &parse_arg(rhs)?;
            plain(element_json(&x), format!("{x}\n"))
        }
        Command::Delta { expr } => {
            let t = delta(&parse_arg(expr)?);
            let terms: Vec<Value> = t
                .iter()
                .map(|([l, r], c)| json!({ "left": l, "right": r, "coeff": c.to_string() }))
                .collect();
            plain(json!({ "text": t.to_string(), "terms": terms }), format!("{t}\n"))
        }
        Command::Counit { expr } => {
            let c = counit(&parse_arg(expr)?);
            plain(json!({ "value": c.to_string() }), format!("{c}\n"))
        }
        Command::Antipode { expr } => {
            let x = antipode(&parse_arg(expr)?);
            plain(element_json(&x), format!("{x}\n"))
        }
        Command::Conv { func, expr, side } => {
            let f = parse_functional(func).map_err(Outcome::usage)?;
            let x = parse_arg(expr)?;
            let y = match side {
                Side::Left => conv_left(&f, &x),
                Side::Right => conv_right(&x, &f),
            };
            plain(element_json(&y), format!("{y}\n"))
        }
        Command::Eval { func, expr } => {
            let f = parse_functional(func).map_err(Outcome::usage)?;
            let c = f.eval(&parse_arg(expr)?);
            plain(json!({ "functional": f.to_string(), "value": c.to_string() }), format!("{c}\n"))
        }
        Command::Corep { action } => corep_command(action, json),
        Command::Weights { expr } => {
            let u = parse_corep_expr(expr).map_err(Outcome::usage)?;
            let w = corep_weights(&u).map_err(|e| Outcome { code: 1, stdout: String::new(), stderr: e.to_string() })?;
            let pairs: Vec<(i64, u64)> = w.iter().collect();
            plain(json!({ "weights": pairs }), format!("{w}\n"))
        }
        Command::Decompose { weights } => {
            let w = parse_weight_map(weights).map_err(Outcome::usage)?;
            match weight_decompose(&w) {
                Ok(d) => {
                    let pairs: Vec<(u32, u64)> = d.iter().rev().map(|(n, m)| (*n, *m)).collect();
                    plain(json!({ "multiplicities": pairs }), format!("{}\n", render_decomposition(&d)))
                }
                Err(e) => Ok(verdict(json, json!({ "error": e.to_string() }), format!("{e}\n"), false)),
            }
        }
        Command::Inf { action } => Ok(inf_command(action, rational_to_f64(&cli.q), json)),
        Command::Sl2 { n } => {
            let rep = sl2_build(*n);
            let report = sl2_verify(&rep);
            let text = format!(
                "e =\n{}f =\n{}h =\n{}{}\n",
                rep.e,
                rep.f,
                rep.h,
                serde_json::to_string(&report).expect("json")
            );
            let value = json!({
                "e": (0..rep.e.rows()).map(|i| rep.e.row(i).to_vec()).collect::<Vec<_>>(),
                "f": (0..rep.f.rows()).map(|i| rep.f.row(i).to_vec()).collect::<Vec<_>>(),
                "h": (0..rep.h.rows()).map(|i| rep.h.row(i).to_vec()).collect::<Vec<_>>(),
                "report": report,
            });
            Ok(verdict(json, value, text, report.passes()))
        }
        Command::Verify { suite } => {
            let cfg = SuiteConfig { q0: cli.q.clone(), bound: cli.bound };
            let checks = run_suite(suite, &cfg).ok_or_else(|| {
                Outcome::usage(format!("unknown suite '{suite}'; expected one of {}, all", SUITES.join(", ")))
            })?;
            let mut text = String::new();
            for c in &checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = match &c.detail {
                    Some(d) => writeln!(text, "{status} {}: {d}", c.name),
                    None => writeln!(text, "{status} {}", c.name),
                };
            }
            let passed = all_passed(&checks);
            Ok(verdict(json, json!({ "suite": suite, "passed": passed, "checks": checks }), text, passed))
        }
    }
}

fn corep_command(action: &CorepAction, json: bool) -> Result<Outcome, Outcome> {
    let internal = |e: suq2_core::Error| Outcome { code: 1, stdout: String::new(), stderr: e.to_string() };
    match action {
        CorepAction::Build { n } => {
            let u = corep_build(*n).map_err(internal)?;
            Ok(verdict(json, serde_json::to_value(u.to_record()).expect("json"), format!("{u}\n"), true))
        }
        CorepAction::Check { n } => {
            let u = corep_build(*n).map_err(internal)?;
            let r = corep_check(&u);
            let text = format!(
                "corep_eq: {}\nantipode_inverse: {}\ncounit_unit: {}\n",
                r.corep_eq, r.antipode_inverse, r.counit_unit
            );
            Ok(verdict(json, serde_json::to_value(r).expect("json"), text, r.all()))
        }
        CorepAction::Tensor { m, n } => {
            let u = corep_tensor(&corep_build(*m).map_err(internal)?, &corep_build(*n).map_err(internal)?);
            let r = corep_check(&u);
            let w = corep_weights(&u).map_err(internal)?;
            let text = format!("{u}\nweights: {w}\ncheck: {r:?}\n");
            let mut value = serde_json::to_value(u.to_record()).expect("json");
            value["weights"] = json!(w.iter().collect::<Vec<_>>());
            value["check"] = serde_json::to_value(r).expect("json");
            Ok(verdict(json, value, text, r.all()))
        }
    }
}

fn inf_command(action: &InfAction, q0: f64, json: bool) -> Outcome {
    match action {
        InfAction::Build { n } | InfAction::Verify { n } => {
            let s = inf_build(*n, q0);
            let r = inf_verify(&s, 1e-9);
            let mut text = String::new();
            if matches!(action, InfAction::Build { .. }) {
                for (k, m) in s.a.iter().enumerate() {
                    let _ = write!(text, "A{k} =\n{}", cmatrix_text(m));
                }
            }
            let _ = writeln!(text, "convention: {:?}", r.convention);
            for (name, (abs, rel)) in suq2_core::infinitesimal::InfReport::NAMES
                .iter()
                .zip(r.residuals.iter().zip(&r.relative))
            {
                let _ = writeln!(text, "{name}: residual {abs:.3e} (relative {rel:.3e})");
            }
            let value = json!({
                "q0": q0,
                "A": s.a.iter().map(cmatrix_rows).collect::<Vec<_>>(),
                "report": r,
            });
            verdict(json, value, text, r.passes)
        }
        InfAction::Equiv { n } => {
            let s = inf_build(*n, q0);
            let t = InfSystem::from_exact(
                &suq2_core::corep::amatrices(&corep_build(*n).expect("U_n")),
                q0,
            );
            match inf_equivalent(&s, &t, 1e-7) {
                Some(x) => verdict(
                    json,
                    json!({ "equivalent": true, "T": cmatrix_rows(&x) }),
                    format!("equivalent; T =\n{}", cmatrix_text(&x)),
                    true,
                ),
                None => verdict(json, json!({ "equivalent": false }), "not equivalent\n".into(), false),
            }
        }
    }
}

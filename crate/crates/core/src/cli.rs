//! Command-line front end. [`run`] returns the rendered output and exit
//! code instead of printing, so it can be driven from tests.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or a
//! computation errors, 2 on unreadable or invalid input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde_json::{json, Value};

use crate::brion::{self, EliminationStep, QOptions};
use crate::euler;
use crate::fixtures;
use crate::io::{self, InputError};
use crate::laurent::{LaurentPoly, RationalPoint};
use crate::matroid::{GroundSubset, Matroid};
use crate::plaur::PiecewiseLaurent;
use crate::polytope::SetFunction;

pub const THREADS_ENV: &str = "BRION_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "brion",
    version,
    about = "Matroid-twisted Brion polynomials of generalized permutohedra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads; falls back to BRION_THREADS, then to all cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Inputs {
    /// Matroid JSON; defaults to the Boolean matroid.
    #[arg(long)]
    pub matroid: Option<PathBuf>,
    /// Submodular set function JSON (a generalized permutohedron).
    #[arg(long)]
    pub polytope: Option<PathBuf>,
    /// Arbitrary set function JSON read as δ-coefficients.
    #[arg(long)]
    pub delta: Option<PathBuf>,
    /// Piecewise Laurent family JSON.
    #[arg(long)]
    pub family: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate the given inputs.
    Validate(Inputs),
    /// Compute Q_M(f).
    Qm {
        #[command(flatten)]
        inputs: Inputs,
        /// Print every elimination step.
        #[arg(long)]
        trace: bool,
        /// Print Q_M(f) at x = (1, …, 1) instead of the polynomial.
        #[arg(long)]
        specialize_one: bool,
        /// Set x_i = 1 and renumber the remaining variables (1-indexed).
        #[arg(long, value_name = "I")]
        dehomogenize: Option<usize>,
    },
    /// Enumerate the lattice points of a generalized permutohedron.
    Lattice {
        #[command(flatten)]
        inputs: Inputs,
        /// Interior points only.
        #[arg(long)]
        interior: bool,
    },
    /// Compare Q_M(f) with its defining rational sum (and with the lattice
    /// points when M is Boolean and f comes from a polytope).
    BrionCheck {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = 20)]
        eval_points: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check Q_M(f) = Q_M(f_T) + Q_{M|T}(f|T)·Q_{M/T}(f/T).
    RecursionCheck {
        #[command(flatten)]
        inputs: Inputs,
        /// Comma-joined 1-indexed subset; every nonempty proper subset if omitted.
        #[arg(long)]
        subset: Option<String>,
    },
    /// Check Q_M(f^∨) = (-1)^{rk M - 1}·Q_M(f·ω_M)^∨.
    RecipCheck(Inputs),
    /// χ*_M of δ-coefficients.
    Euler(Inputs),
    /// Check the flat recursion of χ*_M at every nonempty proper flat.
    AxiomCheck(Inputs),
    /// h*-vector of k ↦ χ*_M(k·z).
    Hstar {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Check χ*(f^∨) = (-1)^{rk M - 1}·χ*(f·ω_M).
    SerreCheck(Inputs),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Compute(String),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

macro_rules! compute_err {
    ($($t:ty),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Failure::Compute(e.to_string())
            }
        }
    )*};
}
compute_err!(
    brion::BrionError,
    euler::EulerError,
    crate::plaur::PlaurError,
    crate::polytope::PolytopeError,
    crate::laurent::LaurentError
);

#[derive(Debug, Clone)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Debug, Default)]
struct Report {
    command: &'static str,
    inputs: BTreeMap<String, Value>,
    /// Lines printed in text mode.
    lines: Vec<String>,
    result: Value,
    checks: Vec<Check>,
    /// Text-mode summary when every check passes.
    ok: Option<String>,
}

impl Report {
    fn new(command: &'static str) -> Self {
        Self {
            command,
            result: Value::Null,
            ..Self::default()
        }
    }

    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let checks: Vec<Value> = self
                    .checks
                    .iter()
                    .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
                    .collect();
                let mut out = serde_json::Map::new();
                if !self.command.is_empty() {
                    out.insert("command".into(), json!(self.command));
                    out.insert("inputs".into(), json!(self.inputs));
                    out.insert("result".into(), self.result.clone());
                }
                out.insert("checks".into(), Value::Array(checks));
                let mut s = serde_json::to_string_pretty(&Value::Object(out)).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut lines = self.lines.clone();
                let failed = self.checks.iter().filter(|c| !c.pass).count();
                if !self.checks.is_empty() {
                    for c in &self.checks {
                        lines.push(format!(
                            "{} {}: {}",
                            if c.pass { "PASS" } else { "FAIL" },
                            c.name,
                            c.detail
                        ));
                    }
                    if failed == 0 {
                        lines.push(self.ok.clone().unwrap_or_else(|| "OK".to_string()));
                    } else {
                        lines.push(format!("FAILED: {failed} of {} checks", self.checks.len()));
                    }
                }
                if lines.is_empty() {
                    lines.push("OK".to_string());
                }
                let mut s = lines.join("\n");
                s.push('\n');
                s
            }
        }
    }
}

/// Where the piecewise family came from.
enum Source {
    Polytope(SetFunction),
    Delta(SetFunction),
    Family(PiecewiseLaurent),
}

impl Source {
    fn n(&self) -> usize {
        match self {
            Source::Polytope(z) | Source::Delta(z) => z.n(),
            Source::Family(f) => f.n(),
        }
    }

    fn family(&self) -> PiecewiseLaurent {
        match self {
            Source::Polytope(z) | Source::Delta(z) => z.piecewise_monomial(),
            Source::Family(f) => f.clone(),
        }
    }

    fn set_function(&self) -> Option<&SetFunction> {
        match self {
            Source::Polytope(z) | Source::Delta(z) => Some(z),
            Source::Family(_) => None,
        }
    }
}

struct Loaded {
    matroid: Option<Matroid>,
    source: Option<Source>,
}

fn describe(p: &std::path::Path) -> Value {
    json!(p.display().to_string())
}

fn load(inputs: &Inputs, report: &mut Report) -> Result<Loaded, Failure> {
    let given = [&inputs.polytope, &inputs.delta, &inputs.family]
        .iter()
        .filter(|p| p.is_some())
        .count();
    if given > 1 {
        return Err(Failure::Input(
            "give at most one of --polytope, --delta, --family".into(),
        ));
    }
    let matroid = match &inputs.matroid {
        Some(p) => {
            report.inputs.insert("matroid".into(), describe(p));
            Some(io::matroid_from_json(&io::read_file(p)?, &p.display().to_string())?)
        }
        None => None,
    };
    let source = if let Some(p) = &inputs.polytope {
        report.inputs.insert("polytope".into(), describe(p));
        let what = p.display().to_string();
        let z = io::set_function_from_json(&io::read_file(p)?, &what)?;
        z.is_submodular()
            .map_err(|e| Failure::Input(format!("{what}: not a generalized permutohedron: {e}")))?;
        Some(Source::Polytope(z))
    } else if let Some(p) = &inputs.delta {
        report.inputs.insert("delta".into(), describe(p));
        Some(Source::Delta(io::set_function_from_json(
            &io::read_file(p)?,
            &p.display().to_string(),
        )?))
    } else if let Some(p) = &inputs.family {
        report.inputs.insert("family".into(), describe(p));
        Some(Source::Family(io::family_from_json(
            &io::read_file(p)?,
            &p.display().to_string(),
        )?))
    } else {
        None
    };
    if let (Some(m), Some(s)) = (&matroid, &source) {
        if m.n() != s.n() {
            return Err(Failure::Input(format!(
                "matroid has {} elements but the family lives on {}",
                m.n(),
                s.n()
            )));
        }
    }
    Ok(Loaded { matroid, source })
}

fn require_source(l: &Loaded) -> Result<&Source, Failure> {
    l.source
        .as_ref()
        .ok_or_else(|| Failure::Input("one of --polytope, --delta, --family is required".into()))
}

fn matroid_or_boolean(l: &Loaded, n: usize, report: &mut Report) -> Matroid {
    match &l.matroid {
        Some(m) => m.clone(),
        None => {
            report.inputs.insert("matroid".into(), json!(format!("boolean({n})")));
            Matroid::boolean(n)
        }
    }
}

fn require_matroid(l: &Loaded) -> Result<&Matroid, Failure> {
    l.matroid
        .as_ref()
        .ok_or_else(|| Failure::Input("--matroid is required".into()))
}

fn set_data(l: &Loaded, n_default: usize) -> Result<SetFunction, Failure> {
    match &l.source {
        None => Ok(SetFunction::zero(n_default)),
        Some(s) => s
            .set_function()
            .cloned()
            .ok_or_else(|| Failure::Input("this command takes --delta or --polytope, not --family".into())),
    }
}

fn parse_subset(text: &str, n: usize) -> Result<GroundSubset, Failure> {
    let t = GroundSubset::parse_key(text)
        .filter(|t| t.is_subset(GroundSubset::full(n)))
        .ok_or_else(|| Failure::Input(format!("--subset {text:?}: expected comma-joined elements of 1..={n}")))?;
    if t.is_empty() || t == GroundSubset::full(n) {
        return Err(Failure::Input(format!("--subset {text:?} must be nonempty and proper")));
    }
    Ok(t)
}

fn poly(p: &LaurentPoly) -> String {
    p.to_string()
}

fn trace_json(level: &[EliminationStep], element: usize) -> Value {
    let steps: Vec<Value> = level
        .iter()
        .map(|s| {
            json!({
                "mu": s.mu.key(),
                "case": s.case.name(),
                "k": s.k,
                "g": s.g.iter().map(poly).collect::<Vec<_>>(),
                "h": poly(&s.h),
                "f": poly(&s.f_out),
            })
        })
        .collect();
    json!({"element": element + 1, "steps": steps})
}

fn trace_lines(level: &[EliminationStep], element: usize) -> Vec<String> {
    let mut out = vec![format!("eliminate x{}:", element + 1)];
    for s in level {
        let k = s.k.map_or(String::new(), |k| format!(" k={k}"));
        let g: Vec<String> = s.g.iter().map(poly).collect();
        out.push(format!(
            "  mu={} case={}{k} g=[{}] h={} f={}",
            s.mu,
            s.case.name(),
            g.join(", "),
            poly(&s.h),
            poly(&s.f_out)
        ));
    }
    out
}

/// `E(-1) = (-1)^{n-1}·|P°|`, checked only when `P` has dimension `n - 1`.
fn ehrhart_reciprocity(z: &SetFunction, interior: usize, r: &mut Report) -> Result<(), Failure> {
    let n = z.n();
    if let Err(e) = z.full_dimensional() {
        r.lines.push(format!("ehrhart reciprocity: unsupported ({e})"));
        r.result["reciprocity"] = json!("unsupported");
        return Ok(());
    }
    let values: Vec<BigInt> = z.ehrhart_values(n + 2)?.into_iter().map(BigInt::from).collect();
    let at_minus_one = euler::interpolate_at(&values, -1);
    let expected = brion::sign(n + 1) * BigInt::from(interior);
    r.result["ehrhart_at_minus_one"] = json!(at_minus_one.to_string());
    r.check(
        "ehrhart reciprocity",
        at_minus_one == expected,
        format!("E(-1) = {at_minus_one}, (-1)^(n-1) |interior| = {expected}"),
    );
    Ok(())
}

fn random_points(n: usize, count: usize, seed: u64) -> Vec<RationalPoint> {
    let mut out = vec![RationalPoint::primes(n)];
    let mut rng = fixtures::rng(seed);
    while out.len() < count {
        let mut coords: Vec<i64> = Vec::with_capacity(n);
        while coords.len() < n {
            let num = rng.gen_range(-60i64..=60);
            if num != 0 && !coords.contains(&num) {
                coords.push(num);
            }
        }
        let den = rng.gen_range(1i64..=4);
        let pt = RationalPoint::new(coords.iter().map(|&c| BigRational::new(c.into(), den.into())).collect())
            .expect("nonzero coordinates");
        out.push(pt);
    }
    out.truncate(count);
    out
}

fn point_text(pt: &RationalPoint) -> String {
    let c: Vec<String> = pt.coords().iter().map(ToString::to_string).collect();
    format!("({})", c.join(", "))
}

fn execute(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Validate(inputs) => {
            let mut r = Report::new("validate");
            let l = load(inputs, &mut r)?;
            if l.matroid.is_none() && l.source.is_none() {
                return Err(Failure::Input("nothing to validate".into()));
            }
            let mut result = serde_json::Map::new();
            if let Some(m) = &l.matroid {
                let (loops, coloops) = m.loops_coloops();
                let d = format!(
                    "n={} rank={} bases={} loops={} coloops={}",
                    m.n(),
                    m.rank(),
                    m.bases().len(),
                    loops,
                    coloops
                );
                r.check("matroid", true, d.clone());
                result.insert("matroid".into(), json!(d));
            }
            if let Some(s) = &l.source {
                let (name, d) = match s {
                    Source::Polytope(z) => ("polytope", format!("n={} submodular", z.n())),
                    Source::Delta(z) => ("delta", format!("n={}", z.n())),
                    Source::Family(f) => (
                        "family",
                        format!("n={} glues monomial={}", f.n(), f.is_monomial_family()),
                    ),
                };
                r.check(name, true, d.clone());
                result.insert(name.into(), json!(d));
            }
            r.result = Value::Object(result);
            Ok(r)
        }
        Command::Qm {
            inputs,
            trace,
            specialize_one,
            dehomogenize,
        } => {
            let mut r = Report::new("qm");
            let l = load(inputs, &mut r)?;
            let source = require_source(&l)?;
            let m = matroid_or_boolean(&l, source.n(), &mut r);
            let opts = QOptions { trace: *trace };
            let mut q = brion::q_matroid_with(&source.family(), &m, opts)?;
            let n = source.n();
            if let Some(i) = *dehomogenize {
                if i == 0 || i > n {
                    return Err(Failure::Input(format!(
                        "--dehomogenize {i}: expected an element of 1..={n}"
                    )));
                }
                r.inputs.insert("dehomogenize".into(), json!(i));
                let keep: Vec<usize> = (0..n).filter(|&j| j != i - 1).collect();
                q.result = q.result.project(&keep);
            }
            let mut result = serde_json::Map::new();
            if *specialize_one {
                let v = q.result.specialize_ones();
                r.lines.push(v.to_string());
                result.insert("value".into(), json!(v.to_string()));
            } else {
                r.lines.push(poly(&q.result));
            }
            result.insert("q".into(), json!(poly(&q.result)));
            result.insert(
                "elimination_order".into(),
                json!(q.elimination_order.iter().map(|e| e + 1).collect::<Vec<_>>()),
            );
            if *trace {
                let levels: Vec<Value> = q
                    .trace
                    .iter()
                    .zip(&q.elimination_order)
                    .map(|(lv, &e)| trace_json(lv, e))
                    .collect();
                for (lv, &e) in q.trace.iter().zip(&q.elimination_order) {
                    r.lines.extend(trace_lines(lv, e));
                }
                result.insert("trace".into(), Value::Array(levels));
            }
            r.result = Value::Object(result);
            Ok(r)
        }
        Command::Lattice { inputs, interior } => {
            let mut r = Report::new("lattice");
            let l = load(inputs, &mut r)?;
            let Some(Source::Polytope(z)) = &l.source else {
                return Err(Failure::Input("lattice needs --polytope".into()));
            };
            let pts = if *interior {
                z.interior_lattice_points()?
            } else {
                z.enumerate_lattice_points()?
            };
            r.lines.push(poly(&pts));
            r.lines.push(format!("count: {}", pts.len()));
            r.result = json!({"points": poly(&pts), "count": pts.len(), "interior": interior});
            if *interior {
                ehrhart_reciprocity(z, pts.len(), &mut r)?;
            }
            Ok(r)
        }
        Command::BrionCheck {
            inputs,
            eval_points,
            seed,
        } => {
            let mut r = Report::new("brion-check");
            let l = load(inputs, &mut r)?;
            let source = require_source(&l)?;
            let n = source.n();
            let m = matroid_or_boolean(&l, n, &mut r);
            r.inputs.insert("eval_points".into(), json!(eval_points));
            r.inputs.insert("seed".into(), json!(seed));
            let f = source.family();
            let q = brion::q_matroid(&f, &m)?.result;
            r.lines.push(format!("Q = {}", poly(&q)));
            if let (Source::Polytope(z), true) = (source, m == Matroid::boolean(n)) {
                let pts = z.enumerate_lattice_points()?;
                r.check("lattice-points", pts == q, format!("{} lattice points", pts.len()));
            }
            for (i, pt) in random_points(n, *eval_points, *seed).iter().enumerate() {
                let lhs = brion::rational_sum_eval(&f, &m, pt)?;
                let rhs = q.eval(pt)?;
                r.check(
                    format!("rational-sum[{}]", i + 1),
                    lhs == rhs,
                    format!("at {}: sum = {lhs}, Q = {rhs}", point_text(pt)),
                );
            }
            r.ok = Some(format!(
                "OK: Q_M(f) agrees with the defining sum at {eval_points} points"
            ));
            r.result = json!({"q": poly(&q)});
            Ok(r)
        }
        Command::RecursionCheck { inputs, subset } => {
            let mut r = Report::new("recursion-check");
            let l = load(inputs, &mut r)?;
            let source = require_source(&l)?;
            let n = source.n();
            let m = matroid_or_boolean(&l, n, &mut r);
            let subsets: Vec<GroundSubset> = match subset {
                Some(text) => {
                    r.inputs.insert("subset".into(), json!(text));
                    vec![parse_subset(text, n)?]
                }
                None => GroundSubset::all(n)
                    .filter(|t| !t.is_empty() && *t != GroundSubset::full(n))
                    .collect(),
            };
            let f = source.family();
            let mut rows = Vec::new();
            for t in subsets {
                let c = brion::recursion_check(&f, &m, t)?;
                r.lines.push(format!("T = {t}"));
                r.lines.push(format!("  Q   = {}", poly(&c.q)));
                r.lines.push(format!("  Q_T = {}", poly(&c.q_slide)));
                r.lines.push(format!("  Q|T = {}", poly(&c.q_restrict)));
                r.lines.push(format!("  Q/T = {}", poly(&c.q_contract)));
                r.check(format!("T={t}"), c.holds(), "Q = Q_T + Q|T * Q/T");
                rows.push(json!({
                    "subset": t.key(),
                    "q": poly(&c.q),
                    "q_slide": poly(&c.q_slide),
                    "q_restrict": poly(&c.q_restrict),
                    "q_contract": poly(&c.q_contract),
                }));
            }
            r.ok = Some("OK: Q = Q_T + Q|T * Q/T".into());
            r.result = Value::Array(rows);
            Ok(r)
        }
        Command::RecipCheck(inputs) => {
            let mut r = Report::new("recip-check");
            let l = load(inputs, &mut r)?;
            let source = require_source(&l)?;
            let m = matroid_or_boolean(&l, source.n(), &mut r);
            let (lhs, rhs) = brion::reciprocity_pair(&source.family(), &m)?;
            r.lines.push(format!("lhs = {}", poly(&lhs)));
            r.lines.push(format!("rhs = {}", poly(&rhs)));
            r.check("reciprocity", lhs == rhs, format!("rk M = {}", m.rank()));
            r.ok = Some("OK: Q_M(f^v) = (-1)^(rk M - 1) Q_M(f w_M)^v".into());
            r.result = json!({"lhs": poly(&lhs), "rhs": poly(&rhs)});
            Ok(r)
        }
        Command::Euler(inputs) => {
            let mut r = Report::new("euler");
            let l = load(inputs, &mut r)?;
            let n = l.source.as_ref().map(Source::n).or(l.matroid.as_ref().map(Matroid::n));
            let n = n.ok_or_else(|| Failure::Input("euler needs --matroid or --delta".into()))?;
            let a = set_data(&l, n)?;
            let m = matroid_or_boolean(&l, n, &mut r);
            let v = euler::chi_star(&m, &a)?.value;
            r.lines.push(v.to_string());
            r.result = json!({"chi": v.to_string()});
            Ok(r)
        }
        Command::AxiomCheck(inputs) => {
            let mut r = Report::new("axiom-check");
            let l = load(inputs, &mut r)?;
            let m = require_matroid(&l)?.clone();
            if !m.is_loopless() {
                return Err(Failure::Input(format!(
                    "axiom-check needs a loopless matroid; loops {}",
                    m.loops()
                )));
            }
            let a = set_data(&l, m.n())?;
            let report = euler::axiom_check(&m, &a)?;
            let mut rows = Vec::new();
            for row in &report.rows {
                r.check(
                    format!("F={}", row.flat),
                    row.holds(),
                    format!(
                        "{} = {} + {} * {}",
                        row.lhs, row.shifted, row.restricted, row.contracted
                    ),
                );
                rows.push(json!({
                    "flat": row.flat.key(),
                    "lhs": row.lhs.to_string(),
                    "shifted": row.shifted.to_string(),
                    "restricted": row.restricted.to_string(),
                    "contracted": row.contracted.to_string(),
                }));
            }
            r.ok = Some(format!("OK: recursion holds at {} flats", report.rows.len()));
            r.result = Value::Array(rows);
            Ok(r)
        }
        Command::Hstar { inputs, kmax } => {
            let mut r = Report::new("hstar");
            let l = load(inputs, &mut r)?;
            let source = require_source(&l)?;
            let z = set_data(&l, source.n())?;
            let m = matroid_or_boolean(&l, z.n(), &mut r);
            let kmax = kmax.unwrap_or_else(|| euler::default_kmax(z.n()));
            r.inputs.insert("kmax".into(), json!(kmax));
            let h = euler::hstar(&m, &z, kmax)?;
            let join = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
            r.lines.push(format!("d = {}", h.d));
            r.lines.push(format!("h* = {}", join(&h.entries)));
            r.lines.push(format!("chi = {}", join(&h.values)));
            r.check("h*_0 = 1", h.starts_with_one(), format!("h*_0 = {}", h.entries[0]));
            r.check("h* >= 0", h.nonnegative(), join(&h.entries));
            if m == Matroid::boolean(z.n()) && z.is_submodular().is_ok() {
                let e = z.ehrhart_values(kmax)?;
                let same = e.iter().zip(&h.values).all(|(a, b)| BigInt::from(*a) == *b);
                r.check("ehrhart", same, "chi_k = |kP ∩ Z^n|");
            }
            r.result = json!({
                "d": h.d,
                "hstar": h.entries.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "chi": h.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            Ok(r)
        }
        Command::SerreCheck(inputs) => {
            let mut r = Report::new("serre-check");
            let l = load(inputs, &mut r)?;
            let m = require_matroid(&l)?.clone();
            let a = set_data(&l, m.n())?;
            let (lhs, rhs) = euler::serre_check(&m, &a)?;
            r.lines.push(format!("lhs = {lhs}"));
            r.lines.push(format!("rhs = {rhs}"));
            r.check("serre", lhs == rhs, format!("rk M = {}", m.rank()));
            r.result = json!({"lhs": lhs.to_string(), "rhs": rhs.to_string()});
            Ok(r)
        }
    }
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    if let Some(t) = flag {
        return Ok(Some(t));
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Input(format!("{THREADS_ENV}={v:?} is not a thread count"))),
        Err(_) => Ok(None),
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_count(cli.threads)? {
        if t == 0 {
            return Err(Failure::Input("thread count must be positive".into()));
        }
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Failure::Compute(e.to_string()))?;
    pool.install(|| execute(&cli.command))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome { stdout, stderr, code };
        }
    };
    match dispatch(&cli) {
        Ok(report) => Outcome {
            stdout: report.render(cli.format),
            stderr: String::new(),
            code: if report.passed() { 0 } else { 1 },
        },
        Err(Failure::Input(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("input error: {msg}\n"),
            code: 2,
        },
        Err(Failure::Compute(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 1,
        },
    }
}

//! The `leibcoh` command line.
//!
//! Every command writes a plain-text report (or its JSON twin with
//! `--json`). The first line of either form is a header holding the start
//! time and the runtime; everything after it is byte-for-byte reproducible.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 validation or check failure.

use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::catalog::catalog;
use crate::complexes::{cohomology, homology, CoefficientAlgebra, TensorSpace, MAX_DEGREE};
use crate::equivariant::{EquivariantCochain, EquivariantComplex};
use crate::error::Error;
use crate::field::Scalar;
use crate::linalg::in_span;
use crate::problem::{CoefficientSpec, Problem};
use crate::shuffle::{check_rho_identity, cohomology_classes, cup, zinbiel_check_on_cohomology};

pub const DEFAULT_MAX_DEGREE: usize = 4;
pub const MAX_RHO_DEGREE: usize = 9;

#[derive(Debug, Parser)]
#[command(name = "leibcoh", version, about = "Exact Leibniz and equivariant Leibniz (co)homology")]
pub struct Cli {
    /// Emit the JSON report instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Use a built-in example instead of a problem file.
    #[arg(long, global = true, value_name = "NAME")]
    pub catalog: Option<String>,

    /// Override the coefficient system: `constant` or `coset-functions`.
    #[arg(long, global = true, value_name = "KIND")]
    pub coefficients: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Leibniz identity, the group action and the coefficient system.
    Validate { file: Option<PathBuf> },
    /// Betti numbers of Leibniz cohomology, optionally equivariant.
    Cohomology {
        file: Option<PathBuf>,
        #[arg(long)]
        equivariant: bool,
        #[arg(long, value_name = "N")]
        max_degree: Option<usize>,
    },
    /// Betti numbers of Leibniz homology.
    Homology {
        file: Option<PathBuf>,
        #[arg(long, value_name = "N")]
        max_degree: Option<usize>,
    },
    /// Cup products of cohomology class representatives.
    Cup {
        file: Option<PathBuf>,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Check the zinbiel relation on all class triples.
    ZinbielCheck {
        file: Option<PathBuf>,
        #[arg(long, num_args = 3, value_names = ["P", "Q", "R"])]
        degrees: Vec<usize>,
    },
    /// Check the composition identity for the shuffle operators ρ.
    RhoIdentity {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Report {
    command: String,
    lines: Vec<String>,
    json: serde_json::Map<String, Value>,
    failed: bool,
}

impl Report {
    fn new(command: &str) -> Self {
        Report { command: command.to_string(), lines: Vec::new(), json: serde_json::Map::new(), failed: false }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn set(&mut self, key: &str, v: Value) {
        self.json.insert(key.to_string(), v);
    }
}

enum Failure {
    Parse(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::UnknownCatalog(_) | Error::NotPrime(_) => Failure::Parse(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

type Step<T> = std::result::Result<T, Failure>;

/// Runs the CLI on the given arguments (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let started = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    let clock = Instant::now();
    let result = dispatch(&cli);
    let runtime_ms = clock.elapsed().as_secs_f64() * 1000.0;
    match result {
        Ok(report) => {
            let code = if report.failed { 2 } else { 0 };
            Outcome { stdout: render(&cli, &report, started, runtime_ms), stderr: String::new(), code }
        }
        Err(Failure::Parse(msg)) => Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 1 },
        Err(Failure::Check(msg)) => Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: 2 },
    }
}

fn render(cli: &Cli, report: &Report, started: u64, runtime_ms: f64) -> String {
    let verdict = if report.failed { "fail" } else { "ok" };
    if cli.json {
        let header = json!({"started_unix": started, "runtime_ms": (runtime_ms * 1000.0).round() / 1000.0});
        let mut body = report.json.clone();
        body.insert("command".into(), Value::String(report.command.clone()));
        body.insert("verdict".into(), Value::String(verdict.into()));
        let pretty = serde_json::to_string_pretty(&Value::Object(body)).expect("serializable");
        let inner = pretty.strip_prefix('{').unwrap_or(&pretty);
        let sep = if inner.trim() == "}" { "" } else { "," };
        format!("{{\"header\": {header}{sep}{inner}\n")
    } else {
        let mut out = format!("# leibcoh {} started_unix={started} runtime_ms={runtime_ms:.3}\n", env!("CARGO_PKG_VERSION"));
        out.push_str(&format!("command: {}\n", report.command));
        for l in &report.lines {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str(&format!("verdict: {verdict}\n"));
        out
    }
}

fn load(cli: &Cli, file: &Option<PathBuf>) -> Step<(String, Problem)> {
    let (source, mut problem) = load_input(cli, file)?;
    match cli.coefficients.as_deref() {
        None => {}
        Some("constant") => problem.coefficient_spec = CoefficientSpec::Constant,
        Some("coset-functions") => problem.coefficient_spec = CoefficientSpec::CosetFunctions,
        Some(other) => return Err(Failure::Parse(format!("unknown coefficient system {other:?}"))),
    }
    Ok((source, problem))
}

fn load_input(cli: &Cli, file: &Option<PathBuf>) -> Step<(String, Problem)> {
    match (&cli.catalog, file) {
        (Some(_), Some(_)) => Err(Failure::Parse("give either a problem file or --catalog, not both".into())),
        (Some(name), None) => {
            let entry = catalog(name)?;
            Ok((format!("catalog {name}"), Problem::from_catalog(&entry)))
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
            Ok((format!("file {}", path.display()), Problem::from_json(&text)?))
        }
        (None, None) => Err(Failure::Parse("no input: pass a problem file or --catalog NAME".into())),
    }
}

fn dispatch(cli: &Cli) -> Step<Report> {
    match &cli.command {
        Command::Validate { file } => {
            let (source, problem) = load(cli, file)?;
            let mut r = Report::new("validate");
            describe(&mut r, &source, &problem);
            validate_into(&mut r, &problem);
            Ok(r)
        }
        Command::Homology { file, max_degree } => {
            let (source, problem) = load(cli, file)?;
            let mut r = Report::new("homology");
            describe(&mut r, &source, &problem);
            if validate_into(&mut r, &problem) {
                let n = degree_bound(&problem, *max_degree)?;
                homology_into(&mut r, &problem, n)?;
            }
            Ok(r)
        }
        Command::Cohomology { file, equivariant, max_degree } => {
            let (source, problem) = load(cli, file)?;
            let mut r = Report::new(if *equivariant { "cohomology --equivariant" } else { "cohomology" });
            describe(&mut r, &source, &problem);
            if *equivariant && problem.action.is_none() {
                return Err(Failure::Check("--equivariant needs a group and an action".into()));
            }
            if validate_into(&mut r, &problem) {
                let n = degree_bound(&problem, *max_degree)?;
                if *equivariant {
                    equivariant_into(&mut r, &problem, n)?;
                } else {
                    cohomology_into(&mut r, &problem, n)?;
                }
            }
            Ok(r)
        }
        Command::Cup { file, p, q } => {
            let (source, problem) = load(cli, file)?;
            let mut r = Report::new("cup");
            describe(&mut r, &source, &problem);
            if *p == 0 || *q == 0 {
                return Err(Failure::Check("cup degrees must be at least 1".into()));
            }
            let bound = problem.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
            if p + q > bound {
                return Err(Failure::Check(format!("p + q = {} exceeds the maximum degree {bound}", p + q)));
            }
            if validate_into(&mut r, &problem) {
                cup_into(&mut r, &problem, *p, *q)?;
            }
            Ok(r)
        }
        Command::ZinbielCheck { file, degrees } => {
            let (source, problem) = load(cli, file)?;
            let mut r = Report::new("zinbiel-check");
            describe(&mut r, &source, &problem);
            let (p, q, s) = (degrees[0], degrees[1], degrees[2]);
            if p == 0 || q == 0 || s == 0 {
                return Err(Failure::Check("zinbiel-check degrees must be at least 1".into()));
            }
            let bound = problem.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
            if p + q + s > bound {
                return Err(Failure::Check(format!("p + q + r = {} exceeds the maximum degree {bound}", p + q + s)));
            }
            if validate_into(&mut r, &problem) {
                zinbiel_into(&mut r, &problem, (p, q, s))?;
            }
            Ok(r)
        }
        Command::RhoIdentity { p, q, r: rr } => {
            if cli.catalog.is_some() {
                return Err(Failure::Parse("rho-identity takes no input algebra".into()));
            }
            if *p == 0 || *q == 0 || *rr == 0 || p + q + rr > MAX_RHO_DEGREE {
                return Err(Failure::Check(format!("need 1 <= p, q, r and p + q + r <= {MAX_RHO_DEGREE}")));
            }
            let v = check_rho_identity(*p, *q, *rr)?;
            let mut r = Report::new("rho-identity");
            r.line(format!("degrees: p={p} q={q} r={rr}"));
            r.line(format!("lhs terms: {}", v.lhs_terms));
            r.line(format!("rhs terms: {}", v.rhs_terms));
            r.line(format!("identity: {}", if v.ok { "ok" } else { "FAIL" }));
            let failure = v.first_failure.as_ref().map(|(input, output, a, b)| {
                r.line(format!("first difference: input {input:?} output {output:?} lhs {a} rhs {b}"));
                json!({"input": input, "output": output, "lhs": a.to_string(), "rhs": b.to_string()})
            });
            r.set("degrees", json!([p, q, rr]));
            r.set("lhs_terms", json!(v.lhs_terms));
            r.set("rhs_terms", json!(v.rhs_terms));
            r.set("identity_ok", json!(v.ok));
            r.set("first_difference", failure.unwrap_or(Value::Null));
            r.failed = !v.ok;
            Ok(r)
        }
    }
}

fn degree_bound(problem: &Problem, flag: Option<usize>) -> Step<usize> {
    let n = flag.or(problem.max_degree).unwrap_or(DEFAULT_MAX_DEGREE);
    if n > MAX_DEGREE {
        return Err(Failure::Check(format!("max degree {n} exceeds {MAX_DEGREE}")));
    }
    Ok(n)
}

fn describe(r: &mut Report, source: &str, p: &Problem) {
    r.line(format!("source: {source}"));
    r.line(format!("field: {}", p.field));
    r.line(format!(
        "algebra: dim {}, {} nonzero structure constants",
        p.algebra.dim(),
        p.algebra.nonzero_structure_constants()
    ));
    let order = p.action.as_ref().map(|a| a.group.order()).unwrap_or(1);
    r.line(format!("group order: {order}"));
    let coeffs = match p.coefficient_spec {
        CoefficientSpec::Constant => "constant",
        CoefficientSpec::CosetFunctions => "coset-functions",
        CoefficientSpec::Explicit => "explicit",
    };
    r.line(format!("coefficients: {coeffs}"));
    r.set("source", json!(source));
    r.set("field", json!(p.field.to_string()));
    r.set("algebra_dim", json!(p.algebra.dim()));
    r.set("group_order", json!(order));
    r.set("coefficients", json!(coeffs));
}

/// Appends the axiom checks; returns whether all passed.
fn validate_into(r: &mut Report, p: &Problem) -> bool {
    let mut checks = Vec::new();
    let leib = p.algebra.check_leibniz_identity();
    let m = p.algebra.dim();
    let detail = leib.first().map(|v| {
        format!(
            "{} violating triples, first (e{}, e{}, e{}): [x,[y,z]] = [{}], [[x,y],z] - [[x,z],y] = [{}]",
            leib.len(),
            v.triple.0 + 1,
            v.triple.1 + 1,
            v.triple.2 + 1,
            join(&v.lhs),
            join(&v.rhs)
        )
    });
    checks.push(("leibniz identity", format!("{} basis triples", m * m * m), detail));

    let action = p.action_or_trivial();
    let av = action.validate();
    let detail = av.first().map(|v| format!("{} violations, first: {v}", av.len()));
    checks.push(("group action", format!("order {}", action.group.order()), detail));

    let coeffs = p.coefficients();
    let cv = coeffs.check();
    let detail = cv.first().map(|v| {
        let mors: Vec<String> = v
            .morphisms
            .iter()
            .map(|&i| {
                let mor = coeffs.orbit.morphisms[i];
                format!("H{} -> H{} via g{}", mor.source + 1, mor.target + 1, mor.element + 1)
            })
            .collect();
        format!("{} violations, first at [{}]: {}", cv.len(), mors.join("; "), v.detail)
    });
    checks.push((
        "coefficient system",
        format!("{} orbits, {} morphisms", coeffs.orbit.object_count(), coeffs.orbit.morphisms.len()),
        detail,
    ));

    let mut all_ok = true;
    let mut js = Vec::new();
    for (name, scope, detail) in checks {
        let ok = detail.is_none();
        all_ok &= ok;
        r.line(format!("[{}] {name} ({scope})", if ok { "ok" } else { "FAIL" }));
        if let Some(d) = &detail {
            r.line(format!("    {d}"));
        }
        js.push(json!({"check": name, "scope": scope, "ok": ok, "detail": detail}));
    }
    r.set("checks", Value::Array(js));
    if !all_ok {
        r.failed = true;
    }
    all_ok
}

fn join(v: &[Scalar]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn word_name(letter: char, word: &[usize]) -> String {
    word.iter().map(|&i| format!("{letter}{}", i + 1)).collect::<Vec<_>>().join("⊗")
}

/// A chain on `TensorSpace(base, n)` as a sum of basis words.
fn render_chain(letter: char, base: usize, n: usize, v: &[Scalar]) -> String {
    let space = TensorSpace::new(base, n);
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("{c}·{}", word_name(letter, &space.word(i))))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// A cochain with values in an algebra of dimension `a`, in dual-basis notation.
fn render_cochain(letter: char, base: usize, n: usize, a: usize, v: &[Scalar]) -> String {
    let space = TensorSpace::new(base, n);
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let (w, alpha) = (i / a, i % a);
            let word = if n == 0 { String::new() } else { format!("·({})*", word_name(letter, &space.word(w))) };
            if a == 1 {
                format!("{c}{word}")
            } else {
                format!("{c}{word}·b{}", alpha + 1)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn homology_into(r: &mut Report, p: &Problem, n: usize) -> Step<()> {
    let m = p.algebra.dim();
    let mut js = Vec::new();
    for k in 1..=n {
        let h = homology(&p.algebra, k)?;
        r.line(format!(
            "HL_{k}: chains {} cycles {} boundaries {} betti {}",
            h.chain_dim,
            h.cycle_basis.len(),
            h.boundary_basis.len(),
            h.betti
        ));
        let reps: Vec<String> = h.representatives.iter().map(|v| render_chain('e', m, k, v)).collect();
        for (i, rep) in reps.iter().enumerate() {
            r.line(format!("    class {}: {rep}", i + 1));
        }
        js.push(json!({
            "degree": k, "chain_dim": h.chain_dim, "cycles": h.cycle_basis.len(),
            "boundaries": h.boundary_basis.len(), "betti": h.betti, "representatives": reps
        }));
    }
    r.set("homology", Value::Array(js));
    Ok(())
}

fn cohomology_into(r: &mut Report, p: &Problem, n: usize) -> Step<()> {
    let k = CoefficientAlgebra::ground(p.field);
    let m = p.algebra.dim();
    let mut js = Vec::new();
    for d in 0..=n {
        let h = cohomology(&p.algebra, &k, d)?;
        r.line(format!(
            "HL^{d}: cochains {} cocycles {} coboundaries {} betti {}{}",
            h.cochain_dim,
            h.cocycle_basis.len(),
            h.coboundary_basis.len(),
            h.betti,
            if d == 0 { " (degree-0 convention: CL^0 = A, δ^0 = 0)" } else { "" }
        ));
        let reps: Vec<String> = h.representatives.iter().map(|v| render_cochain('e', m, d, 1, v)).collect();
        for (i, rep) in reps.iter().enumerate() {
            r.line(format!("    class {}: {rep}", i + 1));
        }
        js.push(json!({
            "degree": d, "cochain_dim": h.cochain_dim, "cocycles": h.cocycle_basis.len(),
            "coboundaries": h.coboundary_basis.len(), "betti": h.betti, "representatives": reps
        }));
    }
    r.set("cohomology", Value::Array(js));
    Ok(())
}

fn build_complex(p: &Problem) -> Step<EquivariantComplex> {
    Ok(EquivariantComplex::new(&p.action_or_trivial(), &p.coefficients())?)
}

fn render_equivariant(c: &EquivariantComplex, x: &EquivariantCochain) -> Vec<String> {
    x.components
        .iter()
        .enumerate()
        .map(|(h, v)| {
            let a = c.coefficients.algebras[h].dim();
            format!("H{}: {}", h + 1, render_cochain('f', c.fixed[h].dim(), x.degree, a, v))
        })
        .collect()
}

fn equivariant_into(r: &mut Report, p: &Problem, n: usize) -> Step<()> {
    let c = build_complex(p)?;
    let mut subgroups = Vec::new();
    r.line("subgroups:");
    for (h, f) in c.fixed.iter().enumerate() {
        let elems: Vec<usize> = f.subgroup.elements().iter().map(|g| g + 1).collect();
        let basis: Vec<String> = f.inclusion.columns().iter().map(|col| format!("[{}]", join(col))).collect();
        r.line(format!(
            "    H{}: elements {:?}, dim g^H {}, dim A(G/H) {}, basis of g^H {}",
            h + 1,
            elems,
            f.dim(),
            c.coefficients.algebras[h].dim(),
            if basis.is_empty() { "(none)".to_string() } else { basis.join(" ") }
        ));
        subgroups.push(json!({
            "index": h + 1, "elements": elems, "fixed_dim": f.dim(),
            "coefficient_dim": c.coefficients.algebras[h].dim(), "fixed_basis": basis
        }));
    }
    r.line(format!("orbit category morphisms: {}", c.orbit().morphisms.len()));
    let mut js = Vec::new();
    for d in 0..=n {
        let h = c.equivariant_cohomology(d)?;
        r.line(format!(
            "HL^{d}_G: invariant cochains {} (ambient {}) cocycles {} coboundaries {} betti {}{}",
            h.invariant_dim,
            h.ambient_dim,
            h.result.cocycle_basis.len(),
            h.result.coboundary_basis.len(),
            h.result.betti,
            if d == 0 { " (degree-0 convention)" } else { "" }
        ));
        let mut reps = Vec::new();
        for (i, v) in h.result.representatives.iter().enumerate() {
            let parts = render_equivariant(&c, &c.from_ambient(d, v));
            r.line(format!("    class {}: {}", i + 1, parts.join("; ")));
            reps.push(parts);
        }
        js.push(json!({
            "degree": d, "invariant_dim": h.invariant_dim, "ambient_dim": h.ambient_dim,
            "cocycles": h.result.cocycle_basis.len(), "coboundaries": h.result.coboundary_basis.len(),
            "betti": h.result.betti, "representatives": reps
        }));
    }
    r.set("subgroups", Value::Array(subgroups));
    r.set("orbit_morphisms", json!(c.orbit().morphisms.len()));
    r.set("equivariant_cohomology", Value::Array(js));
    Ok(())
}

fn cup_into(r: &mut Report, p: &Problem, dp: usize, dq: usize) -> Step<()> {
    let c = build_complex(p)?;
    let (ca, cb) = (cohomology_classes(&c, dp)?, cohomology_classes(&c, dq)?);
    let target = c.equivariant_cohomology(dp + dq)?;
    let reps = &target.result.representatives;
    let mut spanning = reps.clone();
    spanning.extend(c.coboundary_span(dp + dq)?);
    r.line(format!("classes: degree {dp}: {}, degree {dq}: {}, degree {}: {}", ca.len(), cb.len(), dp + dq, reps.len()));
    let mut js = Vec::new();
    for (i, a) in ca.iter().enumerate() {
        for (j, b) in cb.iter().enumerate() {
            let prod = cup(&c, &a.representative, &b.representative)?;
            let v = c.to_ambient(&prod);
            let cocycle = c.is_cocycle(dp + dq, &v)?;
            let coords = in_span(&v, &spanning)?;
            let class = match &coords {
                Some(x) => {
                    let terms: Vec<String> = x[..reps.len()]
                        .iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .map(|(k, s)| format!("{s}·[c{}]", k + 1))
                        .collect();
                    if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.join(" + ")
                    }
                }
                None => "not a class".to_string(),
            };
            if !cocycle || coords.is_none() {
                r.failed = true;
            }
            r.line(format!("[a{}] ∪ [b{}] = {class}{}", i + 1, j + 1, if cocycle { "" } else { " (NOT a cocycle)" }));
            js.push(json!({"a": i + 1, "b": j + 1, "cocycle": cocycle, "class": class}));
        }
    }
    r.set("degrees", json!([dp, dq]));
    r.set("products", Value::Array(js));
    Ok(())
}

fn zinbiel_into(r: &mut Report, p: &Problem, (dp, dq, dr): (usize, usize, usize)) -> Step<()> {
    let c = build_complex(p)?;
    let (ca, cb, cc) = (cohomology_classes(&c, dp)?, cohomology_classes(&c, dq)?, cohomology_classes(&c, dr)?);
    r.line(format!("classes: {} x {} x {}", ca.len(), cb.len(), cc.len()));
    let mut js = Vec::new();
    let mut failures = 0;
    for (i, a) in ca.iter().enumerate() {
        for (j, b) in cb.iter().enumerate() {
            for (k, x) in cc.iter().enumerate() {
                let v = zinbiel_check_on_cohomology(&c, a, b, x)?;
                let how = if v.defect_is_zero { "defect zero" } else if v.ok { "defect is a coboundary" } else { "defect not a coboundary" };
                if !v.ok {
                    failures += 1;
                }
                r.line(format!("[{}] ({}, {}, {}): {how}", if v.ok { "ok" } else { "FAIL" }, i + 1, j + 1, k + 1));
                js.push(json!({"triple": [i + 1, j + 1, k + 1], "ok": v.ok, "defect_zero": v.defect_is_zero}));
            }
        }
    }
    r.line(format!("triples: {}, failures: {failures}", js.len()));
    r.failed |= failures > 0;
    r.set("degrees", json!([dp, dq, dr]));
    r.set("triples", Value::Array(js));
    Ok(())
}

//! Evaluation of parsed programs into a report.

use std::collections::HashMap;
use std::fmt::Write as _;

use anyhow::{bail, ensure, Context, Result};
use serde_json::{json, Value};

use exform_core::generalized::{bare_structure, bundle_data, check_data, check_integrability, swap_fibre, tdualize, FormStructure, GenStructureData};
use exform_core::gstructures::{betti_numbers, calibration_sample, classify_isometry_3form, stabilizer_dim, su3_frame, Algebra};
use exform_core::liegeom::{curvature_ricci, g2_torsion_classes, levi_civita, LieAlgebraFrame, Parity};
use exform_core::scalars::{validate_field, DEFAULT_FIELD};
use exform_core::spinreps::box_operator;
use exform_core::{Matrix, MatrixRep, Multivector, Scalar, Space, SpaceDescriptor, Spinor};

use crate::ast::*;

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub seed: u64,
    /// Field tag used when the program has no `field` statement.
    pub field: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, field: DEFAULT_FIELD }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

/// One line of output: a command, a check, an asserted bundle, or a failed declaration.
#[derive(Debug, Clone)]
pub struct Entry {
    pub line: usize,
    pub cmd: String,
    pub ok: bool,
    pub value: Value,
    pub expected: Option<String>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn status(&self) -> Status {
        if self.entries.iter().any(|e| e.error.is_some()) {
            Status::Error
        } else if self.entries.iter().any(|e| !e.ok) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn to_json(&self) -> Value {
        let results: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let mut v = json!({ "line": e.line, "cmd": e.cmd, "ok": e.ok, "value": e.value });
                if let Some(x) = &e.expected {
                    v["expected"] = json!(x);
                }
                if let Some(x) = &e.error {
                    v["error"] = json!(x);
                }
                v
            })
            .collect();
        json!({ "status": self.status().name(), "results": results })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let tag = match (&e.error, e.ok) {
                (Some(_), _) => "ERROR",
                (None, true) => "ok",
                (None, false) => "FAIL",
            };
            let _ = writeln!(out, "{tag:<5} {:>3}: {}", e.line, e.cmd);
            if let Some(err) = &e.error {
                let _ = writeln!(out, "      {err}");
            } else {
                let _ = writeln!(out, "      = {}", plain(&e.value));
                if let (false, Some(x)) = (e.ok, &e.expected) {
                    let _ = writeln!(out, "      expected {x}");
                }
            }
        }
        let _ = writeln!(out, "status: {}", self.status().name());
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// What a query produced, in a form that checks can compare against.
enum Actual {
    Form(Multivector),
    Approx(f64),
    Matrix(Matrix),
    List(Vec<Scalar>),
    Record(Vec<(String, Multivector)>),
    Keyword(String),
}

struct Outcome {
    value: Value,
    actual: Actual,
    /// Secondary keyword facet (`stable`/`unstable` for `stab`).
    keyword: Option<String>,
}

impl Outcome {
    fn new(value: Value, actual: Actual) -> Self {
        Outcome { value, actual, keyword: None }
    }
}

struct GenEntry {
    data: GenStructureData,
}

struct BundleEntry {
    data: String,
    theta: usize,
}

/// Names bound to values; a failed declaration binds an error message.
struct Env {
    space: Space,
    field: u32,
    seed: u64,
    forms: HashMap<String, Result<Multivector, String>>,
    lies: HashMap<String, Result<LieAlgebraFrame, String>>,
    spinors: HashMap<String, Result<Spinor, String>>,
    gendata: HashMap<String, Result<GenEntry, String>>,
    bundles: HashMap<String, Result<BundleEntry, String>>,
}

fn lookup<'a, T>(map: &'a HashMap<String, Result<T, String>>, name: &str) -> Result<&'a T> {
    match map.get(name) {
        Some(Ok(x)) => Ok(x),
        Some(Err(_)) => bail!("`{name}` failed to evaluate"),
        None => bail!("unknown identifier `{name}`"),
    }
}

/// Runs every statement; errors are recorded per statement and do not stop execution.
pub fn execute(program: &Program, opts: &Options) -> Report {
    let short = program.dim().is_some_and(|n| n <= 9);
    let mut report = Report::default();
    let mut field = opts.field;
    for s in &program.stmts {
        if let StmtKind::Field(d) = s.kind {
            match validate_field(d) {
                Ok(d) => field = d,
                Err(e) => report.entries.push(error_entry(s, short, e.to_string())),
            }
        }
    }
    if let Err(e) = validate_field(field) {
        report.entries.push(Entry {
            line: 0,
            cmd: format!("--field {field}"),
            ok: false,
            value: Value::Null,
            expected: None,
            error: Some(e.to_string()),
        });
        return report;
    }
    let mut env = Env {
        space: SpaceDescriptor::euclidean(program.dim().unwrap_or(1)),
        field,
        seed: opts.seed,
        forms: HashMap::new(),
        lies: HashMap::new(),
        spinors: HashMap::new(),
        gendata: HashMap::new(),
        bundles: HashMap::new(),
    };
    for s in &program.stmts {
        if let Some(entry) = env.statement(s, short) {
            report.entries.push(entry);
        }
    }
    report
}

fn error_entry(s: &Stmt, short: bool, msg: String) -> Entry {
    Entry { line: s.pos.line, cmd: s.kind.render(short), ok: false, value: Value::Null, expected: None, error: Some(msg) }
}

fn chain(e: &anyhow::Error) -> String {
    format!("{e:#}")
}

impl Env {
    fn dim(&self) -> usize {
        self.space.dim
    }

    fn statement(&mut self, s: &Stmt, short: bool) -> Option<Entry> {
        let fail = |e: &anyhow::Error| error_entry(s, short, chain(e));
        fn bind<T>(map: &mut HashMap<String, Result<T, String>>, name: &str, v: Result<T>) -> Option<anyhow::Error> {
            let (bound, err) = match v {
                Ok(x) => (Ok(x), None),
                Err(e) => (Err(chain(&e)), Some(e)),
            };
            map.insert(name.to_string(), bound);
            err
        }
        match &s.kind {
            StmtKind::Space(_) | StmtKind::Field(_) => None,
            StmtKind::Form { name, expr } => {
                let v = self.eval(expr);
                bind(&mut self.forms, name, v).map(|e| fail(&e))
            }
            StmtKind::Lie { name, body } => {
                let v = self.lie(body);
                bind(&mut self.lies, name, v).map(|e| fail(&e))
            }
            StmtKind::Spinor { name, body } => {
                let v = self.spinor(body);
                bind(&mut self.spinors, name, v).map(|e| fail(&e))
            }
            StmtKind::GenData { name, frame, opts } => {
                let v = self.gendata(frame, opts);
                bind(&mut self.gendata, name, v).map(|e| fail(&e))
            }
            StmtKind::Bundle { name, data, theta, fields } => {
                let result = self.bundle(data, *theta, fields);
                let (entry, bound) = match result {
                    Ok((entry, b)) => (entry, Ok(b)),
                    Err(e) => (Some(fail(&e)), Err(chain(&e))),
                };
                self.bundles.insert(name.clone(), bound);
                entry.map(|mut e| {
                    e.line = s.pos.line;
                    e.cmd = s.kind.render(short);
                    e
                })
            }
            StmtKind::Cmd(q) => Some(match self.query(q) {
                Ok(out) => Entry { line: s.pos.line, cmd: s.kind.render(short), ok: true, value: out.value, expected: None, error: None },
                Err(e) => error_entry(s, short, chain(&e)),
            }),
            StmtKind::Check { query, op, expected } => {
                let run = || -> Result<(Outcome, bool)> {
                    let out = self.query(query)?;
                    let ok = self.compare(&out, *op, expected)?;
                    Ok((out, ok))
                };
                Some(match run() {
                    Ok((out, ok)) => Entry {
                        line: s.pos.line,
                        cmd: s.kind.render(short),
                        ok,
                        value: out.value,
                        expected: Some(expected.render(short)),
                        error: None,
                    },
                    Err(e) => error_entry(s, short, chain(&e)),
                })
            }
        }
    }

    fn scalar(&self, x: Scalar) -> Multivector {
        Multivector::scalar(&self.space, x)
    }

    fn eval(&self, e: &Expr) -> Result<Multivector> {
        Ok(match e {
            Expr::Int(s) => self.scalar(Scalar::parse(s)?),
            Expr::Surd(d) => {
                ensure!(*d == self.field, "s{d} is not in the working field Q(sqrt {})", self.field);
                self.scalar(Scalar::sqrt_of(*d))
            }
            Expr::Blade(idx) => {
                let mut sorted = idx.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() < idx.len() {
                    Multivector::zero(&self.space)
                } else {
                    Multivector::basis(&self.space, idx)
                }
            }
            Expr::Ident(name) => lookup(&self.forms, name)?.clone(),
            Expr::Neg(x) => -&self.eval(x)?,
            Expr::Call(Func::Star, x) => self.eval(x)?.hodge_star()?,
            Expr::Call(Func::Sigma, x) => self.eval(x)?.sigma(),
            Expr::Bin(op, a, b) => {
                let (a, b) = (self.eval(a)?, self.eval(b)?);
                match op {
                    BinOp::Add => &a + &b,
                    BinOp::Sub => &a - &b,
                    BinOp::Wedge => a.try_wedge(&b)?,
                    BinOp::Mul => match (as_scalar(&a), as_scalar(&b)) {
                        (Some(s), _) => b.scale(&s),
                        (_, Some(s)) => a.scale(&s),
                        _ => bail!("`*` needs a scalar factor; use `^` for the wedge product"),
                    },
                    BinOp::Div => {
                        let s = as_scalar(&b).context("divisor must be a scalar")?;
                        a.scale(&s.try_inv()?)
                    }
                }
            }
        })
    }

    fn eval_scalar(&self, e: &Expr) -> Result<Scalar> {
        as_scalar(&self.eval(e)?).with_context(|| format!("`{}` is not a scalar", e.render(self.dim() <= 9)))
    }

    fn lie(&self, body: &LieBody) -> Result<LieAlgebraFrame> {
        let n = self.dim();
        let frame = match body {
            LieBody::Named(b) => match b.as_str() {
                "su3" => {
                    ensure!(n == 8, "su3 needs space 8, not {n}");
                    su3_frame().clone()
                }
                "su2" => {
                    ensure!(n == 3, "su2 needs space 3, not {n}");
                    LieAlgebraFrame::su2()
                }
                "abelian" => LieAlgebraFrame::abelian(n),
                form => LieAlgebraFrame::from_three_form(lookup(&self.forms, form)?)?,
            },
            LieBody::Entries(entries) => {
                let mut diffs = Vec::new();
                let mut brackets = Vec::new();
                for entry in entries {
                    match entry {
                        LieEntry::D(k, x) => diffs.push((*k, self.eval(x)?)),
                        LieEntry::Bracket(i, j, x) => {
                            let v = self.eval(x)?;
                            ensure!(v.is_zero() || v.is_homogeneous_of(1), "[e{i}, e{j}] must be a 1-form");
                            for (b, c) in v.terms() {
                                brackets.push((*i, *j, b.indices()[0], c.clone()));
                            }
                        }
                    }
                }
                ensure!(diffs.is_empty() || brackets.is_empty(), "mix of `d` and bracket entries");
                if brackets.is_empty() {
                    LieAlgebraFrame::from_differentials(n, &diffs)?
                } else {
                    LieAlgebraFrame::from_brackets(n, &brackets)?
                }
            }
        };
        if let Some((i, j, k)) = frame.jacobi_violation() {
            bail!("Jacobi identity fails on (e{i}, e{j}, e{k})");
        }
        Ok(frame)
    }

    fn spinor(&self, body: &SpinorBody) -> Result<Spinor> {
        let n = self.dim();
        ensure!(n == 7 || n == 8, "spinors need space 7 or 8, not {n}");
        let len = MatrixRep::get(n).spinor_len();
        match body {
            SpinorBody::Basis(k) => {
                ensure!(*k < len, "basis index {k} outside 0..{len}");
                Ok(Spinor::basis(len, *k))
            }
            SpinorBody::Entries(xs) => {
                ensure!(xs.len() == len, "spinor needs {len} entries, got {}", xs.len());
                Ok(Spinor(xs.iter().map(|x| self.eval_scalar(x)).collect::<Result<_>>()?))
            }
        }
    }

    fn gendata(&self, frame: &str, opts: &[(String, Arg)]) -> Result<GenEntry> {
        let frame = lookup(&self.lies, frame)?.clone();
        let get = |key: &str| opts.iter().find(|(k, _)| k == key).map(|(_, v)| v);
        let spinor = |key: &str| -> Result<Spinor> {
            match get(key) {
                Some(Arg::Word(name)) => Ok(lookup(&self.spinors, name)?.clone()),
                _ => bail!("missing `{key}=`"),
            }
        };
        let parity = match get("parity") {
            Some(Arg::Word(w)) if w == "odd" => Parity::Odd,
            _ => Parity::Even,
        };
        let mut data = GenStructureData::new(frame, spinor("plus")?, spinor("minus")?, parity)?;
        for (key, arg) in opts {
            let Arg::Expr(e) = arg else { continue };
            match key.as_str() {
                "H" => data.h = self.eval(e)?,
                "b" => data.b = self.eval(e)?,
                "lambda" => data.lambda = self.eval_scalar(e)?,
                "u" => data.u = self.eval_scalar(e)?,
                _ => {}
            }
        }
        data.validate()?;
        Ok(GenEntry { data })
    }

    fn bundle(&self, data: &str, theta: usize, fields: &[(String, Expr)]) -> Result<(Option<Entry>, BundleEntry)> {
        let g = &lookup(&self.gendata, data)?.data;
        let b = bundle_data(&g.frame, theta, &g.torsion())?;
        let entry = if fields.is_empty() {
            None
        } else {
            let mut ok = true;
            for (key, expr) in fields {
                let have = match key.as_str() {
                    "F" => &b.f,
                    "Ft" => &b.ft,
                    _ => &b.cal_t,
                };
                ok &= *have == self.eval(expr)?;
            }
            let short = self.dim() <= 9;
            let expected: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={}", v.render(short))).collect();
            let value = json!({ "F": b.f.to_string(), "Ft": b.ft.to_string(), "calT": b.cal_t.to_string() });
            Some(Entry { line: 0, cmd: String::new(), ok, value, expected: Some(expected.join(" ")), error: None })
        };
        Ok((entry, BundleEntry { data: data.to_string(), theta }))
    }

    fn form_arg(&self, q: &Query, k: usize) -> Result<Multivector> {
        match q.args.get(k) {
            Some(Arg::Expr(e)) => self.eval(e),
            _ => bail!("missing form argument"),
        }
    }

    fn word_arg<'a>(&self, q: &'a Query, k: usize) -> Result<&'a str> {
        match q.args.get(k) {
            Some(Arg::Word(w)) => Ok(w),
            _ => bail!("missing name argument"),
        }
    }

    fn frame_arg(&self, q: &Query, k: usize) -> Result<&LieAlgebraFrame> {
        lookup(&self.lies, self.word_arg(q, k)?)
    }

    fn named<'a>(&self, q: &'a Query, key: &str) -> Option<&'a Arg> {
        q.named.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    fn form_outcome(x: Multivector) -> Outcome {
        Outcome::new(json!(x.to_string()), Actual::Form(x))
    }

    fn query(&self, q: &Query) -> Result<Outcome> {
        Ok(match q.cmd.as_str() {
            "d" => {
                let f = self.frame_arg(q, 0)?;
                let x = self.form_arg(q, 1)?;
                Self::form_outcome(f.d(&x))
            }
            "star" => Self::form_outcome(self.form_arg(q, 0)?.hodge_star()?),
            "box" => {
                let x = self.form_arg(q, 0)?;
                let b = match self.named(q, "b") {
                    Some(Arg::Expr(e)) => self.eval(e)?,
                    _ => Multivector::zero(&self.space),
                };
                Self::form_outcome(box_operator(&x, &b)?)
            }
            "ricci" => {
                let f = self.frame_arg(q, 0)?;
                let ric = curvature_ricci(f, &levi_civita(f)).ricci;
                Outcome::new(json!(ric.to_strings()), Actual::Matrix(ric))
            }
            "scal" => {
                let f = self.frame_arg(q, 0)?;
                let s = curvature_ricci(f, &levi_civita(f)).scal;
                Outcome::new(json!(s.to_string()), Actual::Form(self.scalar(s)))
            }
            "stab" => {
                let x = self.form_arg(q, 0)?;
                let algebra = match self.named(q, "algebra") {
                    Some(Arg::Word(w)) if w == "sonn" => Algebra::SoNnR,
                    _ => Algebra::Gl,
                };
                let r = stabilizer_dim(&x, algebra)?;
                let keyword = Some(if r.stable { "stable" } else { "unstable" }.to_string());
                Outcome { value: r.to_json(), actual: Actual::Form(self.scalar(Scalar::from_int(r.stab_dim as i64))), keyword }
            }
            "classify" => {
                let x = self.form_arg(q, 0)?;
                match classify_isometry_3form(&x)? {
                    None => Outcome::new(json!("none"), Actual::Keyword("none".into())),
                    Some(c) => {
                        let int = |v: i64| self.scalar(Scalar::from_int(v));
                        let mut record = vec![
                            ("kind".to_string(), int(c.kind as i64)),
                            ("det_sign".to_string(), int(c.det_sign as i64)),
                            ("center_dim".to_string(), int(c.center_dim as i64)),
                            ("killing_rank".to_string(), int(c.killing_rank as i64)),
                        ];
                        let mut value = json!({ "kind": c.kind, "det_sign": c.det_sign, "center_dim": c.center_dim, "killing_rank": c.killing_rank });
                        if let Some((a, b)) = c.lambda_pair {
                            value["lambda_pair"] = json!([a.to_string(), b.to_string()]);
                            record.push(("lambda1".into(), self.scalar(a)));
                            record.push(("lambda2".into(), self.scalar(b)));
                        }
                        Outcome::new(value, Actual::Record(record))
                    }
                }
            }
            "tdualize" => {
                let b = lookup(&self.bundles, self.word_arg(q, 0)?)?;
                let g = &lookup(&self.gendata, &b.data)?.data;
                let src = bare_structure(g)?;
                let dual = tdualize(&src.frame, b.theta, &src.rho, &src.torsion)?;
                let fs = FormStructure {
                    frame: dual.frame.clone(),
                    rho: dual.rho.clone(),
                    rho_hat: swap_fibre(b.theta, &src.rho_hat),
                    torsion: dual.torsion.clone(),
                    parity: src.parity.flip(),
                };
                let status = integrability_status(&check_integrability(&fs, &g.lambda));
                let value = json!({
                    "status": status,
                    "differentials": dual.frame.differential_lines(),
                    "rho": dual.rho.to_string(),
                    "torsion": dual.torsion.to_string(),
                });
                Outcome::new(value, Actual::Keyword(status.into()))
            }
            "betti" => {
                let b = betti_numbers(self.frame_arg(q, 0)?);
                Outcome::new(json!(b), Actual::List(b.iter().map(|&x| Scalar::from_int(x as i64)).collect()))
            }
            "torsion-classes" => {
                let f = self.frame_arg(q, 0)?;
                let phi = self.form_arg(q, 1)?;
                let t = g2_torsion_classes(f, &phi)?;
                let value = json!({ "lambda": t.lambda.to_string(), "theta": t.theta.to_string(), "xi": t.xi.to_string(), "tau": t.tau.to_string() });
                let record = vec![("lambda".into(), self.scalar(t.lambda)), ("theta".into(), t.theta), ("xi".into(), t.xi), ("tau".into(), t.tau)];
                Outcome::new(value, Actual::Record(record))
            }
            "dump-rep" => {
                let n = match q.args.first() {
                    Some(Arg::Int(n)) => *n,
                    _ => bail!("missing dimension"),
                };
                ensure!(n == 7 || n == 8, "representations exist for 7 and 8, not {n}");
                let gammas: Vec<Value> = MatrixRep::get(n).gammas().iter().map(|m| json!(m.to_strings())).collect();
                Outcome::new(Value::Array(gammas), Actual::Keyword(String::new()))
            }
            "integrability" => {
                let g = &lookup(&self.gendata, self.word_arg(q, 0)?)?.data;
                let r = check_data(g)?;
                let status = integrability_status(&r);
                let violations: Vec<Value> =
                    r.violations().iter().map(|v| json!({ "equation": v.equation, "degree": v.degree, "value": v.value.to_string() })).collect();
                let value = json!({ "status": status, "violations": violations, "dT": r.d_torsion.to_string() });
                Outcome::new(value, Actual::Keyword(status.into()))
            }
            "killing" => {
                let g = &lookup(&self.gendata, self.word_arg(q, 0)?)?.data;
                let status = if g.killing_check()?.ok() { "ok" } else { "fails" };
                Outcome::new(json!(status), Actual::Keyword(status.into()))
            }
            "calibrate" => {
                let x = self.form_arg(q, 0)?;
                ensure!(x.is_homogeneous_of(3), "calibrate needs a 3-form");
                let samples = match self.named(q, "samples") {
                    Some(Arg::Int(n)) => *n,
                    _ => 10_000,
                };
                let m = calibration_sample(&x, samples, self.seed);
                Outcome::new(json!(m), Actual::Approx(m))
            }
            other => bail!("unknown command `{other}`"),
        })
    }

    fn compare(&self, out: &Outcome, op: CmpOp, expected: &Expected) -> Result<bool> {
        let eq_only = || -> Result<()> {
            ensure!(op == CmpOp::Eq, "`<=` applies only to numbers");
            Ok(())
        };
        Ok(match (expected, &out.actual) {
            (Expected::Keyword(k), _) => {
                eq_only()?;
                let have = match (&out.actual, &out.keyword) {
                    (_, Some(w)) => w,
                    (Actual::Keyword(w), None) => w,
                    _ => bail!("this command does not produce `{k}`-style results"),
                };
                have == k
            }
            (Expected::Expr(e), Actual::Form(x)) => {
                let want = self.eval(e)?;
                match op {
                    CmpOp::Eq => *x == want,
                    CmpOp::Le => {
                        let (a, b) = (as_scalar(x).context("left side is not a number")?, as_scalar(&want).context("right side is not a number")?);
                        (&a - &b).signum() <= 0
                    }
                }
            }
            (Expected::Expr(e), Actual::Approx(x)) => {
                ensure!(op == CmpOp::Le, "sampled values compare with `<=`");
                *x <= self.eval_scalar(e)?.approx()
            }
            (Expected::Diag(xs), Actual::Matrix(m)) => {
                eq_only()?;
                ensure!(xs.len() == m.rows(), "diag has {} entries, matrix has {} rows", xs.len(), m.rows());
                let d: Vec<Scalar> = xs.iter().map(|x| self.eval_scalar(x)).collect::<Result<_>>()?;
                (0..m.rows()).all(|i| (0..m.cols()).all(|j| *m.get(i, j) == if i == j { d[i].clone() } else { Scalar::zero() }))
            }
            (Expected::List(xs), Actual::List(have)) => {
                eq_only()?;
                let want: Vec<Scalar> = xs.iter().map(|x| self.eval_scalar(x)).collect::<Result<_>>()?;
                want == *have
            }
            (Expected::Record(kv), Actual::Record(have)) => {
                eq_only()?;
                let mut ok = true;
                for (k, e) in kv {
                    let (_, v) = have.iter().find(|(h, _)| h == k).with_context(|| format!("no field `{k}`"))?;
                    ok &= *v == self.eval(e)?;
                }
                ok
            }
            (Expected::Record(_), Actual::Keyword(_)) => {
                eq_only()?;
                false
            }
            _ => bail!("expected value `{}` does not fit this command", expected.render(self.dim() <= 9)),
        })
    }
}

fn as_scalar(x: &Multivector) -> Option<Scalar> {
    if x.is_zero() {
        Some(Scalar::zero())
    } else if x.is_homogeneous_of(0) {
        Some(x.coeff_of(&[]))
    } else {
        None
    }
}

fn integrability_status(r: &exform_core::generalized::IntegrabilityReport) -> &'static str {
    if r.strong_ok() {
        "strong"
    } else if r.weak_ok() {
        "weak"
    } else {
        "fails"
    }
}

//! Syntax tree for `.exf` programs and its canonical printer.

use std::fmt;

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Wedge,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Wedge => "^",
        }
    }

    fn prec(self) -> u8 {
        match self {
            BinOp::Add | BinOp::Sub => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Star,
    Sigma,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Star => "star",
            Func::Sigma => "sigma",
        }
    }
}

/// Form expression. Scalars are degree-0 forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(String),
    /// `s<d>`, the square root of `d`.
    Surd(u32),
    Blade(Vec<usize>),
    Ident(String),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Bin(op, ..) => op.prec(),
            Expr::Neg(_) => 3,
            _ => 4,
        }
    }

    /// Prints with blades in shorthand when every index fits in one digit.
    pub fn render(&self, shorthand: bool) -> String {
        let mut out = String::new();
        self.write(&mut out, shorthand);
        out
    }

    fn write(&self, out: &mut String, short: bool) {
        match self {
            Expr::Int(s) => out.push_str(s),
            Expr::Surd(d) => out.push_str(&format!("s{d}")),
            Expr::Blade(idx) => {
                if short && !idx.is_empty() && idx.iter().all(|&i| i <= 9) {
                    out.push('e');
                    for i in idx {
                        out.push_str(&i.to_string());
                    }
                } else {
                    let list: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                    out.push_str(&format!("e{{{}}}", list.join(",")));
                }
            }
            Expr::Ident(name) => out.push_str(name),
            Expr::Neg(x) => {
                out.push('-');
                x.write_child(out, short, 3);
            }
            Expr::Bin(op, a, b) => {
                a.write_child(out, short, op.prec());
                if op.prec() == 1 {
                    out.push_str(&format!(" {} ", op.symbol()));
                } else {
                    out.push_str(op.symbol());
                }
                b.write_child(out, short, op.prec() + 1);
            }
            Expr::Call(func, x) => {
                out.push_str(func.name());
                out.push('(');
                x.write(out, short);
                out.push(')');
            }
        }
    }

    fn write_child(&self, out: &mut String, short: bool, min: u8) {
        if self.prec() < min {
            out.push('(');
            self.write(out, short);
            out.push(')');
        } else {
            self.write(out, short);
        }
    }
}

/// Keyword-valued or expression-valued argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Arg {
    Expr(Expr),
    Word(String),
    Int(usize),
}

impl Arg {
    fn render(&self, short: bool) -> String {
        match self {
            Arg::Expr(e) => e.render(short),
            Arg::Word(w) => w.clone(),
            Arg::Int(n) => n.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieEntry {
    /// `d e<k> = expr`
    D(usize, Expr),
    /// `[e<i>, e<j>] = expr`
    Bracket(usize, usize, Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieBody {
    /// `su3`, `su2`, `abelian`, or a declared 3-form.
    Named(String),
    Entries(Vec<LieEntry>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpinorBody {
    Basis(usize),
    Entries(Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub cmd: String,
    pub args: Vec<Arg>,
    pub named: Vec<(String, Arg)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Eq,
    Le,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expected {
    Expr(Expr),
    Diag(Vec<Expr>),
    List(Vec<Expr>),
    Record(Vec<(String, Expr)>),
    Keyword(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtKind {
    Space(usize),
    Field(u32),
    Lie { name: String, body: LieBody },
    Form { name: String, expr: Expr },
    Spinor { name: String, body: SpinorBody },
    Bundle { name: String, data: String, theta: usize, fields: Vec<(String, Expr)> },
    GenData { name: String, frame: String, opts: Vec<(String, Arg)> },
    Cmd(Query),
    Check { query: Query, op: CmpOp, expected: Expected },
}

/// A statement and where it starts. Equality ignores the position.
#[derive(Debug, Clone)]
pub struct Stmt {
    pub kind: StmtKind,
    pub pos: Pos,
}

impl PartialEq for Stmt {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Stmt {}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Program {
    pub stmts: Vec<Stmt>,
}

impl Program {
    pub fn dim(&self) -> Option<usize> {
        self.stmts.iter().find_map(|s| match s.kind {
            StmtKind::Space(n) => Some(n),
            _ => None,
        })
    }
}

fn render_query(q: &Query, short: bool) -> String {
    let mut parts = vec![q.cmd.clone()];
    parts.extend(q.args.iter().map(|a| a.render(short)));
    parts.extend(q.named.iter().map(|(k, v)| format!("{k}={}", v.render(short))));
    parts.join(" ")
}

fn render_list(xs: &[Expr], short: bool) -> String {
    xs.iter().map(|x| x.render(short)).collect::<Vec<_>>().join(", ")
}

impl StmtKind {
    /// Canonical source text; `shorthand` is whether `e147`-style blades are legal.
    pub fn render(&self, short: bool) -> String {
        match self {
            StmtKind::Space(n) => format!("space {n}"),
            StmtKind::Field(d) => format!("field {d}"),
            StmtKind::Lie { name, body: LieBody::Named(b) } => format!("lie {name} = {b}"),
            StmtKind::Lie { name, body: LieBody::Entries(es) } => {
                let blade = |i: usize| Expr::Blade(vec![i]).render(short);
                let items: Vec<String> = es
                    .iter()
                    .map(|e| match e {
                        LieEntry::D(k, x) => format!("d {} = {}", blade(*k), x.render(short)),
                        LieEntry::Bracket(i, j, x) => format!("[{}, {}] = {}", blade(*i), blade(*j), x.render(short)),
                    })
                    .collect();
                format!("lie {name} {{ {} }}", items.join("; "))
            }
            StmtKind::Form { name, expr } => format!("form {name} = {}", expr.render(short)),
            StmtKind::Spinor { name, body: SpinorBody::Basis(k) } => format!("spinor {name} = basis({k})"),
            StmtKind::Spinor { name, body: SpinorBody::Entries(xs) } => format!("spinor {name} = [{}]", render_list(xs, short)),
            StmtKind::Bundle { name, data, theta, fields } => {
                let mut s = format!("bundle {name} = {data} theta={}", Expr::Blade(vec![*theta]).render(short));
                for (k, v) in fields {
                    s.push_str(&format!(" {k}={}", v.render(short)));
                }
                s
            }
            StmtKind::GenData { name, frame, opts } => {
                let mut s = format!("gendata {name} on {frame}");
                for (k, v) in opts {
                    s.push_str(&format!(" {k}={}", v.render(short)));
                }
                s
            }
            StmtKind::Cmd(q) => format!("cmd {}", render_query(q, short)),
            StmtKind::Check { query, op, expected } => {
                let op = match op {
                    CmpOp::Eq => "==",
                    CmpOp::Le => "<=",
                };
                format!("check {} {op} {}", render_query(query, short), expected.render(short))
            }
        }
    }
}

impl Expected {
    pub fn render(&self, short: bool) -> String {
        match self {
            Expected::Expr(e) => e.render(short),
            Expected::Diag(xs) => format!("diag({})", render_list(xs, short)),
            Expected::List(xs) => format!("[{}]", render_list(xs, short)),
            Expected::Record(kv) => {
                let items: Vec<String> = kv.iter().map(|(k, v)| format!("{k}={}", v.render(short))).collect();
                format!("{{{}}}", items.join(", "))
            }
            Expected::Keyword(w) => w.clone(),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let short = self.dim().is_some_and(|n| n <= 9);
        for s in &self.stmts {
            writeln!(f, "{}", s.kind.render(short))?;
        }
        Ok(())
    }
}

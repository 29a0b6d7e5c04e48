//! Tokenizer and recursive-descent parser.

use std::collections::HashMap;
use std::fmt;

use crate::ast::*;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: Pos, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    /// `e147` keeps its digits until the dimension is known.
    Short(String),
    Blade(Vec<usize>),
    Surd(u32),
    Sym(&'static str),
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Short(d) => write!(f, "`e{d}`"),
            Tok::Blade(_) => write!(f, "blade"),
            Tok::Surd(d) => write!(f, "`s{d}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Newline => write!(f, "end of line"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

const SYMBOLS: [&str; 16] = ["==", "<=", "+", "-", "*", "/", "^", "(", ")", "[", "]", "{", "}", ",", "=", ";"];
const HYPHENATED: [&str; 2] = ["torsion-classes", "dump-rep"];

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let word_char = |c: char| c.is_ascii_alphanumeric() || c == '_';
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let start = i;
        if c == '\n' {
            out.push((Tok::Newline, pos));
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && word_char(chars[i]) {
                i += 1;
            }
            let mut word: String = chars[start..i].iter().collect();
            for h in HYPHENATED {
                let rest: String = chars[start..chars.len().min(start + h.len())].iter().collect();
                if rest == h && chars.get(start + h.len()).is_none_or(|&c| !word_char(c)) {
                    word = h.to_string();
                    i = start + h.len();
                }
            }
            let digits = |w: &str| w.len() > 1 && w[1..].chars().all(|c| c.is_ascii_digit());
            if word == "e" && chars.get(i) == Some(&'{') {
                i += 1;
                let mut idx = Vec::new();
                let mut num = String::new();
                loop {
                    match chars.get(i) {
                        Some(d) if d.is_ascii_digit() => num.push(*d),
                        Some(',') | Some('}') => {
                            if !num.is_empty() {
                                idx.push(num.parse().map_err(|_| ParseError { pos, msg: "blade index too large".into() })?);
                                num.clear();
                            } else if chars[i] == ',' {
                                return err(pos, "empty index in blade");
                            }
                            if chars[i] == '}' {
                                i += 1;
                                break;
                            }
                        }
                        Some(' ') => {}
                        _ => return err(pos, "unterminated blade `e{...}`"),
                    }
                    i += 1;
                }
                out.push((Tok::Blade(idx), pos));
            } else if word.starts_with('e') && digits(&word) {
                out.push((Tok::Short(word[1..].to_string()), pos));
            } else if word.starts_with('s') && digits(&word) {
                let d = word[1..].parse().map_err(|_| ParseError { pos, msg: "field tag too large".into() })?;
                out.push((Tok::Surd(d), pos));
            } else {
                out.push((Tok::Ident(word), pos));
            }
        } else if let Some(sym) = SYMBOLS.iter().find(|s| chars[i..].iter().take(s.len()).copied().eq(s.chars())) {
            i += sym.len();
            out.push((Tok::Sym(sym), pos));
        } else {
            return err(pos, format!("unexpected character `{c}`"));
        }
        col += i - start;
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Form,
    Lie,
    Spinor,
    GenData,
    Bundle,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Form => "form",
            Kind::Lie => "Lie algebra",
            Kind::Spinor => "spinor",
            Kind::GenData => "gendata",
            Kind::Bundle => "bundle",
        }
    }
}

#[derive(Clone, Copy)]
enum ArgKind {
    Of(Kind),
    Form,
    Int,
    Word(&'static [&'static str]),
}

struct Signature {
    name: &'static str,
    positional: &'static [ArgKind],
    named: &'static [(&'static str, ArgKind)],
}

const COMMANDS: &[Signature] = &[
    Signature { name: "d", positional: &[ArgKind::Of(Kind::Lie), ArgKind::Form], named: &[] },
    Signature { name: "star", positional: &[ArgKind::Form], named: &[] },
    Signature { name: "box", positional: &[ArgKind::Form], named: &[("b", ArgKind::Form)] },
    Signature { name: "ricci", positional: &[ArgKind::Of(Kind::Lie)], named: &[] },
    Signature { name: "scal", positional: &[ArgKind::Of(Kind::Lie)], named: &[] },
    Signature { name: "stab", positional: &[ArgKind::Form], named: &[("algebra", ArgKind::Word(&["gl", "sonn"]))] },
    Signature { name: "classify", positional: &[ArgKind::Form], named: &[] },
    Signature { name: "tdualize", positional: &[ArgKind::Of(Kind::Bundle)], named: &[] },
    Signature { name: "betti", positional: &[ArgKind::Of(Kind::Lie)], named: &[] },
    Signature { name: "torsion-classes", positional: &[ArgKind::Of(Kind::Lie), ArgKind::Form], named: &[] },
    Signature { name: "dump-rep", positional: &[ArgKind::Int], named: &[] },
    Signature { name: "integrability", positional: &[ArgKind::Of(Kind::GenData)], named: &[] },
    Signature { name: "killing", positional: &[ArgKind::Of(Kind::GenData)], named: &[] },
    Signature { name: "calibrate", positional: &[ArgKind::Form], named: &[("samples", ArgKind::Int)] },
];

const KEYWORDS: &[&str] = &["none", "strong", "weak", "fails", "ok", "stable", "unstable"];
const BUILTIN_LIE: &[&str] = &["su3", "su2", "abelian"];
const RESERVED: &[&str] =
    &["space", "field", "lie", "form", "spinor", "bundle", "gendata", "cmd", "check", "on", "basis", "diag", "star", "sigma", "even", "odd"];
const GENDATA_OPTS: &[(&str, ArgKind)] = &[
    ("plus", ArgKind::Of(Kind::Spinor)),
    ("minus", ArgKind::Of(Kind::Spinor)),
    ("parity", ArgKind::Word(&["even", "odd"])),
    ("H", ArgKind::Form),
    ("b", ArgKind::Form),
    ("lambda", ArgKind::Form),
    ("u", ArgKind::Form),
];
const BUNDLE_FIELDS: &[&str] = &["F", "Ft", "calT"];

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
    dim: Option<usize>,
    symbols: HashMap<String, Kind>,
}

/// Parses a program; names are resolved and blade indices checked against
/// the declared space.
pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let mut p = Parser { toks: lex(text)?, i: 0, dim: None, symbols: HashMap::new() };
    let mut stmts = Vec::new();
    loop {
        while p.peek() == &Tok::Newline || p.peek() == &Tok::Sym(";") {
            p.i += 1;
        }
        if p.peek() == &Tok::Eof {
            break;
        }
        stmts.push(p.statement()?);
        match p.peek() {
            Tok::Newline | Tok::Sym(";") | Tok::Eof => {}
            t => return err(p.pos(), format!("unexpected {t} after statement")),
        }
    }
    Ok(Program { stmts })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.i].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.i + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.i].clone();
        if t.0 != Tok::Eof {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Tok::Sym(s) if *s == sym) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<(), ParseError> {
        if self.eat(sym) {
            Ok(())
        } else {
            err(self.pos(), format!("expected `{sym}`, found {}", self.peek()))
        }
    }

    fn skip_newlines(&mut self) {
        while self.peek() == &Tok::Newline {
            self.i += 1;
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        match self.next() {
            (Tok::Ident(s), pos) => Ok((s, pos)),
            (t, pos) => err(pos, format!("expected a name, found {t}")),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        match self.next() {
            (Tok::Ident(s), _) if s == word => Ok(()),
            (t, pos) => err(pos, format!("expected `{word}`, found {t}")),
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        match self.next() {
            (Tok::Int(s), pos) => s.parse().or_else(|_| err(pos, "integer too large")),
            (t, pos) => err(pos, format!("expected an integer, found {t}")),
        }
    }

    fn declare(&mut self, name: &str, pos: Pos, kind: Kind) -> Result<(), ParseError> {
        let reserved = RESERVED.contains(&name) || KEYWORDS.contains(&name) || BUILTIN_LIE.contains(&name) || COMMANDS.iter().any(|c| c.name == name);
        if reserved {
            return err(pos, format!("`{name}` is reserved"));
        }
        if self.symbols.insert(name.to_string(), kind).is_some() {
            return err(pos, format!("redefinition of `{name}`"));
        }
        Ok(())
    }

    fn resolve(&mut self, kind: Kind) -> Result<String, ParseError> {
        let (name, pos) = self.ident()?;
        match self.symbols.get(&name) {
            Some(k) if *k == kind => Ok(name),
            Some(k) => err(pos, format!("`{name}` is a {}, expected a {}", k.name(), kind.name())),
            None => err(pos, format!("unknown identifier `{name}`")),
        }
    }

    fn need_dim(&self, pos: Pos) -> Result<usize, ParseError> {
        self.dim.ok_or(ParseError { pos, msg: "blade used before `space` is declared".into() })
    }

    fn blade(&self, tok: &Tok, pos: Pos) -> Result<Vec<usize>, ParseError> {
        let n = self.need_dim(pos)?;
        let idx: Vec<usize> = match tok {
            Tok::Short(digits) => {
                if n > 9 {
                    return err(pos, format!("shorthand blade `e{digits}` is ambiguous in dimension {n}; write e{{...}}"));
                }
                digits.chars().map(|c| c.to_digit(10).unwrap_or(0) as usize).collect()
            }
            Tok::Blade(idx) => idx.clone(),
            _ => unreachable!(),
        };
        if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > n) {
            return err(pos, format!("blade index {bad} outside 1..={n}"));
        }
        Ok(idx)
    }

    fn single_index(&mut self) -> Result<usize, ParseError> {
        let (tok, pos) = self.next();
        if !matches!(tok, Tok::Short(_) | Tok::Blade(_)) {
            return err(pos, format!("expected a basis vector e<k>, found {tok}"));
        }
        match self.blade(&tok, pos)?.as_slice() {
            [k] => Ok(*k),
            _ => err(pos, "expected a single basis vector"),
        }
    }

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let pos = self.pos();
        let (word, _) = self.ident()?;
        let kind = match word.as_str() {
            "space" => {
                if self.dim.is_some() {
                    return err(pos, "redefinition of the space");
                }
                let n = self.int()?;
                if !(1..=16).contains(&n) {
                    return err(pos, "space dimension must be between 1 and 16");
                }
                self.dim = Some(n);
                StmtKind::Space(n)
            }
            "field" => {
                let d = self.int()?;
                StmtKind::Field(u32::try_from(d).or_else(|_| err(pos, "field tag too large"))?)
            }
            "lie" => self.lie()?,
            "form" => {
                let (name, npos) = self.ident()?;
                self.expect("=")?;
                let expr = self.expr()?;
                self.declare(&name, npos, Kind::Form)?;
                StmtKind::Form { name, expr }
            }
            "spinor" => self.spinor()?,
            "bundle" => self.bundle()?,
            "gendata" => self.gendata()?,
            "cmd" => StmtKind::Cmd(self.query()?),
            "check" => {
                let query = self.query()?;
                let op = if self.eat("==") {
                    CmpOp::Eq
                } else if self.eat("<=") {
                    CmpOp::Le
                } else {
                    return err(self.pos(), format!("expected `==` or `<=`, found {}", self.peek()));
                };
                let expected = self.expected()?;
                StmtKind::Check { query, op, expected }
            }
            _ => return err(pos, format!("unknown statement `{word}`")),
        };
        Ok(Stmt { kind, pos })
    }

    fn lie(&mut self) -> Result<StmtKind, ParseError> {
        let (name, npos) = self.ident()?;
        let body = if self.eat("=") {
            let (b, bpos) = self.ident()?;
            if !BUILTIN_LIE.contains(&b.as_str()) && self.symbols.get(&b) != Some(&Kind::Form) {
                return err(bpos, format!("expected su3, su2, abelian or a 3-form, found `{b}`"));
            }
            self.need_dim(bpos)?;
            LieBody::Named(b)
        } else {
            self.expect("{")?;
            let mut entries = Vec::new();
            loop {
                while self.eat(";") || self.peek() == &Tok::Newline {
                    self.skip_newlines();
                }
                if self.eat("}") {
                    break;
                }
                if self.eat("[") {
                    let i = self.single_index()?;
                    self.expect(",")?;
                    let j = self.single_index()?;
                    self.expect("]")?;
                    self.expect("=")?;
                    entries.push(LieEntry::Bracket(i, j, self.expr()?));
                } else {
                    self.keyword("d")?;
                    let k = self.single_index()?;
                    self.expect("=")?;
                    entries.push(LieEntry::D(k, self.expr()?));
                }
                if !matches!(self.peek(), Tok::Sym(";") | Tok::Sym("}") | Tok::Newline) {
                    return err(self.pos(), format!("expected `;` or `}}`, found {}", self.peek()));
                }
            }
            LieBody::Entries(entries)
        };
        self.declare(&name, npos, Kind::Lie)?;
        Ok(StmtKind::Lie { name, body })
    }

    fn spinor(&mut self) -> Result<StmtKind, ParseError> {
        let (name, npos) = self.ident()?;
        self.expect("=")?;
        let body = if self.eat("[") {
            let xs = self.expr_list("]")?;
            SpinorBody::Entries(xs)
        } else {
            self.keyword("basis")?;
            self.expect("(")?;
            let k = self.int()?;
            self.expect(")")?;
            SpinorBody::Basis(k)
        };
        self.declare(&name, npos, Kind::Spinor)?;
        Ok(StmtKind::Spinor { name, body })
    }

    fn bundle(&mut self) -> Result<StmtKind, ParseError> {
        let (name, npos) = self.ident()?;
        self.expect("=")?;
        let data = self.resolve(Kind::GenData)?;
        self.keyword("theta")?;
        self.expect("=")?;
        let theta = self.single_index()?;
        let mut fields: Vec<(String, Expr)> = Vec::new();
        while let Tok::Ident(_) = self.peek() {
            let (key, kpos) = self.ident()?;
            if !BUNDLE_FIELDS.contains(&key.as_str()) {
                return err(kpos, format!("unknown bundle field `{key}` (expected F, Ft or calT)"));
            }
            if fields.iter().any(|(k, _)| *k == key) {
                return err(kpos, format!("duplicate field `{key}`"));
            }
            self.expect("=")?;
            fields.push((key, self.expr()?));
        }
        self.declare(&name, npos, Kind::Bundle)?;
        Ok(StmtKind::Bundle { name, data, theta, fields })
    }

    fn gendata(&mut self) -> Result<StmtKind, ParseError> {
        let (name, npos) = self.ident()?;
        self.keyword("on")?;
        let frame = self.resolve(Kind::Lie)?;
        let opts = self.named_args(GENDATA_OPTS)?;
        for required in ["plus", "minus"] {
            if !opts.iter().any(|(k, _)| k == required) {
                return err(npos, format!("gendata `{name}` needs `{required}=`"));
            }
        }
        self.declare(&name, npos, Kind::GenData)?;
        Ok(StmtKind::GenData { name, frame, opts })
    }

    fn arg(&mut self, kind: ArgKind) -> Result<Arg, ParseError> {
        Ok(match kind {
            ArgKind::Of(k) => Arg::Word(self.resolve(k)?),
            ArgKind::Form => Arg::Expr(self.expr()?),
            ArgKind::Int => Arg::Int(self.int()?),
            ArgKind::Word(options) => {
                let (w, pos) = self.ident()?;
                if !options.contains(&w.as_str()) {
                    return err(pos, format!("expected one of {}, found `{w}`", options.join(", ")));
                }
                Arg::Word(w)
            }
        })
    }

    fn named_args(&mut self, allowed: &[(&str, ArgKind)]) -> Result<Vec<(String, Arg)>, ParseError> {
        let mut out: Vec<(String, Arg)> = Vec::new();
        while matches!(self.peek(), Tok::Ident(_)) && self.peek_at(1) == &Tok::Sym("=") {
            let (key, kpos) = self.ident()?;
            let Some(&(_, kind)) = allowed.iter().find(|(k, _)| *k == key) else {
                return err(kpos, format!("unknown option `{key}`"));
            };
            if out.iter().any(|(k, _)| *k == key) {
                return err(kpos, format!("duplicate option `{key}`"));
            }
            self.expect("=")?;
            out.push((key, self.arg(kind)?));
        }
        Ok(out)
    }

    fn query(&mut self) -> Result<Query, ParseError> {
        let (cmd, pos) = self.ident()?;
        let Some(sig) = COMMANDS.iter().find(|s| s.name == cmd) else {
            return err(pos, format!("unknown command `{cmd}`"));
        };
        let mut args = Vec::new();
        for &kind in sig.positional {
            args.push(self.arg(kind)?);
        }
        let named = self.named_args(sig.named)?;
        Ok(Query { cmd, args, named })
    }

    fn expected(&mut self) -> Result<Expected, ParseError> {
        if self.eat("[") {
            return Ok(Expected::List(self.expr_list("]")?));
        }
        if self.eat("{") {
            let mut kv = Vec::new();
            if !self.eat("}") {
                loop {
                    let (k, _) = self.ident()?;
                    self.expect("=")?;
                    kv.push((k, self.expr()?));
                    if self.eat("}") {
                        break;
                    }
                    self.expect(",")?;
                }
            }
            return Ok(Expected::Record(kv));
        }
        if let Tok::Ident(w) = self.peek().clone() {
            if w == "diag" {
                self.i += 1;
                self.expect("(")?;
                return Ok(Expected::Diag(self.expr_list(")")?));
            }
            if KEYWORDS.contains(&w.as_str()) {
                self.i += 1;
                return Ok(Expected::Keyword(w));
            }
        }
        Ok(Expected::Expr(self.expr()?))
    }

    fn expr_list(&mut self, close: &str) -> Result<Vec<Expr>, ParseError> {
        let mut xs = Vec::new();
        if self.eat(close) {
            return Ok(xs);
        }
        loop {
            xs.push(self.expr()?);
            if self.eat(close) {
                return Ok(xs);
            }
            self.expect(",")?;
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let op = if self.eat("+") {
                BinOp::Add
            } else if self.eat("-") {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let op = if self.eat("*") {
                BinOp::Mul
            } else if self.eat("/") {
                BinOp::Div
            } else if self.eat("^") {
                BinOp::Wedge
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Bin(op, Box::new(lhs), Box::new(self.unary()?));
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.next();
        match tok {
            Tok::Int(s) => Ok(Expr::Int(s)),
            Tok::Surd(d) => Ok(Expr::Surd(d)),
            Tok::Short(_) | Tok::Blade(_) => Ok(Expr::Blade(self.blade(&tok, pos)?)),
            Tok::Sym("(") => {
                let e = self.expr()?;
                self.expect(")")?;
                Ok(e)
            }
            Tok::Ident(name) if name == "star" || name == "sigma" => {
                let func = if name == "star" { Func::Star } else { Func::Sigma };
                self.expect("(")?;
                let e = self.expr()?;
                self.expect(")")?;
                Ok(Expr::Call(func, Box::new(e)))
            }
            Tok::Ident(name) => match self.symbols.get(&name) {
                Some(Kind::Form) => Ok(Expr::Ident(name)),
                Some(k) => err(pos, format!("`{name}` is a {}, expected a form", k.name())),
                None => err(pos, format!("unknown identifier `{name}`")),
            },
            t => err(pos, format!("expected an expression, found {t}")),
        }
    }
}

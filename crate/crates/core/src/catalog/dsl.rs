//! Declarative template language for boundary configurations.
//!
//! Each family is a small program over chain segments, branch points and
//! replicated fans, with integer expressions in the family parameters.
//! Instantiation and matching both interpret the same description, and user
//! template files reuse the exact same parser (versioned header required).

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::twig::Twig;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DslError {
    pub line: usize,
    pub message: String,
}

impl core::fmt::Display for DslError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "template line {}: {}", self.line, self.message)
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, DslError> {
    Err(DslError {
        line,
        message: message.into(),
    })
}

/// Integer expression over the family parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Const(i64),
    Var(Var),
    Neg(alloc::boxed::Box<Expr>),
    Add(alloc::boxed::Box<Expr>, alloc::boxed::Box<Expr>),
    Sub(alloc::boxed::Box<Expr>, alloc::boxed::Box<Expr>),
    Mul(alloc::boxed::Box<Expr>, alloc::boxed::Box<Expr>),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Var {
    T,
    T2,
    M,
    N,
    N2,
    MA,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::T2 => "t2",
            Var::M => "m",
            Var::N => "n",
            Var::N2 => "n2",
            Var::MA => "mA",
        }
    }

    fn from_name(s: &str) -> Option<Var> {
        match s {
            "t" => Some(Var::T),
            "t2" => Some(Var::T2),
            "m" => Some(Var::M),
            "n" => Some(Var::N),
            "n2" => Some(Var::N2),
            "mA" => Some(Var::MA),
            _ => None,
        }
    }
}

/// Variable bindings for expression evaluation.
#[derive(Clone, Default, Debug)]
pub struct Env {
    values: Vec<(Var, i64)>,
}

impl Env {
    pub fn bind(&mut self, var: Var, value: i64) {
        self.values.retain(|(v, _)| *v != var);
        self.values.push((var, value));
    }

    pub fn get(&self, var: Var) -> Option<i64> {
        self.values.iter().find(|(v, _)| *v == var).map(|(_, x)| *x)
    }
}

impl Expr {
    pub fn eval(&self, env: &Env) -> Result<i64, String> {
        match self {
            Expr::Const(c) => Ok(*c),
            Expr::Var(v) => env
                .get(*v)
                .ok_or_else(|| alloc::format!("unbound parameter `{}`", v.name())),
            Expr::Neg(e) => Ok(-e.eval(env)?),
            Expr::Add(a, b) => Ok(a.eval(env)? + b.eval(env)?),
            Expr::Sub(a, b) => Ok(a.eval(env)? - b.eval(env)?),
            Expr::Mul(a, b) => Ok(a.eval(env)? * b.eval(env)?),
        }
    }

    pub fn vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Expr::Const(_) => {}
            Expr::Var(v) => {
                out.insert(*v);
            }
            Expr::Neg(e) => e.vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }
}

struct ExprParser<'s> {
    src: &'s [u8],
    pos: usize,
}

impl<'s> ExprParser<'s> {
    fn new(src: &'s str) -> Self {
        ExprParser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Expr, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Add(alloc::boxed::Box::new(acc), alloc::boxed::Box::new(rhs));
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = Expr::Sub(alloc::boxed::Box::new(acc), alloc::boxed::Box::new(rhs));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, String> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = Expr::Mul(alloc::boxed::Box::new(acc), alloc::boxed::Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, String> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(alloc::boxed::Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(String::from("missing `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Ok(Expr::Const(
                    text.parse().map_err(|_| String::from("bad number"))?,
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                Var::from_name(name)
                    .map(Expr::Var)
                    .ok_or_else(|| alloc::format!("unknown parameter `{}`", name))
            }
            _ => Err(String::from("bad expression")),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, String> {
    let mut p = ExprParser::new(src);
    let e = p.expr()?;
    if p.pos != p.src.len() {
        return Err(alloc::format!("trailing junk in expression `{}`", src));
    }
    Ok(e)
}

/// A twig-valued segment of a chain.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Seg {
    /// literal entries
    Lit(Vec<i64>),
    /// `L(m; t)`
    L(Expr, Expr),
    /// `R(m; t)`
    R(Expr, Expr),
    /// `U(t)`: t vertices of weight -2
    U(Expr),
    /// slot filled from the twig parameter A
    Slot(Slot),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Slot {
    A,
    TransposeA,
    Adjoint,
    TransposeAdjoint,
    UnderlineAdjoint,
    TransposeUnderlineAdjoint,
}

/// One item of a chain, pendant or fan arm.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Item {
    Bullet,
    /// anonymous or named circle, with that many pendant bullets attached
    Circle {
        name: Option<String>,
        weight: Expr,
        bullets: u32,
    },
    /// reference to a node declared earlier
    NodeRef(String),
    Seg(Seg),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Stmt {
    Node {
        name: String,
        weight: Expr,
    },
    Chain(Vec<Item>),
    Pendant {
        items: Vec<Item>,
        at: String,
    },
    Fan {
        count: Expr,
        at: String,
        arm: Vec<Item>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CaseGroup {
    I,
    II,
    III,
}

impl core::fmt::Display for CaseGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CaseGroup::I => write!(f, "I"),
            CaseGroup::II => write!(f, "II"),
            CaseGroup::III => write!(f, "III"),
        }
    }
}

/// Lower bound `lhs >= rhs`; strict-only bounds apply in strict mode.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Require {
    pub lhs: Expr,
    pub rhs: Expr,
    pub strict_only: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Template {
    pub index: u32,
    pub group: CaseGroup,
    pub params: BTreeSet<Var>,
    pub needs_twig: bool,
    pub requires: Vec<Require>,
    pub stmts: Vec<Stmt>,
}

fn parse_item(line: usize, tok: &str) -> Result<Item, DslError> {
    if tok == "!" {
        return Ok(Item::Bullet);
    }
    if let Some(name) = tok.strip_prefix('@') {
        if name.is_empty() {
            return err(line, "empty node reference");
        }
        return Ok(Item::NodeRef(name.to_string()));
    }
    if tok.starts_with('[') {
        let t = Twig::parse(tok).map_err(|e| DslError {
            line,
            message: alloc::format!("{}", e),
        })?;
        if t.is_empty() {
            return err(line, "empty literal twig");
        }
        return Ok(Item::Seg(Seg::Lit(t.entries().to_vec())));
    }
    for (prefix, two_args) in [("L(", true), ("R(", true), ("U(", false)] {
        if let Some(rest) = tok.strip_prefix(prefix) {
            let inner = rest.strip_suffix(')').ok_or_else(|| DslError {
                line,
                message: alloc::format!("missing `)` in `{}`", tok),
            })?;
            if two_args {
                let (a, b) = inner.split_once(';').ok_or_else(|| DslError {
                    line,
                    message: alloc::format!("expected `;` in `{}`", tok),
                })?;
                let ea = parse_expr(a).map_err(|m| DslError { line, message: m })?;
                let eb = parse_expr(b).map_err(|m| DslError { line, message: m })?;
                return Ok(Item::Seg(if prefix == "L(" {
                    Seg::L(ea, eb)
                } else {
                    Seg::R(ea, eb)
                }));
            }
            let e = parse_expr(inner).map_err(|m| DslError { line, message: m })?;
            return Ok(Item::Seg(Seg::U(e)));
        }
    }
    let slot = match tok {
        "A" => Some(Slot::A),
        "tA" => Some(Slot::TransposeA),
        "As" => Some(Slot::Adjoint),
        "tAs" => Some(Slot::TransposeAdjoint),
        "uAs" => Some(Slot::UnderlineAdjoint),
        "tuAs" => Some(Slot::TransposeUnderlineAdjoint),
        _ => None,
    };
    if let Some(s) = slot {
        return Ok(Item::Seg(Seg::Slot(s)));
    }
    // [name:]o(expr)[!k]
    let (name, rest) = match tok.split_once(":o(") {
        Some((n, r)) => (Some(n.to_string()), alloc::format!("o({}", r)),
        None => (None, tok.to_string()),
    };
    if let Some(body) = rest.strip_prefix("o(") {
        let close = body.rfind(')').ok_or_else(|| DslError {
            line,
            message: alloc::format!("missing `)` in `{}`", tok),
        })?;
        let expr_src = &body[..close];
        let tail = &body[close + 1..];
        let bullets = if tail.is_empty() {
            0
        } else if let Some(k) = tail.strip_prefix('!') {
            k.parse::<u32>().map_err(|_| DslError {
                line,
                message: alloc::format!("bad bullet count in `{}`", tok),
            })?
        } else {
            return err(line, alloc::format!("bad suffix in `{}`", tok));
        };
        let weight = parse_expr(expr_src).map_err(|m| DslError { line, message: m })?;
        return Ok(Item::Circle {
            name,
            weight,
            bullets,
        });
    }
    err(line, alloc::format!("unrecognized item `{}`", tok))
}

fn parse_items(line: usize, toks: &[&str]) -> Result<Vec<Item>, DslError> {
    toks.iter().map(|t| parse_item(line, t)).collect()
}

/// Parses a whole template file (the builtin catalog uses the same format).
pub fn parse_templates(text: &str) -> Result<Vec<Template>, DslError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, l)) if l == "version 1" => {}
        Some((n, l)) => return err(n, alloc::format!("expected `version 1`, found `{}`", l)),
        None => return err(0, "empty template file"),
    }

    let mut out: Vec<Template> = Vec::new();
    for (line, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        match toks[0] {
            "family" => {
                if toks.len() != 4 || toks[2] != "group" {
                    return err(line, "expected `family <index> group <I|II|III>`");
                }
                let index: u32 = toks[1].parse().map_err(|_| DslError {
                    line,
                    message: alloc::format!("bad family index `{}`", toks[1]),
                })?;
                let group = match toks[3] {
                    "I" => CaseGroup::I,
                    "II" => CaseGroup::II,
                    "III" => CaseGroup::III,
                    g => return err(line, alloc::format!("bad group `{}`", g)),
                };
                out.push(Template {
                    index,
                    group,
                    params: BTreeSet::new(),
                    needs_twig: false,
                    requires: Vec::new(),
                    stmts: Vec::new(),
                });
            }
            _ if out.is_empty() => return err(line, "statement before any `family` header"),
            "params" => {
                let tpl = out.last_mut().unwrap();
                for name in &toks[1..] {
                    if *name == "A" {
                        tpl.needs_twig = true;
                    } else {
                        let var = Var::from_name(name).ok_or_else(|| DslError {
                            line,
                            message: alloc::format!("unknown parameter `{}`", name),
                        })?;
                        tpl.params.insert(var);
                    }
                }
            }
            "require" | "require-strict" => {
                if toks.len() != 4 || toks[2] != ">=" {
                    return err(line, "expected `require <expr> >= <expr>`");
                }
                let lhs = parse_expr(toks[1]).map_err(|m| DslError { line, message: m })?;
                let rhs = parse_expr(toks[3]).map_err(|m| DslError { line, message: m })?;
                out.last_mut().unwrap().requires.push(Require {
                    lhs,
                    rhs,
                    strict_only: toks[0] == "require-strict",
                });
            }
            "node" => {
                if toks.len() != 3 {
                    return err(line, "expected `node <name> <weight-expr>`");
                }
                let weight = parse_expr(toks[2]).map_err(|m| DslError { line, message: m })?;
                out.last_mut().unwrap().stmts.push(Stmt::Node {
                    name: toks[1].to_string(),
                    weight,
                });
            }
            "chain" => {
                let items = parse_items(line, &toks[1..])?;
                if items.len() < 2 {
                    return err(line, "a chain needs at least two items");
                }
                out.last_mut().unwrap().stmts.push(Stmt::Chain(items));
            }
            "pendant" => {
                let at_pos = toks
                    .iter()
                    .position(|t| *t == "at")
                    .ok_or_else(|| DslError {
                        line,
                        message: String::from("expected `pendant <items> at <node>`"),
                    })?;
                if at_pos + 2 != toks.len() || at_pos < 2 {
                    return err(line, "expected `pendant <items> at <node>`");
                }
                let items = parse_items(line, &toks[1..at_pos])?;
                out.last_mut().unwrap().stmts.push(Stmt::Pendant {
                    items,
                    at: toks[at_pos + 1].to_string(),
                });
            }
            "fan" => {
                // fan <count> at <node> : <items>
                if toks.len() < 6 || toks[2] != "at" || toks[4] != ":" {
                    return err(line, "expected `fan <count> at <node> : <items>`");
                }
                let count = parse_expr(toks[1]).map_err(|m| DslError { line, message: m })?;
                let arm = parse_items(line, &toks[5..])?;
                out.last_mut().unwrap().stmts.push(Stmt::Fan {
                    count,
                    at: toks[3].to_string(),
                    arm,
                });
            }
            other => return err(line, alloc::format!("unknown statement `{}`", other)),
        }
    }

    for tpl in &out {
        validate_template(tpl)?;
    }
    Ok(out)
}

fn validate_template(tpl: &Template) -> Result<(), DslError> {
    let mut declared: BTreeSet<&str> = BTreeSet::new();
    let mut placed: BTreeSet<&str> = BTreeSet::new();
    let mut exprs: Vec<&Expr> = Vec::new();
    let note = |items: &'static str| DslError {
        line: 0,
        message: alloc::format!("family {}: {}", tpl.index, items),
    };
    for stmt in &tpl.stmts {
        match stmt {
            Stmt::Node { name, weight } => {
                if !declared.insert(name) {
                    return Err(note("node declared twice"));
                }
                exprs.push(weight);
            }
            Stmt::Chain(items) | Stmt::Pendant { items, .. } | Stmt::Fan { arm: items, .. } => {
                for item in items {
                    match item {
                        Item::Circle { name, weight, .. } => {
                            exprs.push(weight);
                            if let Some(n) = name {
                                if !declared.insert(n) {
                                    return Err(note("node declared twice"));
                                }
                            }
                        }
                        Item::NodeRef(n) => {
                            if !placed.insert(n) {
                                return Err(note("node placed in more than one chain"));
                            }
                        }
                        Item::Seg(seg) => match seg {
                            Seg::L(a, b) | Seg::R(a, b) => {
                                exprs.push(a);
                                exprs.push(b);
                            }
                            Seg::U(e) => exprs.push(e),
                            Seg::Lit(_) | Seg::Slot(_) => {}
                        },
                        Item::Bullet => {}
                    }
                }
                if let Stmt::Fan { count, .. } = stmt {
                    exprs.push(count);
                }
            }
        }
    }
    let mut used: BTreeSet<Var> = BTreeSet::new();
    for e in exprs {
        e.vars(&mut used);
    }
    for v in &used {
        if *v == Var::MA {
            if !tpl.needs_twig {
                return Err(note("uses mA but declares no twig parameter A"));
            }
            continue;
        }
        if !tpl.params.contains(v) {
            return Err(DslError {
                line: 0,
                message: alloc::format!(
                    "family {}: expression uses undeclared parameter `{}`",
                    tpl.index,
                    v.name()
                ),
            });
        }
    }
    Ok(())
}

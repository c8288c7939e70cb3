//! One- and two-variable real expression trees for the configuration-level
//! functions `f1(u)`, `f2(u)`, `g(v)`, `D1(u,v)`.
//!
//! The grammar is deliberately closed: variables `u`, `v`, decimal literals,
//! constants `pi` and `e`, the operators `+ - * / ^` (with `^`
//! right-associative and binding tighter than unary minus) and the functions
//! `sin cos tan exp ln sqrt abs`. There is no implicit multiplication:
//! `3v` is a parse error, not `3*v`.
//!
//! Evaluation is IEEE double, deterministic, and reports domain faults
//! (square roots of negative numbers, logs of non-positive numbers,
//! division by zero, `x^y` with `x < 0` and non-integer `y`) instead of
//! silently producing NaN. Forward-mode dual evaluation gives exact partial
//! derivatives with respect to a seeded variable.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::math;

/// The two admitted variables: `u` along the cylinder axis, `v` the angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    U,
    V,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::U => "u",
            Var::V => "v",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Tan,
    Exp,
    Ln,
    Sqrt,
    Abs,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Tan => "tan",
            Func::Exp => "exp",
            Func::Ln => "ln",
            Func::Sqrt => "sqrt",
            Func::Abs => "abs",
        }
    }

    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "exp" => Func::Exp,
            "ln" => Func::Ln,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }
}

/// An immutable expression tree. Construction goes through [`parse`];
/// evaluation is pure, so trees are safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(f64),
    Var(Var),
    Neg(Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Which variables occur in an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VarSet {
    pub u: bool,
    pub v: bool,
}

impl VarSet {
    pub fn contains(&self, var: Var) -> bool {
        match var {
            Var::U => self.u,
            Var::V => self.v,
        }
    }

    pub fn subset_of(&self, other: VarSet) -> bool {
        (!self.u || other.u) && (!self.v || other.v)
    }
}

/// Variable bindings for evaluation. Missing bindings for free variables
/// are reported, not defaulted.
#[derive(Debug, Clone, Copy, Default)]
pub struct Bindings {
    pub u: Option<f64>,
    pub v: Option<f64>,
}

impl Bindings {
    pub fn u(u: f64) -> Self {
        Bindings { u: Some(u), v: None }
    }

    pub fn v(v: f64) -> Self {
        Bindings { u: None, v: Some(v) }
    }

    pub fn uv(u: f64, v: f64) -> Self {
        Bindings { u: Some(u), v: Some(v) }
    }

    fn get(&self, var: Var) -> Option<f64> {
        match var {
            Var::U => self.u,
            Var::V => self.v,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the source where the error was detected.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A character that can never start a token.
    UnexpectedChar(char),
    /// A well-formed token in the wrong place; `expected` names the token set.
    Unexpected { found: String, expected: &'static str },
    /// Input ended where `expected` was required.
    UnexpectedEnd { expected: &'static str },
    /// An identifier that is neither a variable, a constant, nor a function.
    UnknownIdentifier(String),
    /// Empty source text.
    EmptyInput,
    MalformedNumber,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character '{}' at position {}", c, self.position)
            }
            ParseErrorKind::Unexpected { found, expected } => write!(
                f,
                "syntax error at position {}: found '{}', expected {}",
                self.position, found, expected
            ),
            ParseErrorKind::UnexpectedEnd { expected } => write!(
                f,
                "syntax error at position {}: unexpected end of input, expected {}",
                self.position, expected
            ),
            ParseErrorKind::UnknownIdentifier(name) => {
                write!(f, "unknown identifier '{}' at position {}", name, self.position)
            }
            ParseErrorKind::EmptyInput => f.write_str("empty expression"),
            ParseErrorKind::MalformedNumber => {
                write!(f, "malformed number at position {}", self.position)
            }
        }
    }
}

impl core::error::Error for ParseError {}

/// Domain faults caught during evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    UnboundVariable(Var),
    /// `offender` is the pretty-printed subexpression whose evaluation faulted.
    DomainFault { rule: DomainRule, offender: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainRule {
    SqrtNegative,
    LogNonPositive,
    DivisionByZero,
    /// `x^y` with `x < 0` and non-integer `y`.
    PowNegativeBase,
    /// `0^y` with `y < 0`.
    PowZeroNegative,
    /// Finite inputs produced a non-finite value (overflow).
    NonFinite,
    /// The derivative does not exist at this point (e.g. sqrt'(0)).
    DerivativeSingular,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::UnboundVariable(v) => write!(f, "unbound variable '{}'", v),
            EvalError::DomainFault { rule, offender } => {
                let what = match rule {
                    DomainRule::SqrtNegative => "square root of a negative number",
                    DomainRule::LogNonPositive => "logarithm of a non-positive number",
                    DomainRule::DivisionByZero => "division by zero",
                    DomainRule::PowNegativeBase => "negative base with non-integer exponent",
                    DomainRule::PowZeroNegative => "zero base with negative exponent",
                    DomainRule::NonFinite => "overflow to a non-finite value",
                    DomainRule::DerivativeSingular => "derivative singular at this point",
                };
                write!(f, "{} in '{}'", what, offender)
            }
        }
    }
}

impl core::error::Error for EvalError {}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(x) => format!("{:?}", x),
            Tok::Ident(s) => s.clone(),
            Tok::Plus => "+".to_owned(),
            Tok::Minus => "-".to_owned(),
            Tok::Star => "*".to_owned(),
            Tok::Slash => "/".to_owned(),
            Tok::Caret => "^".to_owned(),
            Tok::LParen => "(".to_owned(),
            Tok::RParen => ")".to_owned(),
        }
    }
}

fn lex(src: &str) -> Result<alloc::vec::Vec<(Tok, usize)>, ParseError> {
    let mut toks = alloc::vec::Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                toks.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                toks.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' | '.' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i] as char, '0'..='9' | '.') {
                    i += 1;
                }
                // optional exponent part
                if i < bytes.len() && matches!(bytes[i] as char, 'e' | 'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && matches!(bytes[j] as char, '+' | '-') {
                        j += 1;
                    }
                    if j < bytes.len() && (bytes[j] as char).is_ascii_digit() {
                        i = j;
                        while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text = &src[start..i];
                let value: f64 = text.parse().map_err(|_| ParseError {
                    position: start,
                    kind: ParseErrorKind::MalformedNumber,
                })?;
                toks.push((Tok::Num(value), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && matches!(bytes[i] as char, 'a'..='z' | 'A'..='Z' | '0'..='9' | '_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(src[start..i].to_owned()), start));
            }
            other => {
                return Err(ParseError {
                    position: i,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        }
    }
    Ok(toks)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    toks: alloc::vec::Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, expected: &'static str) -> ParseError {
        match self.peek() {
            Some((tok, at)) => ParseError {
                position: *at,
                kind: ParseErrorKind::Unexpected { found: tok.describe(), expected },
            },
            None => ParseError {
                position: self.end,
                kind: ParseErrorKind::UnexpectedEnd { expected },
            },
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some((Tok::RParen, _)) => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err_here("')'")),
        }
    }

    // sum := product (('+' | '-') product)*
    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Some((Tok::Plus, _)) => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    lhs = Expr::Bin(BinOp::Add, Box::new(lhs), Box::new(rhs));
                }
                Some((Tok::Minus, _)) => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    lhs = Expr::Bin(BinOp::Sub, Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // product := unary (('*' | '/') unary)*
    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some((Tok::Star, _)) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Expr::Bin(BinOp::Mul, Box::new(lhs), Box::new(rhs));
                }
                Some((Tok::Slash, _)) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Expr::Bin(BinOp::Div, Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    // unary := '-' unary | power    (so -2^2 == -(2^2))
    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let Some((Tok::Minus, _)) = self.peek() {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    // power := atom ('^' unary)?    (right-associative, exponent may be signed)
    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if let Some((Tok::Caret, _)) = self.peek() {
            self.pos += 1;
            let exponent = self.unary()?;
            return Ok(Expr::Bin(BinOp::Pow, Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.bump() {
            Some((Tok::Num(x), _)) => Ok(Expr::Num(x)),
            Some((Tok::LParen, _)) => {
                let inner = self.sum()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            Some((Tok::Ident(name), at)) => match name.as_str() {
                "u" => Ok(Expr::Var(Var::U)),
                "v" => Ok(Expr::Var(Var::V)),
                "pi" => Ok(Expr::Num(math::PI)),
                "e" => Ok(Expr::Num(core::f64::consts::E)),
                _ => {
                    if let Some(func) = Func::from_name(&name) {
                        match self.peek() {
                            Some((Tok::LParen, _)) => {
                                self.pos += 1;
                                let arg = self.sum()?;
                                self.expect_rparen()?;
                                Ok(Expr::Call(func, Box::new(arg)))
                            }
                            _ => Err(self.err_here("'(' after function name")),
                        }
                    } else {
                        Err(ParseError {
                            position: at,
                            kind: ParseErrorKind::UnknownIdentifier(name),
                        })
                    }
                }
            },
            Some((tok, at)) => Err(ParseError {
                position: at,
                kind: ParseErrorKind::Unexpected { found: tok.describe(), expected: "expression" },
            }),
            None => Err(ParseError {
                position: self.end,
                kind: ParseErrorKind::UnexpectedEnd { expected: "expression" },
            }),
        }
    }
}

/// Parses `source` into an expression tree.
///
/// Standard precedence: `^` (right-associative), unary `-`, then `* /`,
/// then `+ -`; whitespace-insensitive. Errors carry the byte position and
/// the expected-token set.
pub fn parse(source: &str) -> Result<Expr, ParseError> {
    let toks = lex(source)?;
    if toks.is_empty() {
        return Err(ParseError { position: 0, kind: ParseErrorKind::EmptyInput });
    }
    let mut parser = Parser { toks, pos: 0, end: source.len() };
    let expr = parser.sum()?;
    if parser.peek().is_some() {
        return Err(parser.err_here("operator or end of input"));
    }
    Ok(expr)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

fn fault(rule: DomainRule, offender: &Expr) -> EvalError {
    EvalError::DomainFault { rule, offender: pretty(offender) }
}

/// True when y has an exact integer value that fits a 32-bit range.
fn as_integer_exponent(y: f64) -> Option<i64> {
    if y.abs() <= 2147483647.0 && math::round(y) == y {
        Some(y as i64)
    } else {
        None
    }
}

fn eval_pow(base: f64, exponent: f64, node: &Expr) -> Result<f64, EvalError> {
    if let Some(n) = as_integer_exponent(exponent) {
        if base == 0.0 && n < 0 {
            return Err(fault(DomainRule::PowZeroNegative, node));
        }
        return Ok(math::powi(base, n));
    }
    if base < 0.0 {
        return Err(fault(DomainRule::PowNegativeBase, node));
    }
    if base == 0.0 {
        return if exponent > 0.0 { Ok(0.0) } else { Err(fault(DomainRule::PowZeroNegative, node)) };
    }
    Ok(math::pow(base, exponent))
}

impl Expr {
    /// Evaluates the tree at the given bindings. Identical trees on identical
    /// inputs produce bit-identical results.
    pub fn eval(&self, bindings: &Bindings) -> Result<f64, EvalError> {
        let value = match self {
            Expr::Num(x) => *x,
            Expr::Var(var) => {
                bindings.get(*var).ok_or(EvalError::UnboundVariable(*var))?
            }
            Expr::Neg(inner) => -inner.eval(bindings)?,
            Expr::Bin(op, lhs, rhs) => {
                let a = lhs.eval(bindings)?;
                let b = rhs.eval(bindings)?;
                match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(fault(DomainRule::DivisionByZero, self));
                        }
                        a / b
                    }
                    BinOp::Pow => eval_pow(a, b, self)?,
                }
            }
            Expr::Call(func, arg) => {
                let x = arg.eval(bindings)?;
                match func {
                    Func::Sin => math::sin(x),
                    Func::Cos => math::cos(x),
                    Func::Tan => math::tan(x),
                    Func::Exp => math::exp(x),
                    Func::Ln => {
                        if x <= 0.0 {
                            return Err(fault(DomainRule::LogNonPositive, self));
                        }
                        math::ln(x)
                    }
                    Func::Sqrt => {
                        if x < 0.0 {
                            return Err(fault(DomainRule::SqrtNegative, self));
                        }
                        math::sqrt(x)
                    }
                    Func::Abs => x.abs(),
                }
            }
        };
        if !value.is_finite() {
            return Err(fault(DomainRule::NonFinite, self));
        }
        Ok(value)
    }

    /// Forward-mode dual evaluation: returns the value and the partial
    /// derivative with respect to `seed`.
    pub fn eval_dual(&self, bindings: &Bindings, seed: Var) -> Result<(f64, f64), EvalError> {
        let (value, deriv) = match self {
            Expr::Num(x) => (*x, 0.0),
            Expr::Var(var) => {
                let x = bindings.get(*var).ok_or(EvalError::UnboundVariable(*var))?;
                (x, if *var == seed { 1.0 } else { 0.0 })
            }
            Expr::Neg(inner) => {
                let (v, d) = inner.eval_dual(bindings, seed)?;
                (-v, -d)
            }
            Expr::Bin(op, lhs, rhs) => {
                let (a, da) = lhs.eval_dual(bindings, seed)?;
                let (b, db) = rhs.eval_dual(bindings, seed)?;
                match op {
                    BinOp::Add => (a + b, da + db),
                    BinOp::Sub => (a - b, da - db),
                    BinOp::Mul => (a * b, da * b + a * db),
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(fault(DomainRule::DivisionByZero, self));
                        }
                        (a / b, (da * b - a * db) / (b * b))
                    }
                    BinOp::Pow => {
                        let v = eval_pow(a, b, self)?;
                        if db == 0.0 {
                            // d/dx a^c = c a^(c-1) a'
                            let d = if da == 0.0 {
                                0.0
                            } else if let Some(n) = as_integer_exponent(b) {
                                b * math::powi(a, n - 1) * da
                            } else {
                                b * math::pow(a, b - 1.0) * da
                            };
                            (v, d)
                        } else {
                            // genuinely variable exponent: needs a > 0
                            if a <= 0.0 {
                                return Err(fault(DomainRule::PowNegativeBase, self));
                            }
                            (v, v * (db * math::ln(a) + b * da / a))
                        }
                    }
                }
            }
            Expr::Call(func, arg) => {
                let (x, dx) = arg.eval_dual(bindings, seed)?;
                match func {
                    Func::Sin => (math::sin(x), math::cos(x) * dx),
                    Func::Cos => (math::cos(x), -math::sin(x) * dx),
                    Func::Tan => {
                        let t = math::tan(x);
                        (t, (1.0 + t * t) * dx)
                    }
                    Func::Exp => {
                        let ex = math::exp(x);
                        (ex, ex * dx)
                    }
                    Func::Ln => {
                        if x <= 0.0 {
                            return Err(fault(DomainRule::LogNonPositive, self));
                        }
                        (math::ln(x), dx / x)
                    }
                    Func::Sqrt => {
                        if x < 0.0 {
                            return Err(fault(DomainRule::SqrtNegative, self));
                        }
                        if x == 0.0 {
                            if dx == 0.0 {
                                (0.0, 0.0)
                            } else {
                                return Err(fault(DomainRule::DerivativeSingular, self));
                            }
                        } else {
                            let s = math::sqrt(x);
                            (s, dx / (2.0 * s))
                        }
                    }
                    // Convention: d|x|/dx = sign(x), with sign(0) = 0.
                    Func::Abs => (x.abs(), if x > 0.0 { dx } else if x < 0.0 { -dx } else { 0.0 }),
                }
            }
        };
        if !value.is_finite() || !deriv.is_finite() {
            return Err(fault(DomainRule::NonFinite, self));
        }
        Ok((value, deriv))
    }

    /// The exact set of variables occurring in the tree.
    pub fn free_vars(&self) -> VarSet {
        let mut set = VarSet::default();
        self.collect_vars(&mut set);
        set
    }

    fn collect_vars(&self, set: &mut VarSet) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(Var::U) => set.u = true,
            Expr::Var(Var::V) => set.v = true,
            Expr::Neg(inner) => inner.collect_vars(set),
            Expr::Bin(_, lhs, rhs) => {
                lhs.collect_vars(set);
                rhs.collect_vars(set);
            }
            Expr::Call(_, arg) => arg.collect_vars(set),
        }
    }
}

/// Fully parenthesized canonical form; reparses to a tree that evaluates
/// identically.
pub fn pretty(expr: &Expr) -> String {
    match expr {
        Expr::Num(x) => {
            if *x < 0.0 {
                format!("({:?})", x)
            } else {
                format!("{:?}", x)
            }
        }
        Expr::Var(v) => format!("{}", v),
        Expr::Neg(inner) => format!("(-{})", pretty(inner)),
        Expr::Bin(op, lhs, rhs) => {
            let sym = match op {
                BinOp::Add => "+",
                BinOp::Sub => "-",
                BinOp::Mul => "*",
                BinOp::Div => "/",
                BinOp::Pow => "^",
            };
            format!("({} {} {})", pretty(lhs), sym, pretty(rhs))
        }
        Expr::Call(func, arg) => format!("{}({})", func.name(), pretty(arg)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(src: &str, b: &Bindings) -> f64 {
        parse(src).unwrap().eval(b).unwrap()
    }

    #[test]
    fn precedence() {
        let none = Bindings::default();
        assert_eq!(ev("2+3*4", &none), 14.0);
        assert_eq!(ev("2^3^2", &none), 512.0);
        assert_eq!(ev("-2^2", &none), -4.0);
        assert_eq!(ev("2^-1", &none), 0.5);
        assert_eq!(ev("6/3/2", &none), 1.0);
        assert_eq!(ev("2*pi", &none), 2.0 * math::PI);
    }

    #[test]
    fn paper_depth_profile() {
        // f(u) = e^{u(2.7-u)} - 1.03 has f(0) = -0.03
        let f = parse("exp(u*(2.7-u)) - 1.03").unwrap();
        assert_eq!(f.free_vars(), VarSet { u: true, v: false });
        let y = f.eval(&Bindings::u(0.0)).unwrap();
        assert!((y - (-0.03)).abs() < 1e-15);
    }

    #[test]
    fn trig_profile_at_zero() {
        let g = parse("4/5 + (1/3)*cos(3*v)*sin(v)^2").unwrap();
        assert_eq!(g.eval(&Bindings::v(0.0)).unwrap(), 0.8);
    }

    #[test]
    fn reciprocal_profile() {
        let f = parse("1/(2*u*(1-u))").unwrap();
        assert_eq!(f.eval(&Bindings::u(0.5)).unwrap(), 2.0);
    }

    #[test]
    fn unbalanced_paren_position() {
        let err = parse("sin(").unwrap_err();
        assert_eq!(err.position, 4);
        assert!(matches!(err.kind, ParseErrorKind::UnexpectedEnd { .. }));
    }

    #[test]
    fn no_implicit_multiplication() {
        let err = parse("3v").unwrap_err();
        assert_eq!(err.position, 1);
    }

    #[test]
    fn unknown_identifier() {
        let err = parse("w + 1").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::UnknownIdentifier(ref n) if n == "w"));
    }

    #[test]
    fn dual_simple() {
        let e = parse("u^2").unwrap();
        assert_eq!(e.eval_dual(&Bindings::u(3.0), Var::U).unwrap(), (9.0, 6.0));
        let e = parse("2*u*(1-u)").unwrap();
        assert_eq!(e.eval_dual(&Bindings::u(0.0), Var::U).unwrap(), (0.0, 2.0));
        let e = parse("sin(v)").unwrap();
        assert_eq!(e.eval_dual(&Bindings::v(0.0), Var::V).unwrap(), (0.0, 1.0));
    }

    #[test]
    fn dual_cross_variable_is_zero() {
        let e = parse("u^2 + 3").unwrap();
        let (_, d) = e.eval_dual(&Bindings::uv(2.0, 1.0), Var::V).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn domain_faults() {
        let none = Bindings::default();
        let err = parse("sqrt(0-1)").unwrap().eval(&none).unwrap_err();
        assert!(matches!(err, EvalError::DomainFault { rule: DomainRule::SqrtNegative, .. }));
        let err = parse("ln(0)").unwrap().eval(&none).unwrap_err();
        assert!(matches!(err, EvalError::DomainFault { rule: DomainRule::LogNonPositive, .. }));
        let err = parse("1/(u-1)").unwrap().eval(&Bindings::u(1.0)).unwrap_err();
        assert!(matches!(err, EvalError::DomainFault { rule: DomainRule::DivisionByZero, .. }));
        let err = parse("(0-2)^0.5").unwrap().eval(&none).unwrap_err();
        assert!(matches!(err, EvalError::DomainFault { rule: DomainRule::PowNegativeBase, .. }));
    }

    #[test]
    fn negative_base_integer_exponent_is_fine() {
        let none = Bindings::default();
        assert_eq!(ev("(0-2)^3", &none), -8.0);
        assert_eq!(ev("(0-2)^2", &none), 4.0);
    }

    #[test]
    fn unbound_variable() {
        let e = parse("u + v").unwrap();
        let err = e.eval(&Bindings::u(1.0)).unwrap_err();
        assert_eq!(err, EvalError::UnboundVariable(Var::V));
    }

    #[test]
    fn pretty_roundtrip_spot() {
        let e = parse("exp(u*(2.7-u)) - 1.03").unwrap();
        let reparsed = parse(&pretty(&e)).unwrap();
        for i in 0..20 {
            let x = -1.0 + 0.3 * i as f64;
            let b = Bindings::u(x);
            assert_eq!(e.eval(&b).unwrap(), reparsed.eval(&b).unwrap());
        }
    }
}

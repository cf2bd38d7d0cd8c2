//! Parser and exact evaluator for closed-form generating functions in the
//! variable `t`.
//!
//! Grammar: `^` binds tightest (integer exponents only), then unary
//! minus, then `*` `/`, then `+` `-`; left associative; explicit `*`
//! required. `/` is always division, so `3/2` is `Div(3, 2)` and
//! evaluates to the same constant.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{Int, Rat};
use crate::series::TruncSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Exp,
    Sinh,
    Cosh,
    Tanh,
    Sech,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        match name {
            "exp" => Some(Func::Exp),
            "sinh" => Some(Func::Sinh),
            "cosh" => Some(Func::Cosh),
            "tanh" => Some(Func::Tanh),
            "sech" => Some(Func::Sech),
            _ => None,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Func::Exp => "exp",
            Func::Sinh => "sinh",
            Func::Cosh => "cosh",
            Func::Tanh => "tanh",
            Func::Sech => "sech",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprAst {
    Int(Int),
    Var,
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, i32),
    Func(Func, Box<ExprAst>),
}

/// Fully parenthesized canonical form; `parse(print(ast)) == ast`.
impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprAst::Int(n) => write!(f, "{n}"),
            ExprAst::Var => write!(f, "t"),
            ExprAst::Neg(a) => write!(f, "(-{a})"),
            ExprAst::Add(a, b) => write!(f, "({a}+{b})"),
            ExprAst::Sub(a, b) => write!(f, "({a}-{b})"),
            ExprAst::Mul(a, b) => write!(f, "({a}*{b})"),
            ExprAst::Div(a, b) => write!(f, "({a}/{b})"),
            ExprAst::Pow(a, e) => write!(f, "({a}^{e})"),
            ExprAst::Func(fun, a) => write!(f, "{}({a})", fun.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
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
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: Int = text[start..i].parse().unwrap();
                toks.push((Tok::Int(n), start));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), start));
            }
            _ => {
                return Err(Error::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Syntax { pos: self.here(), msg: format!("expected {what}") })
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = ExprAst::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = ExprAst::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    lhs = ExprAst::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    lhs = ExprAst::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            let inner = self.factor()?;
            return Ok(ExprAst::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let negative = if self.peek() == Some(&Tok::Minus) {
                self.pos += 1;
                true
            } else {
                false
            };
            let pos = self.here();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: i32 = n.try_into().map_err(|_| Error::Syntax {
                        pos,
                        msg: "integer exponent overflow".into(),
                    })?;
                    Ok(ExprAst::Pow(Box::new(base), if negative { -e } else { e }))
                }
                _ => Err(Error::Syntax { pos, msg: "expected integer exponent".into() }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<ExprAst> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(ExprAst::Int(n)),
            Some(Tok::Ident(name)) if name == "t" => Ok(ExprAst::Var),
            Some(Tok::Ident(name)) => {
                if let Some(f) = Func::from_name(&name) {
                    self.expect(Tok::LParen, "'(' after function name")?;
                    let arg = self.expr()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(ExprAst::Func(f, Box::new(arg)))
                } else {
                    Err(Error::UnknownFunction(name))
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(Error::Syntax { pos, msg: "expected expression".into() }),
        }
    }
}

pub fn parse(text: &str) -> Result<ExprAst> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Syntax { pos: p.here(), msg: "trailing input".into() });
    }
    Ok(ast)
}

fn eval_at(ast: &ExprAst, order: usize) -> Result<TruncSeries<Rat>> {
    match ast {
        ExprAst::Int(n) => Ok(TruncSeries::constant(Rat::from_integer(n.clone()), order)),
        ExprAst::Var => Ok(TruncSeries::identity(order)),
        ExprAst::Neg(a) => Ok(eval_at(a, order)?.neg()),
        ExprAst::Add(a, b) => Ok(eval_at(a, order)?.add(&eval_at(b, order)?)),
        ExprAst::Sub(a, b) => Ok(eval_at(a, order)?.sub(&eval_at(b, order)?)),
        ExprAst::Mul(a, b) => Ok(eval_at(a, order)?.mul(&eval_at(b, order)?)),
        ExprAst::Div(a, b) => {
            let num = eval_at(a, order)?;
            let den = eval_at(b, order)?;
            num.div(&den).map_err(|e| match e {
                Error::NotAPowerSeries { .. } | Error::Shape(_) => Error::PoleAtZero,
                e => e,
            })
        }
        ExprAst::Pow(a, e) => {
            let base = eval_at(a, order)?;
            base.pow_i(*e as i64).map_err(|err| match err {
                Error::NotAPowerSeries { .. } | Error::Shape(_) => Error::PoleAtZero,
                err => err,
            })
        }
        ExprAst::Func(f, a) => {
            let arg = eval_at(a, order)?;
            if !arg.coeff(0).is_zero() {
                return Err(Error::Shape(format!(
                    "argument of {} must vanish at t=0",
                    f.name()
                )));
            }
            match f {
                Func::Exp => arg.exp(),
                Func::Sinh => {
                    let e = arg.exp()?;
                    let em = arg.neg().exp()?;
                    Ok(e.sub(&em).scale_rat(&Rat::new(1.into(), 2.into())))
                }
                Func::Cosh => {
                    let e = arg.exp()?;
                    let em = arg.neg().exp()?;
                    Ok(e.add(&em).scale_rat(&Rat::new(1.into(), 2.into())))
                }
                Func::Tanh => {
                    let e = arg.exp()?;
                    let em = arg.neg().exp()?;
                    e.sub(&em).div(&e.add(&em))
                }
                Func::Sech => {
                    let e = arg.exp()?;
                    let em = arg.neg().exp()?;
                    TruncSeries::constant(Rat::from_integer(2.into()), arg.order())
                        .div(&e.add(&em))
                }
            }
        }
    }
}

/// Evaluate an expression to a truncated series with `order + 1` correct
/// coefficients. Divisions by series vanishing at t=0 eat working
/// precision; evaluation starts with a small guard and retries with a
/// larger one until the requested order is reached.
pub fn eval_series(ast: &ExprAst, order: usize) -> Result<TruncSeries<Rat>> {
    let mut guard = 4usize;
    loop {
        let s = eval_at(ast, order + guard)?;
        if s.order() >= order {
            return Ok(s.truncate(order));
        }
        let missing = order - s.order();
        guard += missing.max(guard);
        if guard > 1024 {
            return Err(Error::Input("guard precision exhausted".into()));
        }
    }
}

/// Parse-then-evaluate convenience.
pub fn eval_str(text: &str, order: usize) -> Result<TruncSeries<Rat>> {
    eval_series(&parse(text)?, order)
}

//! Text form of parameter rational functions, plus the small expression
//! parser shared with the Laurent symmetric function text form.
//!
//! Printed form: `num` when the denominator is 1, otherwise `(num)/(den)`,
//! with integer coefficients and terms in ascending graded-lex order, e.g.
//! `(p0)/(-1 - k + k*p0)`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::bpoly::BPoly;
use super::ratfunc::ParamRat;
use super::CoeffError;

pub(crate) fn poly_to_string(p: &BPoly) -> String {
    let mut terms: Vec<(usize, usize, &BigInt)> = p.terms().collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by_key(|&(i, j, _)| (i + j, i));
    let mut out = String::new();
    for (idx, (i, j, c)) in terms.into_iter().enumerate() {
        let mono = monomial_text(i, j);
        let neg = c.is_negative();
        let mag = c.abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

fn monomial_text(dk: usize, dp: usize) -> String {
    let mut parts = Vec::new();
    match dk {
        0 => {}
        1 => parts.push("k".to_string()),
        d => parts.push(format!("k^{d}")),
    }
    match dp {
        0 => {}
        1 => parts.push("p0".to_string()),
        d => parts.push(format!("p0^{d}")),
    }
    parts.join("*")
}

pub(crate) fn ratfunc_to_string(r: &ParamRat) -> String {
    let (n, d) = r.integer_parts();
    if d.is_one() {
        poly_to_string(&n)
    } else {
        format!("({})/({})", poly_to_string(&n), poly_to_string(&d))
    }
}

/// Parsed arithmetic expression over integers, `k`, `p0` and generators `p_i`.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Int(BigInt),
    K,
    P0,
    Gen(i32),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    K,
    P0,
    Gen(i32),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, CoeffError> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    let bad = |msg: String| CoeffError::Parse(msg);
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            'k' => {
                out.push(Tok::K);
                i += 1
            }
            'p' => {
                i += 1;
                let neg = i + 1 < chars.len() && chars[i] == '-' && chars[i + 1].is_ascii_digit();
                if neg {
                    i += 1;
                }
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(bad(format!("expected index after 'p' in {s:?}")));
                }
                let digits: String = chars[start..i].iter().collect();
                let idx: i32 = digits
                    .parse()
                    .map_err(|_| bad(format!("generator index out of range: {digits}")))?;
                if idx == 0 {
                    if neg {
                        return Err(bad("p-0 is not a generator".into()));
                    }
                    out.push(Tok::P0);
                } else {
                    out.push(Tok::Gen(if neg { -idx } else { idx }));
                }
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Num(digits.parse().expect("digits")));
            }
            other => return Err(bad(format!("unexpected character {other:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr, CoeffError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, CoeffError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, CoeffError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, CoeffError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| CoeffError::Parse("exponent too large".into()))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                t => Err(CoeffError::Parse(format!("expected exponent, found {t:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, CoeffError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Expr::Int(n)),
            Some(Tok::K) => Ok(Expr::K),
            Some(Tok::P0) => Ok(Expr::P0),
            Some(Tok::Gen(i)) => Ok(Expr::Gen(i)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    t => Err(CoeffError::Parse(format!("expected ')', found {t:?}"))),
                }
            }
            t => Err(CoeffError::Parse(format!("unexpected token {t:?}"))),
        }
    }
}

/// Parse an expression; fails on trailing input.
pub fn parse_expr(s: &str) -> Result<Expr, CoeffError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(CoeffError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(CoeffError::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

/// Evaluate a generator-free expression in `Q(k, p0)`.
pub fn eval_ratfunc(e: &Expr) -> Result<ParamRat, CoeffError> {
    Ok(match e {
        Expr::Int(n) => ParamRat::from_bigint(n.clone()),
        Expr::K => ParamRat::k(),
        Expr::P0 => ParamRat::p0(),
        Expr::Gen(i) => {
            return Err(CoeffError::Parse(format!(
                "generator p{i} not allowed in a coefficient"
            )))
        }
        Expr::Add(a, b) => &eval_ratfunc(a)? + &eval_ratfunc(b)?,
        Expr::Sub(a, b) => &eval_ratfunc(a)? - &eval_ratfunc(b)?,
        Expr::Mul(a, b) => &eval_ratfunc(a)? * &eval_ratfunc(b)?,
        Expr::Div(a, b) => eval_ratfunc(a)?.checked_div(&eval_ratfunc(b)?)?,
        Expr::Neg(a) => -eval_ratfunc(a)?,
        Expr::Pow(a, n) => eval_ratfunc(a)?.pow(*n),
    })
}

impl std::str::FromStr for ParamRat {
    type Err = CoeffError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        eval_ratfunc(&parse_expr(s)?)
    }
}

/// Parse `a`, `-a`, or `a/b` as an exact rational.
pub fn parse_rational(s: &str) -> Result<num_rational::BigRational, CoeffError> {
    let e = parse_expr(s)?;
    let r = eval_ratfunc(&e)?;
    r.as_rational()
        .ok_or_else(|| CoeffError::Parse(format!("{s:?} is not a rational number")))
}

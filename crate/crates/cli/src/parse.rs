//! Parser for algebra expressions.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/')? factor)*          juxtaposition multiplies
//! factor := atom ('^' exponent | '^*')*
//! atom   := number | 'q' | 'a' | 'c' | 'a*' | 'c*' | '(' expr ')'
//! ```
//!
//! `a*` is the adjoint of `a` when the star directly follows the letter and
//! is not itself followed by an identifier, digit or `(`; otherwise `*` is
//! multiplication. `x^*` is accepted everywhere as the adjoint.

use std::fmt;

use num_traits::{One, Zero};
use suq2_core::{AlgebraElement, Gen, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Number(Rational),
    Q,
    Generator(Gen),
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>, usize),
    /// Base, exponent (an integer or half-integer) and source position.
    Pow(Box<ExprAst>, Rational, usize),
    Adjoint(Box<ExprAst>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Q,
    Gen(Gen),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\n' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n: Rational = s.parse().map_err(|_| ParseError {
                    pos: start,
                    message: format!("bad number {s}"),
                })?;
                out.push((Tok::Num(n), start));
                continue;
            }
            'q' => out.push((Tok::Q, start)),
            'a' | 'c' => {
                let starred = chars.get(i + 1) == Some(&'*')
                    && !matches!(chars.get(i + 2), Some(n) if n.is_alphanumeric() || *n == '(' || *n == '_');
                let g = match (c, starred) {
                    ('a', false) => Gen::Alpha,
                    ('a', true) => Gen::AlphaStar,
                    ('c', false) => Gen::Gamma,
                    _ => Gen::GammaStar,
                };
                out.push((Tok::Gen(g), start));
                if starred {
                    i += 1;
                }
            }
            '+' => out.push((Tok::Plus, start)),
            '-' => out.push((Tok::Minus, start)),
            '*' => out.push((Tok::Star, start)),
            '/' => out.push((Tok::Slash, start)),
            '^' => out.push((Tok::Caret, start)),
            '(' => out.push((Tok::LParen, start)),
            ')' => out.push((Tok::RParen, start)),
            other => {
                return Err(ParseError {
                    pos: start,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
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
        self.toks.get(self.pos).map_or(self.end, |(_, p)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.here(),
            message: message.into(),
        })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = if self.eat(&Tok::Minus) {
            ExprAst::Neg(Box::new(self.term()?))
        } else {
            self.eat(&Tok::Plus);
            self.term()?
        };
        loop {
            if self.eat(&Tok::Plus) {
                lhs = ExprAst::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = ExprAst::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_) | Tok::Q | Tok::Gen(_) | Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.peek() == Some(&Tok::Slash) {
                let at = self.here();
                self.pos += 1;
                lhs = ExprAst::Div(Box::new(lhs), Box::new(self.factor()?), at);
            } else if self.starts_factor() {
                lhs = ExprAst::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let mut base = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            let at = self.here();
            self.pos += 1;
            if self.eat(&Tok::Star) {
                base = ExprAst::Adjoint(Box::new(base));
                continue;
            }
            let e = self.exponent()?;
            base = ExprAst::Pow(Box::new(base), e, at);
        }
        Ok(base)
    }

    fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let neg = self.eat(&Tok::Minus);
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return self.err("expected an exponent");
        };
        self.pos += 1;
        let mut r = n;
        if self.eat(&Tok::Slash) {
            let Some(Tok::Num(d)) = self.peek().cloned() else {
                return self.err("expected a denominator");
            };
            if d.is_zero() {
                return self.err("zero denominator in exponent");
            }
            self.pos += 1;
            r /= d;
        }
        Ok(if neg { -r } else { r })
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        let at = self.here();
        let e = if self.eat(&Tok::LParen) {
            let e = self.signed_rational()?;
            if !self.eat(&Tok::RParen) {
                return self.err("expected ')'");
            }
            e
        } else {
            let neg = self.eat(&Tok::Minus);
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return self.err("expected an exponent");
            };
            self.pos += 1;
            if neg {
                -n
            } else {
                n
            }
        };
        let two = Rational::from_integer(2.into());
        if !(&e * &two).is_integer() {
            return Err(ParseError {
                pos: at,
                message: format!("exponent {e} is not an integer or half-integer"),
            });
        }
        Ok(e)
    }

    fn atom(&mut self) -> Result<ExprAst, ParseError> {
        let Some(t) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.pos += 1;
        match t {
            Tok::Num(n) => Ok(ExprAst::Number(n)),
            Tok::Q => Ok(ExprAst::Q),
            Tok::Gen(g) => Ok(ExprAst::Generator(g)),
            Tok::LParen => {
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            _ => {
                self.pos -= 1;
                self.err("expected a number, q, a generator or '('")
            }
        }
    }
}

pub fn parse_expr(text: &str) -> Result<ExprAst, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(ParseError {
            pos: 0,
            message: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

fn as_scalar(x: &AlgebraElement) -> Option<Scalar> {
    match x.len() {
        0 => Some(Scalar::zero()),
        1 => {
            let (idx, c) = x.iter().next()?;
            idx.is_identity().then(|| c.clone())
        }
        _ => None,
    }
}

impl ExprAst {
    pub fn eval(&self) -> Result<AlgebraElement, ParseError> {
        let err = |pos: usize, message: String| ParseError { pos, message };
        Ok(match self {
            ExprAst::Number(n) => AlgebraElement::scalar(Scalar::from_rational(n.clone())),
            ExprAst::Q => AlgebraElement::scalar(Scalar::q()),
            ExprAst::Generator(g) => AlgebraElement::gen(*g),
            ExprAst::Neg(x) => -x.eval()?,
            ExprAst::Add(x, y) => x.eval()? + y.eval()?,
            ExprAst::Sub(x, y) => x.eval()? - y.eval()?,
            ExprAst::Mul(x, y) => x.eval()? * y.eval()?,
            ExprAst::Adjoint(x) => x.eval()?.adjoint(),
            ExprAst::Div(x, y, at) => {
                let d = as_scalar(&y.eval()?)
                    .ok_or_else(|| err(*at, "division is only defined by scalars".into()))?;
                let inv = d
                    .inv()
                    .map_err(|_| err(*at, "division by zero".into()))?;
                x.eval()?.scale(&inv)
            }
            ExprAst::Pow(base, e, at) => {
                if **base == ExprAst::Q {
                    let two_e = (e * Rational::from_integer(2.into())).to_integer();
                    let two_e: i64 = two_e
                        .try_into()
                        .map_err(|_| err(*at, "exponent out of range".into()))?;
                    return Ok(AlgebraElement::scalar(Scalar::u_pow(two_e)));
                }
                if !e.is_integer() {
                    return Err(err(*at, format!("half-integer exponent {e} needs base q")));
                }
                let n: i64 = e
                    .to_integer()
                    .try_into()
                    .map_err(|_| err(*at, "exponent out of range".into()))?;
                let b = base.eval()?;
                if let Some(c) = as_scalar(&b) {
                    let p = c
                        .pow(n)
                        .map_err(|_| err(*at, "negative power of zero".into()))?;
                    return Ok(AlgebraElement::scalar(p));
                }
                if n == 0 {
                    return Err(err(*at, "exponent 0 is not allowed on algebra elements".into()));
                }
                if n < 0 {
                    return Err(err(*at, "negative exponents exist only for scalars".into()));
                }
                b.pow(n as u32)
            }
        })
    }
}

/// Parses and evaluates to normal form.
pub fn parse_element(text: &str) -> Result<AlgebraElement, ParseError> {
    parse_expr(text)?.eval()
}

/// Parses a scalar expression such as `1/2` or `q^(1/2)`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let x = parse_element(text)?;
    as_scalar(&x).ok_or(ParseError {
        pos: 0,
        message: "expected a scalar".into(),
    })
}

pub fn is_one(x: &AlgebraElement) -> bool {
    as_scalar(x).is_some_and(|c| c.is_one())
}

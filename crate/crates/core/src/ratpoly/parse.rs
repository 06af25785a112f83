//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('+' | '-') unary | power
//! power := atom ('^' INT)?
//! atom  := INT | IDENT | '(' expr ')'
//! ```
//!
//! Division is allowed only by nonzero constants, so `1/2*x` is fine and
//! `x/y` is not. Floats and implicit multiplication (`2x`, `x y`) are
//! rejected.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use super::{MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at position {pos}")]
    UnexpectedChar { pos: usize, found: char },
    #[error("unexpected end of input at position {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("expected {expected} at position {pos}")]
    Expected { pos: usize, expected: &'static str },
    #[error("unknown variable {name:?} at position {pos}")]
    UnknownVariable { pos: usize, name: String },
    #[error("floating-point literal at position {pos}; write rationals as p/q")]
    FloatLiteral { pos: usize },
    #[error("implicit multiplication at position {pos}; use '*'")]
    ImplicitMultiplication { pos: usize },
    #[error("division by a non-constant at position {pos}")]
    NonConstantDivisor { pos: usize },
    #[error("division by zero at position {pos}")]
    DivisionByZero { pos: usize },
    #[error("exponent too large at position {pos}")]
    ExponentTooLarge { pos: usize },
}

/// Names `x1, …, xn`.
pub fn default_variables(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Parses `src` as a polynomial in the given ordered variables.
pub fn parse_poly<S: AsRef<str>>(src: &str, vars: &[S]) -> Result<MultiPoly, ParseError> {
    let toks = lex(src)?;
    let names: Vec<&str> = vars.iter().map(AsRef::as_ref).collect();
    let mut p = Parser {
        toks,
        i: 0,
        vars: &names,
        end: src.chars().count(),
    };
    let out = p.expr()?;
    match p.peek() {
        None => Ok(out),
        Some(t) => Err(match t.kind {
            Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {
                ParseError::ImplicitMultiplication { pos: t.pos }
            }
            _ => ParseError::UnexpectedChar {
                pos: t.pos,
                found: t.kind.as_char(),
            },
        }),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
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
    fn as_char(&self) -> char {
        match self {
            Tok::Int(_) => '0',
            Tok::Ident(s) => s.chars().next().unwrap_or('?'),
            Tok::Plus => '+',
            Tok::Minus => '-',
            Tok::Star => '*',
            Tok::Slash => '/',
            Tok::Caret => '^',
            Tok::LParen => '(',
            Tok::RParen => ')',
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: Tok,
    pos: usize,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(kind) = simple {
            out.push(Token { kind, pos });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i] == '.' || chars[i] == 'e' || chars[i] == 'E') {
                let next_digit = chars.get(i + 1).is_some_and(|c| c.is_ascii_digit());
                if chars[i] == '.' || next_digit {
                    return Err(ParseError::FloatLiteral { pos: start });
                }
            }
            let digits: String = chars[start..i].iter().collect();
            let v: BigInt = digits.parse().expect("ascii digits");
            out.push(Token {
                kind: Tok::Int(v),
                pos,
            });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                kind: Tok::Ident(chars[start..i].iter().collect()),
                pos,
            });
        } else if c == '.' {
            return Err(ParseError::FloatLiteral { pos });
        } else {
            return Err(ParseError::UnexpectedChar { pos, found: c });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    i: usize,
    vars: &'a [&'a str],
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.i)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.i).cloned();
        self.i += 1;
        t
    }

    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t.kind {
                Tok::Plus => {
                    self.i += 1;
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.i += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while let Some(t) = self.peek() {
            match t.kind {
                Tok::Star => {
                    self.i += 1;
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.i += 1;
                    let pos = self.peek().map_or(self.end, |t| t.pos);
                    let d = self.unary()?;
                    let c = d
                        .as_constant()
                        .ok_or(ParseError::NonConstantDivisor { pos })?;
                    if c.is_zero() {
                        return Err(ParseError::DivisionByZero { pos });
                    }
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        match self.peek().map(|t| &t.kind) {
            Some(Tok::Plus) => {
                self.i += 1;
                self.unary()
            }
            Some(Tok::Minus) => {
                self.i += 1;
                Ok(-&self.unary()?)
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().map(|t| &t.kind), Some(Tok::Caret)) {
            self.i += 1;
            match self.bump() {
                Some(Token {
                    kind: Tok::Int(e),
                    pos,
                }) => {
                    let e: u32 = e
                        .try_into()
                        .ok()
                        .filter(|&e| e <= 1000)
                        .ok_or(ParseError::ExponentTooLarge { pos })?;
                    Ok(base.pow(e))
                }
                Some(t) => Err(ParseError::Expected {
                    pos: t.pos,
                    expected: "non-negative integer exponent",
                }),
                None => Err(ParseError::UnexpectedEnd { pos: self.end }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let n = self.n();
        match self.bump() {
            None => Err(ParseError::UnexpectedEnd { pos: self.end }),
            Some(Token { kind, pos }) => match kind {
                Tok::Int(v) => Ok(MultiPoly::constant(n, Rational::from_integer(v))),
                Tok::Ident(name) => match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MultiPoly::var(n, i)),
                    None => Err(ParseError::UnknownVariable { pos, name }),
                },
                Tok::LParen => {
                    let inner = self.expr()?;
                    match self.bump() {
                        Some(Token {
                            kind: Tok::RParen, ..
                        }) => Ok(inner),
                        Some(t) => Err(ParseError::Expected {
                            pos: t.pos,
                            expected: "')'",
                        }),
                        None => Err(ParseError::UnexpectedEnd { pos: self.end }),
                    }
                }
                other => Err(ParseError::UnexpectedChar {
                    pos,
                    found: other.as_char(),
                }),
            },
        }
    }
}

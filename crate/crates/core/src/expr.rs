//! Parsing and printing of polynomial/rational expressions in one variable z.
//!
//! Grammar (whitespace insignificant, no implicit multiplication):
//!
//! ```text
//! expr   := term (("+"|"-") term)* ;
//! term   := factor (("*"|"/") factor)* ;
//! factor := ("-")? base ("^" uint)? ;
//! base   := "z" | "i" | number | "(" expr ")" ;
//! number := digits ("." digits)? ("i")? ;
//! ```
//!
//! A number immediately followed by `i` is an imaginary literal (`2i`), which
//! keeps the canonical `(a+bi)` coefficient form parseable. Division by an
//! expression containing z is only allowed as the outermost operation (one
//! rational bar); anything else is rejected.

use crate::poly::{Polynomial, RationalMap};
use num_complex::Complex64;
use std::fmt;
use thiserror::Error;

const MAX_EXPONENT: u32 = 64;
const MAX_DEPTH: u32 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    ExponentNotNonnegativeInteger,
    ExponentTooLarge,
    ZeroDenominator,
    NestedDivision,
    NumberOutOfRange,
    TooDeep,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character '{c}'"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::ExponentNotNonnegativeInteger => {
                write!(f, "exponent not a nonnegative integer")
            }
            ParseErrorKind::ExponentTooLarge => {
                write!(f, "exponent larger than {MAX_EXPONENT} is not supported")
            }
            ParseErrorKind::ZeroDenominator => write!(f, "division by zero"),
            ParseErrorKind::NestedDivision => write!(
                f,
                "division by an expression containing z must be the outermost operation"
            ),
            ParseErrorKind::NumberOutOfRange => write!(f, "numeric literal out of range"),
            ParseErrorKind::TooDeep => write!(f, "expression nested too deeply"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionKind {
    Polynomial,
    Rational,
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionKind::Polynomial => write!(f, "polynomial"),
            FunctionKind::Rational => write!(f, "rational"),
        }
    }
}

/// A parsed expression together with its source text.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionExpr {
    pub text: String,
    pub kind: FunctionKind,
    pub map: RationalMap,
}

impl FunctionExpr {
    pub fn parse(text: &str) -> Result<FunctionExpr, ParseError> {
        let map = parse_function(text)?;
        let kind = if map.is_polynomial() {
            FunctionKind::Polynomial
        } else {
            FunctionKind::Rational
        };
        Ok(FunctionExpr {
            text: text.to_owned(),
            kind,
            map,
        })
    }
}

/// Parse an expression into a rational map. A pure polynomial yields
/// denominator 1.
pub fn parse_function(text: &str) -> Result<RationalMap, ParseError> {
    let mut parser = Parser {
        src: text,
        pos: 0,
        depth: 0,
    };
    parser.skip_ws();
    let value = parser.expr()?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.err_here(ParseErrorKind::UnexpectedChar(c)));
    }
    RationalMap::new(value.num, value.den).map_err(|_| ParseError {
        kind: ParseErrorKind::ZeroDenominator,
        offset: text.len(),
    })
}

/// Parse a constant complex value like "0.25", "1+2i", "-1".
pub fn parse_constant(text: &str) -> Result<Complex64, ParseError> {
    let map = parse_function(text)?;
    if !map.is_polynomial() || !map.num().is_constant() {
        return Err(ParseError {
            kind: ParseErrorKind::UnexpectedChar('z'),
            offset: text.find('z').unwrap_or(0),
        });
    }
    Ok(map.num().coeff(0))
}

/// Intermediate value: a polynomial (den == 1) or a sealed rational pair.
struct Value {
    num: Polynomial,
    den: Polynomial,
}

impl Value {
    fn poly(p: Polynomial) -> Value {
        Value {
            num: p,
            den: Polynomial::one(),
        }
    }

    fn is_poly(&self) -> bool {
        self.den.is_constant()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: u32,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn err_here(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            kind,
            offset: self.pos,
        }
    }

    fn require_poly(&self, v: &Value, at: usize) -> Result<(), ParseError> {
        if v.is_poly() {
            Ok(())
        } else {
            Err(ParseError {
                kind: ParseErrorKind::NestedDivision,
                offset: at,
            })
        }
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err_here(ParseErrorKind::TooDeep));
        }
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            let op_at = self.pos;
            let op = match self.peek() {
                Some('+') => '+',
                Some('-') => '-',
                _ => break,
            };
            self.bump();
            let rhs = self.term()?;
            self.require_poly(&acc, op_at)?;
            self.require_poly(&rhs, op_at)?;
            acc.num = if op == '+' {
                &acc.num + &rhs.num
            } else {
                &acc.num - &rhs.num
            };
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            let op_at = self.pos;
            let op = match self.peek() {
                Some('*') => '*',
                Some('/') => '/',
                _ => break,
            };
            self.bump();
            let rhs = self.factor()?;
            match op {
                '*' => {
                    self.require_poly(&acc, op_at)?;
                    self.require_poly(&rhs, op_at)?;
                    acc.num = &acc.num * &rhs.num;
                }
                _ => {
                    self.require_poly(&rhs, op_at)?;
                    if rhs.num.is_zero() {
                        return Err(ParseError {
                            kind: ParseErrorKind::ZeroDenominator,
                            offset: op_at,
                        });
                    }
                    if rhs.num.is_constant() {
                        // dividing by a plain constant keeps the value shape
                        self.require_poly(&acc, op_at)?;
                        acc.num = acc.num.scale(rhs.num.coeff(0).inv());
                    } else {
                        self.require_poly(&acc, op_at)?;
                        acc = Value {
                            num: acc.num,
                            den: rhs.num,
                        };
                    }
                }
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, ParseError> {
        self.skip_ws();
        let neg_at = self.pos;
        let negate = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let mut value = self.base()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            let caret_at = self.pos;
            self.bump();
            let exp = self.exponent()?;
            self.require_poly(&value, caret_at)?;
            value.num = value.num.pow(exp as usize);
        }
        if negate {
            self.require_poly(&value, neg_at)?;
            value.num = value.num.scale(Complex64::new(-1.0, 0.0));
        }
        Ok(value)
    }

    fn base(&mut self) -> Result<Value, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err_here(ParseErrorKind::TooDeep));
        }
        self.skip_ws();
        let result = match self.peek() {
            Some('z') => {
                self.bump();
                Ok(Value::poly(Polynomial::identity()))
            }
            Some('i') => {
                self.bump();
                Ok(Value::poly(Polynomial::constant(Complex64::new(0.0, 1.0))))
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                match self.peek() {
                    Some(')') => {
                        self.bump();
                        Ok(inner)
                    }
                    Some(c) => Err(self.err_here(ParseErrorKind::UnexpectedChar(c))),
                    None => Err(self.err_here(ParseErrorKind::UnexpectedEnd)),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let (v, imaginary) = self.number()?;
                let coeff = if imaginary {
                    Complex64::new(0.0, v)
                } else {
                    Complex64::new(v, 0.0)
                };
                Ok(Value::poly(Polynomial::constant(coeff)))
            }
            Some(c) => Err(self.err_here(ParseErrorKind::UnexpectedChar(c))),
            None => Err(self.err_here(ParseErrorKind::UnexpectedEnd)),
        };
        self.depth -= 1;
        result
    }

    fn number(&mut self) -> Result<(f64, bool), ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.peek() == Some('.') {
            self.bump();
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.err_here(match self.peek() {
                    Some(c) => ParseErrorKind::UnexpectedChar(c),
                    None => ParseErrorKind::UnexpectedEnd,
                }));
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.bump();
            }
        }
        let text = &self.src[start..self.pos];
        let v: f64 = text.parse().map_err(|_| ParseError {
            kind: ParseErrorKind::NumberOutOfRange,
            offset: start,
        })?;
        if !v.is_finite() {
            return Err(ParseError {
                kind: ParseErrorKind::NumberOutOfRange,
                offset: start,
            });
        }
        let imaginary = self.peek() == Some('i');
        if imaginary {
            self.bump();
        }
        Ok((v, imaginary))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(ParseError {
                kind: ParseErrorKind::ExponentNotNonnegativeInteger,
                offset: start,
            });
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.peek() == Some('.') {
            return Err(ParseError {
                kind: ParseErrorKind::ExponentNotNonnegativeInteger,
                offset: start,
            });
        }
        let text = &self.src[start..self.pos];
        let exp: u32 = text.parse().map_err(|_| ParseError {
            kind: ParseErrorKind::ExponentTooLarge,
            offset: start,
        })?;
        if exp > MAX_EXPONENT {
            return Err(ParseError {
                kind: ParseErrorKind::ExponentTooLarge,
                offset: start,
            });
        }
        Ok(exp)
    }
}

/// Canonical complex literal `(a+bi)`, parseable by the grammar. The float
/// formatting is shortest-round-trip, so printing and re-parsing is exact.
pub fn format_complex(c: Complex64) -> String {
    let re = c.re;
    let im = c.im;
    if im < 0.0 {
        format!("({re}-{}i)", -im)
    } else {
        // normalize -0.0 so the sign never leaks into the text
        let im = if im == 0.0 { 0.0 } else { im };
        format!("({re}+{im}i)")
    }
}

fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "(0+0i)".to_owned();
    }
    let mut terms = Vec::new();
    for (k, &coeff) in p.coeffs().iter().enumerate() {
        if coeff.re == 0.0 && coeff.im == 0.0 {
            continue;
        }
        let lit = format_complex(coeff);
        terms.push(match k {
            0 => lit,
            1 => format!("{lit}*z"),
            _ => format!("{lit}*z^{k}"),
        });
    }
    terms.join(" + ")
}

/// Canonical text form: ascending powers, explicit `*`, coefficients as
/// `(a+bi)`; a non-constant denominator prints as one rational bar.
pub fn format_function(map: &RationalMap) -> String {
    if map.is_polynomial() {
        format_polynomial(map.num())
    } else {
        format!(
            "({}) / ({})",
            format_polynomial(map.num()),
            format_polynomial(map.den())
        )
    }
}

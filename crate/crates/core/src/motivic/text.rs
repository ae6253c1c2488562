//! Textual form of virtual classes.
//!
//! Grammar (whitespace-insensitive between tokens):
//!
//! ```text
//! class  := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT ['^' INT]
//!         | 'L' ['^' ['-'] INT]
//!         | IDENT ['^' INT]                       -- named symbol
//!         | 'Sym' INT '(' class ')' ['^' INT]     -- symmetric power
//!         | '(' class ')' ['^' INT]
//! ```
//!
//! `Display` emits the canonical form: terms in (L-exponent, monomial)
//! order, factors joined by ` * `, coefficient first, then the `L` power,
//! then symbols. Parsing accepts everything `Display` emits, so classes
//! round-trip exactly. Only `L` may carry a negative exponent. The idents
//! `L` and `Sym<digits>` are reserved and cannot name atomic symbols.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::class::{Monomial, Symbol, VirtualClass};
use super::series::sym_n;

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Atomic(name) => f.write_str(name),
            Symbol::Sym { n, base } => {
                write!(f, "Sym{n}(")?;
                let mut first = true;
                for (sym, mult) in base.grouped() {
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    write!(f, "{sym}")?;
                    if mult > 1 {
                        write!(f, "^{mult}")?;
                    }
                }
                f.write_str(")")
            }
        }
    }
}

/// The factors of one term, without sign: coefficient magnitude, `L` power,
/// then grouped symbols.
fn term_factors(coeff_abs: i64, l_power: i64, monomial: &Monomial) -> Vec<String> {
    let mut factors = Vec::new();
    if coeff_abs != 1 {
        factors.push(coeff_abs.to_string());
    }
    match l_power {
        0 => {}
        1 => factors.push("L".to_string()),
        k => factors.push(format!("L^{k}")),
    }
    for (sym, mult) in monomial.grouped() {
        if mult > 1 {
            factors.push(format!("{sym}^{mult}"));
        } else {
            factors.push(sym.to_string());
        }
    }
    if factors.is_empty() {
        factors.push("1".to_string());
    }
    factors
}

impl fmt::Display for VirtualClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&(l_power, ref monomial), &coeff)) in self.terms().enumerate() {
            if i == 0 {
                if coeff < 0 {
                    f.write_str("-")?;
                }
            } else if coeff < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            f.write_str(&term_factors(coeff.unsigned_abs() as i64, l_power, monomial).join(" * "))?;
        }
        Ok(())
    }
}

/// A parse failure, with the byte offset where it happened.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseClassError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseClassError> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            b'-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            b'*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            b'^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            b'(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            b')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let value = text.parse::<i64>().map_err(|_| ParseClassError {
                    position: start,
                    message: format!("integer literal `{text}` is too large"),
                })?;
                tokens.push((start, Token::Num(value)));
            }
            b'A'..=b'Z' | b'a'..=b'z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((start, Token::Ident(input[start..i].to_string())));
            }
            _ => {
                return Err(ParseClassError {
                    position: i,
                    message: format!("unexpected character `{}`", &input[i..].chars().next().unwrap()),
                });
            }
        }
    }
    Ok(tokens)
}

/// `Sym<digits>` idents are the symmetric-power operator.
fn sym_operator_degree(ident: &str) -> Option<u32> {
    let digits = ident.strip_prefix("Sym")?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.input_len, |(p, _)| *p)
    }

    fn advance(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> ParseClassError {
        ParseClassError { position: self.position(), message: message.into() }
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), ParseClassError> {
        if self.peek() == Some(&token) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {what}")))
        }
    }

    fn parse_sum(&mut self) -> Result<VirtualClass, ParseClassError> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(&Token::Plus) {
            self.pos += 1;
        }
        let first = self.parse_term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.parse_term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.parse_term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<VirtualClass, ParseClassError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.parse_factor()?;
        }
        Ok(acc)
    }

    /// Parses `'^' ['-'] INT` if present; `None` means no exponent written.
    fn parse_exponent(&mut self) -> Result<Option<i64>, ParseClassError> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(None);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.advance() {
            Some(&Token::Num(n)) => Ok(Some(if negative { -n } else { n })),
            _ => Err(ParseClassError {
                position: self.tokens.get(self.pos.saturating_sub(1)).map_or(self.input_len, |(p, _)| *p),
                message: "expected an integer exponent after `^`".to_string(),
            }),
        }
    }

    /// Exponent for anything other than `L`, where negatives are not invertible.
    fn nonnegative_exponent(&mut self, start: usize) -> Result<Option<u32>, ParseClassError> {
        match self.parse_exponent()? {
            None => Ok(None),
            Some(e) if e >= 0 => Ok(Some(e as u32)),
            Some(_) => Err(ParseClassError {
                position: start,
                message: "negative exponents are only defined for L".to_string(),
            }),
        }
    }

    fn parse_factor(&mut self) -> Result<VirtualClass, ParseClassError> {
        let start = self.position();
        match self.advance().cloned() {
            Some(Token::Num(n)) => {
                let base = VirtualClass::int(n);
                match self.nonnegative_exponent(start)? {
                    None => Ok(base),
                    Some(e) => Ok(base.pow(e)),
                }
            }
            Some(Token::Ident(name)) if name == "L" => {
                let e = self.parse_exponent()?.unwrap_or(1);
                Ok(VirtualClass::lefschetz(e))
            }
            Some(Token::Ident(name)) => {
                if let Some(n) = sym_operator_degree(&name) {
                    self.expect(Token::LParen, &format!("`(` after `{name}`"))?;
                    let inner = self.parse_sum()?;
                    self.expect(Token::RParen, "closing `)`")?;
                    let base = sym_n(&inner, n);
                    match self.nonnegative_exponent(start)? {
                        None => Ok(base),
                        Some(e) => Ok(base.pow(e)),
                    }
                } else {
                    match self.nonnegative_exponent(start)? {
                        None => Ok(VirtualClass::atom(name)),
                        Some(e) => {
                            let symbols = vec![Symbol::atomic(name); e as usize];
                            Ok(VirtualClass::from_monomial(Monomial::from_symbols(symbols)))
                        }
                    }
                }
            }
            Some(Token::LParen) => {
                let inner = self.parse_sum()?;
                self.expect(Token::RParen, "closing `)`")?;
                match self.nonnegative_exponent(start)? {
                    None => Ok(inner),
                    Some(e) => Ok(inner.pow(e)),
                }
            }
            _ => Err(ParseClassError { position: start, message: "expected a number, symbol, `L`, `Sym<n>(..)`, or `(`".to_string() }),
        }
    }
}

impl FromStr for VirtualClass {
    type Err = ParseClassError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(input)?;
        if tokens.is_empty() {
            return Err(ParseClassError { position: 0, message: "empty input".to_string() });
        }
        let mut parser = Parser { tokens: &tokens, pos: 0, input_len: input.len() };
        let class = parser.parse_sum()?;
        if parser.pos != tokens.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(class)
    }
}

impl Serialize for VirtualClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VirtualClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

//! Text format for ordinals and worms.
//!
//! ```text
//! ord  := sum
//! sum  := atom ("+" atom)*
//! atom := NAT | "w" | "w^(" sum ")" | "phi(" sum "," sum ")"
//!       | "e[" sum "](" sum ")" | "(" sum ")"
//! worm := "T" | ord ("." ord)*
//! ```
//!
//! `w` is ω, `phi(a,b)` is the Veblen value φ_a(b) and `e[x](g)` is the
//! hyperexponential `e^x(g)`, evaluated while parsing. Whitespace between
//! tokens is ignored. The empty worm is written `T`.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::ordinal::{hyperexp, whnf, Ordinal, Term};
use crate::worm::Worm;

/// Largest numeral accepted by the parser. Naturals are stored unary.
pub const MAX_NUMERAL: u64 = 100_000;

/// Rendering style for [`print_ordinal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// Expanded Cantor/Veblen sum with spaced `+`: `w^(w) + w + 3`.
    Sum,
    /// The same sum without spaces, used inside worms: `w^(w)+w+3`.
    Compact,
    /// Weak hyperexponential normal form: `e[w](1) + e[1](2)`.
    Whnf,
}

pub fn print_ordinal(a: &Ordinal, style: Style) -> String {
    let mut out = String::new();
    match style {
        Style::Sum => write_sum(&mut out, a, " + "),
        Style::Compact => write_sum(&mut out, a, "+"),
        Style::Whnf => write_whnf(&mut out, a),
    }
    out
}

fn write_sum(out: &mut String, a: &Ordinal, sep: &str) {
    if a.is_zero() {
        out.push('0');
        return;
    }
    let ones = a
        .terms()
        .iter()
        .rev()
        .take_while(|t| t.level().is_zero() && t.arg().is_zero())
        .count();
    let infinite = &a.terms()[..a.terms().len() - ones];
    for (i, t) in infinite.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        write_term(out, t);
    }
    if ones > 0 {
        if !infinite.is_empty() {
            out.push_str(sep);
        }
        out.push_str(&ones.to_string());
    }
}

fn write_term(out: &mut String, t: &Term) {
    if t.level().is_zero() {
        if t.arg() == &Ordinal::one() {
            out.push('w');
        } else {
            out.push_str("w^(");
            write_sum(out, t.arg(), "+");
            out.push(')');
        }
    } else {
        out.push_str("phi(");
        write_sum(out, t.level(), "+");
        out.push(',');
        write_sum(out, t.arg(), "+");
        out.push(')');
    }
}

fn write_whnf(out: &mut String, a: &Ordinal) {
    let view = whnf(a);
    if view.terms.is_empty() {
        out.push_str(&view.trailing.to_string());
        return;
    }
    for (i, t) in view.terms.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        out.push_str("e[");
        write_sum(out, &t.exponent, "+");
        out.push_str("](");
        write_whnf(out, &t.argument);
        out.push(')');
    }
    if view.trailing > 0 {
        out.push_str(" + ");
        out.push_str(&view.trailing.to_string());
    }
}

/// Worm text: modalities joined with `.`, the empty worm as `T`.
pub fn print_worm(worm: &Worm) -> String {
    if worm.is_empty() {
        return "T".to_string();
    }
    worm.modalities()
        .iter()
        .map(|m| print_ordinal(m, Style::Compact))
        .collect::<Vec<_>>()
        .join(".")
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let style = if f.alternate() { Style::Compact } else { Style::Sum };
        f.write_str(&print_ordinal(self, style))
    }
}

impl fmt::Display for Worm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_worm(self))
    }
}

/// Structured form: `{"sum": ..., "whnf": ...}`.
impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_struct("Ordinal", 2)?;
        map.serialize_field("sum", &print_ordinal(self, Style::Sum))?;
        map.serialize_field("whnf", &print_ordinal(self, Style::Whnf))?;
        map.end()
    }
}

/// Structured form: the worm text.
impl Serialize for Worm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&print_worm(self))
    }
}

pub fn parse_ordinal(text: &str) -> Result<Ordinal> {
    let mut p = Parser::new(text);
    let value = p.sum()?;
    p.expect_end()?;
    Ok(value)
}

pub fn parse_worm(text: &str) -> Result<Worm> {
    let mut p = Parser::new(text);
    p.skip_ws();
    if p.peek() == Some(b'T') {
        p.pos += 1;
        p.expect_end()?;
        return Ok(Worm::empty());
    }
    let mut modalities = vec![p.sum()?];
    while p.eat(b'.') {
        modalities.push(p.sum()?);
    }
    p.expect_end()?;
    Ok(Worm::new(modalities))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.unexpected(&format!("`{}`", c as char))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn unexpected<T>(&mut self, wanted: &str) -> Result<T> {
        match self.peek() {
            None => self.error(format!("expected {wanted}, found end of input")),
            Some(c) if c.is_ascii_graphic() => {
                self.error(format!("expected {wanted}, found `{}`", c as char))
            }
            Some(_) => self.error(format!("expected {wanted}, found a non-ASCII character")),
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.unexpected("end of input"),
        }
    }

    fn sum(&mut self) -> Result<Ordinal> {
        let mut parts = vec![self.atom()?];
        while self.eat(b'+') {
            parts.push(self.atom()?);
        }
        Ok(parts
            .into_iter()
            .rev()
            .reduce(|acc, left| left.add(&acc))
            .expect("at least one summand"))
    }

    fn atom(&mut self) -> Result<Ordinal> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => self.numeral(),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'p') => {
                if !self.eat_keyword("phi") {
                    return self.unexpected("an ordinal term");
                }
                self.expect(b'(')?;
                let a = self.sum()?;
                self.expect(b',')?;
                let b = self.sum()?;
                self.expect(b')')?;
                Ok(Ordinal::veblen(&a, &b))
            }
            Some(b'e') => {
                self.pos += 1;
                self.expect(b'[')?;
                let xi = self.sum()?;
                self.expect(b']')?;
                self.expect(b'(')?;
                let g = self.sum()?;
                self.expect(b')')?;
                Ok(hyperexp(&xi, &g))
            }
            Some(b'w') => {
                self.pos += 1;
                if self.eat(b'^') {
                    self.expect(b'(')?;
                    let x = self.sum()?;
                    self.expect(b')')?;
                    Ok(Ordinal::omega_pow(&x))
                } else {
                    Ok(Ordinal::omega())
                }
            }
            _ => self.unexpected("an ordinal term"),
        }
    }

    fn numeral(&mut self) -> Result<Ordinal> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII digits");
        match digits.parse::<u64>() {
            Ok(n) if n <= MAX_NUMERAL => Ok(Ordinal::nat(n)),
            _ => {
                self.pos = start;
                self.error(format!("numeral {digits} exceeds the limit {MAX_NUMERAL}"))
            }
        }
    }
}

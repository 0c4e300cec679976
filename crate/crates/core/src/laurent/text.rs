//! Canonical text and JSON encodings.
//!
//! Text: terms in decreasing monomial order, e.g.
//! `x[1]^2 x[3] + 2 * x[2] - x[3]^-1`. A coefficient of 1 is omitted in
//! front of a nontrivial monomial, and so is the exponent 1. The zero
//! polynomial is `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, Monomial};
use crate::error::{Error, Result};
use crate::id::VertexId;

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x[{v}]")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag} * {m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.src[..self.pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        let c = self.src[self.pos..].chars().next().expect("bump at end");
        self.pos += c.len_utf8();
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let n = rest.bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            return Err(self.err("expected digits"));
        }
        self.pos += n;
        Ok(&rest[..n])
    }

    fn factor(&mut self) -> Result<(VertexId, i64)> {
        // caller has seen 'x'
        self.bump();
        if !self.eat('[') {
            return Err(self.err("expected `[` after `x`"));
        }
        let rest = &self.src[self.pos..];
        let Some(end) = rest.find(']') else {
            return Err(self.err("unterminated variable name"));
        };
        let name = rest[..end].trim();
        if name.is_empty() {
            return Err(self.err("empty variable name"));
        }
        self.pos += end + 1;
        let mut e = 1i64;
        if self.eat('^') {
            let neg = self.eat('-');
            let d = self.digits()?;
            e = d.parse().map_err(|_| self.err("exponent out of range"))?;
            if neg {
                e = -e;
            }
        }
        Ok((VertexId::from(name), e))
    }

    fn term(&mut self) -> Result<(Monomial, BigInt)> {
        let mut coeff = BigInt::one();
        let mut seen = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.digits()?.parse().expect("digits");
            seen = true;
            self.eat('*');
        }
        let mut factors = Vec::new();
        while let Some('x') = self.peek() {
            factors.push(self.factor()?);
            seen = true;
            self.eat('*');
        }
        if !seen {
            return Err(self.err("expected a term"));
        }
        Ok((Monomial::from_exponents(factors), coeff))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        let mut neg = self.eat('-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lexer { src: s, pos: 0 }.poly()
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: JsonInt,
    exponents: BTreeMap<VertexId, i64>,
}

/// Coefficients are written as decimal strings so that values beyond 2^53
/// survive JSON tooling; plain integers are accepted on input.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Text(String),
    Small(i64),
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms()
            .rev()
            .map(|(m, c)| JsonTerm {
                coeff: JsonInt::Text(c.to_string()),
                exponents: m.to_map(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<JsonTerm>::deserialize(d)?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let c: BigInt = match t.coeff {
                JsonInt::Text(s) => s.parse().map_err(D::Error::custom)?,
                JsonInt::Small(n) => n.into(),
            };
            out.push((Monomial::from_exponents(t.exponents), c));
        }
        Ok(LaurentPoly::from_terms(out))
    }
}

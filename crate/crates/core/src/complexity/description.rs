//! The description grammar standing in for a decompressor.
//!
//! Canonical serialization (every character costs 8 bits):
//!
//! ```text
//! expr    := sum
//! sum     := prod | prod "+" prod
//! prod    := power | power "*" power
//! power   := operand | operand "^" operand
//! operand := atom | "(" expr ")"                 parentheses only where needed
//! atom    := decimal                             Lit, no leading zeros
//!          | "T(" b ")" | "T(" b "," h ")"       Tower, short form when b = h
//!          | "R(" expr "," count ")"            Rep: block word repeated
//!          | "B(" base32hex ")"                 Blob: LZW-compressed bytes
//!          | "C(" q "," n "," expr ")"          code from concatenated words
//!          | "S(" q "," n "," k ["," expr] ")"  Reed–Solomon, points default 0..n
//!          | "L(" q "," n "," expr ")"          linear code from generator rows
//! ```
//!
//! The character set is `0-9 a-v A-Z ^ * + ( ) ,`, 64 symbols.

use super::lzw;
use super::{ComplexityError, Object};
use crate::codes::{reed_solomon, Alphabet, Code};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use std::fmt;

/// Values above this many bits are not materialised.
pub const MATERIALIZE_BITS: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Description {
    Lit(BigUint),
    Pow(Box<Description>, Box<Description>),
    Mul(Box<Description>, Box<Description>),
    Add(Box<Description>, Box<Description>),
    Tower { base: BigUint, height: BigUint },
    Rep { block: Box<Description>, count: usize },
    Blob(Vec<u8>),
    CodeWords { q: usize, n: usize, words: Box<Description> },
    ReedSolomon { q: usize, n: usize, k: usize, points: Option<Box<Description>> },
    Linear { q: usize, n: usize, generator: Box<Description> },
}

impl Description {
    pub fn lit(n: impl Into<BigUint>) -> Self {
        Description::Lit(n.into())
    }

    pub fn pow(a: Description, b: Description) -> Self {
        Description::Pow(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Description, b: Description) -> Self {
        Description::Mul(Box::new(a), Box::new(b))
    }

    pub fn add(a: Description, b: Description) -> Self {
        Description::Add(Box::new(a), Box::new(b))
    }

    /// Binding strength; atoms bind tightest.
    fn precedence(&self) -> u8 {
        match self {
            Description::Add(..) => 1,
            Description::Mul(..) => 2,
            Description::Pow(..) => 3,
            _ => 4,
        }
    }

    pub fn serialize(&self) -> String {
        let mut s = String::new();
        self.write(&mut s);
        s
    }

    /// `8 ×` the length of the canonical serialization.
    pub fn bit_length(&self) -> u64 {
        8 * self.serialize().len() as u64
    }

    /// Operators do not chain, so an operand of equal or weaker binding is
    /// parenthesized.
    fn write_operand(&self, parent: u8, out: &mut String) {
        if self.precedence() <= parent {
            out.push('(');
            self.write(out);
            out.push(')');
        } else {
            self.write(out);
        }
    }

    fn write(&self, out: &mut String) {
        use std::fmt::Write;
        match self {
            Description::Lit(n) => write!(out, "{n}").unwrap(),
            Description::Pow(a, b) | Description::Mul(a, b) | Description::Add(a, b) => {
                let p = self.precedence();
                a.write_operand(p, out);
                out.push(match self {
                    Description::Pow(..) => '^',
                    Description::Mul(..) => '*',
                    _ => '+',
                });
                b.write_operand(p, out);
            }
            Description::Tower { base, height } if base == height => write!(out, "T({base})").unwrap(),
            Description::Tower { base, height } => write!(out, "T({base},{height})").unwrap(),
            Description::Rep { block, count } => {
                out.push_str("R(");
                block.write(out);
                write!(out, ",{count})").unwrap();
            }
            Description::Blob(bytes) => {
                out.push_str("B(");
                out.push_str(&lzw::compress(bytes));
                out.push(')');
            }
            Description::CodeWords { q, n, words } => {
                write!(out, "C({q},{n},").unwrap();
                words.write(out);
                out.push(')');
            }
            Description::ReedSolomon { q, n, k, points } => {
                write!(out, "S({q},{n},{k}").unwrap();
                if let Some(p) = points {
                    out.push(',');
                    p.write(out);
                }
                out.push(')');
            }
            Description::Linear { q, n, generator } => {
                write!(out, "L({q},{n},").unwrap();
                generator.write(out);
                out.push(')');
            }
        }
    }

    /// Parses a canonical serialization. Non-canonical spellings such as
    /// `007` or `(5)` are rejected so that parsing and serializing are
    /// mutually inverse.
    pub fn parse(s: &str) -> Result<Self, ComplexityError> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let d = p.expr()?;
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        if d.serialize() != s {
            return Err(ComplexityError::Parse { pos: 0, message: "not in canonical form".into() });
        }
        Ok(d)
    }

    /// Evaluates the description to the object it describes.
    pub fn evaluate(&self) -> Result<Object, ComplexityError> {
        match self {
            Description::Lit(n) => Ok(Object::Int(n.clone())),
            Description::Pow(a, b) => {
                let (a, b) = (a.evaluate_int()?, b.evaluate_int()?);
                let e = b.to_u64().filter(|&e| e.saturating_mul(a.bits()) <= MATERIALIZE_BITS);
                match e {
                    Some(e) => Ok(Object::Int(num_traits::pow(a, e as usize))),
                    None if a <= BigUint::one() => Ok(Object::Int(a)),
                    None => Err(ComplexityError::TooLarge),
                }
            }
            Description::Mul(a, b) => Ok(Object::Int(a.evaluate_int()? * b.evaluate_int()?)),
            Description::Add(a, b) => Ok(Object::Int(a.evaluate_int()? + b.evaluate_int()?)),
            Description::Tower { base, height } => Object::tower(base.clone(), height.clone()),
            Description::Rep { block, count } => {
                let block = block.evaluate_word()?;
                Ok(Object::Word(block.repeat(*count)))
            }
            Description::Blob(bytes) => Ok(Object::Word(bytes.clone())),
            Description::CodeWords { q, n, words } => {
                let bytes = words.evaluate_word()?;
                let rows = split_rows(&bytes, *n)?;
                Ok(Object::Code(Code::new(Alphabet::new(*q)?, *n, rows)?))
            }
            Description::ReedSolomon { q, n, k, points } => {
                let points = match points {
                    Some(p) => p.evaluate_word()?,
                    None => crate::codes::reed_solomon::default_points(*n),
                };
                Ok(Object::Code(reed_solomon(*q, *n, *k, &points)?))
            }
            Description::Linear { q, n, generator } => {
                let bytes = generator.evaluate_word()?;
                let rows = split_rows(&bytes, *n)?;
                Ok(Object::Code(Code::linear(Alphabet::field(*q)?, rows)?))
            }
        }
    }

    fn evaluate_int(&self) -> Result<BigUint, ComplexityError> {
        match self.evaluate()? {
            Object::Int(n) => Ok(n),
            Object::Tower { .. } => Err(ComplexityError::TooLarge),
            _ => Err(ComplexityError::TypeMismatch("integer")),
        }
    }

    fn evaluate_word(&self) -> Result<Vec<u8>, ComplexityError> {
        match self.evaluate()? {
            Object::Word(w) => Ok(w),
            _ => Err(ComplexityError::TypeMismatch("word")),
        }
    }
}

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

fn split_rows(bytes: &[u8], n: usize) -> Result<Vec<Vec<u8>>, ComplexityError> {
    if n == 0 || bytes.len() % n != 0 {
        return Err(ComplexityError::TypeMismatch("word list of whole rows"));
    }
    Ok(bytes.chunks(n).map(<[u8]>::to_vec).collect())
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ComplexityError {
        ComplexityError::Parse { pos: self.pos, message: message.to_string() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ComplexityError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Description, ComplexityError> {
        self.level(1)
    }

    fn level(&mut self, precedence: u8) -> Result<Description, ComplexityError> {
        let (op, build): (u8, fn(Description, Description) -> Description) = match precedence {
            1 => (b'+', Description::add),
            2 => (b'*', Description::mul),
            3 => (b'^', Description::pow),
            _ => return self.operand(),
        };
        let lhs = self.level(precedence + 1)?;
        if self.peek() != Some(op) {
            return Ok(lhs);
        }
        self.pos += 1;
        let rhs = self.level(precedence + 1)?;
        Ok(build(lhs, rhs))
    }

    fn operand(&mut self) -> Result<Description, ComplexityError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Description::Lit(self.number()?)),
            Some(tag @ (b'T' | b'R' | b'B' | b'C' | b'S' | b'L')) => {
                self.pos += 1;
                self.expect(b'(')?;
                let d = self.tagged(tag)?;
                self.expect(b')')?;
                Ok(d)
            }
            _ => Err(self.error("expected an operand")),
        }
    }

    fn number(&mut self) -> Result<BigUint, ComplexityError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("decimal digits"))
    }

    fn small(&mut self) -> Result<usize, ComplexityError> {
        self.number()?.to_usize().ok_or_else(|| self.error("number too large"))
    }

    fn tagged(&mut self, tag: u8) -> Result<Description, ComplexityError> {
        Ok(match tag {
            b'T' => {
                let base = self.number()?;
                let height = if self.peek() == Some(b',') {
                    self.pos += 1;
                    self.number()?
                } else {
                    base.clone()
                };
                Description::Tower { base, height }
            }
            b'R' => {
                let block = Box::new(self.expr()?);
                self.expect(b',')?;
                Description::Rep { block, count: self.small()? }
            }
            b'B' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| lzw::BASE32HEX.contains(&c)) {
                    self.pos += 1;
                }
                let payload = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Description::Blob(lzw::decompress(payload).ok_or_else(|| self.error("bad blob"))?)
            }
            b'C' | b'L' => {
                let q = self.small()?;
                self.expect(b',')?;
                let n = self.small()?;
                self.expect(b',')?;
                let inner = Box::new(self.expr()?);
                if tag == b'C' {
                    Description::CodeWords { q, n, words: inner }
                } else {
                    Description::Linear { q, n, generator: inner }
                }
            }
            b'S' => {
                let q = self.small()?;
                self.expect(b',')?;
                let n = self.small()?;
                self.expect(b',')?;
                let k = self.small()?;
                let points = if self.peek() == Some(b',') {
                    self.pos += 1;
                    Some(Box::new(self.expr()?))
                } else {
                    None
                };
                Description::ReedSolomon { q, n, k, points }
            }
            _ => unreachable!("tag checked by caller"),
        })
    }
}

/// `b ↑↑ h` for `b ≥ 2, h ≥ 1`, or `None` once it exceeds [`MATERIALIZE_BITS`].
pub(crate) fn tower_value(base: &BigUint, height: &BigUint) -> Option<BigUint> {
    let mut value = base.clone();
    let mut level = BigUint::one();
    while &level < height {
        let e = value.to_u64()?;
        if e.saturating_mul(base.bits()) > MATERIALIZE_BITS {
            return None;
        }
        value = num_traits::pow(base.clone(), e as usize);
        level += 1u32;
    }
    Some(value)
}

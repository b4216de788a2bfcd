//! Text form of polynomials over R.
//!
//! Output is canonical: terms in descending powers joined by ` + `, each term
//! `coef*x^k`, `x^k`, `x` or `coef`. Coefficients print as field pretty forms
//! (`w`, `(w+1)`), `u`, `u*w`, `(1+u)`, `w*(1+u)` or `(a + u*b)`.
//!
//! Input accepts any sum/product expression in `x`, `u`, `w`, decimal field
//! bits, parentheses and `^`, so every printed form parses back and so do the
//! unit-scaled displays such as `(1+u)*x^2 + w*x + 1 + u`. `-` is read as `+`
//! (characteristic 2).

use super::RPoly;
use crate::error::{Error, Result};
use crate::gf2m::{pretty_bits, FieldElem};
use crate::ring::{ChainRing, RElem};

fn paren_field(bits: u8) -> String {
    let s = pretty_bits(bits);
    if s.contains('+') {
        format!("({s})")
    } else {
        s
    }
}

fn coef_str(c: RElem) -> String {
    match (c.a.0, c.b.0) {
        (a, 0) => paren_field(a),
        (0, 1) => "u".into(),
        (0, b) => format!("u*{}", paren_field(b)),
        (1, 1) => "(1+u)".into(),
        (a, b) if a == b => format!("{}*(1+u)", paren_field(a)),
        (a, b) => format!("({} + u*{})", pretty_bits(a), paren_field(b)),
    }
}

/// Canonical text form, e.g. `x^2 + w*(1+u)*x + 1`.
pub fn pretty_rpoly(p: &RPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms = Vec::new();
    for (k, &c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let xs = match k {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{k}"),
        };
        terms.push(match (k, c == RElem::ONE) {
            (0, _) => coef_str(c),
            (_, true) => xs,
            _ => format!("{}*{xs}", coef_str(c)),
        });
    }
    terms.join(" + ")
}

/// Parses a polynomial over R = GF(2^m) + u GF(2^m).
pub fn parse_rpoly(text: &str, m: u32) -> Result<RPoly> {
    let ring = ChainRing::new(m)?;
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: ChainRing,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RPoly> {
        let mut acc = self.term()?;
        while let Some(b'+' | b'-') = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = acc.add(&t, &self.ring);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RPoly> {
        let mut acc = self.power()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.power()?;
            acc = acc.mul(&f, &self.ring);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<RPoly> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let e = self.number()?;
            let mut acc = RPoly::one(&self.ring);
            for _ in 0..e {
                acc = acc.mul(&base, &self.ring);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("number out of range"))
    }

    fn atom(&mut self) -> Result<RPoly> {
        let ring = self.ring;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(RPoly::x_pow(&ring, 1))
            }
            Some(b'u') => {
                self.pos += 1;
                Ok(RPoly::from_coeffs(vec![RElem::U]))
            }
            Some(b'w') => {
                let w = ring
                    .field()
                    .generator()
                    .ok_or_else(|| self.error("'w' is undefined for m = 1"))?;
                self.pos += 1;
                Ok(RPoly::from_coeffs(vec![RElem::from(w)]))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.number()?;
                if v >= ring.field().order() as u64 {
                    return Err(self.error("field literal out of range"));
                }
                Ok(RPoly::from_coeffs(vec![RElem::from(FieldElem(v as u8))]))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

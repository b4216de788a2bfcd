//! The chain ring R = GF(2^m) + u GF(2^m) with u^2 = 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2m::{pretty_bits, FieldElem, Gf2m};

/// The element a + u*b. Serializes as `[a_bits, b_bits]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(FieldElem, FieldElem)", into = "(FieldElem, FieldElem)")]
pub struct RElem {
    pub a: FieldElem,
    pub b: FieldElem,
}

impl From<(FieldElem, FieldElem)> for RElem {
    fn from((a, b): (FieldElem, FieldElem)) -> Self {
        RElem { a, b }
    }
}

impl From<RElem> for (FieldElem, FieldElem) {
    fn from(x: RElem) -> Self {
        (x.a, x.b)
    }
}

impl From<FieldElem> for RElem {
    fn from(a: FieldElem) -> Self {
        RElem { a, b: FieldElem::ZERO }
    }
}

impl RElem {
    pub const ZERO: RElem = RElem { a: FieldElem::ZERO, b: FieldElem::ZERO };
    pub const ONE: RElem = RElem { a: FieldElem::ONE, b: FieldElem::ZERO };
    pub const U: RElem = RElem { a: FieldElem::ZERO, b: FieldElem::ONE };
    /// 1 + u, the constacyclic constant.
    pub const LAMBDA: RElem = RElem { a: FieldElem::ONE, b: FieldElem::ONE };

    pub fn new(a: FieldElem, b: FieldElem) -> Self {
        RElem { a, b }
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Units are exactly the elements with a != 0.
    #[inline]
    pub fn is_unit(self) -> bool {
        !self.a.is_zero()
    }

    /// Reduction modulo u.
    #[inline]
    pub fn residue(self) -> FieldElem {
        self.a
    }
}

impl std::ops::Add for RElem {
    type Output = RElem;
    #[inline]
    fn add(self, rhs: RElem) -> RElem {
        RElem { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl std::ops::AddAssign for RElem {
    #[inline]
    fn add_assign(&mut self, rhs: RElem) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

/// Arithmetic context for R over a fixed GF(2^m).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChainRing {
    field: Gf2m,
}

impl ChainRing {
    pub fn new(m: u32) -> Result<Self> {
        Ok(ChainRing { field: Gf2m::new(m)? })
    }

    pub fn from_field(field: Gf2m) -> Self {
        ChainRing { field }
    }

    #[inline]
    pub fn field(&self) -> &Gf2m {
        &self.field
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.field.degree()
    }

    pub fn contains(&self, x: RElem) -> bool {
        self.field.contains(x.a) && self.field.contains(x.b)
    }

    /// All 4^m elements, ordered by (b, a) bits.
    pub fn elements(&self) -> impl Iterator<Item = RElem> + '_ {
        self.field
            .elements()
            .flat_map(move |b| self.field.elements().map(move |a| RElem { a, b }))
    }

    #[inline]
    pub fn lambda(&self) -> RElem {
        RElem::LAMBDA
    }

    /// (a + ub)(c + ud) = ac + u(ad + bc).
    #[inline]
    pub fn mul(&self, x: RElem, y: RElem) -> RElem {
        let f = &self.field;
        RElem {
            a: f.mul(x.a, y.a),
            b: f.mul(x.a, y.b) + f.mul(x.b, y.a),
        }
    }

    #[inline]
    pub fn scale(&self, c: FieldElem, x: RElem) -> RElem {
        RElem { a: self.field.mul(c, x.a), b: self.field.mul(c, x.b) }
    }

    /// (a + ub)^-1 = a^-1 + u a^-2 b.
    pub fn inv(&self, x: RElem) -> Result<RElem> {
        if !x.is_unit() {
            return Err(Error::NotAUnit(self.pretty(x)));
        }
        let f = &self.field;
        let ai = f.inv(x.a)?;
        Ok(RElem { a: ai, b: f.mul(f.mul(ai, ai), x.b) })
    }

    pub fn pow(&self, x: RElem, mut e: u64) -> RElem {
        let mut base = x;
        let mut acc = RElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Pretty form `a + u*b`, e.g. `1+u`, `w + u*(w+1)`, `u`.
    pub fn pretty(&self, x: RElem) -> String {
        pretty_relem(x)
    }
}

fn paren(bits: u8) -> String {
    let s = pretty_bits(bits);
    if s.contains('+') {
        format!("({s})")
    } else {
        s
    }
}

pub(crate) fn pretty_relem(x: RElem) -> String {
    match (x.a.0, x.b.0) {
        (0, 0) => "0".into(),
        (1, 1) => "1+u".into(),
        (a, 0) => pretty_bits(a),
        (0, 1) => "u".into(),
        (0, b) => format!("u*{}", paren(b)),
        (a, 1) => format!("{} + u", pretty_bits(a)),
        (a, b) => format!("{} + u*{}", pretty_bits(a), paren(b)),
    }
}

impl fmt::Display for RElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_relem(*self))
    }
}

//! Arithmetic in GF(2^m) for 1 <= m <= 8.
//!
//! Elements use the polynomial-basis bit encoding: bit `i` of [`FieldElem`] is
//! the coefficient of `w^i`, where `w` is a root of the fixed modulus for the
//! degree (see [`modulus`]). Multiplication is a carry-less product reduced
//! by that modulus.
//!
//! The trace map and the canonical [`TraceOrthogonalBasis`] live here as
//! well; the Lee weight and the Gray map both read coordinates through it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 8;

/// Fixed irreducible modulus for each degree, including the leading term.
///
/// | m | modulus |
/// |---|---------|
/// | 1 | x + 1 (unused; GF(2) needs no reduction beyond bit 0) |
/// | 2 | x^2 + x + 1 |
/// | 3 | x^3 + x + 1 |
/// | 4 | x^4 + x + 1 |
/// | 5 | x^5 + x^2 + 1 |
/// | 6 | x^6 + x + 1 |
/// | 7 | x^7 + x^3 + 1 |
/// | 8 | x^8 + x^4 + x^3 + x^2 + 1 |
pub const fn modulus(m: u32) -> u32 {
    match m {
        1 => 0b11,
        2 => 0b111,
        3 => 0b1011,
        4 => 0b1_0011,
        5 => 0b10_0101,
        6 => 0b100_0011,
        7 => 0b1000_1001,
        8 => 0b1_0001_1101,
        _ => 0,
    }
}

/// An element of GF(2^m) in polynomial-basis encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(pub u8);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::ops::Add for FieldElem {
    type Output = FieldElem;
    #[inline]
    fn add(self, rhs: FieldElem) -> FieldElem {
        FieldElem(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for FieldElem {
    #[inline]
    fn add_assign(&mut self, rhs: FieldElem) {
        self.0 ^= rhs.0;
    }
}

/// The field GF(2^m). Carries only the degree; all state is in the constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gf2m {
    m: u32,
    modulus: u32,
}

impl Gf2m {
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        Ok(Gf2m {
            m,
            modulus: modulus(m),
        })
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements, 2^m.
    #[inline]
    pub fn order(&self) -> usize {
        1 << self.m
    }

    /// The primitive-looking generator `w` (bits = 2). Only defined for m >= 2.
    pub fn generator(&self) -> Option<FieldElem> {
        (self.m >= 2).then_some(FieldElem(2))
    }

    pub fn elem(&self, bits: u32) -> Result<FieldElem> {
        if bits >= (1 << self.m) {
            return Err(Error::InvalidElement { bits, m: self.m });
        }
        Ok(FieldElem(bits as u8))
    }

    #[inline]
    pub fn contains(&self, x: FieldElem) -> bool {
        (x.0 as u32) < (1 << self.m)
    }

    /// All elements in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..(1u32 << self.m)).map(|b| FieldElem(b as u8))
    }

    #[inline]
    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        x + y
    }

    #[inline]
    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        let mut acc: u32 = 0;
        let (a, mut b) = (x.0 as u32, y.0 as u32);
        let mut i = 0;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a << i;
            }
            b >>= 1;
            i += 1;
        }
        // reduce the (at most 2m-1 bit) product
        let m = self.m;
        let mut bit = 2 * m - 2;
        loop {
            if bit < m {
                break;
            }
            if acc & (1 << bit) != 0 {
                acc ^= self.modulus << (bit - m);
            }
            bit -= 1;
        }
        FieldElem(acc as u8)
    }

    #[inline]
    pub fn square(&self, x: FieldElem) -> FieldElem {
        self.mul(x, x)
    }

    pub fn pow(&self, x: FieldElem, mut e: u64) -> FieldElem {
        let mut base = x;
        let mut acc = FieldElem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, computed as x^(2^m - 2).
    pub fn inv(&self, x: FieldElem) -> Result<FieldElem> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(x, (1u64 << self.m) - 2))
    }

    /// Absolute trace x + x^2 + x^4 + ... + x^(2^(m-1)), an element of GF(2).
    pub fn trace(&self, x: FieldElem) -> u8 {
        let mut acc = x;
        let mut t = x;
        for _ in 1..self.m {
            t = self.square(t);
            acc += t;
        }
        debug_assert!(acc.0 <= 1, "trace left the prime field");
        acc.0
    }

    /// Pretty form as a polynomial in `w`, e.g. `w^2+w`, `w+1`, `1`, `0`.
    pub fn pretty(&self, x: FieldElem) -> String {
        pretty_bits(x.0)
    }
}

pub(crate) fn pretty_bits(bits: u8) -> String {
    if bits == 0 {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for i in (0..8).rev() {
        if bits & (1 << i) != 0 {
            terms.push(match i {
                0 => "1".to_string(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            });
        }
    }
    terms.join("+")
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&pretty_bits(self.0))
    }
}

/// A basis (a_1, ..., a_m) of GF(2^m) over GF(2) with Tr(a_i a_j) = [i = j].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TraceOrthogonalBasis {
    m: u32,
    elements: Vec<FieldElem>,
}

impl TraceOrthogonalBasis {
    /// Validates an explicit basis against the identity trace-Gram condition.
    pub fn new(field: &Gf2m, elements: Vec<FieldElem>) -> Result<Self> {
        let m = field.degree();
        if elements.len() != m as usize || !elements.iter().all(|&e| field.contains(e)) {
            return Err(Error::NotFound(m));
        }
        let basis = TraceOrthogonalBasis { m, elements };
        if !basis.gram_is_identity(field) {
            return Err(Error::NotFound(m));
        }
        Ok(basis)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn elements(&self) -> &[FieldElem] {
        &self.elements
    }

    pub fn field(&self) -> Gf2m {
        Gf2m::new(self.m).expect("basis holds a valid degree")
    }

    /// Trace-Gram matrix, row-major.
    pub fn gram(&self, field: &Gf2m) -> Vec<Vec<u8>> {
        self.elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| field.trace(field.mul(a, b)))
                    .collect()
            })
            .collect()
    }

    pub fn gram_is_identity(&self, field: &Gf2m) -> bool {
        self.gram(field)
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &t)| t == u8::from(i == j)))
    }

    /// Coordinates of `x`: bit `i` of the result is Tr(x * a_i).
    #[inline]
    pub fn coords_packed(&self, field: &Gf2m, x: FieldElem) -> u8 {
        let mut out = 0u8;
        for (i, &a) in self.elements.iter().enumerate() {
            out |= field.trace(field.mul(x, a)) << i;
        }
        out
    }

    /// Coordinates of `x` as a bit vector of length m.
    pub fn coords(&self, field: &Gf2m, x: FieldElem) -> Vec<u8> {
        let packed = self.coords_packed(field, x);
        (0..self.m).map(|i| (packed >> i) & 1).collect()
    }

    /// Inverse of [`coords`](Self::coords): sum of c_i * a_i.
    pub fn from_coords(&self, coords: &[u8]) -> FieldElem {
        coords
            .iter()
            .zip(&self.elements)
            .filter(|(&c, _)| c & 1 == 1)
            .fold(FieldElem::ZERO, |acc, (_, &a)| acc + a)
    }

    /// Table mapping each element's bits to its packed coordinates.
    pub(crate) fn coord_table(&self, field: &Gf2m) -> Vec<u8> {
        field.elements().map(|x| self.coords_packed(field, x)).collect()
    }
}

/// Finds the lexicographically first trace-orthogonal basis.
///
/// Candidates are tried in increasing bit order; each extension keeps the
/// partial Gram matrix equal to the identity, with backtracking. Trace
/// orthogonality forces linear independence, so no separate rank check is
/// needed.
pub fn find_tob(m: u32) -> Result<TraceOrthogonalBasis> {
    let field = Gf2m::new(m)?;
    let candidates: Vec<FieldElem> = field
        .elements()
        .filter(|&x| field.trace(field.mul(x, x)) == 1)
        .collect();

    fn extend(
        field: &Gf2m,
        candidates: &[FieldElem],
        start: usize,
        chosen: &mut Vec<FieldElem>,
    ) -> bool {
        if chosen.len() == field.degree() as usize {
            return true;
        }
        for idx in start..candidates.len() {
            let c = candidates[idx];
            if chosen.iter().all(|&p| field.trace(field.mul(p, c)) == 0) {
                chosen.push(c);
                if extend(field, candidates, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::with_capacity(m as usize);
    if !extend(&field, &candidates, 0, &mut chosen) {
        return Err(Error::NotFound(m));
    }
    Ok(TraceOrthogonalBasis {
        m,
        elements: chosen,
    })
}

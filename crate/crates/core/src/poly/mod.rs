//! Dense polynomials over GF(2^m) and over R.
//!
//! Both coefficient rings have characteristic 2, so subtraction is addition
//! throughout. [`Poly`] is generic over a [`CoeffRing`] context; [`FPoly`] and
//! [`RPoly`] are the two instantiations used by the rest of the crate.

mod factor;
mod text;

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2m::{FieldElem, Gf2m};
use crate::ring::{ChainRing, RElem};

pub use factor::{factor_xn_minus_1, is_irreducible, mu_lift, paper_form};
pub use text::{parse_rpoly, pretty_rpoly};

/// Coefficient ring of characteristic 2.
pub trait CoeffRing {
    type Elem: Copy + Eq + Default + Debug;

    fn zero(&self) -> Self::Elem {
        Self::Elem::default()
    }
    fn one(&self) -> Self::Elem;
    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn unit_inverse(&self, x: Self::Elem) -> Option<Self::Elem>;
    fn render(&self, x: Self::Elem) -> String;
    fn is_zero(&self, x: Self::Elem) -> bool {
        x == self.zero()
    }
}

impl CoeffRing for Gf2m {
    type Elem = FieldElem;
    fn one(&self) -> FieldElem {
        FieldElem::ONE
    }
    fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        x + y
    }
    fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        Gf2m::mul(self, x, y)
    }
    fn unit_inverse(&self, x: FieldElem) -> Option<FieldElem> {
        self.inv(x).ok()
    }
    fn render(&self, x: FieldElem) -> String {
        self.pretty(x)
    }
}

impl CoeffRing for ChainRing {
    type Elem = RElem;
    fn one(&self) -> RElem {
        RElem::ONE
    }
    fn add(&self, x: RElem, y: RElem) -> RElem {
        x + y
    }
    fn mul(&self, x: RElem, y: RElem) -> RElem {
        ChainRing::mul(self, x, y)
    }
    fn unit_inverse(&self, x: RElem) -> Option<RElem> {
        self.inv(x).ok()
    }
    fn render(&self, x: RElem) -> String {
        self.pretty(x)
    }
}

/// Dense polynomial, coefficient `i` multiplies x^i. Never stores trailing
/// zeros; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

pub type FPoly = Poly<FieldElem>;
pub type RPoly = Poly<RElem>;

impl<E: Copy + Eq + Default> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<E>) -> Self {
        while coeffs.last() == Some(&E::default()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// c * x^k.
    pub fn monomial(c: E, k: usize) -> Self {
        let mut coeffs = vec![E::default(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> E {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<E> {
        self.coeffs.last().copied()
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    pub fn to_vec_padded(&self, len: usize) -> Vec<E> {
        let mut v = self.coeffs.clone();
        v.resize(len.max(v.len()), E::default());
        v
    }
}

impl<E: Copy + Eq + Default + Debug> Poly<E> {
    pub fn one<R: CoeffRing<Elem = E>>(ring: &R) -> Self {
        Self::from_coeffs(vec![ring.one()])
    }

    /// x^k.
    pub fn x_pow<R: CoeffRing<Elem = E>>(ring: &R, k: usize) -> Self {
        Self::monomial(ring.one(), k)
    }

    pub fn is_monic<R: CoeffRing<Elem = E>>(&self, ring: &R) -> bool {
        self.leading() == Some(ring.one())
    }

    pub fn add<R: CoeffRing<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|i| ring.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn mul<R: CoeffRing<Elem = E>>(&self, other: &Self, ring: &R) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if ring.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(out[i + j], ring.mul(a, b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale<R: CoeffRing<Elem = E>>(&self, c: E, ring: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&a| ring.mul(c, a)).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![E::default(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::from_coeffs(coeffs)
    }

    /// Euclidean division; the divisor's leading coefficient must be a unit.
    pub fn divmod<R: CoeffRing<Elem = E>>(&self, den: &Self, ring: &R) -> Result<(Self, Self)> {
        let lead = den.leading().ok_or(Error::DivisionByZeroPoly)?;
        let lead_inv = ring
            .unit_inverse(lead)
            .ok_or_else(|| Error::NonUnitLeadingCoeff(ring.render(lead)))?;
        let dd = den.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![ring.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = rem[i];
            if ring.is_zero(c) {
                continue;
            }
            let q = ring.mul(c, lead_inv);
            quot[i - dd] = q;
            for (j, &d) in den.coeffs.iter().enumerate() {
                let k = i - dd + j;
                rem[k] = ring.add(rem[k], ring.mul(q, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem<R: CoeffRing<Elem = E>>(&self, den: &Self, ring: &R) -> Result<Self> {
        Ok(self.divmod(den, ring)?.1)
    }

    /// True iff `self` divides `p`.
    pub fn divides<R: CoeffRing<Elem = E>>(&self, p: &Self, ring: &R) -> Result<bool> {
        Ok(p.rem(self, ring)?.is_zero())
    }

    /// Scales by the inverse of the leading coefficient.
    pub fn monic<R: CoeffRing<Elem = E>>(&self, ring: &R) -> Result<Self> {
        let lead = self.leading().ok_or(Error::DivisionByZeroPoly)?;
        let inv = ring
            .unit_inverse(lead)
            .ok_or_else(|| Error::NonUnitLeadingCoeff(ring.render(lead)))?;
        Ok(self.scale(inv, ring))
    }

    /// Monic gcd. Every intermediate remainder needs a unit leading
    /// coefficient, so this is only total over a field.
    pub fn gcd<R: CoeffRing<Elem = E>>(&self, other: &Self, ring: &R) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, ring)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic(ring)
        }
    }

    pub fn mulmod<R: CoeffRing<Elem = E>>(&self, other: &Self, modulus: &Self, ring: &R) -> Result<Self> {
        self.mul(other, ring).rem(modulus, ring)
    }

    pub fn powmod<R: CoeffRing<Elem = E>>(&self, mut e: u128, modulus: &Self, ring: &R) -> Result<Self> {
        let mut base = self.rem(modulus, ring)?;
        let mut acc = Self::one(ring).rem(modulus, ring)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, modulus, ring)?;
            }
            base = base.mulmod(&base, modulus, ring)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn product<'a, R: CoeffRing<Elem = E>>(polys: impl IntoIterator<Item = &'a Self>, ring: &R) -> Self
    where
        E: 'a,
    {
        polys
            .into_iter()
            .fold(Self::one(ring), |acc, p| acc.mul(p, ring))
    }

    /// Plain text rendering over the ring (descending powers).
    pub fn render<R: CoeffRing<Elem = E>>(&self, ring: &R) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if ring.is_zero(c) {
                continue;
            }
            let xs = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            let cs = ring.render(c);
            terms.push(if c == ring.one() && k > 0 {
                xs
            } else if k == 0 && (self.coeffs.len() == 1 || !cs.contains('+')) {
                cs
            } else if k == 0 {
                format!("({cs})")
            } else if cs.contains('+') {
                format!("({cs})*{xs}")
            } else {
                format!("{cs}*{xs}")
            });
        }
        terms.join(" + ")
    }
}

/// x^n - 1 over GF(2^m).
pub fn xn_minus_1(n: usize, field: &Gf2m) -> FPoly {
    FPoly::x_pow(field, n).add(&FPoly::one(field), field)
}

/// x^n - (1+u) over R.
pub fn xn_minus_lambda(n: usize, ring: &ChainRing) -> RPoly {
    RPoly::x_pow(ring, n).add(&RPoly::from_coeffs(vec![RElem::LAMBDA]), ring)
}

impl RPoly {
    /// Embeds a GF(2^m) polynomial (u-part zero).
    pub fn from_fpoly(p: &FPoly) -> RPoly {
        RPoly::from_coeffs(p.coeffs().iter().map(|&a| RElem::from(a)).collect())
    }

    /// Image modulo u.
    pub fn residue(&self) -> FPoly {
        FPoly::from_coeffs(self.coeffs().iter().map(|c| c.residue()).collect())
    }

    /// u * self.
    pub fn times_u(&self) -> RPoly {
        RPoly::from_coeffs(
            self.coeffs()
                .iter()
                .map(|c| RElem::new(FieldElem::ZERO, c.a))
                .collect(),
        )
    }

    /// p(x) -> p((1+u) x). Applying it twice is the identity.
    pub fn substitute_lambda(&self, ring: &ChainRing) -> RPoly {
        RPoly::from_coeffs(
            self.coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| if i % 2 == 1 { ring.mul(c, RElem::LAMBDA) } else { c })
                .collect(),
        )
    }

    /// Reduces modulo x^n - (1+u) by folding x^(n+i) onto (1+u) x^i.
    pub fn reduce_constacyclic(&self, n: usize, ring: &ChainRing) -> RPoly {
        let mut out = vec![RElem::ZERO; n.min(self.coeffs().len())];
        for (i, &c) in self.coeffs().iter().enumerate() {
            let wraps = i / n;
            let c = if wraps % 2 == 1 { ring.mul(c, RElem::LAMBDA) } else { c };
            out[i % n] += c;
        }
        RPoly::from_coeffs(out)
    }

    /// Monic reciprocal a_0^-1 x^k p(1/x).
    pub fn reciprocal(&self, ring: &ChainRing) -> Result<RPoly> {
        let a0 = self.coeff(0);
        let inv = ring
            .inv(a0)
            .map_err(|_| Error::NonUnitConstantTerm(ring.pretty(a0)))?;
        let mut rev: Vec<RElem> = self.coeffs().to_vec();
        rev.reverse();
        Ok(RPoly::from_coeffs(rev).scale(inv, ring))
    }

    pub fn pretty(&self) -> String {
        pretty_rpoly(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(bits: &[u8]) -> FPoly {
        FPoly::from_coeffs(bits.iter().map(|&b| FieldElem(b)).collect())
    }

    fn r(pairs: &[(u8, u8)]) -> RPoly {
        RPoly::from_coeffs(
            pairs
                .iter()
                .map(|&(a, b)| RElem::new(FieldElem(a), FieldElem(b)))
                .collect(),
        )
    }

    #[test]
    fn canonical_form() {
        assert_eq!(f(&[1, 0, 0]).coeffs().len(), 1);
        assert!(f(&[0, 0]).is_zero());
        assert_eq!(FPoly::zero().degree(), None);
    }

    #[test]
    fn divmod_over_gf2() {
        let gf2 = Gf2m::new(1).unwrap();
        let (q, rem) = f(&[1, 0, 1]).divmod(&f(&[1, 1]), &gf2).unwrap();
        assert_eq!(q, f(&[1, 1]));
        assert!(rem.is_zero());
        let p = f(&[1, 1, 0, 1]);
        let (q, rem) = p.divmod(&FPoly::one(&gf2), &gf2).unwrap();
        assert_eq!((q, rem), (p, FPoly::zero()));
    }

    #[test]
    fn divmod_over_ring() {
        let ring = ChainRing::new(2).unwrap();
        // (x + 1 + u) / (x + 1) = 1 rem u
        let (q, rem) = r(&[(1, 1), (1, 0)]).divmod(&r(&[(1, 0), (1, 0)]), &ring).unwrap();
        assert_eq!(q, RPoly::one(&ring));
        assert_eq!(rem, r(&[(0, 1)]));
        assert!(matches!(
            r(&[(1, 0), (1, 0)]).divmod(&r(&[(0, 0), (0, 1)]), &ring),
            Err(Error::NonUnitLeadingCoeff(_))
        ));
        assert!(matches!(
            r(&[(1, 0)]).divmod(&RPoly::zero(), &ring),
            Err(Error::DivisionByZeroPoly)
        ));
    }

    #[test]
    fn reciprocal_cases() {
        let ring = ChainRing::new(2).unwrap();
        let x1 = r(&[(1, 0), (1, 0)]);
        assert_eq!(x1.reciprocal(&ring).unwrap(), x1);
        // x + w -> x + w^2
        assert_eq!(
            r(&[(2, 0), (1, 0)]).reciprocal(&ring).unwrap(),
            r(&[(3, 0), (1, 0)])
        );
        assert!(matches!(
            r(&[(0, 1), (1, 0)]).reciprocal(&ring),
            Err(Error::NonUnitConstantTerm(_))
        ));
        let full = xn_minus_lambda(7, &ring);
        assert_eq!(full.reciprocal(&ring).unwrap(), full);
    }

    #[test]
    fn lambda_substitution_is_an_involution() {
        let ring = ChainRing::new(2).unwrap();
        let p = r(&[(1, 2), (3, 0), (2, 1), (1, 0), (0, 3)]);
        assert_eq!(p.substitute_lambda(&ring).substitute_lambda(&ring), p);
    }

    #[test]
    fn constacyclic_reduction() {
        let ring = ChainRing::new(2).unwrap();
        let n = 3;
        // x^3 = 1 + u, x^6 = 1
        assert_eq!(
            RPoly::x_pow(&ring, 3).reduce_constacyclic(n, &ring),
            r(&[(1, 1)])
        );
        assert_eq!(RPoly::x_pow(&ring, 6).reduce_constacyclic(n, &ring), RPoly::one(&ring));
        let p = r(&[(1, 0), (2, 1), (0, 0), (3, 3), (1, 2), (0, 1), (2, 0)]);
        let via_div = p.rem(&xn_minus_lambda(n, &ring), &ring).unwrap();
        assert_eq!(p.reduce_constacyclic(n, &ring), via_div);
    }

    #[test]
    fn gcd_over_field() {
        let gf4 = Gf2m::new(2).unwrap();
        let a = f(&[1, 1]).mul(&f(&[2, 1]), &gf4);
        let b = f(&[1, 1]).mul(&f(&[3, 1]), &gf4);
        assert_eq!(a.gcd(&b, &gf4).unwrap(), f(&[1, 1]));
    }
}

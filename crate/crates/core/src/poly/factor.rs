//! Factorization of x^n - 1 over GF(2^m) for odd n, and the lift of its
//! factors to x^n - (1+u) over R.
//!
//! Distinct-degree splitting peels off the product of all degree-d factors
//! as gcd(x^(q^d) - x, rest); equal-degree splitting then separates them with
//! the absolute trace map a + a^2 + ... + a^(2^(md-1)), which takes values in
//! GF(2) on every residue field and so splits with probability >= 1/2.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{xn_minus_1, FPoly, RPoly};
use crate::error::{Error, Result};
use crate::gf2m::{FieldElem, Gf2m};
use crate::ring::{ChainRing, RElem};

const SPLIT_SEED: u64 = 0x5EED_F00D;

/// Monic irreducible factors of x^n - 1, sorted by degree and then by
/// coefficients from the leading term down.
pub fn factor_xn_minus_1(n: usize, m: u32) -> Result<Vec<FPoly>> {
    if n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    let field = Gf2m::new(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED ^ ((n as u64) << 8) ^ m as u64);
    let mut factors = Vec::new();
    for (d, block) in distinct_degree(&xn_minus_1(n, &field), &field)? {
        equal_degree(block, d, &field, &mut rng, &mut factors)?;
    }
    factors.sort_by(canonical_order);
    Ok(factors)
}

fn canonical_order(p: &FPoly, q: &FPoly) -> Ordering {
    p.deg()
        .cmp(&q.deg())
        .then_with(|| p.coeffs().iter().rev().cmp(q.coeffs().iter().rev()))
}

/// x^(q^k) mod p, for q = 2^m.
fn frobenius_power(x_pow: &FPoly, modulus: &FPoly, field: &Gf2m) -> Result<FPoly> {
    let mut h = x_pow.clone();
    // raising to q = 2^m is m squarings
    for _ in 0..field.degree() {
        h = h.mulmod(&h, modulus, field)?;
    }
    Ok(h)
}

/// Splits a squarefree polynomial into (d, product of its degree-d factors).
fn distinct_degree(f: &FPoly, field: &Gf2m) -> Result<Vec<(usize, FPoly)>> {
    let x = FPoly::x_pow(field, 1);
    let mut rest = f.monic(field)?;
    let mut h = x.rem(&rest, field)?;
    let mut out = Vec::new();
    let mut d = 1;
    while rest.deg() >= 2 * d {
        h = frobenius_power(&h, &rest, field)?;
        let g = h.add(&x, field).gcd(&rest, field)?;
        if g.deg() > 0 {
            rest = rest.divmod(&g, field)?.0;
            h = h.rem(&rest, field)?;
            out.push((d, g));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        out.push((rest.deg(), rest));
    }
    Ok(out)
}

fn equal_degree(
    g: FPoly,
    d: usize,
    field: &Gf2m,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<FPoly>,
) -> Result<()> {
    if g.deg() <= d {
        out.push(g);
        return Ok(());
    }
    let order = field.order() as u32;
    let steps = field.degree() as usize * d;
    loop {
        let a = FPoly::from_coeffs(
            (0..g.deg())
                .map(|_| FieldElem(rng.gen_range(0..order) as u8))
                .collect(),
        );
        if a.deg() == 0 {
            continue;
        }
        let mut t = a.clone();
        let mut acc = a;
        for _ in 1..steps {
            t = t.mulmod(&t, &g, field)?;
            acc = acc.add(&t, field);
        }
        let s = acc.gcd(&g, field)?;
        if s.deg() > 0 && s.deg() < g.deg() {
            let other = g.divmod(&s, field)?.0;
            equal_degree(s, d, field, rng, out)?;
            return equal_degree(other, d, field, rng, out);
        }
    }
}

/// Rabin's test: p of degree d is irreducible iff x^(q^d) = x mod p and
/// gcd(x^(q^(d/r)) - x, p) = 1 for every prime r dividing d.
pub fn is_irreducible(p: &FPoly, field: &Gf2m) -> Result<bool> {
    let d = match p.degree() {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(d) => d,
    };
    let p = p.monic(field)?;
    let x = FPoly::x_pow(field, 1);
    let mut powers = vec![x.rem(&p, field)?];
    for _ in 0..d {
        let next = frobenius_power(powers.last().unwrap(), &p, field)?;
        powers.push(next);
    }
    if powers[d] != x.rem(&p, field)? {
        return Ok(false);
    }
    for r in prime_divisors(d) {
        let g = powers[d / r].add(&x, field).gcd(&p, field)?;
        if g.deg() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn prime_divisors(mut d: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        if d % p == 0 {
            out.push(p);
            while d % p == 0 {
                d /= p;
            }
        }
        p += 1;
    }
    if d > 1 {
        out.push(d);
    }
    out
}

/// Lifts a monic factor p of x^n - 1 to the monic factor
/// (1+u)^deg(p) * p((1+u) x) of x^n - (1+u).
///
/// Because (1+u)^2 = 1 the lifts of all factors multiply to exactly
/// x^n - (1+u) for odd n.
pub fn mu_lift(p: &FPoly, n: usize, ring: &ChainRing) -> Result<RPoly> {
    if n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    let field = ring.field();
    let rp = RPoly::from_fpoly(p);
    if !p.is_monic(field) {
        return Err(Error::NotMonic(rp.pretty()));
    }
    if !p.divides(&xn_minus_1(n, field), field)? {
        return Err(Error::NotAFactor(rp.pretty(), n));
    }
    let sub = rp.substitute_lambda(ring);
    Ok(if p.deg() % 2 == 1 {
        sub.scale(RElem::LAMBDA, ring)
    } else {
        sub
    })
}

/// The unit multiple (1+u) * p((1+u) x) of a monic lift, which is how lifted
/// factors are usually displayed: the leading coefficient is 1 for odd
/// degree and 1+u for even degree.
pub fn paper_form(lift: &RPoly, ring: &ChainRing) -> RPoly {
    if lift.deg() % 2 == 1 {
        lift.clone()
    } else {
        lift.scale(RElem::LAMBDA, ring)
    }
}

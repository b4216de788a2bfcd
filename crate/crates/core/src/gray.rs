//! The Gray map, Lee weights and the shifts that the Gray map intertwines.
//!
//! For a word c = (c_0, ..., c_{n-1}) with c_i = r_i + u q_i the image
//! Phi(c) consists of 2n blocks of m bits: block `i` holds the basis
//! coordinates of q_i and block `n + i` those of r_i + q_i. Within a block,
//! coordinate j (the coefficient of the j-th basis element) sits at bit j.
//!
//! Two identities tie the shifts together and are exposed as checks:
//! Phi(nu(c)) = sigma^m(Phi(c)) and Phi(mu_bar(c)) = pi(Phi(c)), where pi is
//! the Nechaev block permutation.

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::gf2m::{Gf2m, TraceOrthogonalBasis};
use crate::ring::{ChainRing, RElem};

/// A word of R^n.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RWord {
    pub entries: Vec<RElem>,
}

impl RWord {
    pub fn new(entries: Vec<RElem>) -> Self {
        RWord { entries }
    }

    pub fn zeros(n: usize) -> Self {
        RWord { entries: vec![RElem::ZERO; n] }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &RWord) -> Result<RWord> {
        check_len(self.len(), other.len())?;
        Ok(RWord::new(
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| a + b).collect(),
        ))
    }

    /// Euclidean inner product sum x_i y_i over R.
    pub fn inner(&self, other: &RWord, ring: &ChainRing) -> Result<RElem> {
        check_len(self.len(), other.len())?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(RElem::ZERO, |acc, (&a, &b)| acc + ring.mul(a, b)))
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::LengthMismatch { expected, actual });
    }
    Ok(())
}

/// A binary word of length 2mn viewed as 2n blocks of m bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitWord {
    bits: BitVec,
    m: usize,
}

impl BitWord {
    pub fn new(bits: BitVec, m: usize) -> Result<Self> {
        if m == 0 || bits.len() % (2 * m) != 0 {
            return Err(Error::BadBlocking { len: bits.len(), m });
        }
        Ok(BitWord { bits, m })
    }

    pub fn bits(&self) -> &BitVec {
        &self.bits
    }

    pub fn into_bits(self) -> BitVec {
        self.bits
    }

    pub fn block_size(&self) -> usize {
        self.m
    }

    /// The word length n of the preimage (half the number of blocks).
    pub fn n(&self) -> usize {
        self.bits.len() / (2 * self.m)
    }

    pub fn block(&self, i: usize) -> Vec<u8> {
        (0..self.m).map(|j| u8::from(self.bits.get(i * self.m + j))).collect()
    }

    pub fn weight(&self) -> usize {
        self.bits.weight()
    }

    pub fn to_hex(&self) -> String {
        self.bits.to_hex()
    }

    /// Binary string with blocks separated by `|`.
    pub fn block_string(&self) -> String {
        (0..2 * self.n())
            .map(|i| self.block(i).iter().map(|b| char::from(b'0' + b)).collect::<String>())
            .collect::<Vec<_>>()
            .join("|")
    }

    fn permute_blocks(&self, source_of: impl Fn(usize) -> usize) -> BitWord {
        let mut out = BitVec::zeros(self.bits.len());
        for dst in 0..2 * self.n() {
            let src = source_of(dst);
            for j in 0..self.m {
                if self.bits.get(src * self.m + j) {
                    out.set(dst * self.m + j, true);
                }
            }
        }
        BitWord { bits: out, m: self.m }
    }
}

/// The Gray map for one trace-orthogonal basis, with a precomputed
/// coordinate table.
#[derive(Clone, Debug)]
pub struct GrayMap {
    tob: TraceOrthogonalBasis,
    field: Gf2m,
    coords: Vec<u8>,
}

impl GrayMap {
    pub fn new(tob: &TraceOrthogonalBasis) -> Self {
        let field = tob.field();
        GrayMap { tob: tob.clone(), field, coords: tob.coord_table(&field) }
    }

    pub fn basis(&self) -> &TraceOrthogonalBasis {
        &self.tob
    }

    pub fn m(&self) -> usize {
        self.field.degree() as usize
    }

    #[inline]
    fn coord(&self, x: crate::gf2m::FieldElem) -> u8 {
        self.coords[x.0 as usize]
    }

    /// Image of a single ring element: (coords(b), coords(a + b)) packed into
    /// the low 2m bits.
    #[inline]
    pub fn phi_elem(&self, x: RElem) -> u16 {
        let m = self.m();
        self.coord(x.b) as u16 | (self.coord(x.a + x.b) as u16) << m
    }

    pub fn phi(&self, w: &RWord) -> BitWord {
        let (m, n) = (self.m(), w.len());
        let mut bits = BitVec::zeros(2 * m * n);
        for (i, &c) in w.entries.iter().enumerate() {
            let q = self.coord(c.b);
            let s = self.coord(c.a + c.b);
            for j in 0..m {
                if q >> j & 1 == 1 {
                    bits.set(i * m + j, true);
                }
                if s >> j & 1 == 1 {
                    bits.set((n + i) * m + j, true);
                }
            }
        }
        BitWord { bits, m }
    }

    /// Lee weight w_L(a + ub) = wt(coords(b)) + wt(coords(a + b)).
    #[inline]
    pub fn lee_weight(&self, x: RElem) -> usize {
        self.coord(x.b).count_ones() as usize + self.coord(x.a + x.b).count_ones() as usize
    }

    pub fn lee_weight_word(&self, w: &RWord) -> usize {
        w.entries.iter().map(|&c| self.lee_weight(c)).sum()
    }

    pub fn lee_distance(&self, x: &RWord, y: &RWord) -> Result<usize> {
        // subtraction is addition in characteristic 2
        Ok(self.lee_weight_word(&x.add(y)?))
    }
}

pub fn phi(w: &RWord, tob: &TraceOrthogonalBasis) -> BitWord {
    GrayMap::new(tob).phi(w)
}

pub fn lee_weight(x: RElem, tob: &TraceOrthogonalBasis) -> usize {
    GrayMap::new(tob).lee_weight(x)
}

pub fn lee_distance(x: &RWord, y: &RWord, tob: &TraceOrthogonalBasis) -> Result<usize> {
    GrayMap::new(tob).lee_distance(x, y)
}

/// Cyclic shift (c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2}).
pub fn sigma_shift(w: &RWord) -> RWord {
    let mut e = w.entries.clone();
    if !e.is_empty() {
        e.rotate_right(1);
    }
    RWord::new(e)
}

/// Constacyclic shift (c_0, ..., c_{n-1}) -> ((1+u) c_{n-1}, c_0, ..., c_{n-2}).
pub fn nu_shift(w: &RWord, ring: &ChainRing) -> RWord {
    let mut out = sigma_shift(w);
    if let Some(first) = out.entries.first_mut() {
        *first = ring.mul(RElem::LAMBDA, *first);
    }
    out
}

/// Rotates the 2n blocks of m bits right by one block.
pub fn sigma_m_shift(v: &BitWord) -> BitWord {
    let blocks = 2 * v.n();
    v.permute_blocks(|dst| (dst + blocks - 1) % blocks)
}

/// (c_0, ..., c_{n-1}) -> (c_0, (1+u) c_1, ..., (1+u)^{n-1} c_{n-1}).
pub fn mu_bar(w: &RWord, ring: &ChainRing) -> Result<RWord> {
    if w.len() % 2 == 0 {
        return Err(Error::EvenLength(w.len()));
    }
    Ok(RWord::new(
        w.entries
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { ring.mul(RElem::LAMBDA, c) } else { c })
            .collect(),
    ))
}

/// Block permutation swapping block 2i+1 with block n+2i+1 for
/// 0 <= i <= (n-3)/2; all other blocks are fixed.
pub fn nechaev_permutation(v: &BitWord) -> Result<BitWord> {
    let n = v.n();
    if n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    Ok(v.permute_blocks(|dst| {
        if dst < n && dst % 2 == 1 {
            dst + n
        } else if dst > n && (dst - n) % 2 == 1 {
            dst - n
        } else {
            dst
        }
    }))
}

/// Phi(nu(w)) == sigma^m(Phi(w)).
pub fn check_commuting_nu(w: &RWord, gray: &GrayMap, ring: &ChainRing) -> bool {
    gray.phi(&nu_shift(w, ring)) == sigma_m_shift(&gray.phi(w))
}

/// Phi(mu_bar(w)) == pi(Phi(w)).
pub fn check_commuting_mu(w: &RWord, gray: &GrayMap, ring: &ChainRing) -> Result<bool> {
    Ok(gray.phi(&mu_bar(w, ring)?) == nechaev_permutation(&gray.phi(w))?)
}

//! Packed GF(2) vectors and row reduction.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A fixed-length vector over GF(2), packed little-endian into u64 words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    /// Hex string, bit 0 is the most significant bit of the first byte;
    /// padded with zero bits to whole bytes.
    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.len.div_ceil(8) * 2);
        for byte in 0..self.len.div_ceil(8) {
            let mut v = 0u8;
            for k in 0..8 {
                let i = byte * 8 + k;
                if i < self.len && self.get(i) {
                    v |= 0x80 >> k;
                }
            }
            write!(s, "{v:02x}").unwrap();
        }
        s
    }

    pub fn from_hex(hex: &str, len: usize) -> Result<Self> {
        let bad = || Error::Descriptor(format!("bad hex word {hex:?} for length {len}"));
        if hex.len() != len.div_ceil(8) * 2 {
            return Err(bad());
        }
        let mut v = Self::zeros(len);
        for byte in 0..len.div_ceil(8) {
            let b = u8::from_str_radix(&hex[2 * byte..2 * byte + 2], 16).map_err(|_| bad())?;
            for k in 0..8 {
                let i = byte * 8 + k;
                if b & (0x80 >> k) != 0 {
                    if i >= len {
                        return Err(bad());
                    }
                    v.set(i, true);
                }
            }
        }
        Ok(v)
    }
}

/// Reduced row-echelon form of a set of GF(2) rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    len: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Rref {
    /// Row-reduces `rows` (all of length `len`), dropping dependent rows.
    pub fn new(len: usize, rows: impl IntoIterator<Item = BitVec>) -> Self {
        let mut m: Vec<BitVec> = rows.into_iter().collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..len {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| m[i].get(col)) else {
                continue;
            };
            m.swap(r, p);
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        m.truncate(r);
        Rref { len, rows: m, pivots }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after eliminating every pivot; zero iff `v` is in the
    /// row space.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut out = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(row);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        v.len() == self.len && self.reduce(v).is_zero()
    }

    /// Basis of the orthogonal complement, one row per non-pivot column.
    pub fn dual_basis(&self) -> Vec<BitVec> {
        let mut is_pivot = vec![false; self.len];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.len)
            .filter(|&c| !is_pivot[c])
            .map(|c| {
                let mut h = BitVec::zeros(self.len);
                h.set(c, true);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if row.get(c) {
                        h.set(p, true);
                    }
                }
                h
            })
            .collect()
    }
}

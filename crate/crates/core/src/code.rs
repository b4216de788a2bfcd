//! (1+u)-constacyclic codes C = <f h, u f g> and their binary Gray images.
//!
//! A code is held by its factor triple (f, g, h): monic, pairwise coprime,
//! with f g h = x^n - (1+u). Everything else (cardinality, dual, the binary
//! image, membership) is derived from the triple; codewords are only ever
//! listed through the bounded enumeration in [`crate::analysis`].

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bits::{BitVec, Rref};
use crate::error::{Error, Result};
use crate::gf2m::{find_tob, FieldElem, TraceOrthogonalBasis};
use crate::gray::{GrayMap, RWord};
use crate::poly::{xn_minus_lambda, RPoly};
use crate::ring::ChainRing;

/// A binary linear code given by generator rows, with its row-reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    gen_rows: Vec<BitVec>,
    rref: Rref,
}

/// JSON export of a [`BinaryCode`]: the reduced basis rows in hex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryCodeExport {
    pub length: usize,
    pub dimension: usize,
    pub rows: Vec<String>,
}

impl BinaryCode {
    pub fn new(length: usize, gen_rows: Vec<BitVec>) -> Result<Self> {
        for r in &gen_rows {
            if r.len() != length {
                return Err(Error::LengthMismatch { expected: length, actual: r.len() });
            }
        }
        let rref = Rref::new(length, gen_rows.iter().cloned());
        Ok(BinaryCode { length, gen_rows, rref })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.rref.rank()
    }

    pub fn gen_rows(&self) -> &[BitVec] {
        &self.gen_rows
    }

    pub fn rref(&self) -> &Rref {
        &self.rref
    }

    pub fn basis(&self) -> &[BitVec] {
        self.rref.rows()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.rref.contains(v)
    }

    /// Generator rows of the binary dual code.
    pub fn parity_check(&self) -> Vec<BitVec> {
        self.rref.dual_basis()
    }

    pub fn dual(&self) -> BinaryCode {
        BinaryCode::new(self.length, self.parity_check()).expect("dual rows have the code length")
    }

    /// True iff every row of `other` lies in this code.
    pub fn contains_code(&self, other: &BinaryCode) -> bool {
        other.basis().iter().all(|r| self.contains(r))
    }

    pub fn export(&self) -> BinaryCodeExport {
        BinaryCodeExport {
            length: self.length,
            dimension: self.dimension(),
            rows: self.basis().iter().map(BitVec::to_hex).collect(),
        }
    }

    pub fn from_export(e: &BinaryCodeExport) -> Result<Self> {
        let rows = e
            .rows
            .iter()
            .map(|h| BitVec::from_hex(h, e.length))
            .collect::<Result<Vec<_>>>()?;
        let code = BinaryCode::new(e.length, rows)?;
        if code.dimension() != e.dimension {
            return Err(Error::RankMismatch { expected: e.dimension, actual: code.dimension() });
        }
        Ok(code)
    }
}

/// JSON descriptor `{n, m, f, g, h}`; polynomials are arrays of `[a, b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: usize,
    pub m: u32,
    pub f: RPoly,
    pub g: RPoly,
    pub h: RPoly,
}

/// A (1+u)-constacyclic code of odd length n over GF(2^m) + u GF(2^m).
#[derive(Clone, Debug)]
pub struct ConstaCode {
    n: usize,
    ring: ChainRing,
    f: RPoly,
    g: RPoly,
    h: RPoly,
    tob: TraceOrthogonalBasis,
    gray: BinaryCode,
}

impl PartialEq for ConstaCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.ring == other.ring
            && self.f == other.f
            && self.g == other.g
            && self.h == other.h
    }
}

impl Eq for ConstaCode {}

impl ConstaCode {
    /// Validates the triple and builds the cached Gray image over the
    /// canonical trace-orthogonal basis.
    pub fn new(f: RPoly, g: RPoly, h: RPoly, n: usize, m: u32) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::EvenLength(n));
        }
        let ring = ChainRing::new(m)?;
        for p in [&f, &g, &h] {
            if !p.coeffs().iter().all(|&c| ring.contains(c)) {
                let bad = p.coeffs().iter().find(|&&c| !ring.contains(c)).unwrap();
                return Err(Error::InvalidElement { bits: bad.a.0.max(bad.b.0) as u32, m });
            }
            if !p.is_monic(&ring) {
                return Err(Error::NotMonic(p.pretty()));
            }
        }
        let product = RPoly::product([&f, &g, &h], &ring);
        if product != xn_minus_lambda(n, &ring) {
            return Err(Error::BadFactorization { product: product.pretty(), n });
        }
        let field = ring.field();
        for (p, q) in [(&f, &g), (&f, &h), (&g, &h)] {
            let common = p.residue().gcd(&q.residue(), field)?;
            if common.deg() > 0 {
                return Err(Error::NotCoprime {
                    first: p.pretty(),
                    second: q.pretty(),
                    common: RPoly::from_fpoly(&common).pretty(),
                });
            }
        }
        let tob = find_tob(m)?;
        let mut code = ConstaCode {
            n,
            ring,
            f,
            g,
            h,
            tob: tob.clone(),
            gray: BinaryCode::new(0, Vec::new())?,
        };
        code.gray = code.generator_matrix_gray(&tob)?;
        Ok(code)
    }

    /// Builds the code with g = (x^n - (1+u)) / (f h).
    pub fn from_f_h(f: RPoly, h: RPoly, n: usize, m: u32) -> Result<Self> {
        let ring = ChainRing::new(m)?;
        let fh = f.mul(&h, &ring);
        let (g, rem) = xn_minus_lambda(n, &ring).divmod(&fh, &ring)?;
        if !rem.is_zero() {
            return Err(Error::BadFactorization { product: fh.pretty(), n });
        }
        ConstaCode::new(f, g, h, n, m)
    }

    pub fn from_descriptor(d: &CodeDescriptor) -> Result<Self> {
        ConstaCode::new(d.f.clone(), d.g.clone(), d.h.clone(), d.n, d.m)
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            n: self.n,
            m: self.m(),
            f: self.f.clone(),
            g: self.g.clone(),
            h: self.h.clone(),
        }
    }

    /// The whole ambient space R^n (f = h = 1).
    pub fn full_space(n: usize, m: u32) -> Result<Self> {
        let ring = ChainRing::new(m)?;
        ConstaCode::new(RPoly::one(&ring), xn_minus_lambda(n, &ring), RPoly::one(&ring), n, m)
    }

    /// The zero code (g = h = 1).
    pub fn zero_code(n: usize, m: u32) -> Result<Self> {
        let ring = ChainRing::new(m)?;
        ConstaCode::new(xn_minus_lambda(n, &ring), RPoly::one(&ring), RPoly::one(&ring), n, m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.ring.degree()
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn f(&self) -> &RPoly {
        &self.f
    }

    pub fn g(&self) -> &RPoly {
        &self.g
    }

    pub fn h(&self) -> &RPoly {
        &self.h
    }

    /// k1 = deg g.
    pub fn k1(&self) -> usize {
        self.g.deg()
    }

    /// k2 = deg h.
    pub fn k2(&self) -> usize {
        self.h.deg()
    }

    pub fn tob(&self) -> &TraceOrthogonalBasis {
        &self.tob
    }

    /// log2 |C| = m (2 deg g + deg h).
    pub fn log2_size(&self) -> usize {
        self.m() as usize * (2 * self.k1() + self.k2())
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(1u8) << self.log2_size()
    }

    /// |C| written as 4^(m k1) * 2^(m k2), e.g. `4^164·2^10`.
    pub fn cardinality_pretty(&self) -> String {
        let m = self.m() as usize;
        let (four, two) = (m * self.k1(), m * self.k2());
        match (four, two) {
            (0, 0) => "1".into(),
            (a, 0) => format!("4^{a}"),
            (0, b) => format!("2^{b}"),
            (a, b) => format!("4^{a}·2^{b}"),
        }
    }

    /// The generators f h and u f g as words of R^n.
    pub fn generator_words(&self) -> (RWord, RWord) {
        let fh = self.f.mul(&self.h, &self.ring).reduce_constacyclic(self.n, &self.ring);
        let ufg = self
            .f
            .mul(&self.g, &self.ring)
            .times_u()
            .reduce_constacyclic(self.n, &self.ring);
        (self.word(&fh), self.word(&ufg))
    }

    pub fn word(&self, p: &RPoly) -> RWord {
        RWord::new(p.to_vec_padded(self.n)[..self.n].to_vec())
    }

    /// GF(2^m)-basis of C: x^i f h and u x^i f h for i < deg g, and
    /// u x^i f g for i < deg h.
    pub fn field_basis(&self) -> Vec<RWord> {
        let ring = &self.ring;
        let fh = self.f.mul(&self.h, ring);
        let fg = self.f.mul(&self.g, ring);
        let mut out = Vec::with_capacity(2 * self.k1() + self.k2());
        for i in 0..self.k1() {
            out.push(self.word(&fh.shift(i)));
            out.push(self.word(&fh.shift(i).times_u()));
        }
        for i in 0..self.k2() {
            out.push(self.word(&fg.shift(i).times_u()));
        }
        out
    }

    /// GF(2)-basis of C: the field basis scaled by w^0, ..., w^(m-1).
    pub fn binary_basis_words(&self) -> Vec<RWord> {
        let m = self.m();
        let mut out = Vec::with_capacity(self.log2_size());
        for w in self.field_basis() {
            for j in 0..m {
                let s = FieldElem(1 << j);
                out.push(RWord::new(w.entries.iter().map(|&c| self.ring.scale(s, c)).collect()));
            }
        }
        out
    }

    /// Gray image of C under `tob`; its rank must equal log2 |C|.
    pub fn generator_matrix_gray(&self, tob: &TraceOrthogonalBasis) -> Result<BinaryCode> {
        if tob == &self.tob && self.gray.length() == 2 * self.m() as usize * self.n {
            return Ok(self.gray.clone());
        }
        if tob.degree() != self.m() {
            return Err(Error::UnsupportedDegree(tob.degree()));
        }
        let gm = GrayMap::new(tob);
        let rows: Vec<BitVec> = self
            .binary_basis_words()
            .iter()
            .map(|w| gm.phi(w).into_bits())
            .collect();
        let code = BinaryCode::new(2 * self.m() as usize * self.n, rows)?;
        if code.dimension() != self.log2_size() {
            return Err(Error::RankMismatch { expected: self.log2_size(), actual: code.dimension() });
        }
        Ok(code)
    }

    /// Cached Gray image over the canonical basis.
    pub fn gray_image(&self) -> &BinaryCode {
        &self.gray
    }

    /// Membership, decided on the Gray image (Phi is injective and linear).
    pub fn contains(&self, w: &RWord) -> Result<bool> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: w.len() });
        }
        if !w.entries.iter().all(|&c| self.ring.contains(c)) {
            return Ok(false);
        }
        Ok(self.gray.contains(GrayMap::new(&self.tob).phi(w).bits()))
    }

    /// C-perp = <g* h*, u g* f*>, i.e. the triple (g*, f*, h*).
    pub fn dual(&self) -> ConstaCode {
        let r = &self.ring;
        let star = |p: &RPoly| p.reciprocal(r).expect("factors of x^n - (1+u) have unit constant terms");
        ConstaCode::new(star(&self.g), star(&self.f), star(&self.h), self.n, self.m())
            .expect("dual triple of a valid code is valid")
    }

    /// f divides g*.
    pub fn is_dual_containing(&self) -> bool {
        self.f
            .divides(&self.g_star(), &self.ring)
            .expect("f is monic")
    }

    pub fn g_star(&self) -> RPoly {
        self.g.reciprocal(&self.ring).expect("g has a unit constant term")
    }
}

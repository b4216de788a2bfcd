//! Brute-force reference arithmetic shared by the integration tests. Nothing
//! here calls into the library's field, ring or linear-algebra code.

#![allow(dead_code)]

/// Reduction polynomials for GF(2^m), m = 1..8, as bit masks.
pub const MODULI: [u32; 9] = [0, 0b11, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10001001, 0b100011101];

pub fn fmul(m: u32, x: u32, y: u32) -> u32 {
    let mut acc = 0u32;
    for i in 0..m {
        if y >> i & 1 == 1 {
            acc ^= x << i;
        }
    }
    for i in (m..2 * m).rev() {
        if acc >> i & 1 == 1 {
            acc ^= MODULI[m as usize] << (i - m);
        }
    }
    acc
}

pub fn ftrace(m: u32, x: u32) -> u32 {
    let (mut t, mut p) = (0, x);
    for _ in 0..m {
        t ^= p;
        p = fmul(m, p, p);
    }
    assert!(t <= 1, "trace lands in GF(2)");
    t
}

/// (a + u b)(c + u d) = ac + u(ad + bc).
pub fn rmul(m: u32, x: (u32, u32), y: (u32, u32)) -> (u32, u32) {
    (fmul(m, x.0, y.0), fmul(m, x.0, y.1) ^ fmul(m, x.1, y.0))
}

/// A word of R^n packed as bits: symbol i occupies bits [2m i, 2m i + 2m),
/// low m bits for a, high m bits for b.
pub fn pack(m: u32, word: &[(u32, u32)]) -> u128 {
    let mut out = 0u128;
    for (i, &(a, b)) in word.iter().enumerate() {
        out |= ((a | b << m) as u128) << (2 * m as usize * i);
    }
    out
}

pub fn unpack(m: u32, n: usize, bits: u128) -> Vec<(u32, u32)> {
    let mask = (1u128 << m) - 1;
    (0..n)
        .map(|i| {
            let s = bits >> (2 * m as usize * i);
            ((s & mask) as u32, (s >> m & mask) as u32)
        })
        .collect()
}

pub fn inner(m: u32, x: &[(u32, u32)], y: &[(u32, u32)]) -> (u32, u32) {
    x.iter().zip(y).fold((0, 0), |acc, (&p, &q)| {
        let r = rmul(m, p, q);
        (acc.0 ^ r.0, acc.1 ^ r.1)
    })
}

/// Binary span maintained as an echelon basis keyed by leading bit.
#[derive(Clone, Default)]
pub struct Span {
    rows: Vec<u128>,
}

impl Span {
    pub fn reduce(&self, mut v: u128) -> u128 {
        for &r in &self.rows {
            let top = 127 - r.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// Adds `v`; returns true if the span grew.
    pub fn insert(&mut self, v: u128) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let top = 127 - v.leading_zeros();
        let pos = self.rows.partition_point(|&r| 127 - r.leading_zeros() > top);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: u128) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u128] {
        &self.rows
    }
}

/// Smallest submodule of R^n containing `gens` and closed under the
/// (1+u)-constacyclic shift and multiplication by every ring element.
pub fn submodule(m: u32, n: usize, gens: &[Vec<(u32, u32)>]) -> Span {
    assert!(gens.iter().all(|g| g.len() == n));
    let lambda = (1, 1);
    let mut span = Span::default();
    let mut queue: Vec<Vec<(u32, u32)>> = gens.to_vec();
    while let Some(w) = queue.pop() {
        for a in 0..1u32 << m {
            for b in 0..1u32 << m {
                let scaled: Vec<_> = w.iter().map(|&c| rmul(m, (a, b), c)).collect();
                if span.insert(pack(m, &scaled)) {
                    let mut shifted = scaled.clone();
                    shifted.rotate_right(1);
                    shifted[0] = rmul(m, lambda, shifted[0]);
                    queue.push(shifted);
                }
            }
        }
    }
    span
}

/// Kernel of the linear map y -> (<x, y>)_{x in rows} on R^n, i.e. the
/// Euclidean dual of the additive span of `rows`.
pub fn dual_span(m: u32, n: usize, code: &Span) -> Span {
    let nbits = 2 * m as usize * n;
    let words: Vec<Vec<(u32, u32)>> = code.rows().iter().map(|&r| unpack(m, n, r)).collect();
    // column k of the constraint matrix: all inner products against e_k
    let cols: Vec<u128> = (0..nbits)
        .map(|k| {
            let e = unpack(m, n, 1u128 << k);
            let mut col = 0u128;
            for (j, x) in words.iter().enumerate() {
                let (a, b) = inner(m, x, &e);
                col |= ((a | b << m) as u128) << (2 * m as usize * j);
            }
            col
        })
        .collect();
    // null space over GF(2): track combinations of unit vectors
    let mut echelon: Vec<(u128, u128)> = Vec::new();
    let mut kernel = Span::default();
    for (k, &c) in cols.iter().enumerate() {
        let (mut v, mut comb) = (c, 1u128 << k);
        for &(r, rc) in &echelon {
            if v ^ r < v {
                v ^= r;
                comb ^= rc;
            }
        }
        if v == 0 {
            kernel.insert(comb);
        } else {
            echelon.push((v, comb));
            echelon.sort_by(|a, b| b.0.cmp(&a.0));
        }
    }
    kernel
}

/// Dense polynomial over GF(2^m), little-endian coefficients, trimmed.
pub fn ptrim(mut p: Vec<u32>) -> Vec<u32> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn finv(m: u32, x: u32) -> u32 {
    (1..1u32 << m).find(|&y| fmul(m, x, y) == 1).expect("nonzero")
}

pub fn prem(m: u32, num: &[u32], den: &[u32]) -> Vec<u32> {
    let den = ptrim(den.to_vec());
    let mut r = ptrim(num.to_vec());
    let lead_inv = finv(m, *den.last().unwrap());
    while r.len() >= den.len() {
        let c = fmul(m, *r.last().unwrap(), lead_inv);
        let off = r.len() - den.len();
        for (i, &d) in den.iter().enumerate() {
            r[off + i] ^= fmul(m, c, d);
        }
        r = ptrim(r);
    }
    r
}

pub fn pmul(m: u32, x: &[u32], y: &[u32]) -> Vec<u32> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; x.len() + y.len() - 1];
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            out[i + j] ^= fmul(m, a, b);
        }
    }
    ptrim(out)
}

/// Irreducibility by trial division against every monic polynomial of
/// degree 1..=deg/2.
pub fn irreducible_by_trial(m: u32, p: &[u32]) -> bool {
    let d = p.len() - 1;
    let q = 1u64 << m;
    for k in 1..=d / 2 {
        for idx in 0..q.pow(k as u32) {
            let mut cand: Vec<u32> = (0..k).map(|i| (idx / q.pow(i as u32) % q) as u32).collect();
            cand.push(1);
            if prem(m, p, &cand).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Number of 2^m-cyclotomic cosets mod n (the number of irreducible factors
/// of x^n - 1 for odd n).
pub fn coset_count(n: usize, m: u32) -> usize {
    let q = 1usize << m;
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !seen[s] {
            count += 1;
            let mut t = s;
            while !seen[t] {
                seen[t] = true;
                t = t * q % n;
            }
        }
    }
    count
}

/// Every element of a span, by walking all subsets of its basis.
pub fn elements(span: &Span) -> Vec<u128> {
    let rows = span.rows();
    let mut out = Vec::with_capacity(1 << rows.len());
    out.push(0u128);
    for &r in rows {
        let k = out.len();
        for i in 0..k {
            out.push(out[i] ^ r);
        }
    }
    out
}

/// Inner product of packed words via a precomputed ring product table.
pub struct PackedInner {
    m: u32,
    n: usize,
    table: Vec<u32>,
}

impl PackedInner {
    pub fn new(m: u32, n: usize) -> Self {
        let q = 1u32 << (2 * m);
        let mask = (1 << m) - 1;
        let mut table = vec![0; (q * q) as usize];
        for x in 0..q {
            for y in 0..q {
                let p = rmul(m, (x & mask, x >> m), (y & mask, y >> m));
                table[(x * q + y) as usize] = p.0 | p.1 << m;
            }
        }
        PackedInner { m, n, table }
    }

    pub fn is_orthogonal(&self, x: u128, y: u128) -> bool {
        let s = 2 * self.m as usize;
        let mask = (1u128 << s) - 1;
        let mut acc = 0;
        for i in 0..self.n {
            let a = (x >> (s * i) & mask) as usize;
            let b = (y >> (s * i) & mask) as usize;
            acc ^= self.table[(a << s) | b];
        }
        acc == 0
    }
}

pub fn pgcd(m: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut a, mut b) = (ptrim(a.to_vec()), ptrim(b.to_vec()));
    while !b.is_empty() {
        let r = prem(m, &a, &b);
        a = b;
        b = r;
    }
    a
}

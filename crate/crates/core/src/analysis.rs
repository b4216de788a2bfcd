//! Minimum distances and CSS quantum parameters.
//!
//! Small codes are enumerated exhaustively (Gray-code order, one row XOR per
//! codeword). Large codes get an upper bound from a witness search: all
//! single rows and pairs of the reduced basis, then randomized
//! information-set sampling on the parity-check matrix. The search is split
//! into fixed partitions with derived seeds and min-merged, so the result is
//! independent of the number of worker threads.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::code::{BinaryCode, ConstaCode};
use crate::error::{Error, Result};
use crate::gf2m::TraceOrthogonalBasis;
use crate::gray::{GrayMap, RWord};

/// Default cap on enumerated codewords.
pub const DEFAULT_MAX_ENUM: u128 = 1 << 24;
/// Environment variable overriding [`DEFAULT_MAX_ENUM`].
pub const MAX_ENUM_ENV: &str = "CONSTACODE_MAX_ENUM";
pub const DEFAULT_BUDGET: u64 = 100_000;
pub const DEFAULT_SEED: u64 = 0xC0DE;

const PARTITIONS: u64 = 64;

/// The enumeration guard, honouring `CONSTACODE_MAX_ENUM`.
pub fn enumeration_limit() -> u128 {
    std::env::var(MAX_ENUM_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ENUM)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceMode {
    Exact,
    UpperBound,
}

/// A minimum-distance result together with a codeword achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub value: usize,
    pub mode: DistanceMode,
    pub witness: BitVec,
    pub effort: u64,
}

#[derive(Serialize, Deserialize)]
struct DistanceReportJson {
    value: usize,
    mode: DistanceMode,
    witness_hex: String,
    effort: u64,
}

impl Serialize for DistanceReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DistanceReportJson {
            value: self.value,
            mode: self.mode,
            witness_hex: self.witness.to_hex(),
            effort: self.effort,
        }
        .serialize(s)
    }
}

fn check_enumerable(log2_size: usize) -> Result<()> {
    let limit = enumeration_limit();
    if log2_size >= 128 || (1u128 << log2_size) > limit {
        return Err(Error::TooLarge { size: format!("2^{log2_size}"), limit });
    }
    Ok(())
}

/// Exact minimum Hamming weight by enumerating all 2^k - 1 nonzero codewords.
pub fn min_distance_exact(bc: &BinaryCode) -> Result<DistanceReport> {
    let k = bc.dimension();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    check_enumerable(k)?;
    let rows = bc.basis();
    let mut cur = BitVec::zeros(bc.length());
    let mut best = usize::MAX;
    let mut witness = cur.clone();
    for i in 1u64..(1u64 << k) {
        cur.xor_assign(&rows[i.trailing_zeros() as usize]);
        let w = cur.weight();
        if w < best {
            best = w;
            witness = cur.clone();
        }
    }
    Ok(DistanceReport {
        value: best,
        mode: DistanceMode::Exact,
        witness,
        effort: (1u64 << k) - 1,
    })
}

/// Exact minimum Lee weight, enumerating codewords in R^n directly.
/// The witness is reported through its Gray image.
pub fn min_lee_distance_exact(code: &ConstaCode, tob: &TraceOrthogonalBasis) -> Result<DistanceReport> {
    let k = code.log2_size();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    check_enumerable(k)?;
    let gm = GrayMap::new(tob);
    let basis = code.binary_basis_words();
    let mut cur = RWord::zeros(code.n());
    let mut best = usize::MAX;
    let mut witness = cur.clone();
    for i in 1u64..(1u64 << k) {
        let row = &basis[i.trailing_zeros() as usize];
        for (c, &r) in cur.entries.iter_mut().zip(&row.entries) {
            *c += r;
        }
        let w = gm.lee_weight_word(&cur);
        if w < best {
            best = w;
            witness = cur.clone();
        }
    }
    Ok(DistanceReport {
        value: best,
        mode: DistanceMode::Exact,
        witness: gm.phi(&witness).into_bits(),
        effort: (1u64 << k) - 1,
    })
}

fn derive_seed(seed: u64, partition: u64) -> u64 {
    // splitmix64 finalizer
    let mut z = seed.wrapping_add(partition.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Lightest codeword found in one information-set sample. Columns are
/// visited in `order` when choosing pivots of the parity-check matrix; each
/// non-pivot column c yields the codeword e_c + sum of pivots whose row
/// has a 1 in column c.
fn sample_information_set(parity: &[BitVec], len: usize, order: &[usize]) -> Option<(usize, BitVec)> {
    let mut rows: Vec<BitVec> = parity.to_vec();
    let mut pivots = Vec::with_capacity(rows.len());
    let mut is_pivot = vec![false; len];
    let mut r = 0;
    for &col in order {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        is_pivot[col] = true;
        r += 1;
    }
    rows.truncate(r);
    let mut counts = vec![0usize; len];
    for row in &rows {
        for c in row.ones() {
            counts[c] += 1;
        }
    }
    let best_col = (0..len)
        .filter(|&c| !is_pivot[c])
        .min_by_key(|&c| (counts[c], c))?;
    let mut word = BitVec::zeros(len);
    word.set(best_col, true);
    for (row, &p) in rows.iter().zip(&pivots) {
        if row.get(best_col) {
            word.set(p, true);
        }
    }
    Some((counts[best_col] + 1, word))
}

/// Upper bound on the minimum distance by witness search. Deterministic for
/// a fixed `seed` regardless of parallelism.
pub fn min_distance_upper_bound(bc: &BinaryCode, budget: u64, seed: u64) -> Result<DistanceReport> {
    let rows = bc.basis();
    if rows.is_empty() {
        return Err(Error::ZeroCode);
    }
    let len = bc.length();
    let mut best: (usize, BitVec) = (usize::MAX, BitVec::zeros(len));
    let mut effort = 0u64;
    for (i, a) in rows.iter().enumerate() {
        let w = a.weight();
        effort += 1;
        if w < best.0 {
            best = (w, a.clone());
        }
        for b in &rows[i + 1..] {
            let s = a.xor(b);
            effort += 1;
            let w = s.weight();
            if w < best.0 {
                best = (w, s);
            }
        }
    }

    let parity = bc.parity_check();
    if !parity.is_empty() && budget > 0 {
        let info_size = (len - parity.len()) as u64;
        let results: Vec<Option<(usize, BitVec)>> = (0..PARTITIONS)
            .into_par_iter()
            .map(|p| {
                let lo = budget * p / PARTITIONS;
                let hi = budget * (p + 1) / PARTITIONS;
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, p));
                let mut order: Vec<usize> = (0..len).collect();
                let mut local: Option<(usize, BitVec)> = None;
                for _ in lo..hi {
                    order.shuffle(&mut rng);
                    if let Some(found) = sample_information_set(&parity, len, &order) {
                        if local.as_ref().is_none_or(|l| found.0 < l.0) {
                            local = Some(found);
                        }
                    }
                }
                local
            })
            .collect();
        effort += budget * info_size;
        for found in results.into_iter().flatten() {
            if found.0 < best.0 {
                best = found;
            }
        }
    }
    debug_assert!(bc.contains(&best.1));
    Ok(DistanceReport {
        value: best.0,
        mode: DistanceMode::UpperBound,
        witness: best.1,
        effort,
    })
}

/// How [`css_params`] obtains the distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceStrategy {
    Exact,
    UpperBound { budget: u64, seed: u64 },
    /// Exact when the code is within the enumeration guard, else upper bound.
    Auto { budget: u64, seed: u64 },
}

impl Default for DistanceStrategy {
    fn default() -> Self {
        DistanceStrategy::Auto { budget: DEFAULT_BUDGET, seed: DEFAULT_SEED }
    }
}

/// Distance of a binary code under a strategy.
pub fn distance(bc: &BinaryCode, strategy: DistanceStrategy) -> Result<DistanceReport> {
    match strategy {
        DistanceStrategy::Exact => min_distance_exact(bc),
        DistanceStrategy::UpperBound { budget, seed } => min_distance_upper_bound(bc, budget, seed),
        DistanceStrategy::Auto { budget, seed } => match min_distance_exact(bc) {
            Err(Error::TooLarge { .. }) => min_distance_upper_bound(bc, budget, seed),
            other => other,
        },
    }
}

/// Parameters [[2mn, 4m k1 + 2m k2 - 2mn, d]] of the binary CSS code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumParams {
    pub length: usize,
    pub logical_dim_exponent: i64,
    pub distance: DistanceReport,
}

#[derive(Serialize)]
struct QuantumParamsJson {
    n: usize,
    k: i64,
    d: usize,
    d_mode: DistanceMode,
}

impl Serialize for QuantumParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuantumParamsJson {
            n: self.length,
            k: self.logical_dim_exponent,
            d: self.distance.value,
            d_mode: self.distance.mode,
        }
        .serialize(s)
    }
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = match self.distance.mode {
            DistanceMode::Exact => "",
            DistanceMode::UpperBound => "?",
        };
        write!(
            f,
            "[[{}, {}, {}{}]]",
            self.length, self.logical_dim_exponent, self.distance.value, mark
        )
    }
}

/// CSS parameters of the Gray image of a dual-containing code.
pub fn css_params(code: &ConstaCode, tob: &TraceOrthogonalBasis, strategy: DistanceStrategy) -> Result<QuantumParams> {
    if !code.is_dual_containing() {
        return Err(Error::NotDualContaining {
            f: code.f().pretty(),
            g_star: code.g_star().pretty(),
        });
    }
    let (m, n) = (code.m() as i64, code.n() as i64);
    let length = (2 * m * n) as usize;
    let exponent = 4 * m * code.k1() as i64 + 2 * m * code.k2() as i64 - 2 * m * n;
    let image = code.generator_matrix_gray(tob)?;
    assert_eq!(
        exponent,
        2 * image.dimension() as i64 - 2 * m * n,
        "CSS dimension disagrees with the Gray image rank"
    );
    let distance = distance(&image, strategy)?;
    Ok(QuantumParams { length, logical_dim_exponent: exponent, distance })
}

//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::time::{Duration, Instant};

use constacode::analysis::{DEFAULT_BUDGET, DEFAULT_SEED};
use constacode::fixtures::{self, Reproduction};
use constacode::{
    check_commuting_mu, check_commuting_nu, factor_xn_minus_1, find_tob, min_distance_exact, mu_lift,
    sigma_m_shift, xn_minus_1, xn_minus_lambda, BitWord, ChainRing, ConstaCode, FieldElem, Gf2m,
    GrayMap, RElem, RPoly, RWord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worked_binary_images() -> Outcome {
    let start = Instant::now();
    let cases = [
        ("n=3 <u f g>", fixtures::len3_u_code(), [12, 2, 8]),
        ("n=3 <f g, u f h>", fixtures::len3_mixed_code(), [12, 6, 4]),
        ("n=5 <f g, u f h>", fixtures::len5_code(), [20, 12, 4]),
    ];
    let mut got = Vec::new();
    for (label, code, want) in cases {
        let code = code.map_err(|e| format!("{label}: {e}"))?;
        let img = code.gray_image();
        let d = min_distance_exact(img).map_err(|e| e.to_string())?;
        let have = [img.length(), img.dimension(), d.value];
        ensure(have == want, || format!("{label}: {have:?} != {want:?}"))?;
        got.push(format!("{have:?}"));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(got.join(" "))
}

fn quantum_fixtures() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for which in [Reproduction::Quantum85, Reproduction::Quantum93] {
        let rows = fixtures::reproduce(which, DEFAULT_BUDGET, DEFAULT_SEED).map_err(|e| e.to_string())?;
        for r in &rows {
            ensure(r.pass, || format!("{} {}: expected {}, got {}", r.example, r.quantity, r.expected, r.actual))?;
        }
        let d = &rows.last().unwrap().actual;
        notes.push(format!("{} d<={d}", which.id()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(notes.join(", "))
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, m: u32) -> RWord {
    let q = 1u16 << m;
    RWord::new(
        (0..n)
            .map(|_| RElem::new(FieldElem(rng.gen_range(0..q) as u8), FieldElem(rng.gen_range(0..q) as u8)))
            .collect(),
    )
}

const SAMPLES: usize = 10_000;
const GRID_N: [usize; 4] = [3, 5, 7, 9];
const GRID_M: [u32; 3] = [1, 2, 3];

fn commuting_diagrams() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in GRID_N {
        for m in GRID_M {
            let ring = ChainRing::new(m).unwrap();
            let gray = GrayMap::new(&find_tob(m).unwrap());
            for _ in 0..SAMPLES {
                let w = random_word(&mut rng, n, m);
                ensure(check_commuting_nu(&w, &gray, &ring), || format!("shift square fails n={n} m={m}"))?;
                ensure(check_commuting_mu(&w, &gray, &ring).unwrap(), || {
                    format!("permutation square fails n={n} m={m}")
                })?;
            }
        }
    }
    Ok(format!("{} words per (n, m), 12 configurations", SAMPLES))
}

fn distance_preservation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for n in GRID_N {
        for m in GRID_M {
            let gray = GrayMap::new(&find_tob(m).unwrap());
            for _ in 0..SAMPLES {
                let (x, y) = (random_word(&mut rng, n, m), random_word(&mut rng, n, m));
                let lee = gray.lee_distance(&x, &y).unwrap();
                let ham = gray.phi(&x).bits().xor(gray.phi(&y).bits()).weight();
                ensure(lee == ham, || format!("n={n} m={m}: Lee {lee} vs Hamming {ham}"))?;
            }
        }
    }
    Ok(format!("{} pairs per (n, m), 12 configurations", SAMPLES))
}

fn to_pairs(w: &RWord) -> Vec<(u32, u32)> {
    w.entries.iter().map(|c| (c.a.0 as u32, c.b.0 as u32)).collect()
}

/// Every assignment of the lifted factors of x^n - (1+u) to the slots f, g, h.
fn all_triples(n: usize, m: u32) -> Vec<(RPoly, RPoly, RPoly)> {
    let ring = ChainRing::new(m).unwrap();
    let lifts: Vec<RPoly> = factor_xn_minus_1(n, m)
        .unwrap()
        .iter()
        .map(|p| mu_lift(p, n, &ring).unwrap())
        .collect();
    let k = lifts.len();
    (0..3usize.pow(k as u32))
        .map(|code| {
            let mut slots = [RPoly::one(&ring), RPoly::one(&ring), RPoly::one(&ring)];
            for (i, l) in lifts.iter().enumerate() {
                let s = code / 3usize.pow(i as u32) % 3;
                slots[s] = slots[s].mul(l, &ring);
            }
            let [f, g, h] = slots;
            (f, g, h)
        })
        .collect()
}

fn duality_oracle() -> Outcome {
    let m = 2;
    let (mut checked, mut pairs) = (0, 0usize);
    for n in [3usize, 5] {
        for (f, g, h) in all_triples(n, m) {
            let label = format!("n={n} f={} g={} h={}", f.pretty(), g.pretty(), h.pretty());
            let code = ConstaCode::new(f, g, h, n, m).map_err(|e| format!("{label}: {e}"))?;
            let (g1, g2) = code.generator_words();
            let c_span = common::submodule(m, n, &[to_pairs(&g1), to_pairs(&g2)]);
            let dual_oracle = common::dual_span(m, n, &c_span);
            let dual = code.dual();

            ensure(c_span.rank() == code.log2_size(), || {
                format!("{label}: oracle |C| = 2^{}, library 2^{}", c_span.rank(), code.log2_size())
            })?;
            ensure(c_span.rank() + dual_oracle.rank() == 2 * m as usize * n, || {
                format!("{label}: |C||C-perp| != |R|^n")
            })?;
            ensure(dual.log2_size() == dual_oracle.rank(), || {
                format!("{label}: dual size 2^{} vs oracle 2^{}", dual.log2_size(), dual_oracle.rank())
            })?;
            let (d1, d2) = dual.generator_words();
            let d_span = common::submodule(m, n, &[to_pairs(&d1), to_pairs(&d2)]);
            ensure(d_span.rank() == dual_oracle.rank(), || format!("{label}: dual spans differ in size"))?;
            let ip = common::PackedInner::new(m, n);
            let (cw, dw) = (common::elements(&c_span), common::elements(&d_span));
            for &y in &dw {
                ensure(cw.iter().all(|&x| ip.is_orthogonal(x, y)), || {
                    format!("{label}: a dual codeword is not orthogonal to C")
                })?;
            }
            pairs += cw.len() * dw.len();
            let contained = dual_oracle.rows().iter().all(|&y| c_span.contains(y));
            ensure(contained == code.is_dual_containing(), || {
                format!("{label}: predicate says {}, oracle says {contained}", code.is_dual_containing())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} triples, {pairs} codeword pairs"))
}

fn tob_validity() -> Outcome {
    for m in 1..=8u32 {
        let tob = find_tob(m).map_err(|e| e.to_string())?;
        let elems: Vec<u32> = tob.elements().iter().map(|e| e.0 as u32).collect();
        ensure(elems.len() == m as usize, || format!("m={m}: {} elements", elems.len()))?;
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                let t = common::ftrace(m, common::fmul(m, x, y));
                ensure(t == (i == j) as u32, || format!("m={m}: Tr(a{i} a{j}) = {t}"))?;
            }
        }
        if m <= 5 {
            let first = lex_first_tob(m);
            ensure(first == elems, || format!("m={m}: {elems:?} is not the first basis {first:?}"))?;
        }
    }
    Ok("m = 1..8 self-dual; lexicographically first for m <= 5".into())
}

fn lex_first_tob(m: u32) -> Vec<u32> {
    fn go(m: u32, chosen: &mut Vec<u32>, next: u32) -> bool {
        if chosen.len() == m as usize {
            return true;
        }
        for x in next..1 << m {
            let ok = common::ftrace(m, common::fmul(m, x, x)) == 1
                && chosen.iter().all(|&y| common::ftrace(m, common::fmul(m, x, y)) == 0);
            if ok {
                chosen.push(x);
                if go(m, chosen, x + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    assert!(go(m, &mut chosen, 1));
    chosen
}

fn factorization_integrity() -> Outcome {
    let mut total = 0;
    for n in [1usize, 3, 5, 7, 9, 15, 85, 93] {
        for m in [1u32, 2] {
            let field = Gf2m::new(m).unwrap();
            let ring = ChainRing::new(m).unwrap();
            let factors = factor_xn_minus_1(n, m).map_err(|e| e.to_string())?;
            let prod = factors.iter().fold(vec![1u32], |acc, p| {
                common::pmul(m, &acc, &p.coeffs().iter().map(|c| c.0 as u32).collect::<Vec<_>>())
            });
            let target: Vec<u32> = xn_minus_1(n, &field).coeffs().iter().map(|c| c.0 as u32).collect();
            ensure(prod == target, || format!("n={n} m={m}: product mismatch"))?;
            ensure(factors.len() == common::coset_count(n, m), || {
                format!("n={n} m={m}: {} factors, {} cosets", factors.len(), common::coset_count(n, m))
            })?;
            let raw: Vec<Vec<u32>> =
                factors.iter().map(|p| p.coeffs().iter().map(|c| c.0 as u32).collect()).collect();
            for i in 0..raw.len() {
                for j in i + 1..raw.len() {
                    let g = common::pgcd(m, &raw[i], &raw[j]);
                    ensure(g.len() == 1, || format!("n={n} m={m}: factors {i} and {j} share a divisor"))?;
                }
            }
            for p in &factors {
                let c: Vec<u32> = p.coeffs().iter().map(|c| c.0 as u32).collect();
                ensure(*c.last().unwrap() == 1, || format!("n={n} m={m}: non-monic factor"))?;
                ensure(common::irreducible_by_trial(m, &c), || format!("n={n} m={m}: reducible {c:?}"))?;
            }
            let lifted = factors.iter().map(|p| mu_lift(p, n, &ring)).collect::<Result<Vec<_>, _>>();
            let lifted = lifted.map_err(|e| e.to_string())?;
            ensure(RPoly::product(&lifted, &ring) == xn_minus_lambda(n, &ring), || {
                format!("n={n} m={m}: lifts do not multiply to x^n - (1+u)")
            })?;
            total += factors.len();
        }
    }
    Ok(format!("{total} irreducible factors across 16 (n, m)"))
}

fn shift_closure() -> Outcome {
    let codes = fixtures::all_codes().map_err(|e| e.to_string())?;
    let mut rows = 0;
    for (label, code) in &codes {
        let img = code.gray_image();
        for r in img.basis() {
            let shifted = sigma_m_shift(&BitWord::new(r.clone(), code.m() as usize).unwrap());
            ensure(img.contains(shifted.bits()), || format!("{label}: shifted basis row escapes the code"))?;
            rows += 1;
        }
    }
    Ok(format!("{rows} basis rows over {} codes", codes.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("worked-example binary images", worked_binary_images),
        ("length-85/93 quantum fixtures", quantum_fixtures),
        ("commuting shift/permutation diagrams", commuting_diagrams),
        ("Gray map preserves distance", distance_preservation),
        ("duality against brute-force oracle", duality_oracle),
        ("trace-orthogonal bases m = 1..8", tob_validity),
        ("factorization integrity", factorization_integrity),
        ("Gray images closed under block shift", shift_closure),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("[PASS] {}. {name} ({detail}; {ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Deterministic corpus of small linear codes and fixtures shared by the
//! integration and acceptance tests.

#[cfg(test)]
mod corpus_tests;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rkcodes::format::TableFile;
use rkcodes::{AutomorphismSpec, Guard, LinearCode, Permutation, PhiSpec, RingSpec, RkElement, RkVector};

pub const SEED: u64 = 0x5eed_2024;

pub fn guard() -> Guard {
    Guard::default()
}

pub fn ring(m: u32, k: u32) -> RingSpec {
    RingSpec::new(m, k).unwrap()
}

pub struct Sample {
    pub label: String,
    pub code: LinearCode,
}

/// Every linear code of length 1 and 2 over `Z_2[v]`, found as spans of all
/// generator pairs (two generators suffice for these modules).
pub fn z2v_exhaustive() -> Vec<Sample> {
    let r = ring(2, 1);
    let mut out = Vec::new();
    for n in 1..=2usize {
        let total = 4u128.pow(n as u32);
        let words: Vec<RkVector> = (0..total).map(|i| RkVector::from_index(r, n, i, 4)).collect();
        let mut seen = BTreeSet::new();
        for a in &words {
            for b in &words {
                let c = LinearCode::span(r, n, vec![a.clone(), b.clone()], guard()).unwrap();
                let key: Vec<RkVector> = c.codewords().cloned().collect();
                if seen.insert(key) {
                    out.push(Sample {
                        label: format!("{r} n={n} {c}"),
                        code: c,
                    });
                }
            }
        }
    }
    out
}

fn random_element(rng: &mut ChaCha8Rng, r: RingSpec) -> RkElement {
    let coeffs: Vec<u32> = (0..r.width()).map(|_| rng.gen_range(0..r.m())).collect();
    r.element(&coeffs).unwrap()
}

fn random_codes(rng: &mut ChaCha8Rng, r: RingSpec, count: usize, max_n: usize, max_gens: usize) -> Vec<Sample> {
    (0..count)
        .map(|i| {
            let n = rng.gen_range(1..=max_n);
            let g = rng.gen_range(1..=max_gens);
            let gens: Vec<RkVector> = (0..g)
                .map(|_| RkVector::new(r, (0..n).map(|_| random_element(rng, r)).collect()).unwrap())
                .collect();
            let code = LinearCode::span(r, n, gens, guard()).unwrap();
            Sample {
                label: format!("{r} #{i} n={n} {code}"),
                code,
            }
        })
        .collect()
}

/// 50 random codes over `Z_4[v]` with `n <= 3`.
pub fn z4v_random() -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    random_codes(&mut rng, ring(4, 1), 50, 3, 2)
}

/// 20 random codes over `Z_2[v1, v2]` with `n <= 2`.
pub fn z2v1v2_random() -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    random_codes(&mut rng, ring(2, 2), 20, 2, 2)
}

pub fn corpus() -> Vec<Sample> {
    let mut all = z2v_exhaustive();
    all.extend(z4v_random());
    all.extend(z2v1v2_random());
    all
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

/// The maps `phi_1: Z_4[v] -> Z_4^l` used for the table of `Z_4` codes.
pub fn z4_phi_specs() -> Vec<PhiSpec> {
    let z4 = ring(4, 0);
    let lists: [(&[u32], &[u32]); 5] = [
        (&[2], &[1]),
        (&[1], &[1]),
        (&[0, 1], &[1, 1]),
        (&[0, 1, 1], &[1, 1, 1]),
        (&[0, 1, 1, 1], &[1, 1, 0, 1]),
    ];
    lists
        .iter()
        .map(|(b, bp)| {
            PhiSpec::new(
                1,
                b.iter().map(|&x| z4.constant(x)).collect(),
                bp.iter().map(|&x| z4.constant(x)).collect(),
            )
            .unwrap()
        })
        .collect()
}

/// `id`, `Theta_1`, and for `k = 2` also the swap of `v1, v2` and
/// `Theta_1` after the swap.
pub fn skew_automorphisms(k: u32) -> Vec<AutomorphismSpec> {
    let mut out = vec![AutomorphismSpec::identity(k)];
    if k >= 1 {
        out.push(AutomorphismSpec::theta(k, 1).unwrap());
    }
    if k >= 2 {
        let swap = Permutation::swap(k, 1, 2).unwrap();
        out.push(AutomorphismSpec::phi(swap.clone()));
        out.push(AutomorphismSpec::new(1, swap).unwrap());
    }
    out
}

/// All subcodes of `Z_m^n` spanned by at most two vectors.
pub fn base_codes(m: u32, n: usize) -> Vec<LinearCode> {
    let r = ring(m, 0);
    let total = (m as u128).pow(n as u32);
    let words: Vec<RkVector> = (0..total).map(|i| RkVector::from_index(r, n, i, m as u128)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in &words {
        for b in &words {
            let c = LinearCode::span(r, n, vec![a.clone(), b.clone()], guard()).unwrap();
            let key: Vec<RkVector> = c.codewords().cloned().collect();
            if seen.insert(key) {
                out.push(c);
            }
        }
    }
    out
}

pub fn table1() -> TableFile {
    let text = include_str!("../../cli/data/table1.json");
    serde_json::from_str(text).unwrap()
}

//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use ncreal_core::factor::is_irreducible_homogeneous;
use ncreal_core::poly::q_int;
use ncreal_core::word::Letter;
use ncreal_core::{Polynomial, Word};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut ChaCha8Rng, g: usize, d: usize) -> Word {
    (0..d).map(|_| Letter::from_code(rng.gen_range(0..2 * g))).collect()
}

/// Nonzero coefficient in `-c..=c`.
pub fn random_coeff(rng: &mut ChaCha8Rng, c: i64) -> i64 {
    loop {
        let a = rng.gen_range(-c..=c);
        if a != 0 {
            return a;
        }
    }
}

/// Homogeneous of degree `d` with up to `terms` terms; never zero.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, g: usize, d: usize, terms: usize) -> Polynomial {
    loop {
        let mut p = Polynomial::zero(g);
        for _ in 0..rng.gen_range(1..=terms) {
            let w = random_word(rng, g, d);
            p.add_term(w, q_int(random_coeff(rng, 3)));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Degree at most `d`, up to `terms` terms, possibly zero.
pub fn random_poly(rng: &mut ChaCha8Rng, g: usize, d: usize, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(g);
    for _ in 0..rng.gen_range(0..=terms) {
        let k = rng.gen_range(0..=d);
        let w = random_word(rng, g, k);
        p.add_term(w, q_int(random_coeff(rng, 3)));
    }
    p
}

pub fn random_irreducible(rng: &mut ChaCha8Rng, g: usize, d: usize) -> Polynomial {
    loop {
        let p = random_homogeneous(rng, g, d, 3);
        if is_irreducible_homogeneous(&p).unwrap() {
            return p;
        }
    }
}

/// A product of random irreducibles of degree ≤ 2 with total degree in
/// `1..=max_degree`, together with its factors.
pub fn random_product(rng: &mut ChaCha8Rng, g: usize, max_degree: usize) -> (Polynomial, Vec<Polynomial>) {
    let target = rng.gen_range(1..=max_degree);
    let mut factors = Vec::new();
    let mut deg = 0;
    while deg < target {
        let d = rng.gen_range(1..=2.min(target - deg));
        factors.push(random_irreducible(rng, g, d));
        deg += d;
    }
    (Polynomial::product(&factors, g), factors)
}

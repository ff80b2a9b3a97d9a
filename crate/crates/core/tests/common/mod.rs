#![allow(dead_code)]

use polyprod::oracle::random_complex;
use polyprod::{BigInt, Rational, SimplicialComplex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn bigs(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| big(x)).collect()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(big(n), big(d))
}

pub fn random_complex_up_to(rng: &mut ChaCha8Rng, max_m: usize) -> SimplicialComplex {
    let m = rng.random_range(1..=max_m);
    random_complex(rng, m).unwrap()
}

/// Clique complex of a random graph with edge probability `p`.
pub fn random_flag_complex(rng: &mut ChaCha8Rng, m: usize, p: f64) -> SimplicialComplex {
    let edges: Vec<(usize, usize)> =
        (1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b))).filter(|_| rng.random_bool(p)).collect();
    SimplicialComplex::clique_complex(m, &edges).unwrap()
}

pub fn random_ints(rng: &mut ChaCha8Rng, m: usize, lo: i64, hi: i64) -> Vec<BigInt> {
    (0..m).map(|_| big(rng.random_range(lo..=hi))).collect()
}

/// A random rational in `[-5, 5]` with denominator at most 7, never equal to 1.
pub fn random_rational_not_one(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let r = rat(rng.random_range(-35..=35), rng.random_range(1..=7));
        if r != rat(1, 1) {
            return r;
        }
    }
}

/// Every complex on at most four vertices, as enumerated by the oracle module.
pub fn small_complexes() -> Vec<SimplicialComplex> {
    (1..=4).flat_map(|m| polyprod::oracle::all_complexes(m).unwrap()).collect()
}

#![allow(dead_code)]

use psl_core::graph::{families, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 42;

/// Paths P2..P6, cycles C3..C8, complete graphs K2..K5, stars K1,1..K1,5 and
/// 50 seeded random graphs on at most 12 vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push((format!("P{n}"), families::path(n)));
    }
    for n in 3..=8 {
        out.push((format!("C{n}"), families::cycle(n)));
    }
    for n in 2..=5 {
        out.push((format!("K{n}"), families::complete(n)));
    }
    for n in 1..=5 {
        out.push((format!("K1,{n}"), families::star(n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    for i in 0..50 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.15..0.6);
        out.push((format!("random#{i}(n={n})"), families::random(n, p, &mut rng)));
    }
    out
}

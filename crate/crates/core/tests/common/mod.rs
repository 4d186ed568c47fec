//! Seeded generators shared by the integration suites.

#![allow(dead_code)]

use conformal_em::exact::{self, Exact};
use conformal_em::{Branch, CompactSolution};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A rational in `(0, max]` with denominator at most `den`.
pub fn rational(rng: &mut StdRng, max: i64, den: i64) -> Exact {
    let q = rng.gen_range(1..=den);
    let p = rng.gen_range(1..=max * q);
    exact::ratio(p, q)
}

/// Random `0 < a < b ≤ max` with `b/a ≥ min_ratio`.
pub fn ordered_pair(rng: &mut StdRng, max: i64, min_ratio: f64) -> (Exact, Exact) {
    loop {
        let x = rational(rng, max, 12);
        let y = rational(rng, max, 12);
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        if a < b && exact::to_f64(&b) >= min_ratio * exact::to_f64(&a) {
            return (a, b);
        }
    }
}

/// `k ∈ 1..=10` First-branch or `k = 1` Second-branch solution.
pub fn solution(rng: &mut StdRng, max: i64, min_ratio: f64) -> CompactSolution {
    let (a, b) = ordered_pair(rng, max, min_ratio);
    if rng.gen_bool(0.25) {
        CompactSolution::build(1, a, b, Branch::Second).expect("second branch builds for k = 1")
    } else {
        let k = rng.gen_range(1..=10);
        CompactSolution::build(k, a, b, Branch::First).expect("first branch always builds")
    }
}

/// Uniform points in `[a + δ, b - δ]` with `δ = (b - a)/100`.
pub fn interior_points(rng: &mut StdRng, sol: &CompactSolution, n: usize) -> Vec<f64> {
    let (a, b) = (exact::to_f64(sol.a()), exact::to_f64(sol.b()));
    let d = (b - a) / 100.0;
    (0..n).map(|_| rng.gen_range(a + d..=b - d)).collect()
}

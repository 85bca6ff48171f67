//! Deterministic randomness for the test suites.
//!
//! Each test binary compiles this module independently, so not every helper
//! is used everywhere.
#![allow(dead_code)]

use spectral_kit_core::graph::Graph;

/// xorshift64*: small, seedable, reproducible across platforms.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn usize_below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// True with probability `percent / 100`.
    pub fn chance(&mut self, percent: u64) -> bool {
        self.next_u64() % 100 < percent
    }

    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}

/// Random labeled graph with edge probability `percent / 100`.
pub fn random_graph(rng: &mut Rng, n: usize, percent: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(percent) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

/// Random connected graph, by rejection.
pub fn random_connected_graph(rng: &mut Rng, n: usize, percent: u64) -> Graph {
    loop {
        let g = random_graph(rng, n, percent);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random vector on the unit sphere.
pub fn random_unit_vector(rng: &mut Rng, n: usize) -> Vec<f64> {
    loop {
        let mut x: Vec<f64> = (0..n).map(|_| rng.unit_f64() * 2.0 - 1.0).collect();
        let norm = x.iter().map(|e| e * e).sum::<f64>().sqrt();
        if norm > 1e-3 {
            for e in x.iter_mut() {
                *e /= norm;
            }
            return x;
        }
    }
}

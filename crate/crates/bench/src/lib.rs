//! Shared helpers for the criterion benches.

use spectral_kit_core::graph::Graph;

/// A deterministic pseudo-random connected graph for benchmark inputs.
pub fn scrambled_graph(n: usize, seed: u64) -> Graph {
    let mut state = seed | 1;
    let mut step = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    for u in 0..n {
        for v in u + 2..n {
            if step() % 5 == 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

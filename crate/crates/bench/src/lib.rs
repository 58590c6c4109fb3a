//! Fixed instances shared by the benchmarks.

use domset_core::{random_connected, Graph};

/// Seeded connected graph with `round(density · n(n−1)/2)` edges.
pub fn instance(n: usize, density: f64, seed: u64) -> Graph {
    let m = ((density * (n * (n - 1) / 2) as f64).round() as usize).max(n - 1);
    random_connected(n, m, seed).expect("edge budget in range")
}

/// `(label, graph)` pairs: sparse, medium and dense at a few sizes.
pub fn suite(sizes: &[usize]) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for &n in sizes {
        for density in [0.2, 0.5, 0.8] {
            out.push((format!("n{n}_d{density}"), instance(n, density, n as u64)));
        }
    }
    out
}

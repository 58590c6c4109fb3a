use std::collections::{BinaryHeap, HashSet};
use std::cmp::Reverse;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};
use crate::error::GraphError;

/// Seeded random connected graph with exactly `m` edges.
///
/// A uniformly random labelled spanning tree (decoded from a random Prüfer
/// sequence) is laid down first, then edges between non-adjacent pairs are
/// drawn uniformly until `m` edges exist.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let max = n * (n - 1) / 2;
    let min = n - 1;
    if m < min || m > max {
        return Err(GraphError::EdgeBudgetOutOfRange { n, m, min, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_tree(n, &mut rng);
    let extra = m - edges.len();
    if extra > 0 {
        let present: HashSet<(Vertex, Vertex)> = edges.iter().copied().collect();
        let free = max - edges.len();
        if 2 * extra <= free {
            // Sparse fill: rejection sampling touches few pairs.
            let mut taken = present;
            while taken.len() < m {
                let u = rng.random_range(0..n);
                let v = rng.random_range(0..n);
                if u == v {
                    continue;
                }
                let key = (u.min(v), u.max(v));
                if taken.insert(key) {
                    edges.push(key);
                }
            }
        } else {
            let mut candidates: Vec<(Vertex, Vertex)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|pair| !present.contains(pair))
                .collect();
            let (chosen, _) = candidates.partial_shuffle(&mut rng, extra);
            edges.extend_from_slice(chosen);
        }
    }
    Graph::from_zero_based(n, edges)
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    match n {
        1 => return Vec::new(),
        2 => return vec![(0, 1)],
        _ => {}
    }
    let prufer: Vec<Vertex> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &prufer {
        let Reverse(leaf) = leaves.pop().expect("prufer decoding always has a leaf");
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a.min(b), a.max(b)));
    edges
}

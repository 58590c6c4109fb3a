//! Shared test corpus: seeded random graphs plus the classic families.
#![allow(dead_code)]

use domset_core::{random_connected, Graph};

pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

/// `round(density · n(n−1)/2)`, never below a spanning tree.
pub fn edges_for(n: usize, density: f64) -> usize {
    let m = (density * (n * (n - 1) / 2) as f64).round() as usize;
    m.max(n - 1)
}

pub fn path(k: usize) -> Graph {
    let pairs: Vec<_> = (1..k).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(k, &pairs).unwrap()
}

pub fn cycle(k: usize) -> Graph {
    let mut pairs: Vec<_> = (1..k).map(|i| (i, i + 1)).collect();
    pairs.push((k, 1));
    Graph::from_edge_list(k, &pairs).unwrap()
}

/// `K1,leaves` with the centre as vertex 1.
pub fn star(leaves: usize) -> Graph {
    let pairs: Vec<_> = (2..=leaves + 1).map(|j| (1, j)).collect();
    Graph::from_edge_list(leaves + 1, &pairs).unwrap()
}

pub fn complete(k: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 1..=k {
        for j in i + 1..=k {
            pairs.push((i, j));
        }
    }
    Graph::from_edge_list(k, &pairs).unwrap()
}

pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i + 1, (i + 1) % 5 + 1));
        pairs.push((i + 1, i + 6));
        pairs.push((i + 6, (i + 2) % 5 + 6));
    }
    Graph::from_edge_list(10, &pairs).unwrap()
}

/// 210 seeded graphs: n = 5..=18, three densities, five seeds each.
pub fn random_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 5..=18 {
        for (di, &d) in DENSITIES.iter().enumerate() {
            for rep in 0..5u64 {
                let m = edges_for(n, d);
                let seed = 1000 * n as u64 + 100 * di as u64 + rep;
                out.push(Instance {
                    name: format!("n{n}_m{m}_s{seed}"),
                    graph: random_connected(n, m, seed).unwrap(),
                });
            }
        }
    }
    out
}

/// Paths and cycles up to 12 vertices, stars, complete graphs, Petersen.
pub fn family_corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    let mut push = |name: String, graph| out.push(Instance { name, graph });
    for k in 1..=12 {
        push(format!("P{k}"), path(k));
    }
    for k in 3..=12 {
        push(format!("C{k}"), cycle(k));
    }
    for k in 1..=10 {
        push(format!("K1,{k}"), star(k));
    }
    for k in 1..=8 {
        push(format!("K{k}"), complete(k));
    }
    push("Petersen".into(), petersen());
    out
}

pub fn oracle_corpus() -> Vec<Instance> {
    let mut all = random_corpus();
    all.extend(family_corpus());
    all
}

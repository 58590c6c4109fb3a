//! Immutable simple connected graphs and the structural metrics the solvers consume.
//!
//! Vertices are `0..n` internally. Everything that crosses a file or CLI boundary
//! (DIMACS, LP, JSON witnesses) uses 1-based ids.

mod dimacs;
mod generate;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use generate::random_connected;

use crate::bitset::{words_for, VertexBits};
use crate::error::{GraphError, SolveError};
use crate::solution::Solution;

pub type Vertex = usize;

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
    max_degree: usize,
    diameter: usize,
    radius: usize,
    leaves: Vec<Vertex>,
    supports: Vec<Vertex>,
    is_leaf: Vec<bool>,
    is_support: Vec<bool>,
    /// Row-major closed-neighbourhood bitsets, `words` u64 per row.
    closed: Vec<u64>,
    words: usize,
}

impl Graph {
    /// Builds a graph from 1-based vertex pairs. Repeated pairs are merged.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((u - 1, v - 1));
        }
        Self::from_zero_based(n, edges)
    }

    pub(crate) fn from_zero_based(
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }

        let words = words_for(n);
        let mut closed = vec![0u64; n * words];
        for v in 0..n {
            let row = &mut closed[v * words..(v + 1) * words];
            row[v / 64] |= 1 << (v % 64);
            for &u in &adjacency[v] {
                row[u / 64] |= 1 << (u % 64);
            }
        }

        let is_leaf: Vec<bool> = adjacency.iter().map(|a| a.len() == 1).collect();
        let mut is_support = vec![false; n];
        for v in (0..n).filter(|&v| is_leaf[v]) {
            is_support[adjacency[v][0]] = true;
        }
        let leaves = (0..n).filter(|&v| is_leaf[v]).collect();
        let supports = (0..n).filter(|&v| is_support[v]).collect();
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);

        let mut g = Graph {
            n,
            edges,
            adjacency,
            max_degree,
            diameter: 0,
            radius: 0,
            leaves,
            supports,
            is_leaf,
            is_support,
            closed,
            words,
        };
        let ecc = g.eccentricities()?;
        g.diameter = ecc.iter().copied().max().unwrap_or(0);
        g.radius = ecc.iter().copied().min().unwrap_or(0);
        Ok(g)
    }

    /// Breadth-first search from every vertex. Dense graphs expand whole
    /// frontiers through the bitset rows, sparse ones walk adjacency lists.
    /// Fails with `DisconnectedGraph` if some vertex is unreachable from vertex 0.
    fn eccentricities(&self) -> Result<Vec<usize>, GraphError> {
        let dense = self.n * self.words < 2 * self.m();
        let mut ecc = vec![0; self.n];
        for (source, slot) in ecc.iter_mut().enumerate() {
            let (depth, visited) = if dense {
                self.bfs_bits(source)
            } else {
                self.bfs_lists(source)
            };
            if visited.count() != self.n {
                let missing = (0..self.n).find(|&v| !visited.contains(v)).unwrap();
                return Err(GraphError::DisconnectedGraph(missing + 1));
            }
            *slot = depth;
        }
        Ok(ecc)
    }

    fn bfs_lists(&self, source: Vertex) -> (usize, VertexBits) {
        let mut visited = VertexBits::new(self.n);
        visited.insert(source);
        let mut frontier = vec![source];
        let mut next = Vec::new();
        let mut depth = 0;
        loop {
            next.clear();
            for &v in &frontier {
                for &u in &self.adjacency[v] {
                    if !visited.contains(u) {
                        visited.insert(u);
                        next.push(u);
                    }
                }
            }
            if next.is_empty() {
                return (depth, visited);
            }
            depth += 1;
            std::mem::swap(&mut frontier, &mut next);
        }
    }

    fn bfs_bits(&self, source: Vertex) -> (usize, VertexBits) {
        let mut visited = VertexBits::new(self.n);
        visited.insert(source);
        let mut frontier = visited.clone();
        let mut depth = 0;
        loop {
            let mut reach = VertexBits::new(self.n);
            for v in frontier.iter() {
                reach.union_with(self.closed_row(v));
            }
            let mut grown = false;
            let mut next = VertexBits::new(self.n);
            for v in reach.iter() {
                if !visited.contains(v) {
                    visited.insert(v);
                    next.insert(v);
                    grown = true;
                }
            }
            if !grown {
                return (depth, visited);
            }
            depth += 1;
            frontier = next;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 0-based pairs with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn leaves(&self) -> &[Vertex] {
        &self.leaves
    }

    pub fn supports(&self) -> &[Vertex] {
        &self.supports
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.is_leaf[v]
    }

    pub fn is_support(&self, v: Vertex) -> bool {
        self.is_support[v]
    }

    /// `2m / (n(n-1))`; zero for a single vertex.
    pub fn density(&self) -> f64 {
        if self.n < 2 {
            return 0.0;
        }
        2.0 * self.m() as f64 / (self.n as f64 * (self.n as f64 - 1.0))
    }

    /// Closed neighbourhood `N[v]` as raw bitset words.
    #[inline]
    pub fn closed_row(&self, v: Vertex) -> &[u64] {
        &self.closed[v * self.words..(v + 1) * self.words]
    }

    pub fn closed_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(v).chain(self.adjacency[v].iter().copied())
    }

    /// Supports every solver forces into its solutions. On graphs with fewer
    /// than three vertices the support/leaf reduction is unsound (on K2 both
    /// vertices are leaves and supports), so it is switched off there.
    pub fn forced_supports(&self) -> &[Vertex] {
        if self.n >= 3 {
            &self.supports
        } else {
            &[]
        }
    }

    /// Leaves every solver keeps out of its solutions; empty when `n < 3`.
    pub fn excluded_leaves(&self) -> &[Vertex] {
        if self.n >= 3 {
            &self.leaves
        } else {
            &[]
        }
    }

    pub fn is_excluded_leaf(&self, v: Vertex) -> bool {
        self.n >= 3 && self.is_leaf[v]
    }

    pub fn is_forced_support(&self, v: Vertex) -> bool {
        self.n >= 3 && self.is_support[v]
    }

    /// `V \ (Supp ∪ Leaf)` in ascending order, using the solver reduction sets.
    pub fn free_vertices(&self) -> Vec<Vertex> {
        (0..self.n)
            .filter(|&v| !self.is_forced_support(v) && !self.is_excluded_leaf(v))
            .collect()
    }
}

/// `(diameter, radius)` of a connected graph.
pub fn eccentricity_profile(g: &Graph) -> (usize, usize) {
    (g.diameter(), g.radius())
}

/// Whether `members` (0-based) dominates `g`, checked with cover counters.
pub fn is_dominating(g: &Graph, members: &[Vertex]) -> Result<bool, SolveError> {
    let mut solution = Solution::new(g.n());
    for &v in members {
        if v >= g.n() {
            return Err(SolveError::VertexOutOfRange {
                vertex: v + 1,
                n: g.n(),
            });
        }
        if !solution.contains(v) {
            solution.add(g, v);
        }
    }
    Ok(solution.is_feasible())
}

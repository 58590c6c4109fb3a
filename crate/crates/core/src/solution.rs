use crate::bitset::VertexBits;
use crate::graph::{Graph, Vertex};

/// A vertex subset with per-vertex coverage counters.
///
/// `cover_count(v) = |N[v] ∩ members|`. Members keep their insertion order,
/// which some heuristics read back as the construction order.
#[derive(Clone, Debug)]
pub struct Solution {
    members: Vec<Vertex>,
    in_set: Vec<bool>,
    cover_count: Vec<u32>,
    uncovered: usize,
    undominated: VertexBits,
}

impl Solution {
    /// The empty set over `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            members: Vec::new(),
            in_set: vec![false; n],
            cover_count: vec![0; n],
            uncovered: n,
            undominated: VertexBits::full(n),
        }
    }

    pub fn from_members(g: &Graph, members: impl IntoIterator<Item = Vertex>) -> Self {
        let mut s = Self::new(g.n());
        for v in members {
            if !s.contains(v) {
                s.add(g, v);
            }
        }
        s
    }

    pub fn add(&mut self, g: &Graph, v: Vertex) {
        debug_assert!(!self.in_set[v], "vertex {v} already a member");
        self.in_set[v] = true;
        self.members.push(v);
        for u in g.closed_neighbors(v) {
            self.cover_count[u] += 1;
            if self.cover_count[u] == 1 {
                self.uncovered -= 1;
                self.undominated.remove(u);
            }
        }
    }

    pub fn remove(&mut self, g: &Graph, v: Vertex) {
        debug_assert!(self.in_set[v], "vertex {v} not a member");
        self.in_set[v] = false;
        let pos = self.members.iter().rposition(|&x| x == v).unwrap();
        self.members.remove(pos);
        for u in g.closed_neighbors(v) {
            self.cover_count[u] -= 1;
            if self.cover_count[u] == 0 {
                self.uncovered += 1;
                self.undominated.insert(u);
            }
        }
    }

    /// Removes the most recently added member.
    pub fn pop(&mut self, g: &Graph) -> Option<Vertex> {
        let v = *self.members.last()?;
        self.remove(g, v);
        Some(v)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.in_set[v]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn sorted_members(&self) -> Vec<Vertex> {
        let mut out = self.members.clone();
        out.sort_unstable();
        out
    }

    /// Sorted 1-based ids, as printed in reports.
    pub fn external_ids(&self) -> Vec<usize> {
        self.sorted_members().into_iter().map(|v| v + 1).collect()
    }

    pub fn cover_count(&self, v: Vertex) -> u32 {
        self.cover_count[v]
    }

    pub fn uncovered(&self) -> usize {
        self.uncovered
    }

    pub fn undominated(&self) -> &VertexBits {
        &self.undominated
    }

    pub fn is_feasible(&self) -> bool {
        self.uncovered == 0
    }

    /// Number of neighbours of `v` that are neither members nor adjacent to one.
    #[inline]
    pub fn active_degree(&self, g: &Graph, v: Vertex) -> usize {
        let closed = self.undominated.intersection_count(g.closed_row(v));
        closed - usize::from(self.undominated.contains(v))
    }

    /// A member is redundant when every vertex of its closed neighbourhood is
    /// covered at least twice.
    pub fn is_redundant(&self, g: &Graph, v: Vertex) -> bool {
        self.in_set[v] && g.closed_neighbors(v).all(|u| self.cover_count[u] >= 2)
    }
}

impl PartialEq for Solution {
    fn eq(&self, other: &Self) -> bool {
        self.sorted_members() == other.sorted_members()
    }
}

impl Eq for Solution {}

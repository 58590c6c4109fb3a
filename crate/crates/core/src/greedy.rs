//! Active-degree greedy that produces the initial feasible solution.

use crate::error::SolveError;
use crate::graph::{Graph, Vertex};
use crate::solution::Solution;

/// Count of neighbours `u` of `v` with `u ∉ chosen` and `N(u) ∩ chosen = ∅`.
pub fn active_degree(g: &Graph, v: Vertex, chosen: &[Vertex]) -> Result<usize, SolveError> {
    for &x in chosen.iter().chain(std::iter::once(&v)) {
        if x >= g.n() {
            return Err(SolveError::VertexOutOfRange {
                vertex: x + 1,
                n: g.n(),
            });
        }
    }
    Ok(Solution::from_members(g, chosen.iter().copied()).active_degree(g, v))
}

/// Vertex of maximum active degree among `candidates`; ties go to the smallest id.
pub(crate) fn max_active(
    g: &Graph,
    partial: &Solution,
    candidates: impl Iterator<Item = Vertex>,
) -> Option<Vertex> {
    let mut best: Option<(usize, Vertex)> = None;
    for v in candidates {
        let score = partial.active_degree(g, v);
        match best {
            Some((s, _)) if s >= score => {}
            _ => best = Some((score, v)),
        }
    }
    best.map(|(_, v)| v)
}

/// Seeds with every support vertex, then adds the non-leaf vertex of maximum
/// active degree until the set dominates. A final pass drops members whose
/// closed neighbourhood is covered twice, walking from the newest member back,
/// so the result is a minimal dominating set.
pub fn greedy_solve(g: &Graph) -> Solution {
    let mut s = Solution::from_members(g, g.forced_supports().iter().copied());
    while !s.is_feasible() {
        let pick = max_active(
            g,
            &s,
            (0..g.n()).filter(|&v| !s.contains(v) && !g.is_excluded_leaf(v)),
        )
        // Only reachable if every non-member is an excluded leaf, which the
        // support seeding rules out; fall back to any non-member.
        .or_else(|| max_active(g, &s, (0..g.n()).filter(|&v| !s.contains(v))))
        .expect("an undominated vertex is never a member");
        s.add(g, pick);
    }
    let order: Vec<Vertex> = s.members().iter().rev().copied().collect();
    for v in order {
        if !g.is_forced_support(v) && s.is_redundant(g, v) {
            s.remove(g, v);
        }
    }
    s
}

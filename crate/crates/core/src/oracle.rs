//! Ground-truth domination number by exhaustive enumeration.
//!
//! Works on its own `u32` neighbourhood masks built from the edge list, so it
//! shares no machinery with the solvers it checks.

use crate::error::SolveError;
use crate::graph::{Graph, Vertex};

pub const ORACLE_MAX_N: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub gamma: usize,
    /// 0-based, ascending.
    pub witness: Vec<Vertex>,
    pub subsets_tested: u64,
}

/// Tries every `k`-subset in lexicographic order for `k = 1, 2, …`; the first
/// dominating set found is minimum. `size_cap` stops the search after that size.
pub fn brute_force(g: &Graph, size_cap: Option<usize>) -> Result<OracleResult, SolveError> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(SolveError::SizeGuardExceeded {
            n,
            limit: ORACLE_MAX_N,
        });
    }
    let mut closed: Vec<u32> = (0..n).map(|v| 1 << v).collect();
    for &(u, v) in g.edges() {
        closed[u] |= 1 << v;
        closed[v] |= 1 << u;
    }
    let all: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let max_k = size_cap.unwrap_or(n).min(n);
    let mut tested = 0u64;

    for k in 1..=max_k {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            tested += 1;
            let covered = idx.iter().fold(0u32, |acc, &i| acc | closed[i]);
            if covered == all {
                return Ok(OracleResult {
                    gamma: k,
                    witness: idx,
                    subsets_tested: tested,
                });
            }
            // advance to the next k-combination of 0..n
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
                break;
            };
            idx[pos] += 1;
            for p in pos + 1..k {
                idx[p] = idx[p - 1] + 1;
            }
        }
    }
    Err(SolveError::SizeCapReached(max_k))
}

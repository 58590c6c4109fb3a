//! Exact implicit enumeration: priority lists, ordered subset enumeration at a
//! trial size, and the binary search over solution sizes that drives them.
//!
//! Every enumerated set contains all support vertices and no leaf, so at trial
//! size `ν` the search ranges over subsets of `V \ (Supp ∪ Leaf)` of size at
//! most `ν − s`.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::lower_bound;
use crate::error::SolveError;
use crate::graph::{Graph, Vertex};
use crate::greedy::{greedy_solve, max_active};
use crate::solution::Solution;

/// Ordering of the non-support, non-leaf vertices that drives enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PriorityList {
    order: Vec<Vertex>,
    /// Length of the prefix taken from the seed solution.
    seeded: usize,
}

impl PriorityList {
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn seeded_len(&self) -> usize {
        self.seeded
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// First the members of `seed` outside `Supp ∪ Leaf`, repeatedly taking the
/// one of maximum active degree with respect to the supports and everything
/// listed so far; then the remaining free vertices by non-increasing degree.
/// Ties go to the smallest id.
pub fn build_priority_list(g: &Graph, seed: &Solution) -> Result<PriorityList, SolveError> {
    if !seed.is_feasible() {
        return Err(SolveError::InfeasibleSeed);
    }
    let free = |v: Vertex| !g.is_forced_support(v) && !g.is_excluded_leaf(v);
    let mut pending: Vec<Vertex> = seed.sorted_members().into_iter().filter(|&v| free(v)).collect();
    let mut listed = Solution::from_members(g, g.forced_supports().iter().copied());
    let mut order = Vec::with_capacity(g.n());
    while let Some(v) = max_active(g, &listed, pending.iter().copied()) {
        pending.retain(|&x| x != v);
        listed.add(g, v);
        order.push(v);
    }
    let seeded = order.len();
    let mut rest: Vec<Vertex> = (0..g.n()).filter(|&v| free(v) && !seed.contains(v)).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order.extend(rest);
    Ok(PriorityList { order, seeded })
}

/// Wall-clock and node budget shared by every trial of one solve.
#[derive(Clone, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
    node_cap: Option<u64>,
    nodes_visited: u64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self {
            deadline: None,
            node_cap: None,
            nodes_visited: 0,
        }
    }

    pub fn new(time_limit: Option<Duration>, node_cap: Option<u64>) -> Self {
        Self {
            deadline: time_limit.map(|t| Instant::now() + t),
            node_cap,
            nodes_visited: 0,
        }
    }

    pub fn nodes_visited(&self) -> u64 {
        self.nodes_visited
    }

    #[inline]
    fn tick(&mut self) -> Result<(), SolveError> {
        self.nodes_visited += 1;
        let capped = self.node_cap.is_some_and(|cap| self.nodes_visited > cap);
        let late = self.nodes_visited.is_multiple_of(4096)
            && self.deadline.is_some_and(|d| Instant::now() >= d);
        if capped || late {
            return Err(SolveError::BudgetExhausted {
                nodes_visited: self.nodes_visited,
            });
        }
        Ok(())
    }
}

/// Depth-first lexicographic enumeration over subsets of `list` of size at
/// most `nu − s`, each joined with the supports and tested for domination at
/// every node, the empty subset first. Returns the first dominating set met,
/// which may be smaller than `nu`.
///
/// With `pruning` set, a branch is cut when the remaining picks cannot cover
/// the undominated count even using the largest closed neighbourhoods left.
pub fn next_feasible(
    g: &Graph,
    nu: usize,
    list: &PriorityList,
    budget: &mut Budget,
    pruning: bool,
) -> Result<Option<Solution>, SolveError> {
    let supports = g.forced_supports();
    if nu < supports.len() {
        return Ok(None);
    }
    let mut current = Solution::from_members(g, supports.iter().copied());
    // suffix_reach[i] = max |N[v]| over list[i..]
    let mut suffix_reach = vec![0usize; list.len() + 1];
    for i in (0..list.len()).rev() {
        suffix_reach[i] = suffix_reach[i + 1].max(g.degree(list.order[i]) + 1);
    }
    let mut search = Enumeration {
        g,
        list: &list.order,
        suffix_reach: &suffix_reach,
        budget,
        pruning,
    };
    if search.visit(&mut current, 0, nu - supports.len())? {
        Ok(Some(current))
    } else {
        Ok(None)
    }
}

struct Enumeration<'a> {
    g: &'a Graph,
    list: &'a [Vertex],
    suffix_reach: &'a [usize],
    budget: &'a mut Budget,
    pruning: bool,
}

impl Enumeration<'_> {
    /// Tests `current`, then extends it by each `list[i]`, `i ≥ start`, while
    /// picks remain. Leaves the winning set in `current` on success.
    fn visit(&mut self, current: &mut Solution, start: usize, picks: usize) -> Result<bool, SolveError> {
        self.budget.tick()?;
        if current.is_feasible() {
            return Ok(true);
        }
        if picks == 0 {
            return Ok(false);
        }
        for i in start..self.list.len() {
            if self.pruning && current.uncovered() > picks * self.suffix_reach[i] {
                break;
            }
            current.add(self.g, self.list[i]);
            if self.visit(current, i + 1, picks - 1)? {
                return Ok(true);
            }
            current.pop(self.g);
        }
        Ok(false)
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact: acc * (n - i) is divisible by (i + 1)
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// `Σ_{k ≤ picks} C(free, k)`, saturating.
pub fn enumeration_envelope(free: usize, picks: usize) -> u128 {
    (0..=picks.min(free)).fold(0u128, |acc, k| acc.saturating_add(binomial(free, k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Proof {
    Exact,
    UpperBoundOnly,
}

#[derive(Clone, Debug, Default)]
pub struct ExactConfig {
    pub time_limit: Option<Duration>,
    pub node_cap: Option<u64>,
    pub pruning: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrialOutcome {
    Found(usize),
    Infeasible,
    BudgetExhausted,
}

/// One enumeration at a trial size. `lower` is the proven lower bound on γ
/// when the trial started.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Trial {
    pub nu: usize,
    pub lower: usize,
    pub upper: usize,
    pub nodes: u64,
    pub outcome: TrialOutcome,
}

#[derive(Clone, Debug, Default)]
pub struct ExactStats {
    pub initial_lower: usize,
    pub initial_upper: usize,
    /// Proven lower bound at exit; equals `gamma` when the proof is exact.
    pub final_lower: usize,
    pub trials: Vec<Trial>,
    pub nodes_visited: u64,
}

#[derive(Clone, Debug)]
pub struct ExactOutcome {
    pub gamma: usize,
    pub witness: Solution,
    pub proof: Proof,
    pub stats: ExactStats,
}

/// Binary search over solution sizes between the combined lower bound and the
/// greedy upper bound, trial sizes `⌊(L + 3U)/4⌋`.
///
/// `L` here is the largest size known to admit no dominating set, so it starts
/// one below the combined lower bound.
pub fn bds_solve(g: &Graph, cfg: &ExactConfig) -> ExactOutcome {
    let initial_lower = lower_bound(g).lower as usize;
    let mut best = greedy_solve(g);
    let mut upper = best.len();
    let mut infeasible_up_to = initial_lower.saturating_sub(1);
    let mut list = build_priority_list(g, &best).expect("greedy output dominates");
    let mut budget = Budget::new(cfg.time_limit, cfg.node_cap);
    let mut stats = ExactStats {
        initial_lower,
        initial_upper: upper,
        ..Default::default()
    };
    let mut proof = Proof::Exact;

    while upper > infeasible_up_to + 1 {
        let nu = (infeasible_up_to + 3 * upper) / 4;
        debug_assert!(infeasible_up_to < nu && nu < upper);
        let before = budget.nodes_visited();
        let result = next_feasible(g, nu, &list, &mut budget, cfg.pruning);
        let mut trial = Trial {
            nu,
            lower: infeasible_up_to + 1,
            upper,
            nodes: budget.nodes_visited() - before,
            outcome: TrialOutcome::Infeasible,
        };
        match result {
            Ok(None) => infeasible_up_to = nu,
            Ok(Some(found)) => {
                trial.outcome = TrialOutcome::Found(found.len());
                upper = found.len();
                best = found;
                list = build_priority_list(g, &best).expect("found set dominates");
            }
            Err(_) => {
                trial.outcome = TrialOutcome::BudgetExhausted;
                trial.nodes = budget.nodes_visited() - before;
                stats.trials.push(trial);
                proof = Proof::UpperBoundOnly;
                break;
            }
        }
        log::debug!("bds trial {trial:?}");
        stats.trials.push(trial);
    }
    stats.final_lower = if proof == Proof::Exact {
        upper
    } else {
        infeasible_up_to + 1
    };
    stats.nodes_visited = budget.nodes_visited();
    ExactOutcome {
        gamma: upper,
        witness: best,
        proof,
        stats,
    }
}

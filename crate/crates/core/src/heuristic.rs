//! Breadth/depth hybrid heuristic.
//!
//! Base solutions of size `β = ⌊α(U − s)⌋ + s` are drawn breadth-first; each
//! base is grown one vertex at a time, depth-first, up to size `U − 1`. The
//! first feasible set met becomes the new incumbent and the search restarts at
//! the new, smaller `β`. A level whose bases are all spent ends the search.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use itertools::{Combinations, Itertools};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::SolveError;
use crate::exact::binomial;
use crate::graph::{Graph, Vertex};
use crate::greedy::{greedy_solve, max_active};
use crate::solution::Solution;

/// Collision retries before base generation falls back to lexicographic order.
pub const COLLISION_RETRIES: usize = 50;

pub const ALPHA_RANGE: (f64, f64) = (0.2, 0.7);

/// `⌊α(U − s)⌋ + s`.
pub fn beta(alpha: f64, upper: usize, supports: usize) -> Result<usize, SolveError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(SolveError::AlphaOutOfRange(alpha));
    }
    debug_assert!(upper >= supports);
    Ok((alpha * (upper - supports) as f64).floor() as usize + supports)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BaseLimit {
    /// `10 · n` bases per level.
    #[default]
    Auto,
    Fixed(u64),
    /// Every base of the level, however many there are.
    Unlimited,
}

#[derive(Clone, Debug, Default)]
pub struct DbsConfig {
    /// Drawn uniformly from `[0.2, 0.7]` when unset.
    pub alpha: Option<f64>,
    pub seed: u64,
    pub max_bases_per_level: BaseLimit,
    pub time_limit: Option<Duration>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BaseRule {
    /// Leading non-support vertices of the incumbent, in construction order.
    IncumbentPrefix,
    /// Random non-support vertices of the incumbent.
    IncumbentSample,
    /// Random vertices outside `Supp ∪ Leaf`.
    FreeSample,
    /// Next unseen subset in lexicographic order.
    Lexicographic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseSolution {
    /// Supports first, then the drawn vertices.
    pub members: Vec<Vertex>,
    pub rule: BaseRule,
    pub index: u64,
}

/// Emits distinct base solutions of one size.
pub struct BaseGenerator {
    beta: usize,
    picks: usize,
    supports: Vec<Vertex>,
    incumbent_pool: Vec<Vertex>,
    free: Vec<Vertex>,
    total: u128,
    incumbent_total: u128,
    seen: HashSet<Vec<Vertex>>,
    lexicographic: Option<Combinations<std::vec::IntoIter<Vertex>>>,
}

impl BaseGenerator {
    pub fn new(g: &Graph, incumbent: &Solution, beta: usize) -> Self {
        let supports = g.forced_supports().to_vec();
        debug_assert!(beta >= supports.len());
        let picks = beta - supports.len();
        let incumbent_pool: Vec<Vertex> = incumbent
            .members()
            .iter()
            .copied()
            .filter(|&v| !g.is_forced_support(v))
            .collect();
        let free = g.free_vertices();
        Self {
            beta,
            picks,
            total: binomial(free.len(), picks),
            incumbent_total: binomial(incumbent_pool.len(), picks),
            supports,
            incumbent_pool,
            free,
            seen: HashSet::new(),
            lexicographic: None,
        }
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Number of distinct bases of this size, `C(n − s − l, β − s)`.
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn emitted(&self) -> usize {
        self.seen.len()
    }

    /// Base number `h`: `h = 0` takes the incumbent prefix, `h` below
    /// `C(|σ| − s, β − s)` samples the incumbent, later ones sample the free
    /// vertices. Collisions resample; after [`COLLISION_RETRIES`] of them the
    /// generator walks the remaining subsets in lexicographic order for good.
    pub fn next_base(&mut self, h: u64, rng: &mut impl Rng) -> Result<BaseSolution, SolveError> {
        if self.seen.len() as u128 >= self.total {
            return Err(SolveError::Exhausted);
        }
        if self.lexicographic.is_none() {
            let rule = if h == 0 {
                BaseRule::IncumbentPrefix
            } else if (h as u128) < self.incumbent_total {
                BaseRule::IncumbentSample
            } else {
                BaseRule::FreeSample
            };
            for _ in 0..=COLLISION_RETRIES {
                let picked = self.draw(rule, rng);
                if let Some(base) = self.accept(picked, rule, h) {
                    return Ok(base);
                }
                if rule == BaseRule::IncumbentPrefix {
                    break;
                }
            }
            self.lexicographic = Some(self.free.clone().into_iter().combinations(self.picks));
        }
        let walk = self.lexicographic.as_mut().unwrap();
        for picked in walk.by_ref() {
            if !self.seen.contains(&picked) {
                return Ok(self.accept(picked, BaseRule::Lexicographic, h).unwrap());
            }
        }
        Err(SolveError::Exhausted)
    }

    fn draw(&self, rule: BaseRule, rng: &mut impl Rng) -> Vec<Vertex> {
        let pool = match rule {
            BaseRule::IncumbentPrefix => return self.incumbent_pool[..self.picks].to_vec(),
            BaseRule::IncumbentSample => &self.incumbent_pool,
            _ => &self.free,
        };
        sample(rng, pool.len(), self.picks)
            .into_iter()
            .map(|i| pool[i])
            .collect()
    }

    fn accept(&mut self, picked: Vec<Vertex>, rule: BaseRule, h: u64) -> Option<BaseSolution> {
        let mut key = picked.clone();
        key.sort_unstable();
        if !self.seen.insert(key) {
            return None;
        }
        let mut members = self.supports.clone();
        members.extend(picked);
        Some(BaseSolution {
            members,
            rule,
            index: h,
        })
    }
}

/// Grows `base` one vertex at a time while its size is below `upper − 1`,
/// returning the first dominating set reached. Base number 0 adds uniformly
/// random non-leaf vertices; later bases add the vertex of maximum active
/// degree (ties to the smallest id). The base itself is not tested here.
pub fn extend(
    g: &Graph,
    base: &BaseSolution,
    upper: usize,
    h: u64,
    rng: &mut impl Rng,
) -> Option<Solution> {
    let mut current = Solution::from_members(g, base.members.iter().copied());
    while current.len() + 1 < upper {
        let candidates = (0..g.n()).filter(|&v| !current.contains(v) && !g.is_excluded_leaf(v));
        let pick = if h == 0 {
            let pool: Vec<Vertex> = candidates.collect();
            if pool.is_empty() {
                return None;
            }
            pool[rng.random_range(0..pool.len())]
        } else {
            max_active(g, &current, candidates)?
        };
        current.add(g, pick);
        if current.is_feasible() {
            return Some(current);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelStats {
    pub beta: usize,
    /// Incumbent size while this level ran.
    pub upper: usize,
    pub bases_tried: u64,
    /// `C(n − s − l, β − s)`, saturating.
    pub total_bases: u128,
    pub improved_to: Option<usize>,
    /// Every base of the level was tried without success.
    pub exhausted: bool,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct DbsStats {
    pub alpha: f64,
    pub greedy_size: usize,
    pub levels: Vec<LevelStats>,
    pub deadline_hit: bool,
}

impl DbsStats {
    pub fn bases_tried(&self) -> u64 {
        self.levels.iter().map(|l| l.bases_tried).sum()
    }
}

#[derive(Clone, Debug)]
pub struct DbsOutcome {
    pub size: usize,
    pub witness: Solution,
    pub stats: DbsStats,
}

pub fn dbs_solve(g: &Graph, cfg: &DbsConfig) -> Result<DbsOutcome, SolveError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let alpha = match cfg.alpha {
        Some(a) => a,
        None => rng.random_range(ALPHA_RANGE.0..=ALPHA_RANGE.1),
    };
    let s = g.forced_supports().len();
    let mut incumbent = greedy_solve(g);
    beta(alpha, incumbent.len(), s)?;
    let deadline = cfg.time_limit.map(|t| Instant::now() + t);
    let cap = match cfg.max_bases_per_level {
        BaseLimit::Auto => 10 * g.n() as u128,
        BaseLimit::Fixed(k) => k as u128,
        BaseLimit::Unlimited => u128::MAX,
    };
    let mut stats = DbsStats {
        alpha,
        greedy_size: incumbent.len(),
        ..Default::default()
    };

    loop {
        let upper = incumbent.len();
        let size = beta(alpha, upper, s)?;
        if size >= upper {
            break;
        }
        let mut bases = BaseGenerator::new(g, &incumbent, size);
        let limit = bases.total().min(cap);
        let mut level = LevelStats {
            beta: size,
            upper,
            bases_tried: 0,
            total_bases: bases.total(),
            improved_to: None,
            exhausted: false,
        };
        let mut found = None;
        let mut h: u64 = 0;
        while (h as u128) < limit {
            if deadline.is_some_and(|d| Instant::now() >= d) {
                stats.deadline_hit = true;
                break;
            }
            let Ok(base) = bases.next_base(h, &mut rng) else {
                break;
            };
            level.bases_tried += 1;
            let as_set = Solution::from_members(g, base.members.iter().copied());
            if as_set.is_feasible() {
                found = Some(as_set);
                break;
            }
            if let Some(ext) = extend(g, &base, upper, h, &mut rng) {
                found = Some(ext);
                break;
            }
            h += 1;
        }
        level.exhausted = found.is_none() && level.bases_tried as u128 == bases.total();
        level.improved_to = found.as_ref().map(Solution::len);
        log::debug!("dbs level {level:?}");
        stats.levels.push(level);
        match found {
            Some(better) => incumbent = better,
            None => break,
        }
        if stats.deadline_hit {
            break;
        }
    }

    Ok(DbsOutcome {
        size: incumbent.len(),
        witness: incumbent,
        stats,
    })
}

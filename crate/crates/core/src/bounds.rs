//! Combinatorial lower and upper bounds on the domination number.

use num_rational::Ratio;
use serde::Serialize;

use crate::graph::Graph;

pub type Rational = Ratio<u64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    /// `n / (Δ + 1)`
    pub lb_degree: Rational,
    /// `(d + 1) / 3`
    pub lb_diameter: Rational,
    /// `2r / 3`
    pub lb_radius: Rational,
    /// Number of support vertices; `None` when `n < 3`, where it is not a bound.
    pub lb_support: Option<u64>,
    /// Ceiling of the largest component.
    pub lower: u64,
    /// `n - l`; `n` when `n < 3` (on K2 both vertices are leaves).
    pub ub_leaf: u64,
    /// `n - Δ`
    pub ub_maxdeg: u64,
    pub ub_heuristic: Option<u64>,
}

/// Integer summary of a [`BoundsReport`] for tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundSummary {
    pub lower: u64,
    pub ub_leaf: u64,
    pub ub_maxdeg: u64,
}

impl BoundsReport {
    /// The four components in table order: degree, diameter, radius, support.
    pub fn components(&self) -> [Rational; 4] {
        [
            self.lb_degree,
            self.lb_diameter,
            self.lb_radius,
            Rational::from_integer(self.lb_support.unwrap_or(0)),
        ]
    }

    pub fn upper(&self) -> u64 {
        let structural = self.ub_leaf.min(self.ub_maxdeg);
        self.ub_heuristic.map_or(structural, |h| h.min(structural))
    }

    pub fn summary(&self) -> BoundSummary {
        BoundSummary {
            lower: self.lower,
            ub_leaf: self.ub_leaf,
            ub_maxdeg: self.ub_maxdeg,
        }
    }
}

/// `⌈max(components)⌉`.
pub fn combine_lower(components: &[Rational]) -> u64 {
    components
        .iter()
        .max()
        .map_or(0, |r| r.ceil().to_integer())
}

pub fn lower_bound(g: &Graph) -> BoundsReport {
    let n = g.n() as u64;
    let lb_degree = Rational::new(n, g.max_degree() as u64 + 1);
    let lb_diameter = Rational::new(g.diameter() as u64 + 1, 3);
    let lb_radius = Rational::new(2 * g.radius() as u64, 3);
    let lb_support = (g.n() >= 3).then_some(g.supports().len() as u64);
    let mut report = BoundsReport {
        lb_degree,
        lb_diameter,
        lb_radius,
        lb_support,
        lower: 0,
        ub_leaf: n - g.excluded_leaves().len() as u64,
        ub_maxdeg: n - g.max_degree() as u64,
        ub_heuristic: None,
    };
    report.lower = combine_lower(&report.components());
    report
}

/// Bounds with the upper candidates filled, carrying an optional heuristic size.
pub fn upper_candidates(g: &Graph, heuristic_size: Option<usize>) -> BoundsReport {
    let mut report = lower_bound(g);
    report.ub_heuristic = heuristic_size.map(|s| s as u64);
    report
}

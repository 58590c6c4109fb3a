//! Minimum dominating set solvers.
//!
//! * [`exact::bds_solve`]: exact binary search over solution sizes with
//!   priority-ordered subset enumeration.
//! * [`heuristic::dbs_solve`]: breadth-first base solutions with depth-first
//!   extensions.
//! * [`greedy::greedy_solve`]: active-degree greedy used to seed both.
//! * [`bounds`]: lower and upper bounds on the domination number.
//! * [`oracle::brute_force`]: exhaustive reference solver for small graphs.
//! * [`lp::write_lp`]: the covering integer program as an LP file.
//! * [`harness`]: run records and batch benchmarking used by the CLI.

pub mod bitset;
pub mod bounds;
pub mod error;
pub mod exact;
pub mod graph;
pub mod greedy;
pub mod harness;
pub mod heuristic;
pub mod lp;
pub mod oracle;
pub mod solution;

pub use bounds::{lower_bound, upper_candidates, BoundsReport};
pub use error::{Error, GraphError, Result, SolveError};
pub use exact::{bds_solve, ExactConfig, ExactOutcome, Proof};
pub use graph::{is_dominating, parse_dimacs, random_connected, write_dimacs, Graph, Vertex};
pub use greedy::{active_degree, greedy_solve};
pub use harness::{Algorithm, RunRecord, SolverConfig};
pub use heuristic::{dbs_solve, BaseLimit, DbsConfig, DbsOutcome};
pub use lp::{parse_lp, write_lp, LpDocument};
pub use oracle::{brute_force, OracleResult};
pub use solution::Solution;

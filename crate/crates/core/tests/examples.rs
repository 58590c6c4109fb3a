//! Worked examples through the public API, one block per module.

mod common;

use common::{cycle, path, petersen, star};
use domset_core::exact::{build_priority_list, next_feasible, Budget};
use domset_core::graph::eccentricity_profile;
use domset_core::heuristic::{beta, extend, BaseGenerator, BaseRule};
use domset_core::{
    active_degree, bds_solve, brute_force, dbs_solve, greedy_solve, is_dominating, lower_bound,
    parse_dimacs, random_connected, upper_candidates, write_dimacs, DbsConfig, ExactConfig, Graph,
    GraphError, Proof, Solution, SolveError,
};
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// 1-based ids to internal indices.
fn ids(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x - 1).collect()
}

#[test]
fn graph_construction() {
    let p4 = Graph::from_edge_list(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
    assert_eq!((p4.max_degree(), p4.diameter(), p4.radius()), (2, 3, 2));
    assert_eq!(p4.leaves(), ids(&[1, 4]));
    assert_eq!(p4.supports(), ids(&[2, 3]));

    let c5 = Graph::from_edge_list(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap();
    assert_eq!((c5.max_degree(), c5.diameter(), c5.radius()), (2, 2, 2));
    assert!(c5.leaves().is_empty() && c5.supports().is_empty());

    assert_eq!(
        Graph::from_edge_list(4, &[(1, 2), (2, 3)]).unwrap_err(),
        GraphError::DisconnectedGraph(4)
    );
    assert!(matches!(
        Graph::from_edge_list(3, &[(1, 4)]),
        Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
    ));
    assert_eq!(Graph::from_edge_list(2, &[(2, 2)]).unwrap_err(), GraphError::SelfLoop(2));
}

#[test]
fn dimacs_examples() {
    let p4 = parse_dimacs(b"p edge 4 3\ne 1 2\ne 2 3\ne 3 4").unwrap();
    assert_eq!(p4.edges(), path(4).edges());

    let k2 = parse_dimacs(b"p edge 2 1\ne 1 2").unwrap();
    assert_eq!(k2.leaves(), [0, 1]);
    assert_eq!(k2.supports(), [0, 1]);

    assert_eq!(
        parse_dimacs(b"p edge 3 2\ne 1 2\ne 1 2").unwrap_err(),
        GraphError::EdgeCountMismatch { declared: 2, found: 1 }
    );
    assert!(matches!(
        parse_dimacs(b"e 1 2\n"),
        Err(GraphError::MalformedHeader { .. })
    ));
}

#[test]
fn dimacs_writer_round_trips() {
    let g = random_connected(30, 80, 4).unwrap();
    let text = write_dimacs(&g, Some(4));
    assert!(text.starts_with("c generated seed=4\np edge 30 80\n"));
    assert_eq!(parse_dimacs(text.as_bytes()).unwrap().edges(), g.edges());
}

#[test]
fn generator_examples() {
    let g = random_connected(50, 286, 7).unwrap();
    assert_eq!((g.n(), g.m()), (50, 286));
    assert!((g.density() - 0.2335).abs() < 1e-3);

    let tree = random_connected(5, 4, 1).unwrap();
    assert_eq!(tree.m(), 4);

    assert_eq!(random_connected(20, 40, 9).unwrap().edges(), random_connected(20, 40, 9).unwrap().edges());
    assert!(matches!(
        random_connected(5, 20, 0),
        Err(GraphError::EdgeBudgetOutOfRange { .. })
    ));
}

#[test]
fn domination_checks() {
    let p4 = path(4);
    assert!(is_dominating(&p4, &ids(&[2, 3])).unwrap());
    assert!(!is_dominating(&p4, &ids(&[1])).unwrap());
    assert!(is_dominating(&cycle(5), &ids(&[1, 3])).unwrap());
    assert!(matches!(
        is_dominating(&p4, &[4]),
        Err(SolveError::VertexOutOfRange { .. })
    ));
}

#[test]
fn eccentricities() {
    assert_eq!(eccentricity_profile(&path(4)), (3, 2));
    assert_eq!(eccentricity_profile(&star(4)), (2, 1));
    assert_eq!(eccentricity_profile(&petersen()), (2, 2));
}

#[test]
fn bounds_examples() {
    let b = lower_bound(&path(4));
    let third = |k| Ratio::new(k, 3);
    assert_eq!((b.lb_degree, b.lb_diameter, b.lb_radius), (third(4), third(4), third(4)));
    assert_eq!((b.lb_support, b.lower), (Some(2), 2));
    assert_eq!(upper_candidates(&path(4), None).ub_leaf, 2);
    assert_eq!(upper_candidates(&star(4), None).ub_maxdeg, 1);

    // support component dropped on K2, where gamma = 1
    let k2 = lower_bound(&path(2));
    assert_eq!(k2.lb_support, None);
    assert_eq!(k2.lower, 1);
}

#[test]
fn active_degree_examples() {
    let c5 = cycle(5);
    assert_eq!(active_degree(&c5, 2, &ids(&[1])).unwrap(), 1);
    let g = petersen();
    for v in 0..10 {
        assert_eq!(active_degree(&g, v, &[]).unwrap(), 3);
    }
    assert_eq!(active_degree(&path(4), 0, &ids(&[2, 3])).unwrap(), 0);
}

#[test]
fn greedy_examples() {
    assert_eq!(greedy_solve(&star(5)).sorted_members(), ids(&[1]));
    assert_eq!(greedy_solve(&path(4)).sorted_members(), ids(&[2, 3]));
    assert_eq!(greedy_solve(&cycle(7)).len(), 3);
}

#[test]
fn priority_list_examples() {
    let p4 = path(4);
    assert!(build_priority_list(&p4, &Solution::from_members(&p4, ids(&[2, 3])))
        .unwrap()
        .is_empty());

    let c5 = cycle(5);
    let list = build_priority_list(&c5, &Solution::from_members(&c5, ids(&[1, 3]))).unwrap();
    assert_eq!(list.order(), ids(&[1, 3, 2, 4, 5]));

    let k14 = star(4);
    assert!(build_priority_list(&k14, &Solution::from_members(&k14, ids(&[1])))
        .unwrap()
        .is_empty());

    assert_eq!(
        build_priority_list(&c5, &Solution::from_members(&c5, ids(&[1]))).unwrap_err(),
        SolveError::InfeasibleSeed
    );
}

#[test]
fn next_feasible_examples() {
    let c5 = cycle(5);
    let list = build_priority_list(&c5, &Solution::from_members(&c5, ids(&[1, 3]))).unwrap();
    let found = next_feasible(&c5, 2, &list, &mut Budget::unlimited(), false).unwrap().unwrap();
    assert_eq!(found.sorted_members(), ids(&[1, 3]));
    assert!(next_feasible(&c5, 1, &list, &mut Budget::unlimited(), false).unwrap().is_none());

    let k14 = star(4);
    let list = build_priority_list(&k14, &Solution::from_members(&k14, ids(&[1]))).unwrap();
    let found = next_feasible(&k14, 1, &list, &mut Budget::unlimited(), false).unwrap().unwrap();
    assert_eq!(found.sorted_members(), ids(&[1]));

    let mut tight = Budget::new(None, Some(2));
    assert!(matches!(
        next_feasible(&c5, 1, &list_for_c5(), &mut tight, false),
        Err(SolveError::BudgetExhausted { .. })
    ));
}

fn list_for_c5() -> domset_core::exact::PriorityList {
    let c5 = cycle(5);
    build_priority_list(&c5, &Solution::from_members(&c5, ids(&[1, 3]))).unwrap()
}

#[test]
fn bds_examples() {
    let cfg = ExactConfig::default();
    let p4 = bds_solve(&path(4), &cfg);
    assert_eq!((p4.gamma, p4.proof), (2, Proof::Exact));
    assert_eq!(p4.witness.sorted_members(), ids(&[2, 3]));
    assert!(p4.stats.trials.is_empty());

    let pet = bds_solve(&petersen(), &cfg);
    assert_eq!((pet.gamma, pet.proof), (3, Proof::Exact));
    let c7 = bds_solve(&cycle(7), &cfg);
    assert_eq!((c7.gamma, c7.proof), (3, Proof::Exact));
}

#[test]
fn beta_examples() {
    assert_eq!(beta(0.5, 10, 2).unwrap(), 6);
    assert_eq!(beta(0.2, 6, 0).unwrap(), 1);
    assert_eq!(beta(0.99, 4, 4).unwrap(), 4);
    assert_eq!(beta(1.2, 4, 0).unwrap_err(), SolveError::AlphaOutOfRange(1.2));
}

#[test]
fn base_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let p4 = path(4);
    let mut gen = BaseGenerator::new(&p4, &Solution::from_members(&p4, ids(&[2, 3])), 2);
    let first = gen.next_base(0, &mut rng).unwrap();
    assert_eq!(first.members, ids(&[2, 3]));
    assert_eq!(gen.next_base(1, &mut rng).unwrap_err(), SolveError::Exhausted);

    let c5 = cycle(5);
    let mut gen = BaseGenerator::new(&c5, &Solution::from_members(&c5, ids(&[1, 3])), 1);
    let first = gen.next_base(0, &mut rng).unwrap();
    assert_eq!((first.members, first.rule), (ids(&[1]), BaseRule::IncumbentPrefix));
}

#[test]
fn extension_examples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let c5 = cycle(5);
    let sigma = Solution::from_members(&c5, ids(&[1, 3]));
    let base = BaseGenerator::new(&c5, &sigma, 1).next_base(0, &mut rng).unwrap();
    assert!(extend(&c5, &base, 3, 1, &mut rng).is_none());
    let grown = extend(&c5, &base, 4, 1, &mut rng).unwrap();
    assert_eq!(grown.sorted_members(), ids(&[1, 2, 3]));
}

#[test]
fn dbs_examples() {
    let cfg = DbsConfig::default();
    let p4 = dbs_solve(&path(4), &cfg).unwrap();
    assert_eq!((p4.size, p4.witness.sorted_members()), (2, ids(&[2, 3])));
    assert_eq!(dbs_solve(&star(5), &cfg).unwrap().size, 1);
    assert_eq!(dbs_solve(&cycle(7), &cfg).unwrap().size, 3);
    let bad = DbsConfig { alpha: Some(0.0), ..Default::default() };
    assert!(matches!(dbs_solve(&path(4), &bad), Err(SolveError::AlphaOutOfRange(_))));
}

#[test]
fn oracle_examples() {
    let p4 = brute_force(&path(4), None).unwrap();
    assert_eq!(p4.gamma, 2);
    // first dominating pair in lexicographic order
    assert_eq!(p4.witness, ids(&[1, 3]));
    assert_eq!(brute_force(&cycle(5), None).unwrap().gamma, 2);
    let pet = brute_force(&petersen(), None).unwrap();
    assert_eq!(pet.gamma, 3);
    assert!(pet.subsets_tested > 10 + 45);
    assert!(matches!(
        brute_force(&random_connected(30, 60, 0).unwrap(), None),
        Err(SolveError::SizeGuardExceeded { n: 30, limit: 25 })
    ));
    assert_eq!(
        brute_force(&petersen(), Some(2)).unwrap_err(),
        SolveError::SizeCapReached(2)
    );
}

use bootstrap_lab::engine::{
    closure, infect_step, is_stable, percolates, run_process, run_process_naive, self_percolates,
    InfectionRule, ProcessTrace,
};
use bootstrap_lab::graphcore::{edge, enumerate_nonisomorphic, Graph};
use proptest::prelude::*;

fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

fn rule(name: &str, g: Graph) -> InfectionRule {
    InfectionRule::new(name, g).unwrap()
}

fn rules() -> Vec<InfectionRule> {
    vec![
        rule("clique 3", Graph::complete(3)),
        rule("clique 4", Graph::complete(4)),
        rule("clique 5", Graph::complete(5)),
        rule("cycle 4", cycle(4)),
        rule("cycle 5", cycle(5)),
        rule("path 4", path(4)),
        rule("star 4", Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap()),
        rule(
            "clique 3 + clique 2",
            Graph::complete(3).disjoint_union(&Graph::complete(2)),
        ),
        rule("cycle 3 + cycle 4", cycle(3).disjoint_union(&cycle(4))),
    ]
}

fn check_invariants(t: &ProcessTrace, rule: &InfectionRule) {
    let mut seen = t.start.clone();
    for r in &t.rounds {
        assert!(!r.is_empty());
        assert!(r.windows(2).all(|w| w[0] < w[1]));
        for &(u, v) in r {
            assert!(seen.add_edge(u, v), "edge ({u}, {v}) repeated");
        }
    }
    assert_eq!(seen, t.final_graph);
    assert_eq!(t.tau, t.rounds.len());
    assert_eq!(t.percolated, t.final_graph.is_complete());
    if !t.truncated {
        assert!(infect_step(&t.final_graph, rule).is_empty());
    }
    let n = t.start.vertex_count();
    assert!(t.tau <= n * n.saturating_sub(1) / 2 - t.start.edge_count());
}

fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.35), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            },
        )
    })
}

#[test]
fn step_examples() {
    let k3 = rule("clique 3", Graph::complete(3));
    assert_eq!(infect_step(&path(3), &k3), vec![(0, 2)]);
    // Oracle: in C5 every non-edge joins two vertices at distance 2.
    assert_eq!(infect_step(&cycle(5), &k3).len(), 5);
}

#[test]
fn process_examples() {
    let k3 = rule("clique 3", Graph::complete(3));
    let t = run_process(&path(5), &k3, None);
    assert_eq!((t.tau, t.percolated), (2, true));
    assert_eq!(run_process(&Graph::complete(6), &k3, None).tau, 0);
}

#[test]
fn self_percolation_examples() {
    let mut k5m = Graph::complete(5);
    k5m.remove_edge(0, 1);
    assert!(self_percolates(&rule("k5-", k5m)));
    assert!(!self_percolates(&rule("cycle 4", cycle(4))));
    assert!(is_stable(&Graph::empty(6), &rule("cycle 4", cycle(4))));
    assert!(percolates(
        &Graph::complete(7),
        &rule("clique 4", Graph::complete(4))
    ));
}

#[test]
fn incremental_matches_naive_on_small_graphs() {
    let rules = rules();
    for n in 1..=5 {
        for g in enumerate_nonisomorphic(n).unwrap() {
            for r in &rules {
                let fast = run_process(g, r, None);
                assert_eq!(
                    fast,
                    run_process_naive(g, r, None),
                    "rule {} on {:?}",
                    r.name(),
                    g
                );
                check_invariants(&fast, r);
                assert_eq!(closure(g, r), fast.final_graph);
            }
        }
    }
}

/// Triangle law: each component closes to a clique and the running time is
/// the ceiling of log2 of the largest within-component distance.
#[test]
fn triangle_law_on_all_graphs_up_to_seven() {
    let k3 = rule("clique 3", Graph::complete(3));
    for n in 1..=7 {
        for g in enumerate_nonisomorphic(n).unwrap() {
            let t = run_process(g, &k3, None);
            let mut expect_tau = 0;
            for u in 0..n {
                for (v, d) in g.distances_from(u).into_iter().enumerate() {
                    assert_eq!(t.final_graph.has_edge(u, v), u != v && d.is_some());
                    if let Some(d) = d.filter(|&d| d > 1) {
                        expect_tau = expect_tau.max(usize::BITS - (d - 1).leading_zeros());
                    }
                }
            }
            assert_eq!(t.tau, expect_tau as usize, "{g:?}");
        }
    }
}

#[test]
fn idempotence_on_final_graphs() {
    for r in rules() {
        for g in enumerate_nonisomorphic(5).unwrap() {
            let t = run_process(g, &r, None);
            assert_eq!(run_process(&t.final_graph, &r, None).tau, 0);
        }
    }
}

#[test]
fn closure_monotone_on_enumerated_pairs() {
    let rules = rules();
    for n in 1..=5 {
        for g in enumerate_nonisomorphic(n).unwrap() {
            for r in &rules {
                let base = closure(g, r);
                for (u, v) in g.non_edges() {
                    let mut bigger = g.clone();
                    bigger.add_edge(u, v);
                    assert!(base.is_subgraph_of(&closure(&bigger, r)));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelling_relabels_rounds(g in graph_strategy(1, 9), seed in any::<u64>(), which in 0usize..9) {
        let r = &rules()[which];
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = run_process(&g, r, None);
        let b = run_process(&g.relabel(&perm), r, None);
        prop_assert_eq!(a.tau, b.tau);
        for (ra, rb) in a.rounds.iter().zip(&b.rounds) {
            let mut mapped: Vec<_> = ra.iter().map(|&(u, v)| edge(perm[u], perm[v])).collect();
            mapped.sort();
            prop_assert_eq!(&mapped, rb);
        }
    }

    #[test]
    fn closure_is_monotone(g in graph_strategy(2, 9), extra in prop::collection::vec((0usize..9, 0usize..9), 1..4), which in 0usize..9) {
        let r = &rules()[which];
        let n = g.vertex_count();
        let mut bigger = g.clone();
        for (u, v) in extra {
            let (u, v) = (u % n, v % n);
            if u != v {
                bigger.add_edge(u, v);
            }
        }
        prop_assert!(closure(&g, r).is_subgraph_of(&closure(&bigger, r)));
    }

    #[test]
    fn larger_graphs_agree_with_naive(g in graph_strategy(7, 9), which in 0usize..9) {
        let r = &rules()[which];
        let t = run_process(&g, r, None);
        check_invariants(&t, r);
        prop_assert_eq!(t, run_process_naive(&g, r, None));
    }
}

use bootstrap_lab::analyzers::*;
use bootstrap_lab::arithmetic::exhaustive_best_set;
use bootstrap_lab::constructions::catalog::resolve_rule;
use bootstrap_lab::constructions::{dilation_k5_assembly, k4_extremal, simple_clique_chain};
use bootstrap_lab::engine::{closure, run_process, InfectionRule};
use bootstrap_lab::graphcore::{enumerate_nonisomorphic, find_embedding, Graph};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rule(spec: &str) -> InfectionRule {
    resolve_rule(spec).unwrap()
}

fn k5_minus() -> Graph {
    let mut g = Graph::complete(5);
    g.remove_edge(3, 4);
    g
}

#[test]
fn inseparability_examples() {
    assert!(is_l1_inseparable(&Graph::complete(5), 2));
    assert!(!is_l1_inseparable(rule("wheel 7").graph(), 2));
    assert!(!is_l1_inseparable(&Graph::complete(4), 2));
    assert!(is_l1_inseparable(&Graph::complete(6), 2));
    // K5 survives two vertex deletions and an edge, but not three.
    assert!(!is_l1_inseparable(&Graph::complete(5), 3));
    assert!(is_l1_inseparable(&Graph::complete(4), 1));
}

#[test]
fn behrendian_examples() {
    assert_eq!(
        is_behrendian(&Graph::complete(3), BEHRENDIAN_EDGE_CAP),
        Behrendian::Yes
    );
    assert_eq!(
        is_behrendian(&k5_minus(), BEHRENDIAN_EDGE_CAP),
        Behrendian::Yes
    );
    let p4 = rule("path 4");
    match is_behrendian(p4.graph(), BEHRENDIAN_EDGE_CAP) {
        Behrendian::No { colouring } => {
            assert_eq!(colouring.len(), 3);
            assert!(colouring.iter().any(|&c| c != colouring[0]));
        }
        other => panic!("expected a counterexample, got {other:?}"),
    }
    assert_eq!(
        is_behrendian(&Graph::complete(6), BEHRENDIAN_EDGE_CAP),
        Behrendian::Unknown
    );
    // Alternating two colours around a 4-cycle gives four runs.
    assert!(matches!(
        is_behrendian(rule("cycle 4").graph(), BEHRENDIAN_EDGE_CAP),
        Behrendian::No { .. }
    ));
}

#[test]
fn chain_dichotomy() {
    let k5 = simple_clique_chain(5, 4).unwrap();
    let report = verify_chain_conditions(&k5, &Condition::ALL);
    assert!(report.all_passed(), "{}", report.to_text());
    assert_eq!(
        report.to_text(),
        "dagger pass\ndagger_prime pass\nstar pass\n"
    );

    let k4 = simple_clique_chain(4, 2).unwrap();
    let report = verify_chain_conditions(&k4, &[Condition::Dagger, Condition::Star]);
    assert_eq!(report.passed(Condition::Dagger), Some(true));
    assert_eq!(report.passed(Condition::Star), Some(false));
    assert_eq!(report.passed(Condition::DaggerPrime), None);
    let failure = report.first_failure().unwrap();
    let Some(ChainWitness::Spanning {
        removed,
        map,
        edges,
    }) = &failure.witness
    else {
        panic!("expected a spanning witness, got {:?}", failure.witness);
    };
    // The witness is a copy of K4 minus `removed` in the underlying graph
    // that no single copy contains.
    let h = Graph::complete(4);
    assert!(h.has_edge(removed.0, removed.1));
    assert_eq!(edges.len(), 5);
    for &(u, v) in edges {
        assert!(k4.underlying().has_edge(u, v));
    }
    for (a, b) in h.edges() {
        if (a, b) != *removed {
            let (u, v) = (map[a], map[b]);
            assert!(edges.contains(&(u.min(v), u.max(v))));
        }
    }
    assert!((0..k4.len()).all(|i| edges.iter().any(|&e| !k4.copy_contains(i, e))));
}

#[test]
fn dilation_chain_passes_conditions() {
    let set = exhaustive_best_set(31, 4).unwrap();
    let chain = dilation_k5_assembly(31, &set).unwrap();
    let report = verify_chain_conditions(&chain, &[Condition::Dagger, Condition::Star]);
    assert!(report.all_passed(), "{}", report.to_text());
}

#[test]
fn alternating_extraction_examples() {
    let k4 = rule("clique 4");
    let trace = run_process(&k4_extremal(8).unwrap(), &k4, None);
    assert_eq!(trace.tau, 5);
    let w = extract_alternating_witness(&trace, &k4).unwrap();
    assert_eq!(w.edge_count(), 3);
    assert!(find_embedding(k4.graph(), &w, None).unwrap().is_none());

    let mut start = Graph::complete(4);
    start.remove_edge(0, 1);
    let trace = run_process(&start, &k4, None);
    assert_eq!(trace.tau, 1);
    let w = extract_alternating_witness(&trace, &k4).unwrap();
    assert_eq!(w.edges(), vec![(0, 1)]);

    let stable = run_process(&Graph::complete(4), &k4, None);
    assert!(extract_alternating_witness(&stable, &k4).is_err());

    let c4 = rule("cycle 4");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut longest = 0;
    for _ in 0..20 {
        let g = random_graph(12, 0.3, &mut rng);
        let trace = run_process(&g, &c4, None);
        if trace.tau == 0 {
            continue;
        }
        longest = longest.max(trace.tau);
        let w = extract_alternating_witness(&trace, &c4).unwrap();
        assert_eq!(w.edge_count(), trace.tau.div_ceil(2));
        assert!(find_embedding(c4.graph(), &w, None).unwrap().is_none());
    }
    assert!(longest >= 1);
}

#[test]
fn max_running_time_examples() {
    let cases = [("clique 3", 5, 2), ("clique 4", 6, 3), ("clique 4", 7, 4)];
    for (spec, n, want) in cases {
        let r = rule(spec);
        let result = brute_force_max_running_time(&r, n).unwrap();
        assert_eq!(result.optimum, want, "{spec} n={n}");
        assert_eq!(result.examined, enumerate_nonisomorphic(n).unwrap().len());
        assert!(!result.witnesses.is_empty());
        for w in &result.witnesses {
            assert_eq!(run_process(w, &r, None).tau, want);
        }
    }
    assert!(brute_force_max_running_time(&rule("clique 3"), 0).is_err());
    assert!(brute_force_max_running_time(&rule("clique 3"), 20).is_err());
}

#[test]
fn weak_saturation_examples() {
    let cases = [("clique 3", 5, 4), ("clique 4", 6, 9), ("cycle 4", 5, 5)];
    for (spec, n, want) in cases {
        let r = rule(spec);
        let result = brute_force_weak_saturation(&r, n).unwrap();
        assert_eq!(result.optimum, want, "{spec} n={n}");
        for w in &result.witnesses {
            assert_eq!(w.edge_count(), want);
            assert!(closure(w, &r).is_complete());
        }
        let text = result.to_text();
        assert!(text.starts_with(&format!(
            "quantity weak-saturation\nrule {spec}\nn {n}\noptimum {want}\n"
        )));
        assert_eq!(text.matches("witness ").count(), result.witnesses.len());
    }
}

#[test]
fn clique_plus_pendant_is_fast() {
    let r = rule("clique-plus-pendant 3");
    for n in 1..=7 {
        assert!(
            brute_force_max_running_time(&r, n).unwrap().optimum <= 3,
            "n = {n}"
        );
    }
}

#[test]
fn search_is_isomorphism_stable() {
    let r = rule("clique 4");
    let result = brute_force_max_running_time(&r, 6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut all: Vec<Graph> = enumerate_nonisomorphic(6).unwrap().to_vec();
    all.shuffle(&mut rng);
    let relabelled_max = all
        .iter()
        .map(|g| {
            let mut perm: Vec<usize> = (0..6).collect();
            perm.shuffle(&mut rng);
            run_process(&g.relabel(&perm), &r, None).tau
        })
        .max()
        .unwrap();
    assert_eq!(relabelled_max, result.optimum);
}

#[test]
fn monte_carlo_examples() {
    let k3 = rule("clique 3");
    let full = percolation_probability(&k3, 50, 1.0, 20, 3).unwrap();
    assert_eq!(full.estimate, 1.0);
    assert_eq!(full.successes, 20);
    let dense = percolation_probability(&k3, 50, 0.30, 200, 7).unwrap();
    assert!(dense.estimate >= 0.95, "{dense:?}");
    assert!(dense.lower <= dense.estimate && dense.estimate <= dense.upper);
    assert_eq!(dense.confidence, 0.95);

    let again = percolation_probability(&k3, 50, 0.08, 100, 7).unwrap();
    assert_eq!(
        again,
        percolation_probability(&k3, 50, 0.08, 100, 7).unwrap()
    );

    assert!(percolation_probability(&k3, 10, 0.5, 0, 1).is_err());
    assert!(percolation_probability(&k3, 10, 1.5, 10, 1).is_err());
}

#[test]
fn monte_carlo_is_monotone_within_slack() {
    let k3 = rule("clique 3");
    let grid = [0.02, 0.04, 0.08, 0.16, 0.32];
    let estimates: Vec<Estimate> = grid
        .iter()
        .map(|&p| percolation_probability(&k3, 40, p, 120, 9).unwrap())
        .collect();
    for pair in estimates.windows(2) {
        assert!(
            pair[1].upper >= pair[0].lower,
            "{:?} then {:?}",
            pair[0],
            pair[1]
        );
    }
    assert!(estimates[0].estimate < 0.5 && estimates[4].estimate > 0.5);
}

/// A clique `W` of `final(g)` of size at least `v(H) - 1` absorbs every
/// vertex with at least `δ(H) - 1` neighbours in it.
fn check_clique_law(r: &InfectionRule, g: &Graph, w_size: usize) -> Result<(), TestCaseError> {
    let mut g = g.clone();
    let w: Vec<usize> = (0..w_size).collect();
    for &a in &w {
        for &b in &w {
            if a < b {
                g.add_edge(a, b);
            }
        }
    }
    let need = r.graph().min_degree().saturating_sub(1);
    let u: Vec<usize> = (w_size..g.vertex_count())
        .filter(|&x| g.neighbors(x).filter(|y| *y < w_size).count() >= need)
        .collect();
    let fin = closure(&g, r);
    let all: Vec<usize> = w.iter().chain(&u).copied().collect();
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i + 1..] {
            prop_assert!(fin.has_edge(a, b), "{} misses {a}-{b}", r.name());
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn clique_law_on_random_instances(
        spec in prop::sample::select(vec!["clique 3", "clique 4", "clique 5", "cycle 4", "cycle 5", "path 4", "star 4", "wheel 4", "clique-plus-pendant 3", "complete-bipartite 2 3"]),
        n in 6usize..11,
        extra in 0usize..3,
        seed in any::<u64>(),
        density in 0.05f64..0.4,
    ) {
        let r = rule(spec);
        let w_size = (r.vertex_count() - 1 + extra).min(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, density, &mut rng);
        check_clique_law(&r, &g, w_size)?;
    }

    #[test]
    fn witnesses_reevaluate_to_the_optimum(n in 3usize..7, spec in prop::sample::select(vec!["clique 3", "cycle 4", "path 4"])) {
        let r = rule(spec);
        let result = brute_force_max_running_time(&r, n).unwrap();
        for w in &result.witnesses {
            prop_assert_eq!(run_process(w, &r, None).tau, result.optimum);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let g = &enumerate_nonisomorphic(n).unwrap()[rng.gen_range(0..result.examined)];
        prop_assert!(run_process(g, &r, None).tau <= result.optimum);
    }
}

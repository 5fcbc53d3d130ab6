//! The acceptance criteria, one check per criterion. Each check runs in
//! isolation, prints a single `criterion N: pass|fail` line, and the test
//! fails at the end if any criterion did.

use std::panic::{catch_unwind, UnwindSafe};
use std::time::Instant;

use bootstrap_lab::analyzers::*;
use bootstrap_lab::arithmetic::{
    behrend_sphere_set, exhaustive_best_set, verify_solution_free, DilationSet,
};
use bootstrap_lab::constructions::catalog::resolve_rule;
use bootstrap_lab::constructions::*;
use bootstrap_lab::engine::{closure, run_process, run_process_naive, InfectionRule};
use bootstrap_lab::graphcore::{enumerate_nonisomorphic, find_embedding};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rule(spec: &str) -> InfectionRule {
    resolve_rule(spec).unwrap()
}

fn check(ok: bool, detail: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail.into())
    }
}

fn ceil_log(base: usize, x: usize) -> usize {
    let (mut k, mut power) = (0, 1);
    while power < x {
        power *= base;
        k += 1;
    }
    k
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        0
    } else {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}

fn k3_formula() -> Outcome {
    let k3 = rule("clique 3");
    let mut got = Vec::new();
    for n in 3..=7 {
        let m = brute_force_max_running_time(&k3, n)
            .map_err(|e| e.to_string())?
            .optimum;
        check(
            m == ceil_log(2, n - 1),
            format!("n={n}: M={m}, formula {}", ceil_log(2, n - 1)),
        )?;
        got.push(m);
    }
    Ok(format!("M_K3(3..7) = {got:?}"))
}

fn k4_formula() -> Outcome {
    let k4 = rule("clique 4");
    let mut got = Vec::new();
    for n in 4..=8 {
        let result = brute_force_max_running_time(&k4, n).map_err(|e| e.to_string())?;
        check(
            result.optimum == n - 3,
            format!("n={n}: M={}", result.optimum),
        )?;
        for w in &result.witnesses {
            let trace = run_process(w, &k4, None);
            check(
                trace.tau == n - 3 && trace == run_process_naive(w, &k4, None),
                format!("n={n}: witness replay"),
            )?;
        }
        got.push(result.optimum);
    }
    Ok(format!("M_K4(4..8) = {got:?}"))
}

fn weak_saturation() -> Outcome {
    let mut cases = Vec::new();
    cases.extend((4..=6).map(|n| ("clique 3", n, n - 1)));
    cases.extend((5..=6).map(|n| ("clique 4", n, binomial(n, 2) - binomial(n - 2, 2))));
    cases.extend((4..=5).map(|n| ("cycle 4", n, n)));
    for &(spec, n, want) in &cases {
        let ws = brute_force_weak_saturation(&rule(spec), n)
            .map_err(|e| e.to_string())?
            .optimum;
        check(
            ws == want,
            format!("{spec} n={n}: ws={ws}, expected {want}"),
        )?;
    }
    Ok(format!("{} instances", cases.len()))
}

fn engine_equivalence() -> Outcome {
    let mut rules: Vec<InfectionRule> = [
        "clique 3", "clique 4", "clique 5", "cycle 4", "cycle 5", "path 4", "star 4",
    ]
    .map(rule)
    .to_vec();
    rules.push(rule("cycle 3 + cycle 4"));
    let mut compared = 0;
    for n in 1..=6 {
        for g in enumerate_nonisomorphic(n).map_err(|e| e.to_string())? {
            for r in &rules {
                check(
                    run_process(g, r, None) == run_process_naive(g, r, None),
                    format!("{} differs on n={n}", r.name()),
                )?;
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} traces identical"))
}

fn dilation_assembly() -> Outcome {
    let p = 31;
    let best = exhaustive_best_set(p, 4).map_err(|e| e.to_string())?;
    check(
        best.len() >= 2,
        format!(
            "no verified set of size 2 exists mod {p} at coefficient bound 4 (largest: {:?}); a length-21 chain on 37 vertices cannot be assembled",
            best.elements()
        ),
    )?;
    let pair =
        DilationSet::new(p, best.elements()[..2].iter().copied(), 4).map_err(|e| e.to_string())?;
    let chain = dilation_k5_assembly(p, &pair).map_err(|e| e.to_string())?;
    check(
        chain.len() == 21 && chain.vertex_count() == 37,
        format!(
            "length {} on {} vertices",
            chain.len(),
            chain.vertex_count()
        ),
    )?;
    let report = verify_chain_conditions(&chain, &[Condition::Dagger, Condition::Star]);
    check(report.all_passed(), report.to_text())?;
    check(is_round_exact(&chain), "replay is not round-exact")?;
    Ok("length 21, 37 vertices, round-exact".into())
}

fn chain_dichotomy() -> Outcome {
    let k5 = simple_clique_chain(5, 4).map_err(|e| e.to_string())?;
    check(
        verify_chain_conditions(&k5, &[Condition::Star]).all_passed(),
        "K5 chain fails (*)",
    )?;
    let k4 = simple_clique_chain(4, 2).map_err(|e| e.to_string())?;
    let report = verify_chain_conditions(&k4, &[Condition::Star]);
    let failure = report.first_failure().ok_or("K4 chain passes (*)")?;
    let witness = failure.witness.as_ref().ok_or("no witness")?;
    check(
        matches!(witness, ChainWitness::Spanning { .. }),
        format!("unexpected witness {witness}"),
    )?;
    Ok(format!("K4 witness: {witness}"))
}

fn star_and_path_rules() -> Outcome {
    for t in 3..=5 {
        let n = 2 * binomial(t, 2);
        let g = star_extremal(t, n).map_err(|e| e.to_string())?;
        let tau = run_process(&g, &rule(&format!("star {t}")), None).tau;
        check(tau == t - 1, format!("t={t} n={n}: tau={tau}"))?;
    }
    for spec in ["path 4", "clique-plus-pendant 3"] {
        let r = rule(spec);
        for n in 1..=6 {
            for g in enumerate_nonisomorphic(n).map_err(|e| e.to_string())? {
                let tau = run_process(g, &r, None).tau;
                check(tau <= 3, format!("{spec}: tau={tau} on n={n}"))?;
            }
        }
    }
    Ok("star taus 2,3,4; P4 and K3+ stabilise within 3 rounds".into())
}

fn odd_cycle_formula() -> Outcome {
    let c5 = rule("cycle 5");
    let mut got = Vec::new();
    for n in [50, 100, 200] {
        let tau = run_process(&path_start(n), &c5, None).tau;
        let want = ceil_log(4, n + 7);
        check(tau == want, format!("n={n}: tau={tau}, formula {want}"))?;
        got.push(tau);
    }
    Ok(format!("taus {got:?} match exactly"))
}

fn gadget_verification() -> Outcome {
    let k5 = rule("clique 5");
    let spec = search_gadget_params(&k5, 1, 60).map_err(|e| e.to_string())?;
    check(spec.verified(), format!("{:?}", spec.checks))?;
    // Re-derive each clause with the engine.
    let mut without = spec.gamma.clone();
    without.remove_edge(spec.trigger.0, spec.trigger.1);
    check(
        run_process(&without, &k5, None).tau == 0,
        "gamma minus e is not stable",
    )?;
    check(
        !spec.gamma.has_edge(spec.target.0, spec.target.1),
        "f is already an edge",
    )?;
    check(
        closure(&spec.gamma, &k5).has_edge(spec.target.0, spec.target.1),
        "f is not infected",
    )?;
    let mut with_core = spec.gamma.clone();
    for (i, &a) in spec.core.iter().enumerate() {
        for &b in &spec.core[i + 1..] {
            with_core.add_edge(a, b);
        }
    }
    check(
        closure(&with_core, &k5).is_complete(),
        "gamma plus clique(U) does not percolate",
    )?;
    let d = spec.params.min_distance;
    let far = |x: Option<usize>| x.is_none_or(|x| x >= d);
    check(
        far(spec.checks.trigger_target_distance) && far(spec.checks.core_distance),
        "distance thresholds",
    )?;
    Ok(format!(
        "{:?}, {} vertices",
        spec.params,
        spec.gamma.vertex_count()
    ))
}

fn wrapper() -> Outcome {
    let k5 = rule("clique 5");
    let chain = simple_clique_chain(5, 3).map_err(|e| e.to_string())?;
    let gadget = search_gadget_params(&k5, 1, 60)
        .map_err(|e| e.to_string())?
        .params;
    let params = WrapperParams {
        gadget,
        independent: Some(52),
        attachment_girth: 4,
        seed: 1,
    };
    let w = slow_percolating_wrapper(&k5, chain.starting(), params).map_err(|e| e.to_string())?;
    let trace = w.replay(&k5);
    check(trace.percolated, "wrapped graph does not percolate")?;
    check(trace.tau >= 3, format!("tau={}", trace.tau))?;
    Ok(format!(
        "{} vertices, tau={}",
        w.graph.vertex_count(),
        trace.tau
    ))
}

fn pendant_simulation() -> Outcome {
    let (h, start) = pendant_simulation_rule();
    let chain = simple_clique_chain(6, 4).map_err(|e| e.to_string())?;
    let trace = run_process(&start(chain.starting()), &h, None);
    check(trace.tau >= 4, format!("tau={}", trace.tau))?;
    for (i, e) in chain.designated().iter().enumerate() {
        check(
            trace.round_of(*e) == Some(i + 1),
            format!("e_{} at round {:?}", i + 1, trace.round_of(*e)),
        )?;
    }
    Ok(format!("tau={}", trace.tau))
}

fn alternating_extraction() -> Outcome {
    let mut checked = 0;
    let mut verify =
        |trace: &bootstrap_lab::engine::ProcessTrace, r: &InfectionRule| -> Result<(), String> {
            if trace.tau == 0 {
                return Ok(());
            }
            let g = extract_alternating_witness(trace, r).map_err(|e| e.to_string())?;
            check(
                find_embedding(r.graph(), &g, None)
                    .map_err(|e| e.to_string())?
                    .is_none(),
                "extraction contains the rule",
            )?;
            checked += 1;
            Ok(())
        };
    for spec in ["clique 4", "cycle 4"] {
        let r = rule(spec);
        for seed in 0..100 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            verify(&run_process(&random_graph(12, 0.3, &mut rng), &r, None), &r)?;
        }
    }
    let k4 = rule("clique 4");
    let witness = brute_force_max_running_time(&k4, 8)
        .map_err(|e| e.to_string())?
        .witnesses[0]
        .clone();
    verify(&run_process(&witness, &k4, None), &k4)?;
    Ok(format!("{checked} non-trivial extractions are rule-free"))
}

fn monte_carlo() -> Outcome {
    let k4 = rule("clique 4");
    let n = 100;
    let centre = 1.0 / (3.0 * n as f64 * (n as f64).ln()).sqrt();
    // Seven points spanning exactly the factor-3 window on either side.
    let ratio = 3f64.cbrt();
    let grid: Vec<f64> = (0..7).map(|i| centre * ratio.powi(i - 3)).collect();
    let estimates: Vec<Estimate> = grid
        .iter()
        .map(|&p| percolation_probability(&k4, n, p, 200, 2024))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let summary: Vec<String> = estimates
        .iter()
        .map(|e| format!("{:.4}:{:.3}", e.p, e.estimate))
        .collect();
    for pair in estimates.windows(2) {
        check(
            pair[1].upper >= pair[0].lower,
            format!("not monotone: {summary:?}"),
        )?;
    }
    let crossing = estimates
        .windows(2)
        .find(|w| w[0].estimate < 0.5 && w[1].estimate >= 0.5);
    let (below, above) = crossing
        .map(|w| (w[0].p, w[1].p))
        .ok_or(format!("no crossing of 1/2: {summary:?}"))?;
    check(
        below >= centre / 3.0 - 1e-12 && above <= centre * 3.0 + 1e-12,
        format!("crossing outside the window: {summary:?}"),
    )?;
    Ok(format!(
        "centre {centre:.4}, crossing in [{below:.4}, {above:.4}]"
    ))
}

fn behrend_verification() -> Outcome {
    let mut emitted = Vec::new();
    for p in [7, 11, 13, 31, 61, 101, 199] {
        emitted.push(exhaustive_best_set(p, 4).map_err(|e| e.to_string())?);
    }
    for p in [101, 1009, 10007] {
        emitted.push(behrend_sphere_set(p, 4).map_err(|e| e.to_string())?.0);
    }
    for s in &emitted {
        check(
            verify_solution_free(s).is_ok(),
            format!("p={} set {:?} fails", s.p(), s.elements()),
        )?;
    }
    let bad = DilationSet::new(7, [1, 2], 4).map_err(|e| e.to_string())?;
    let v = verify_solution_free(&bad)
        .err()
        .ok_or("({1,2}, 7) reported free")?;
    check(v.alpha == [4, -2, 0], format!("witness {v}"))?;
    Ok(format!("{} sets verified; witness {v}", emitted.len()))
}

fn run(id: usize, name: &str, f: impl FnOnce() -> Outcome + UnwindSafe) -> bool {
    let clock = Instant::now();
    let outcome = catch_unwind(f).unwrap_or_else(|panic| {
        let msg = panic
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let secs = clock.elapsed().as_secs_f64();
    match &outcome {
        Ok(detail) => println!("criterion {id}: pass ({name}, {secs:.1}s) {detail}"),
        Err(detail) => println!("criterion {id}: fail ({name}, {secs:.1}s) {detail}"),
    }
    outcome.is_ok()
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 14] = [
        ("K3 formula", k3_formula),
        ("K4 formula", k4_formula),
        ("weak saturation", weak_saturation),
        ("engine equivalence", engine_equivalence),
        ("dilation assembly", dilation_assembly),
        ("chain dichotomy", chain_dichotomy),
        ("star and path rules", star_and_path_rules),
        ("odd-cycle formula", odd_cycle_formula),
        ("gadget verification", gadget_verification),
        ("wrapper", wrapper),
        ("pendant simulation", pendant_simulation),
        ("alternating extraction", alternating_extraction),
        ("Monte Carlo sanity", monte_carlo),
        ("Behrend verification", behrend_verification),
    ];
    let failed: Vec<usize> = criteria
        .into_iter()
        .enumerate()
        .filter(|&(i, (name, f))| !run(i + 1, name, f))
        .map(|(i, _)| i + 1)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

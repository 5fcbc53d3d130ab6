use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::ValueEnum;

use num_rational::Ratio;

use super::{ConstructArgs, Construction, Property, Quantity, RunArgs, SearchArgs, ThresholdArgs};
use crate::analyzers::{
    brute_force_max_running_time, brute_force_weak_saturation, extract_alternating_witness,
    is_behrendian, is_l1_inseparable, is_round_exact, percolation_probability,
    verify_chain_conditions, Behrendian, Condition,
};
use crate::arithmetic::{
    behrend_sphere_set, exhaustive_best_set, verify_solution_free, DilationSet,
};
use crate::constructions::{
    cheap_percolator, dilation_k5_assembly, gadget_graph, glued_cliques_graph, k4_extremal,
    ladder_k6_chain, path_start, pendant_simulation_start, resolve_rule, search_gadget_params,
    simple_chain, simple_clique_chain, slow_percolating_wrapper, star_extremal, Chain,
    GadgetParams, GadgetSpec, WrapperParams,
};
use crate::engine::{parse_trace, run_process, write_trace};
use crate::graphcore::{encode_graph6, parse_graph_text, write_edge_list, Graph};
use crate::{Error, Result};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn construction_name(what: Construction) -> String {
    what.to_possible_value()
        .map_or_else(String::new, |v| v.get_name().to_string())
}

fn need<T: Copy>(value: Option<T>, flag: &str, what: Construction) -> Result<T> {
    value.ok_or_else(|| Error::Input(format!("{} needs --{flag}", construction_name(what))))
}

fn parse_conditions(ids: &[String]) -> Result<Vec<Condition>> {
    ids.iter()
        .map(|id| {
            Condition::from_id(id.trim()).ok_or_else(|| {
                Error::Input(format!(
                    "unknown condition \"{id}\" (use dagger, dagger_prime, star)"
                ))
            })
        })
        .collect()
}

/// `5` or the inclusive range `4..7`.
fn parse_range(text: &str) -> Result<Vec<usize>> {
    let num = |t: &str| -> Result<usize> {
        t.trim()
            .parse()
            .map_err(|_| Error::Input(format!("\"{t}\" is not a vertex count")))
    };
    match text.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(Error::Input(format!("empty range {text}")));
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(text)?]),
    }
}

pub(super) fn run(a: &RunArgs, out: &mut dyn Write) -> Result<bool> {
    let rule = resolve_rule(&a.rule)?;
    let start = parse_graph_text(&read(&a.start)?)?;
    let trace = run_process(&start, &rule, a.max_rounds);
    if let Some(path) = &a.trace_out {
        fs::write(path, write_trace(&trace, rule.name()))?;
    }
    writeln!(
        out,
        "rule={} n={} edges={}",
        rule.name(),
        start.vertex_count(),
        start.edge_count()
    )?;
    if trace.truncated {
        writeln!(out, "truncated after {} rounds", trace.tau)?;
    }
    writeln!(out, "tau={} percolated={}", trace.tau, trace.percolated)?;
    Ok(!trace.truncated)
}

// Short-lived, one per command; boxing buys nothing.
#[allow(clippy::large_enum_variant)]
enum Built {
    Graph(Graph),
    Chain(Chain),
}

pub(super) fn construct(a: &ConstructArgs, out: &mut dyn Write) -> Result<bool> {
    use Construction as C;
    let what = a.name;
    let rule = || {
        resolve_rule(
            a.rule
                .as_deref()
                .ok_or_else(|| Error::Input(format!("{} needs --rule", construction_name(what))))?,
        )
    };
    let mut notes = String::new();
    let built = match what {
        C::K4Extremal => Built::Graph(k4_extremal(need(a.n, "n", what)?)?),
        C::StarExtremal => {
            Built::Graph(star_extremal(need(a.t, "t", what)?, need(a.n, "n", what)?)?)
        }
        C::Path => Built::Graph(path_start(need(a.n, "n", what)?)),
        C::SimpleChain => Built::Chain(simple_chain(&rule()?, need(a.length, "length", what)?)?),
        C::CliqueChain => Built::Chain(simple_clique_chain(
            need(a.k, "k", what)?,
            need(a.length, "length", what)?,
        )?),
        C::DilationK5 => {
            let p = need(a.prime, "prime", what)?;
            let set = match (&a.set, a.auto_set, a.sphere_set) {
                (Some(s), _, _) => DilationSet::new(p, s.iter().copied(), a.coeff)?,
                (None, true, _) => exhaustive_best_set(p, a.coeff)?,
                (None, false, true) => behrend_sphere_set(p, a.coeff)?.0,
                _ => {
                    return Err(Error::Input(
                        "dilation-k5 needs --set, --auto-set or --sphere-set".into(),
                    ))
                }
            };
            writeln!(notes, "set {}", set.to_text().trim_end()).unwrap();
            Built::Chain(dilation_k5_assembly(p, &set)?)
        }
        C::LadderK6 => Built::Chain(ladder_k6_chain(
            need(a.segment, "segment", what)?,
            need(a.slopes, "slopes", what)?,
        )?),
        C::CheapPercolator => Built::Graph(cheap_percolator(&rule()?, need(a.n, "n", what)?)?),
        C::Gadget => {
            let spec = gadget(a, &rule()?)?;
            describe_gadget(&spec, &mut notes);
            Built::Graph(spec.gamma)
        }
        C::Wrapper => {
            let seed = a
                .seed
                .ok_or_else(|| Error::Input("wrapper is randomized and needs --seed".into()))?;
            let rule = rule()?;
            let base = simple_chain(&rule, need(a.length, "length", what)?)?;
            let spec = search_gadget_params(&rule, a.min_distance, a.max_length)?;
            let params = WrapperParams {
                gadget: spec.params,
                independent: a.independent,
                attachment_girth: a.girth,
                seed,
            };
            let w = slow_percolating_wrapper(&rule, base.starting(), params)?;
            writeln!(notes, "gadget {:?}", spec.params).unwrap();
            writeln!(
                notes,
                "base {} independent {} gadgets {}",
                w.base,
                w.independent,
                w.targets.len()
            )
            .unwrap();
            writeln!(notes, "trigger {} {}", w.trigger.0, w.trigger.1).unwrap();
            writeln!(notes, "skipped {}", w.skipped.len()).unwrap();
            writeln!(notes, "base_tau {}", w.base_tau).unwrap();
            Built::Graph(w.graph)
        }
        C::GluedCliques => Built::Graph(glued_cliques_graph(need(a.k, "k", what)?)?),
        C::PendantStart => {
            let chain = simple_clique_chain(6, need(a.length, "length", what)?)?;
            Built::Graph(pendant_simulation_start(chain.starting()))
        }
    };

    let stem = a.stem.clone().unwrap_or_else(|| construction_name(what));
    fs::create_dir_all(&a.out_dir)?;
    let file = |ext: &str| -> PathBuf { a.out_dir.join(format!("{stem}.{ext}")) };
    let mut ok = true;
    let graph = match &built {
        Built::Graph(g) => g,
        Built::Chain(c) => c.starting(),
    };
    let mut written = vec![
        (file("g6"), encode_graph6(graph) + "\n"),
        (file("edges"), write_edge_list(graph)),
    ];
    if let Built::Chain(chain) = &built {
        let report = verify_chain_conditions(
            chain,
            &[Condition::Dagger, Condition::DaggerPrime, Condition::Star],
        );
        let mut text = report.to_text();
        writeln!(text, "round_exact {}", is_round_exact(chain)).unwrap();
        for c in parse_conditions(&a.require)? {
            if report.passed(c) != Some(true) {
                ok = false;
                writeln!(out, "required condition {} failed", c.id())?;
            }
        }
        written.push((file("chain"), chain.to_text()));
        written.push((file("report"), text));
    }
    if !notes.is_empty() {
        written.push((file("info"), notes));
    }
    for (path, text) in &written {
        fs::write(path, text)?;
        writeln!(out, "wrote {}", path.display())?;
    }
    writeln!(
        out,
        "vertices={} edges={}",
        graph.vertex_count(),
        graph.edge_count()
    )?;
    Ok(ok)
}

fn gadget(a: &ConstructArgs, rule: &crate::engine::InfectionRule) -> Result<GadgetSpec> {
    match (a.length, a.window, a.spacing) {
        (Some(chain_length), Some(window), Some(spacing)) => gadget_graph(
            rule,
            GadgetParams {
                chain_length,
                window,
                spacing,
                min_distance: a.min_distance,
            },
        ),
        (None, None, None) => search_gadget_params(rule, a.min_distance, a.max_length),
        _ => Err(Error::Input(
            "give all of --length, --window, --spacing or none of them".into(),
        )),
    }
}

fn describe_gadget(spec: &GadgetSpec, notes: &mut String) {
    let p = spec.params;
    writeln!(notes, "chain_length {}", p.chain_length).unwrap();
    writeln!(notes, "window {}", p.window).unwrap();
    writeln!(notes, "spacing {}", p.spacing).unwrap();
    writeln!(notes, "min_distance {}", p.min_distance).unwrap();
    writeln!(notes, "trigger {} {}", spec.trigger.0, spec.trigger.1).unwrap();
    writeln!(notes, "target {} {}", spec.target.0, spec.target.1).unwrap();
    let core: Vec<String> = spec.core.iter().map(usize::to_string).collect();
    writeln!(notes, "core {}", core.join(" ")).unwrap();
}

pub(super) fn search(a: &SearchArgs, out: &mut dyn Write) -> Result<bool> {
    let rule = resolve_rule(&a.rule)?;
    let mut csv = String::from("n,value,witness_graph6\n");
    for n in parse_range(&a.n)? {
        let result = match a.quantity {
            Quantity::MaxTime => brute_force_max_running_time(&rule, n)?,
            Quantity::WeakSat => brute_force_weak_saturation(&rule, n)?,
        };
        let witness = result
            .witnesses
            .first()
            .map(encode_graph6)
            .unwrap_or_default();
        writeln!(csv, "{n},{},{witness}", result.optimum).unwrap();
    }
    match &a.out {
        Some(path) => {
            fs::write(path, &csv)?;
            writeln!(out, "wrote {}", path.display())?;
        }
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(true)
}

pub(super) fn analyze(p: &Property, out: &mut dyn Write) -> Result<bool> {
    match p {
        Property::Inseparable { rule, l } => {
            let rule = resolve_rule(rule)?;
            writeln!(
                out,
                "inseparable l={l} rule={}: {}",
                rule.name(),
                is_l1_inseparable(rule.graph(), *l)
            )?;
            Ok(true)
        }
        Property::Behrendian { rule, edge_cap } => {
            let rule = resolve_rule(rule)?;
            let verdict = match is_behrendian(rule.graph(), *edge_cap) {
                Behrendian::Yes => "true".to_string(),
                Behrendian::No { colouring } => {
                    let c: Vec<String> = colouring.iter().map(usize::to_string).collect();
                    format!("false colouring={}", c.join(","))
                }
                Behrendian::Unknown => format!("unknown (more than {edge_cap} edges)"),
            };
            writeln!(out, "behrendian rule={}: {verdict}", rule.name())?;
            Ok(true)
        }
        Property::Stats { rule } => {
            let rule = resolve_rule(rule)?;
            let s = rule.stats();
            let lambda = s
                .lambda
                .map_or_else(|| "undefined".to_string(), |l| l.to_string());
            writeln!(
                out,
                "rule={} vertices={} edges={} min_degree={} max_degree={} lambda={lambda}",
                rule.name(),
                s.vertices,
                s.edges,
                s.min_degree,
                s.max_degree
            )?;
            Ok(true)
        }
        Property::Chain { chain, conditions } => {
            let chain = Chain::from_text(&read(chain)?, resolve_rule)?;
            let report = verify_chain_conditions(&chain, &parse_conditions(conditions)?);
            out.write_all(report.to_text().as_bytes())?;
            let exact = is_round_exact(&chain);
            writeln!(out, "round_exact {exact}")?;
            Ok(report.all_passed() && exact)
        }
        Property::SolutionFree { prime, set, coeff } => {
            let s = DilationSet::new(*prime, set.iter().copied(), *coeff)?;
            match verify_solution_free(&s) {
                Ok(()) => {
                    writeln!(out, "solution-free p={prime} c={coeff}: true")?;
                    Ok(true)
                }
                Err(v) => {
                    writeln!(out, "solution-free p={prime} c={coeff}: false witness {v}")?;
                    Ok(false)
                }
            }
        }
        Property::Alternating { trace, rule } => {
            let doc = parse_trace(&read(trace)?)?;
            let rule = resolve_rule(rule.as_deref().unwrap_or(&doc.rule))?;
            match extract_alternating_witness(&doc.trace, &rule) {
                Ok(g) => {
                    writeln!(
                        out,
                        "alternating rule={}: free edges={}",
                        rule.name(),
                        g.edge_count()
                    )?;
                    Ok(true)
                }
                Err(Error::Internal(msg)) => {
                    writeln!(out, "alternating rule={}: violated {msg}", rule.name())?;
                    Ok(false)
                }
                Err(e) => Err(e),
            }
        }
    }
}

/// The grid `center · ratio^(i - (points-1)/2)` for `i = 0..points`.
fn geometric_grid(center: f64, points: usize, ratio: f64) -> Vec<f64> {
    let mid = (points as f64 - 1.0) / 2.0;
    (0..points)
        .map(|i| center * ratio.powf(i as f64 - mid))
        .collect()
}

pub(super) fn threshold(a: &ThresholdArgs, out: &mut dyn Write) -> Result<bool> {
    let rule = resolve_rule(&a.rule)?;
    let ps = match a.center {
        Some(c) => geometric_grid(c, a.points, a.ratio),
        None => a.p.clone(),
    };
    let mut csv = String::from("p,estimate,lo,hi\n");
    for p in ps {
        let e = percolation_probability(&rule, a.n, p, a.trials, a.seed)?;
        let exact = Ratio::new(e.successes, e.trials);
        writeln!(csv, "{p},{exact},{:.6},{:.6}", e.lower, e.upper).unwrap();
    }
    match &a.out {
        Some(path) => {
            fs::write(path, &csv)?;
            writeln!(out, "wrote {}", path.display())?;
        }
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..7").unwrap(), vec![4, 5, 6, 7]);
        assert_eq!(parse_range("5").unwrap(), vec![5]);
        assert_eq!(parse_range("3..=4").unwrap(), vec![3, 4]);
        assert!(parse_range("7..4").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn grid_is_centred() {
        let g = geometric_grid(0.1, 3, 2.0);
        assert!(
            (g[0] - 0.05).abs() < 1e-12 && (g[1] - 0.1).abs() < 1e-12 && (g[2] - 0.2).abs() < 1e-12
        );
    }
}

use std::path::Path;

use crate::engine::InfectionRule;
use crate::graphcore::{parse_graph_text, Graph};
use crate::{Error, Result};

pub fn cycle(k: usize) -> Graph {
    Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).expect("cycle edges are in range")
}

/// The path on `t` vertices.
pub fn path(t: usize) -> Graph {
    Graph::new(t, (1..t).map(|i| (i - 1, i))).expect("path edges are in range")
}

/// `K_{1,t-1}`: centre 0 and `t - 1` leaves.
pub fn star(t: usize) -> Graph {
    Graph::new(t, (1..t).map(|i| (0, i))).expect("star edges are in range")
}

pub fn complete_bipartite(r: usize, s: usize) -> Graph {
    Graph::new(r + s, (0..r).flat_map(|i| (r..r + s).map(move |j| (i, j))))
        .expect("edges are in range")
}

/// `W_k`: a `k`-cycle on `1..=k` plus hub 0.
pub fn wheel(k: usize) -> Graph {
    let rim = (0..k).map(|i| (1 + i, 1 + (i + 1) % k));
    Graph::new(k + 1, rim.chain((1..=k).map(|i| (0, i)))).expect("wheel edges are in range")
}

/// The 3-dimensional cube.
pub fn cube() -> Graph {
    Graph::new(
        8,
        (0..8)
            .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
            .filter(|(a, b)| a < b),
    )
    .expect("cube edges are in range")
}

/// `K_k⁺`: the clique on `0..k` with vertex `k` pendant at 0.
pub fn clique_plus_pendant(k: usize) -> Graph {
    let mut g = Graph::complete(k).with_extra_vertices(1);
    g.add_edge(0, k);
    g
}

/// Vertices at cyclic distance at most two on a `k`-cycle.
pub fn square_of_cycle(k: usize) -> Graph {
    let mut g = cycle(k);
    for i in 0..k {
        let j = (i + 2) % k;
        if i != j {
            g.add_edge(i, j);
        }
    }
    g
}

fn size(name: &str, arg: Option<&str>, min: usize) -> Result<usize> {
    let arg = arg.ok_or_else(|| Error::input(format!("\"{name}\" needs a size")))?;
    let k: usize = arg
        .parse()
        .map_err(|_| Error::input(format!("\"{arg}\" is not a size for \"{name}\"")))?;
    if k < min {
        return Err(Error::input(format!(
            "\"{name}\" needs size at least {min}, got {k}"
        )));
    }
    Ok(k)
}

/// Splits compact forms such as `clique4` into `clique 4`.
fn normalize(term: &str) -> String {
    let term = term.trim();
    let split = term
        .find(|c: char| c.is_ascii_digit())
        .filter(|&i| i > 0 && !term[..i].ends_with(' '));
    match split {
        Some(i) if !term[..i].contains(' ') => format!("{} {}", &term[..i], &term[i..]),
        _ => term.split_whitespace().collect::<Vec<_>>().join(" "),
    }
}

fn builtin_graph(term: &str) -> Result<Graph> {
    let term = normalize(term);
    let words: Vec<&str> = term.split(' ').collect();
    let (name, args) = (words[0], &words[1..]);
    let arity = match name {
        "cube" | "pendant-simulation" => 0,
        "complete-bipartite" => 2,
        _ => 1,
    };
    if args.len() > arity {
        return Err(Error::input(format!("too many arguments in \"{term}\"")));
    }
    let arg = |i: usize, min| size(name, args.get(i).copied(), min);
    Ok(match name {
        "clique" => Graph::complete(arg(0, 2)?),
        "cycle" => cycle(arg(0, 3)?),
        "path" => path(arg(0, 2)?),
        "star" => star(arg(0, 3)?),
        "complete-bipartite" => complete_bipartite(arg(0, 1)?, arg(1, 1)?),
        "wheel" => wheel(arg(0, 3)?),
        "cube" => cube(),
        "clique-plus-pendant" => clique_plus_pendant(arg(0, 3)?),
        "square-of-cycle" => square_of_cycle(arg(0, 5)?),
        "glued-cliques" => super::special::glued_cliques_graph(arg(0, 2)?)?,
        "pendant-simulation" => super::special::pendant_simulation_graph(),
        _ => return Err(Error::input(format!("unknown rule \"{term}\""))),
    })
}

/// Canonical spelling of a builtin rule, e.g. `clique4` becomes `clique 4`
/// and unions are joined with `" + "`.
pub fn canonical_rule_name(spec: &str) -> String {
    spec.split('+')
        .map(normalize)
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Resolves a builtin rule name, a disjoint union `a + b + …` of builtins,
/// or else a path to a graph6 or edge-list file.
///
/// Builtins: `clique k`, `cycle k`, `path t`, `star t` (`K_{1,t-1}`),
/// `complete-bipartite r s`, `wheel k`, `cube`, `clique-plus-pendant k`,
/// `square-of-cycle k`, `glued-cliques k`, `pendant-simulation`. The size
/// may be attached to the name (`clique4`).
pub fn resolve_rule(spec: &str) -> Result<InfectionRule> {
    let spec = spec.trim();
    let builtin: Result<Graph> = spec.split('+').try_fold(Graph::empty(0), |acc, term| {
        Ok(if acc.vertex_count() == 0 {
            builtin_graph(term)?
        } else {
            acc.disjoint_union(&builtin_graph(term)?)
        })
    });
    match builtin {
        Ok(g) => InfectionRule::new(canonical_rule_name(spec), g),
        Err(e) => {
            let path = Path::new(spec);
            if path.is_file() {
                let text = std::fs::read_to_string(path)?;
                InfectionRule::new(spec, parse_graph_text(&text)?)
            } else {
                Err(e)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(wheel(5).edge_count(), 10);
        assert_eq!(cube().edge_count(), 12);
        assert_eq!(square_of_cycle(5), Graph::complete(5));
        assert_eq!(square_of_cycle(8).edge_count(), 16);
        assert_eq!(clique_plus_pendant(4).min_degree(), 1);
        assert_eq!(complete_bipartite(2, 3).edge_count(), 6);
    }

    #[test]
    fn names() {
        assert_eq!(resolve_rule("clique4").unwrap().name(), "clique 4");
        assert_eq!(
            resolve_rule(" cycle 3 +  cycle4").unwrap().name(),
            "cycle 3 + cycle 4"
        );
        assert_eq!(resolve_rule("cycle 3 + cycle 4").unwrap().vertex_count(), 7);
        assert_eq!(
            resolve_rule("complete-bipartite 2 3")
                .unwrap()
                .stats()
                .edges,
            6
        );
        assert!(resolve_rule("clique").is_err());
        assert!(resolve_rule("clique 4 5").is_err());
        assert!(resolve_rule("cube 3").is_err());
        assert!(resolve_rule("dodecahedron").is_err());
    }
}

//! Graph representation, embedding search, automorphisms, canonical forms
//! and text formats.

mod canon;
mod embed;
mod girth;
mod graph;
mod io;
mod orbits;

pub use canon::{
    are_isomorphic, canonical_form, enumerate_nonisomorphic, refine, Canonical, MAX_ENUMERATION,
};
pub use embed::{
    count_embeddings, find_embedding, for_each_embedding, Anchor, Embedding, Plan, Scratch,
};
pub use girth::girth;
pub use graph::{bits, edge, Edge, Graph};
pub use io::{decode_graph6, encode_graph6, parse_edge_list, parse_graph_text, write_edge_list};
pub use orbits::{edge_orbits, find_automorphism, is_automorphism, EdgeOrbitPartition};

/// Builds a graph from an edge list; see [`Graph::new`].
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> crate::Result<Graph> {
    Graph::new(n, edges.iter().copied())
}

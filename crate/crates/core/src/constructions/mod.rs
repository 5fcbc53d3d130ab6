//! Builders for chains, extremal starting graphs, gadgets and special rules.

mod bipartite;
pub mod catalog;
mod chain;
mod dilation;
mod extremal;
mod gadget;
mod ladder;
mod special;
mod wrapper;

pub use bipartite::high_girth_bipartite;
pub use catalog::{canonical_rule_name, resolve_rule};
pub use chain::{chain_ports, simple_chain, Chain};
pub use dilation::{dilation_k5_assembly, dilation_segment_length, LINK_FRESH};
pub use extremal::{
    cheap_percolator, cheap_percolator_with_core, k4_extremal, path_start, simple_clique_chain,
    star_extremal,
};
pub use gadget::{
    build_gadget, gadget_graph, search_gadget_params, GadgetChecks, GadgetParams, GadgetSpec,
};
pub use ladder::{
    ladder_k6_chain, ladder_k6_chain_with_slopes, ladder_unchecked, LADDER_LINK_FRESH, SLOPE_STEP,
};
pub use special::{
    glued_cliques_graph, glued_cliques_rule, pendant_simulation_graph, pendant_simulation_rule,
    pendant_simulation_start, PENDANT_HUB, PENDANT_LEAF,
};
pub use wrapper::{slow_percolating_wrapper, Wrapped, WrapperParams};

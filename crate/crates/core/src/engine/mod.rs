//! The H-bootstrap process: rules, synchronous rounds, traces and closure.

mod process;
mod rule;
mod step;
mod trace;

pub use process::{
    closure, is_stable, percolates, run_process, run_process_naive, self_percolates, ProcessTrace,
};
pub use rule::{InfectionRule, RuleStats};
pub use step::{infect_step, infectable};
pub use trace::{parse_trace, write_trace, TraceDocument};

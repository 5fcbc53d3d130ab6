//! C ABI over the bootstrap-lab engine.
//!
//! Objects are opaque handles created by `bl_*_new`/`bl_*_from_*` functions
//! and released with the matching `bl_*_free`. Every fallible function
//! returns a [`BlStatus`]; on failure [`bl_last_error`] describes the cause
//! for the calling thread. Strings returned by the library are owned by the
//! caller and released with [`bl_string_free`].
//!
//! # Safety
//!
//! Every handle argument must be null or a live handle of the right type
//! obtained from this library. String arguments must be null or point to a
//! NUL-terminated string. Output arguments must be null or point to writable
//! storage of the pointed-to type. Null arguments are reported with
//! [`BlStatus::NullPointer`] rather than dereferenced.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bootstrap_lab::constructions::{k4_extremal, resolve_rule};
use bootstrap_lab::engine::{run_process, write_trace, InfectionRule, ProcessTrace};
use bootstrap_lab::graphcore::{decode_graph6, encode_graph6};
use bootstrap_lab::{Error, Graph};

/// Result codes of the C interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Construction = 4,
    Verification = 5,
    Internal = 6,
    Io = 7,
    OutOfRange = 8,
    Panic = 9,
}

/// An undirected simple graph.
pub struct BlGraph {
    inner: Graph,
}

/// An infection rule with its precomputed search data.
pub struct BlRule {
    inner: InfectionRule,
}

/// The round-by-round record of one process run.
pub struct BlTrace {
    inner: ProcessTrace,
    rule_name: String,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap_or_default());
}

fn status_of(err: &Error) -> BlStatus {
    match err {
        Error::Input(_) => BlStatus::InvalidInput,
        Error::Graph6 { .. } | Error::Parse { .. } => BlStatus::Parse,
        Error::Construction(_) => BlStatus::Construction,
        Error::Verification { .. } => BlStatus::Verification,
        Error::Internal(_) => BlStatus::Internal,
        Error::Io(_) => BlStatus::Io,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), (BlStatus, String)>) -> BlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            BlStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside bootstrap-lab");
            BlStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (BlStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (BlStatus, String) {
    (BlStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `p` is null or valid for reads for the returned lifetime.
unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (BlStatus, String)> {
    // SAFETY: forwarded from the caller.
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

/// # Safety
/// `p` is null or a NUL-terminated string valid for the returned lifetime.
unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (BlStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and NUL-terminated by the caller's contract.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map_err(|_| (BlStatus::InvalidInput, format!("{what} is not valid UTF-8")))
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn put<T>(out: *mut *mut T, value: T, what: &str) -> Result<(), (BlStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: `out` is non-null and points to writable storage for a pointer.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), (BlStatus, String)> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: as in `put`.
    unsafe { *out = value };
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message describing the last failure on this thread; empty after a
/// success. Valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn bl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// The edgeless graph on `n` vertices.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_new(n: usize, out: *mut *mut BlGraph) -> BlStatus {
    guard(|| unsafe {
        put(
            out,
            BlGraph {
                inner: Graph::empty(n),
            },
            "out",
        )
    })
}

/// Decodes a graph6 string.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut BlGraph,
) -> BlStatus {
    guard(|| {
        let g = decode_graph6(unsafe { c_str(text, "text") }?).map_err(lib_err)?;
        unsafe { put(out, BlGraph { inner: g }, "out") }
    })
}

/// Encodes a graph as graph6; free the result with [`bl_string_free`].
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_to_graph6(g: *const BlGraph, out: *mut *mut c_char) -> BlStatus {
    guard(|| {
        let g = unsafe { deref(g, "graph") }?;
        write_out(out, to_c_string(encode_graph6(&g.inner)), "out")
    })
}

/// Adds the edge `uv`; loops and out-of-range endpoints are rejected.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_add_edge(g: *mut BlGraph, u: usize, v: usize) -> BlStatus {
    guard(|| {
        // SAFETY: per the crate contract.
        let g = unsafe { g.as_mut() }.ok_or_else(|| null("graph"))?;
        let n = g.inner.vertex_count();
        if u >= n || v >= n || u == v {
            return Err((
                BlStatus::OutOfRange,
                format!("edge {u} {v} invalid on {n} vertices"),
            ));
        }
        g.inner.add_edge(u, v);
        Ok(())
    })
}

/// Number of vertices; 0 for a null handle.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_vertex_count(g: *const BlGraph) -> usize {
    unsafe { deref(g, "graph") }.map_or(0, |g| g.inner.vertex_count())
}

/// Number of edges; 0 for a null handle.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_edge_count(g: *const BlGraph) -> usize {
    unsafe { deref(g, "graph") }.map_or(0, |g| g.inner.edge_count())
}

/// Whether `uv` is an edge; false for null handles and out-of-range input.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_has_edge(g: *const BlGraph, u: usize, v: usize) -> bool {
    unsafe { deref(g, "graph") }.is_ok_and(|g| {
        let n = g.inner.vertex_count();
        u < n && v < n && g.inner.has_edge(u, v)
    })
}

/// # Safety
/// `g` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_free(g: *mut BlGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// The `n`-vertex starting graph with the largest known `K_4` running time.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_k4_extremal(n: usize, out: *mut *mut BlGraph) -> BlStatus {
    guard(|| {
        let g = k4_extremal(n).map_err(lib_err)?;
        unsafe { put(out, BlGraph { inner: g }, "out") }
    })
}

/// Resolves a rule specification such as `"clique 4"` or `"cycle 3 + cycle 4"`.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_rule_from_spec(spec: *const c_char, out: *mut *mut BlRule) -> BlStatus {
    guard(|| {
        let rule = resolve_rule(unsafe { c_str(spec, "spec") }?).map_err(lib_err)?;
        unsafe { put(out, BlRule { inner: rule }, "out") }
    })
}

/// Vertices of the rule graph; 0 for a null handle.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_rule_vertex_count(rule: *const BlRule) -> usize {
    unsafe { deref(rule, "rule") }.map_or(0, |r| r.inner.vertex_count())
}

/// # Safety
/// `rule` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bl_rule_free(rule: *mut BlRule) {
    if !rule.is_null() {
        drop(unsafe { Box::from_raw(rule) });
    }
}

/// Runs the process from `g`. `max_rounds == 0` means no limit.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_run_process(
    g: *const BlGraph,
    rule: *const BlRule,
    max_rounds: usize,
    out: *mut *mut BlTrace,
) -> BlStatus {
    guard(|| {
        let (g, rule) = (unsafe { deref(g, "graph") }?, unsafe {
            deref(rule, "rule")
        }?);
        let trace = run_process(
            &g.inner,
            &rule.inner,
            (max_rounds > 0).then_some(max_rounds),
        );
        unsafe {
            put(
                out,
                BlTrace {
                    inner: trace,
                    rule_name: rule.inner.name().to_string(),
                },
                "out",
            )
        }
    })
}

/// Running time; 0 for a null handle.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_trace_tau(t: *const BlTrace) -> usize {
    unsafe { deref(t, "trace") }.map_or(0, |t| t.inner.tau)
}

/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_trace_percolated(t: *const BlTrace) -> bool {
    unsafe { deref(t, "trace") }.is_ok_and(|t| t.inner.percolated)
}

/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_trace_truncated(t: *const BlTrace) -> bool {
    unsafe { deref(t, "trace") }.is_ok_and(|t| t.inner.truncated)
}

/// Number of edges infected in round `round` (1-based).
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_trace_round_size(
    t: *const BlTrace,
    round: usize,
    out: *mut usize,
) -> BlStatus {
    guard(|| {
        let t = unsafe { deref(t, "trace") }?;
        let r = round_of(t, round)?;
        unsafe { write_out(out, r.len(), "out") }
    })
}

/// The `index`-th edge (in sorted order) infected in round `round`.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_trace_round_edge(
    t: *const BlTrace,
    round: usize,
    index: usize,
    u: *mut usize,
    v: *mut usize,
) -> BlStatus {
    guard(|| {
        let t = unsafe { deref(t, "trace") }?;
        let r = round_of(t, round)?;
        let &(a, b) = r.get(index).ok_or_else(|| {
            (
                BlStatus::OutOfRange,
                format!("round {round} has {} edges", r.len()),
            )
        })?;
        unsafe { write_out(u, a, "u") }?;
        unsafe { write_out(v, b, "v") }
    })
}

fn round_of(t: &BlTrace, round: usize) -> Result<&[(usize, usize)], (BlStatus, String)> {
    round
        .checked_sub(1)
        .and_then(|i| t.inner.rounds.get(i))
        .map(Vec::as_slice)
        .ok_or_else(|| {
            (
                BlStatus::OutOfRange,
                format!("round {round} outside 1..={}", t.inner.tau),
            )
        })
}

/// A new handle holding the final graph of the run.
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_trace_final_graph(
    t: *const BlTrace,
    out: *mut *mut BlGraph,
) -> BlStatus {
    guard(|| {
        let t = unsafe { deref(t, "trace") }?;
        unsafe {
            put(
                out,
                BlGraph {
                    inner: t.inner.final_graph.clone(),
                },
                "out",
            )
        }
    })
}

/// The trace document; free the result with [`bl_string_free`].
/// # Safety
/// Pointer arguments follow the contract in the crate documentation.
#[no_mangle]
pub unsafe extern "C" fn bl_trace_to_text(t: *const BlTrace, out: *mut *mut c_char) -> BlStatus {
    guard(|| {
        let t = unsafe { deref(t, "trace") }?;
        write_out(out, to_c_string(write_trace(&t.inner, &t.rule_name)), "out")
    })
}

/// # Safety
/// `t` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bl_trace_free(t: *mut BlTrace) {
    if !t.is_null() {
        drop(unsafe { Box::from_raw(t) });
    }
}

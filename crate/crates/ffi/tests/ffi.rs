use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use bootstrap_lab_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(bl_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn rule(spec: &str) -> *mut BlRule {
    // SAFETY: every pointer passed is null or a live handle or buffer.
    unsafe {
        let spec = CString::new(spec).unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(bl_rule_from_spec(spec.as_ptr(), &mut r), BlStatus::Ok);
        r
    }
}

#[test]
fn path_under_triangle_rule() {
    // SAFETY: every pointer passed is null or a live handle or buffer.
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(bl_graph_new(5, &mut g), BlStatus::Ok);
        for i in 0..4 {
            assert_eq!(bl_graph_add_edge(g, i, i + 1), BlStatus::Ok);
        }
        assert_eq!(bl_graph_edge_count(g), 4);
        let r = rule("clique 3");
        assert_eq!(bl_rule_vertex_count(r), 3);
        let mut t = ptr::null_mut();
        assert_eq!(bl_run_process(g, r, 0, &mut t), BlStatus::Ok);
        assert_eq!(bl_trace_tau(t), 2);
        assert!(bl_trace_percolated(t));
        assert!(!bl_trace_truncated(t));

        let mut size = 0;
        assert_eq!(bl_trace_round_size(t, 1, &mut size), BlStatus::Ok);
        assert_eq!(size, 3);
        let (mut u, mut v) = (0, 0);
        assert_eq!(bl_trace_round_edge(t, 1, 0, &mut u, &mut v), BlStatus::Ok);
        assert_eq!((u, v), (0, 2));
        assert_eq!(
            bl_trace_round_edge(t, 1, 3, &mut u, &mut v),
            BlStatus::OutOfRange
        );
        assert_eq!(bl_trace_round_size(t, 3, &mut size), BlStatus::OutOfRange);
        assert!(last_error().contains("round 3"));

        let mut fin = ptr::null_mut();
        assert_eq!(bl_trace_final_graph(t, &mut fin), BlStatus::Ok);
        assert_eq!(bl_graph_edge_count(fin), 10);

        let mut text = ptr::null_mut();
        assert_eq!(bl_trace_to_text(t, &mut text), BlStatus::Ok);
        let doc = CStr::from_ptr(text).to_str().unwrap().to_owned();
        assert!(doc.contains("rule clique 3") && doc.contains("tau 2"));
        bl_string_free(text);
        bl_graph_free(fin);
        bl_trace_free(t);
        bl_rule_free(r);
        bl_graph_free(g);
    }
}

#[test]
fn graph6_round_trip_and_k4_extremal() {
    // SAFETY: every pointer passed is null or a live handle or buffer.
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(bl_k4_extremal(8, &mut g), BlStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(bl_graph_to_graph6(g, &mut s), BlStatus::Ok);
        let mut h = ptr::null_mut();
        assert_eq!(bl_graph_from_graph6(s, &mut h), BlStatus::Ok);
        assert_eq!(bl_graph_vertex_count(h), 8);
        assert_eq!(bl_graph_edge_count(h), bl_graph_edge_count(g));

        let r = rule("clique4");
        let mut t = ptr::null_mut();
        assert_eq!(bl_run_process(h, r, 0, &mut t), BlStatus::Ok);
        assert_eq!(bl_trace_tau(t), 5);
        bl_trace_free(t);
        bl_rule_free(r);
        bl_string_free(s);
        bl_graph_free(h);
        bl_graph_free(g);
    }
}

#[test]
fn errors_are_reported() {
    // SAFETY: every pointer passed is null or a live handle or buffer.
    unsafe {
        let mut g = ptr::null_mut();
        let bad = CString::new("A~").unwrap();
        assert_eq!(bl_graph_from_graph6(bad.as_ptr(), &mut g), BlStatus::Parse);
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        let spec = CString::new("clique x").unwrap();
        let mut r = ptr::null_mut();
        assert_eq!(
            bl_rule_from_spec(spec.as_ptr(), &mut r),
            BlStatus::InvalidInput
        );
        assert!(last_error().contains("clique"));

        assert_eq!(
            bl_rule_from_spec(ptr::null(), &mut r),
            BlStatus::NullPointer
        );
        assert_eq!(bl_graph_new(3, ptr::null_mut()), BlStatus::NullPointer);
        assert_eq!(bl_k4_extremal(2, &mut g), BlStatus::InvalidInput);

        assert_eq!(bl_graph_new(3, &mut g), BlStatus::Ok);
        assert!(last_error().is_empty());
        assert_eq!(bl_graph_add_edge(g, 1, 1), BlStatus::OutOfRange);
        assert_eq!(bl_graph_add_edge(g, 0, 3), BlStatus::OutOfRange);
        assert!(!bl_graph_has_edge(g, 0, 7));
        assert_eq!(bl_graph_vertex_count(ptr::null()), 0);
        bl_graph_free(g);
        bl_graph_free(ptr::null_mut());
        bl_string_free(ptr::null_mut());
        let version = CStr::from_ptr(bl_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn header_declares_the_api_and_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = std::fs::read_to_string(dir.join("bootstrap_lab.h")).unwrap();
    for name in [
        "bl_run_process",
        "bl_last_error",
        "typedef struct BlGraph BlGraph",
        "BL_STATUS_OUT_OF_RANGE",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
    let probe = tempfile::Builder::new().suffix(".c").tempfile().unwrap();
    std::fs::write(
        probe.path(),
        "#include \"bootstrap_lab.h\"\nint main(void) { return (int)BL_STATUS_OK; }\n",
    )
    .unwrap();
    let Ok(status) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&dir)
        .arg(probe.path())
        .status()
    else {
        eprintln!("no C compiler available; header syntax check skipped");
        return;
    };
    assert!(status.success());
}

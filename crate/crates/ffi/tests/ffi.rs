//! Drives the C ABI from Rust: handle lifecycle, happy paths, every error
//! status, and the generated header.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cheegerlab_ffi::*;

/// One edge-list for reuse: the complete graph on four vertices.
const K4: &str = "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

fn parse(text: &str) -> *mut CheegerlabGraph {
    let c_text = CString::new(text).unwrap();
    let mut graph: *mut CheegerlabGraph = ptr::null_mut();
    let status = unsafe { cheegerlab_graph_parse(c_text.as_ptr(), &mut graph) };
    assert_eq!(status, CheegerlabStatus::Ok, "parse failed: {}", last_error());
    assert!(!graph.is_null());
    graph
}

fn last_error() -> String {
    let ptr = cheegerlab_last_error_message();
    if ptr.is_null() {
        String::from("<none>")
    } else {
        unsafe { CStr::from_ptr(ptr) }.to_string_lossy().into_owned()
    }
}

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let text = unsafe { CStr::from_ptr(ptr) }.to_string_lossy().into_owned();
    unsafe { cheegerlab_string_free(ptr) };
    text
}

#[test]
fn version_is_a_static_string() {
    let v = cheegerlab_version();
    assert!(!v.is_null());
    assert_eq!(
        unsafe { CStr::from_ptr(v) }.to_str().unwrap(),
        env!("CARGO_PKG_VERSION")
    );
}

#[test]
fn parse_query_and_free_round_trip() {
    let graph = parse(K4);
    unsafe {
        assert_eq!(cheegerlab_graph_vertex_count(graph), 4);
        assert_eq!(cheegerlab_graph_edge_count(graph), 6);
        assert!(cheegerlab_graph_is_connected(graph));

        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(
            cheegerlab_graph_format(graph, &mut text),
            CheegerlabStatus::Ok
        );
        assert_eq!(take_string(text), K4);

        cheegerlab_graph_free(graph);
    }
}

#[test]
fn constants_come_back_as_reduced_fractions() {
    let graph = parse(K4);
    let (mut num, mut den) = (0i64, 0i64);
    unsafe {
        assert_eq!(
            cheegerlab_q(graph, &mut num, &mut den),
            CheegerlabStatus::Ok
        );
        assert_eq!((num, den), (2, 3));

        assert_eq!(
            cheegerlab_tau(graph, &mut num, &mut den),
            CheegerlabStatus::Ok
        );
        assert_eq!((num, den), (2, 1), "regular on 4 vertices: tau = n/2");

        assert_eq!(
            cheegerlab_cheeger(graph, &mut num, &mut den),
            CheegerlabStatus::Ok
        );
        assert_eq!((num, den), (2, 3));

        assert_eq!(
            cheegerlab_dual_cheeger(graph, &mut num, &mut den),
            CheegerlabStatus::Ok
        );
        assert_eq!((num, den), (2, 3));

        cheegerlab_graph_free(graph);
    }
}

#[test]
fn eigenvalue_endpoints_match_known_values() {
    let graph = parse(K4);
    let mut value = 0.0f64;
    unsafe {
        assert_eq!(
            cheegerlab_lambda_max(graph, 0.0, &mut value),
            CheegerlabStatus::Ok
        );
        assert!((value - 4.0 / 3.0).abs() <= 1e-10);

        assert_eq!(
            cheegerlab_lambda_2(graph, 1e-10, &mut value),
            CheegerlabStatus::Ok
        );
        assert!((value - 4.0 / 3.0).abs() <= 1e-10, "K4 has a flat spectrum");

        cheegerlab_graph_free(graph);
    }
}

#[test]
fn from_edges_builds_the_same_graph_as_parsing() {
    let endpoints: [u32; 12] = [0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3];
    let mut graph: *mut CheegerlabGraph = ptr::null_mut();
    unsafe {
        assert_eq!(
            cheegerlab_graph_from_edges(4, endpoints.as_ptr(), 6, &mut graph),
            CheegerlabStatus::Ok
        );
        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(
            cheegerlab_graph_format(graph, &mut text),
            CheegerlabStatus::Ok
        );
        assert_eq!(take_string(text), K4);
        cheegerlab_graph_free(graph);
    }
}

#[test]
fn one_sided_graph_matches_its_closed_forms() {
    let mut graph: *mut CheegerlabGraph = ptr::null_mut();
    unsafe {
        assert_eq!(
            cheegerlab_one_sided_graph(7, 3, 5, &mut graph),
            CheegerlabStatus::Ok
        );
        assert_eq!(cheegerlab_graph_vertex_count(graph), 7);
        let (mut num, mut den) = (0i64, 0i64);
        assert_eq!(
            cheegerlab_q(graph, &mut num, &mut den),
            CheegerlabStatus::Ok
        );
        assert_eq!((num, den), (9, 20), "Q = 1/5 + 1/4");
        let mut value = 0.0f64;
        assert_eq!(
            cheegerlab_lambda_max(graph, 0.0, &mut value),
            CheegerlabStatus::Ok
        );
        assert!((value - 1.6).abs() <= 1e-9, "lambda_max = (d+k)/d = 8/5");
        cheegerlab_graph_free(graph);
    }

    let status = unsafe { cheegerlab_one_sided_graph(6, 1, 2, &mut graph) };
    assert_eq!(status, CheegerlabStatus::InvalidGraph);
    assert!(last_error().contains("both odd"), "got: {}", last_error());
}

#[test]
fn report_json_is_a_full_document() {
    let graph = parse(K4);
    let mut json: *mut c_char = ptr::null_mut();
    unsafe {
        assert_eq!(
            cheegerlab_report_json(graph, 0.0, &mut json),
            CheegerlabStatus::Ok
        );
        cheegerlab_graph_free(graph);
    }
    let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(report["all_pass"], serde_json::Value::Bool(true));
    assert_eq!(report["checks"].as_array().unwrap().len(), 11);
    assert_eq!(report["constants"]["q"]["num"], 2);
}

#[test]
fn every_failure_sets_a_status_and_a_message() {
    let mut graph: *mut CheegerlabGraph = ptr::null_mut();
    unsafe {
        // Null text.
        assert_eq!(
            cheegerlab_graph_parse(ptr::null(), &mut graph),
            CheegerlabStatus::NullArgument
        );

        // Invalid UTF-8.
        let bad = [0xFFu8, 0x00];
        assert_eq!(
            cheegerlab_graph_parse(bad.as_ptr() as *const c_char, &mut graph),
            CheegerlabStatus::InvalidUtf8
        );

        // Unparseable text.
        let junk = CString::new("zero one\n").unwrap();
        assert_eq!(
            cheegerlab_graph_parse(junk.as_ptr(), &mut graph),
            CheegerlabStatus::ParseError
        );
        assert!(last_error().contains("line 1"), "got: {}", last_error());

        // Parseable but invalid graph.
        let looped = CString::new("0 1\n1 1\n").unwrap();
        assert_eq!(
            cheegerlab_graph_parse(looped.as_ptr(), &mut graph),
            CheegerlabStatus::InvalidGraph
        );
        assert!(last_error().contains("LoopEdge"), "got: {}", last_error());

        // Null handle into a query.
        let (mut num, mut den) = (0i64, 0i64);
        assert_eq!(
            cheegerlab_q(ptr::null(), &mut num, &mut den),
            CheegerlabStatus::NullArgument
        );

        // Null out-pointer.
        let g = parse(K4);
        assert_eq!(
            cheegerlab_q(g, ptr::null_mut(), &mut den),
            CheegerlabStatus::NullArgument
        );

        // Disconnected graph: the Cheeger constant is refused.
        let split = CString::new("0 1\n2 3\n").unwrap();
        let mut disconnected: *mut CheegerlabGraph = ptr::null_mut();
        assert_eq!(
            cheegerlab_graph_parse(split.as_ptr(), &mut disconnected),
            CheegerlabStatus::Ok
        );
        assert_eq!(
            cheegerlab_cheeger(disconnected, &mut num, &mut den),
            CheegerlabStatus::NotConnected
        );

        // An uncertifiable tolerance is a numerical failure.
        let mut value = 0.0f64;
        assert_eq!(
            cheegerlab_lambda_max(g, 1e-300, &mut value),
            CheegerlabStatus::NumericalFailure
        );

        // Frees ignore null.
        cheegerlab_graph_free(ptr::null_mut());
        cheegerlab_string_free(ptr::null_mut());
        cheegerlab_graph_free(disconnected);
        cheegerlab_graph_free(g);
    }
}

#[test]
fn generated_header_declares_the_whole_surface() {
    let header_path = concat!(env!("CARGO_MANIFEST_DIR"), "/include/cheegerlab.h");
    let header = std::fs::read_to_string(header_path).expect("build script writes the header");
    for needle in [
        "#ifndef CHEEGERLAB_H",
        "typedef struct CheegerlabGraph CheegerlabGraph;",
        "CHEEGERLAB_STATUS_OK",
        "cheegerlab_graph_parse",
        "cheegerlab_graph_from_edges",
        "cheegerlab_one_sided_graph",
        "cheegerlab_q(",
        "cheegerlab_tau(",
        "cheegerlab_cheeger(",
        "cheegerlab_dual_cheeger(",
        "cheegerlab_lambda_max",
        "cheegerlab_report_json",
        "cheegerlab_string_free",
        "cheegerlab_last_error_message",
    ] {
        assert!(header.contains(needle), "header lacks {needle}");
    }
}

/// Compiles `tests/demo.c` against the generated header and the cdylib,
/// then runs it. Skipped (with a note) when no C compiler is around.
#[test]
fn header_compiles_and_links_from_c() {
    let compiler = ["cc", "gcc", "clang"].iter().find(|c| {
        std::process::Command::new(c)
            .arg("--version")
            .output()
            .is_ok_and(|o| o.status.success())
    });
    let Some(compiler) = compiler else {
        eprintln!("skipping: no C compiler in PATH");
        return;
    };

    // target/debug, found relative to this test executable
    // (target/debug/deps/ffi-<hash>).
    let lib_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    assert!(
        lib_dir.join("libcheegerlab_ffi.so").exists()
            || lib_dir.join("libcheegerlab_ffi.dylib").exists(),
        "shared library missing from {}",
        lib_dir.display()
    );
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let binary = std::env::temp_dir().join(format!("cheegerlab-demo-{}", std::process::id()));

    let compile = std::process::Command::new(compiler)
        .arg("-Wall")
        .arg("-Wextra")
        .arg("-Werror")
        .arg(manifest.join("tests/demo.c"))
        .arg(format!("-I{}", manifest.join("include").display()))
        .arg(format!("-L{}", lib_dir.display()))
        .arg("-lcheegerlab_ffi")
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("compiler must spawn");
    assert!(
        compile.status.success(),
        "C compilation failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = std::process::Command::new(&binary)
        .env("LD_LIBRARY_PATH", &lib_dir)
        .env("DYLD_LIBRARY_PATH", &lib_dir)
        .output()
        .expect("demo must spawn");
    let _ = std::fs::remove_file(&binary);
    assert!(
        run.status.success(),
        "C demo failed:\n{}",
        String::from_utf8_lossy(&run.stderr)
    );
}

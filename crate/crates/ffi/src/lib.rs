//! C ABI for the cheegerlab library.
//!
//! The surface follows the usual conventions for C bindings:
//!
//! * graphs are opaque handles created by [`cheegerlab_graph_parse`],
//!   [`cheegerlab_graph_from_edges`] or [`cheegerlab_one_sided_graph`] and
//!   released with [`cheegerlab_graph_free`];
//! * every fallible call returns a [`CheegerlabStatus`] and writes its
//!   result through out-pointers, leaving them untouched on failure;
//! * after a failure, [`cheegerlab_last_error_message`] returns a
//!   human-readable explanation for the current thread;
//! * strings handed out by the library are released with
//!   [`cheegerlab_string_free`].
//!
//! Exact rationals cross the boundary as reduced numerator/denominator
//! pairs of 64-bit integers. The matching C header is generated into
//! `include/cheegerlab.h` at build time.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use cheegerlab::constants::{
    cheeger_constant, dual_cheeger_constant, q_constant, tau_constant, ConstantsError,
};
use cheegerlab::families::{build_one_sided, OneSidedParams};
use cheegerlab::harness::{check_graph_lenient, HarnessError};
use cheegerlab::io::{format_edge_list, parse_edge_list};
use cheegerlab::spectral::{vertex_spectrum, SpectralError};
use cheegerlab::{Graph, Rational};

/// Result of every fallible library call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheegerlabStatus {
    /// The call succeeded and all out-parameters are set.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A text argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The edge-list text could not be parsed.
    ParseError = 3,
    /// The described graph is invalid (loop, duplicate edge, isolated
    /// vertex, out-of-range index) or the family parameters are.
    InvalidGraph = 4,
    /// The graph exceeds a size cap of the requested computation.
    TooLarge = 5,
    /// The computation is only defined for connected graphs.
    NotConnected = 6,
    /// The eigensolver could not certify the requested accuracy.
    NumericalFailure = 7,
}

/// An undirected graph. Opaque; create, query and free it through the
/// `cheegerlab_*` functions only.
pub struct CheegerlabGraph {
    inner: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

fn fail(status: CheegerlabStatus, message: impl ToString) -> CheegerlabStatus {
    set_last_error(message.to_string());
    status
}

fn constants_status(e: &ConstantsError) -> CheegerlabStatus {
    match e {
        ConstantsError::NotConnected => CheegerlabStatus::NotConnected,
        ConstantsError::TooLarge { .. } => CheegerlabStatus::TooLarge,
        _ => CheegerlabStatus::InvalidGraph,
    }
}

fn spectral_status(e: &SpectralError) -> CheegerlabStatus {
    match e {
        SpectralError::TooLarge { .. } => CheegerlabStatus::TooLarge,
        _ => CheegerlabStatus::NumericalFailure,
    }
}

/// Dereferences a handle, reporting `NullArgument` on null.
///
/// # Safety
/// `graph` must be null or a pointer obtained from this library that has
/// not been freed.
unsafe fn require_graph<'a>(
    graph: *const CheegerlabGraph,
) -> Result<&'a Graph, CheegerlabStatus> {
    match unsafe { graph.as_ref() } {
        Some(handle) => Ok(&handle.inner),
        None => Err(fail(CheegerlabStatus::NullArgument, "graph handle is null")),
    }
}

fn write_rational(value: Rational, out_num: *mut i64, out_den: *mut i64) -> CheegerlabStatus {
    if out_num.is_null() || out_den.is_null() {
        return fail(CheegerlabStatus::NullArgument, "output pointer is null");
    }
    unsafe {
        *out_num = value.numerator();
        *out_den = value.denominator();
    }
    CheegerlabStatus::Ok
}

fn hand_out_graph(g: Graph, out_graph: *mut *mut CheegerlabGraph) -> CheegerlabStatus {
    if out_graph.is_null() {
        return fail(CheegerlabStatus::NullArgument, "output pointer is null");
    }
    let handle = Box::into_raw(Box::new(CheegerlabGraph { inner: g }));
    unsafe { *out_graph = handle };
    CheegerlabStatus::Ok
}

fn hand_out_string(text: String, out_string: *mut *mut c_char) -> CheegerlabStatus {
    if out_string.is_null() {
        return fail(CheegerlabStatus::NullArgument, "output pointer is null");
    }
    match CString::new(text) {
        Ok(s) => {
            unsafe { *out_string = s.into_raw() };
            CheegerlabStatus::Ok
        }
        Err(_) => fail(
            CheegerlabStatus::NumericalFailure,
            "produced text contained a NUL byte",
        ),
    }
}

/// Returns the library version as a static string; do not free it.
#[no_mangle]
pub extern "C" fn cheegerlab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Returns the explanation of the most recent failure on this thread, or
/// null if none occurred. The pointer stays valid until the next failing
/// call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn cheegerlab_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |s| s.as_ptr())
    })
}

/// Parses an edge-list document (optional `n N` header, one `u v` pair per
/// line, `#` comments) into a new graph handle.
///
/// # Safety
/// `text` must point to a NUL-terminated string; `out_graph` must be a
/// valid location to store the handle.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_graph_parse(
    text: *const c_char,
    out_graph: *mut *mut CheegerlabGraph,
) -> CheegerlabStatus {
    if text.is_null() {
        return fail(CheegerlabStatus::NullArgument, "text is null");
    }
    let text = match unsafe { CStr::from_ptr(text) }.to_str() {
        Ok(t) => t,
        Err(e) => return fail(CheegerlabStatus::InvalidUtf8, e),
    };
    match parse_edge_list(text) {
        Ok(g) => hand_out_graph(g, out_graph),
        Err(e) if e.is_validation() => fail(CheegerlabStatus::InvalidGraph, e),
        Err(e) => fail(CheegerlabStatus::ParseError, e),
    }
}

/// Builds a graph on `vertex_count` vertices from `edge_count` endpoint
/// pairs laid out as `u0 v0 u1 v1 ...` in `endpoints`.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable `uint32_t` values
/// (it may be null only when `edge_count` is 0); `out_graph` must be a
/// valid location to store the handle.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_graph_from_edges(
    vertex_count: usize,
    endpoints: *const u32,
    edge_count: usize,
    out_graph: *mut *mut CheegerlabGraph,
) -> CheegerlabStatus {
    if endpoints.is_null() && edge_count > 0 {
        return fail(CheegerlabStatus::NullArgument, "endpoints is null");
    }
    let flat = if edge_count == 0 {
        &[][..]
    } else {
        unsafe { std::slice::from_raw_parts(endpoints, 2 * edge_count) }
    };
    let edges: Vec<(usize, usize)> = flat
        .chunks_exact(2)
        .map(|pair| (pair[0] as usize, pair[1] as usize))
        .collect();
    match Graph::from_edge_list(vertex_count, &edges) {
        Ok(g) => hand_out_graph(g, out_graph),
        Err(e) => fail(CheegerlabStatus::InvalidGraph, e),
    }
}

/// Builds the joined circulant/independent-set graph with `n` vertices,
/// `k` of them independent, and circulant-side degree `d`.
///
/// # Safety
/// `out_graph` must be a valid location to store the handle.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_one_sided_graph(
    n: usize,
    k: usize,
    d: usize,
    out_graph: *mut *mut CheegerlabGraph,
) -> CheegerlabStatus {
    let params = match OneSidedParams::new(n, k, d) {
        Ok(p) => p,
        Err(e) => return fail(CheegerlabStatus::InvalidGraph, e),
    };
    match build_one_sided(&params) {
        Ok(g) => hand_out_graph(g, out_graph),
        Err(e) => fail(CheegerlabStatus::InvalidGraph, e),
    }
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `graph` must be null or a handle from this library not yet freed; it
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_graph_free(graph: *mut CheegerlabGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_graph_vertex_count(graph: *const CheegerlabGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.inner.vertex_count())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_graph_edge_count(graph: *const CheegerlabGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.inner.edge_count())
}

/// Whether the graph is connected; false for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_graph_is_connected(graph: *const CheegerlabGraph) -> bool {
    unsafe { graph.as_ref() }.is_some_and(|g| g.inner.is_connected())
}

/// Renders the graph back into edge-list text (with an `n N` header).
/// Free the result with [`cheegerlab_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out_text` must be a valid location to
/// store the string.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_graph_format(
    graph: *const CheegerlabGraph,
    out_text: *mut *mut c_char,
) -> CheegerlabStatus {
    let g = match unsafe { require_graph(graph) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    hand_out_string(format_edge_list(g), out_text)
}

/// The degree bound `Q = max over edges of 1/deg(u) + 1/deg(v)`, written
/// as a reduced fraction.
///
/// # Safety
/// `graph` must be a live handle; `out_num` and `out_den` must be valid
/// locations for one `int64_t` each.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_q(
    graph: *const CheegerlabGraph,
    out_num: *mut i64,
    out_den: *mut i64,
) -> CheegerlabStatus {
    let g = match unsafe { require_graph(graph) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    write_rational(q_constant(g).0, out_num, out_den)
}

/// The companion constant `tau`; `Q * tau` bounds the top eigenvalue from
/// above.
///
/// # Safety
/// `graph` must be a live handle; `out_num` and `out_den` must be valid
/// locations for one `int64_t` each.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_tau(
    graph: *const CheegerlabGraph,
    out_num: *mut i64,
    out_den: *mut i64,
) -> CheegerlabStatus {
    let g = match unsafe { require_graph(graph) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    write_rational(tau_constant(g).0, out_num, out_den)
}

/// The Cheeger constant by exact enumeration (connected graphs, at most
/// 22 vertices).
///
/// # Safety
/// `graph` must be a live handle; `out_num` and `out_den` must be valid
/// locations for one `int64_t` each.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_cheeger(
    graph: *const CheegerlabGraph,
    out_num: *mut i64,
    out_den: *mut i64,
) -> CheegerlabStatus {
    let g = match unsafe { require_graph(graph) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    match cheeger_constant(g) {
        Ok((h, _)) => write_rational(h, out_num, out_den),
        Err(e) => fail(constants_status(&e), e),
    }
}

/// The dual Cheeger constant by exact enumeration (at most 13 vertices);
/// exactly 1 on bipartite graphs.
///
/// # Safety
/// `graph` must be a live handle; `out_num` and `out_den` must be valid
/// locations for one `int64_t` each.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_dual_cheeger(
    graph: *const CheegerlabGraph,
    out_num: *mut i64,
    out_den: *mut i64,
) -> CheegerlabStatus {
    let g = match unsafe { require_graph(graph) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    match dual_cheeger_constant(g) {
        Ok((h_bar, _)) => write_rational(h_bar, out_num, out_den),
        Err(e) => fail(constants_status(&e), e),
    }
}

/// The largest normalized-Laplacian eigenvalue, solved to residual
/// tolerance `tol` (pass 0 for the default).
///
/// # Safety
/// `graph` must be a live handle; `out_value` must be a valid location for
/// one `double`.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_lambda_max(
    graph: *const CheegerlabGraph,
    tol: f64,
    out_value: *mut f64,
) -> CheegerlabStatus {
    unsafe { eigenvalue_endpoint(graph, tol, out_value, |s| s.lambda_max()) }
}

/// The second-smallest normalized-Laplacian eigenvalue, solved to residual
/// tolerance `tol` (pass 0 for the default).
///
/// # Safety
/// `graph` must be a live handle; `out_value` must be a valid location for
/// one `double`.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_lambda_2(
    graph: *const CheegerlabGraph,
    tol: f64,
    out_value: *mut f64,
) -> CheegerlabStatus {
    unsafe { eigenvalue_endpoint(graph, tol, out_value, |s| s.lambda_2()) }
}

unsafe fn eigenvalue_endpoint(
    graph: *const CheegerlabGraph,
    tol: f64,
    out_value: *mut f64,
    pick: impl Fn(&cheegerlab::Spectrum) -> f64,
) -> CheegerlabStatus {
    let g = match unsafe { require_graph(graph) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    if out_value.is_null() {
        return fail(CheegerlabStatus::NullArgument, "output pointer is null");
    }
    let tol = if tol > 0.0 {
        tol
    } else {
        cheegerlab::spectral::DEFAULT_TOL
    };
    match vertex_spectrum(g, tol) {
        Ok(s) => {
            unsafe { *out_value = pick(&s) };
            CheegerlabStatus::Ok
        }
        Err(e) => fail(spectral_status(&e), e),
    }
}

/// Runs the full inequality check suite (skipping what the graph's size or
/// disconnection rules out) and returns the report as a JSON document.
/// Free the result with [`cheegerlab_string_free`].
///
/// # Safety
/// `graph` must be a live handle; `out_json` must be a valid location to
/// store the string.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_report_json(
    graph: *const CheegerlabGraph,
    tol: f64,
    out_json: *mut *mut c_char,
) -> CheegerlabStatus {
    let g = match unsafe { require_graph(graph) } {
        Ok(g) => g,
        Err(status) => return status,
    };
    let tol = if tol > 0.0 {
        tol
    } else {
        cheegerlab::spectral::DEFAULT_TOL
    };
    match check_graph_lenient(g, tol) {
        Ok(report) => {
            let json = serde_json::to_string(&report)
                .expect("reports contain no non-serializable values");
            hand_out_string(json, out_json)
        }
        Err(HarnessError::Spectral(e)) => fail(spectral_status(&e), e),
        Err(e) => fail(CheegerlabStatus::InvalidGraph, e),
    }
}

/// Releases a string handed out by this library. Null is ignored.
///
/// # Safety
/// `text` must be null or a string from this library not yet freed; it
/// must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cheegerlab_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}

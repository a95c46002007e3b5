//! C ABI for the awgraph library.
//!
//! Handles are opaque pointers created and destroyed by this library;
//! every fallible call returns an [`AwgStatus`] and records a
//! human-readable message retrievable with [`awg_last_error`] (thread
//! local, valid until the next failing call on the same thread). Panics
//! never cross the boundary: they are caught and reported as
//! `AWG_STATUS_INTERNAL`.
//!
//! The matching C header is generated into `include/awgraph.h` at build
//! time.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use awgraph::error::Error;
use awgraph::graph::Graph;
use awgraph::graph6::{encode_graph6, parse_auto};
use awgraph::product::cartesian_product;
use awgraph::search::{aw, AwResult};
use awgraph::tree::is_k_peripheral;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AwgStatus {
    /// The call succeeded.
    AwgStatusOk = 0,
    /// Malformed input (parse errors, out-of-range vertices, bad bounds).
    AwgStatusInput = 1,
    /// A documented precondition of the operation does not hold.
    AwgStatusPrecondition = 2,
    /// A required pointer argument was null.
    AwgStatusNull = 3,
    /// An internal error or caught panic; always a bug in this library.
    AwgStatusInternal = 4,
}

/// A connected graph with precomputed distances (opaque).
pub struct AwgGraph {
    inner: Graph,
}

/// The result of an aw computation (opaque): the value itself plus the
/// largest rainbow-free exact coloring found on the way.
pub struct AwgAwResult {
    inner: AwResult,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> AwgStatus {
    match err {
        Error::Precondition(_) | Error::NotATree(_) | Error::Disconnected { .. } => {
            AwgStatus::AwgStatusPrecondition
        }
        Error::Internal(_) => AwgStatus::AwgStatusInternal,
        _ => AwgStatus::AwgStatusInput,
    }
}

/// Runs a closure behind a panic guard, translating panics and errors
/// into status codes.
fn guarded<T>(out: Option<&mut T>, f: impl FnOnce() -> Result<T, Error>) -> AwgStatus {
    let Some(out) = out else {
        set_error("output pointer is null");
        return AwgStatus::AwgStatusNull;
    };
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(value)) => {
            *out = value;
            AwgStatus::AwgStatusOk
        }
        Ok(Err(e)) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            AwgStatus::AwgStatusInternal
        }
    }
}

unsafe fn graph_ref<'a>(g: *const AwgGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.inner)
}

/// Returns the message of the last error on this thread. The pointer
/// stays valid until the next failing call on the same thread; never
/// free it.
#[no_mangle]
pub extern "C" fn awg_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Version of the JSON record schema used by the core library's stores.
#[no_mangle]
pub extern "C" fn awg_schema_version() -> u32 {
    awgraph::store::SCHEMA_VERSION
}

/// Parses a graph from text (graph6 or edge list, detected by shape) into
/// a new handle. On success `*out` owns the graph; release it with
/// [`awg_graph_free`].
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_parse(
    text: *const c_char,
    out: *mut *mut AwgGraph,
) -> AwgStatus {
    let mut parsed: *mut AwgGraph = ptr::null_mut();
    let status = guarded(Some(&mut parsed), || {
        if text.is_null() {
            return Err(Error::Input("input text is null".into()));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Error::Input("input text is not UTF-8".into()))?;
        let graph = parse_auto(text)?;
        Ok(Box::into_raw(Box::new(AwgGraph { inner: graph })))
    });
    if let Some(slot) = out.as_mut() {
        *slot = parsed;
    } else if status == AwgStatus::AwgStatusOk {
        // Nothing can own the graph: reclaim and fail.
        drop(Box::from_raw(parsed));
        set_error("output pointer is null");
        return AwgStatus::AwgStatusNull;
    }
    status
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a pointer returned by this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_free(g: *mut AwgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 if the handle is null.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_vertex_count(g: *const AwgGraph) -> usize {
    graph_ref(g).map_or(0, Graph::n)
}

/// Number of edges, or 0 if the handle is null.
///
/// # Safety
/// `g` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_edge_count(g: *const AwgGraph) -> usize {
    graph_ref(g).map_or(0, Graph::edge_count)
}

/// Distance between 1-based vertices `u` and `v`, written to `*out`.
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_distance(
    g: *const AwgGraph,
    u: usize,
    v: usize,
    out: *mut u32,
) -> AwgStatus {
    guarded(out.as_mut(), || {
        let graph = graph_ref(g).ok_or_else(|| Error::Input("graph handle is null".into()))?;
        for w in [u, v] {
            if w < 1 || w > graph.n() {
                return Err(Error::VertexRange { v: w, n: graph.n() });
            }
        }
        Ok(graph.dist(u, v))
    })
}

/// Diameter of the graph, written to `*out`.
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_diameter(g: *const AwgGraph, out: *mut u32) -> AwgStatus {
    guarded(out.as_mut(), || {
        let graph = graph_ref(g).ok_or_else(|| Error::Input("graph handle is null".into()))?;
        Ok(graph.diameter())
    })
}

/// Encodes the graph as graph6 into a fresh NUL-terminated string owned
/// by the caller; release it with [`awg_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_to_graph6(
    g: *const AwgGraph,
    out: *mut *mut c_char,
) -> AwgStatus {
    guarded(out.as_mut(), || {
        let graph = graph_ref(g).ok_or_else(|| Error::Input("graph handle is null".into()))?;
        let encoded = encode_graph6(graph)?;
        let cstring = CString::new(encoded)
            .map_err(|_| Error::Internal("graph6 strings never contain NUL".into()))?;
        Ok(cstring.into_raw())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not
/// been freed already.
#[no_mangle]
pub unsafe extern "C" fn awg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the Cartesian product of two graphs as a new graph handle.
/// Vertex (i, j) of the product gets the 1-based id (i - 1) * n_right + j.
///
/// # Safety
/// `left` and `right` must be live handles; `out` must be a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_product(
    left: *const AwgGraph,
    right: *const AwgGraph,
    out: *mut *mut AwgGraph,
) -> AwgStatus {
    guarded(out.as_mut(), || {
        let l = graph_ref(left).ok_or_else(|| Error::Input("left handle is null".into()))?;
        let r = graph_ref(right).ok_or_else(|| Error::Input("right handle is null".into()))?;
        let p = cartesian_product(l, r);
        Ok(Box::into_raw(Box::new(AwgGraph { inner: p.graph().clone() })))
    })
}

/// Whether the graph contains `k` vertices pairwise at distance exactly
/// the diameter; writes 1 or 0 to `*out`.
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awg_graph_is_k_peripheral(
    g: *const AwgGraph,
    k: usize,
    out: *mut i32,
) -> AwgStatus {
    guarded(out.as_mut(), || {
        let graph = graph_ref(g).ok_or_else(|| Error::Input("graph handle is null".into()))?;
        Ok(is_k_peripheral(graph, k)?.is_some() as i32)
    })
}

/// Computes aw(G, k) by exhaustive search. On success `*out` owns the
/// result; release it with [`awg_result_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awg_aw_compute(
    g: *const AwgGraph,
    k: usize,
    out: *mut *mut AwgAwResult,
) -> AwgStatus {
    guarded(out.as_mut(), || {
        let graph = graph_ref(g).ok_or_else(|| Error::Input("graph handle is null".into()))?;
        let res = aw(graph, k)?;
        Ok(Box::into_raw(Box::new(AwgAwResult { inner: res })))
    })
}

/// The computed aw value, or 0 if the handle is null.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn awg_result_value(r: *const AwgAwResult) -> u16 {
    r.as_ref().map_or(0, |h| h.inner.aw)
}

/// Length of the stored certificate (the largest rainbow-free exact
/// coloring): the vertex count, or 0 when no certificate exists.
///
/// # Safety
/// `r` must be null or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn awg_result_certificate_len(r: *const AwgAwResult) -> usize {
    r.as_ref()
        .and_then(|h| h.inner.certificate())
        .map_or(0, |c| c.as_slice().len())
}

/// Copies the certificate colors (1-based colors, one per vertex) into
/// `buf`, which must hold at least [`awg_result_certificate_len`]
/// entries; writes the copied length to `*written`.
///
/// # Safety
/// `r` must be a live result handle; `buf` must point to at least `cap`
/// writable entries; `written` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn awg_result_certificate(
    r: *const AwgAwResult,
    buf: *mut u16,
    cap: usize,
    written: *mut usize,
) -> AwgStatus {
    guarded(written.as_mut(), || {
        let res = r
            .as_ref()
            .ok_or_else(|| Error::Input("result handle is null".into()))?;
        let Some(cert) = res.inner.certificate() else {
            return Ok(0);
        };
        let colors = cert.as_slice();
        if buf.is_null() {
            return Err(Error::Input("certificate buffer is null".into()));
        }
        if cap < colors.len() {
            return Err(Error::Input(format!(
                "certificate buffer holds {cap} entries, need {}",
                colors.len()
            )));
        }
        std::ptr::copy_nonoverlapping(colors.as_ptr(), buf, colors.len());
        Ok(colors.len())
    })
}

/// Releases a result handle. Null is ignored.
///
/// # Safety
/// `r` must be null or a live result handle that has not been freed
/// already.
#[no_mangle]
pub unsafe extern "C" fn awg_result_free(r: *mut AwgAwResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

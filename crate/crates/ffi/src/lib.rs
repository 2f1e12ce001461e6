//! C ABI for the broadcast-lab engine.
//!
//! Graphs and results are opaque heap handles released with their `_free`
//! function. Every fallible call returns a [`BlStatus`]; on failure the
//! message is available from [`bl_last_error`] until the next failing call
//! on the same thread. Strings returned as `char *` are owned by the caller
//! and released with [`bl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use broadcast_lab::io::{parse_graph6, serialize_result, write_graph6};
use broadcast_lab::{
    build, generate, solve, CertificateName, CertificateSpec, Error, FamilySpec, Graph,
    ParameterKind, ParameterResult, SolveOptions,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidGraph = 3,
    Disconnected = 4,
    CapExceeded = 5,
    InvalidArgument = 6,
    Graph6 = 7,
    CertificateRejected = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

/// Opaque graph handle.
pub struct BlGraph {
    graph: Graph,
}

/// Opaque solver result handle.
pub struct BlResult {
    result: ParameterResult,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> BlStatus {
    match e {
        Error::Disconnected => BlStatus::Disconnected,
        Error::CapExceeded { .. } => BlStatus::CapExceeded,
        Error::InvalidGraph(_) | Error::LengthMismatch { .. } => BlStatus::InvalidGraph,
        Error::Graph6(_) => BlStatus::Graph6,
        Error::CertificateRejected { .. } => BlStatus::CertificateRejected,
        _ => BlStatus::InvalidArgument,
    }
}

/// Runs `body`, translating errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), (BlStatus, String)>) -> BlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BlStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BlStatus::Panic
        }
    }
}

fn lift<T>(r: broadcast_lab::Result<T>) -> Result<T, (BlStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (BlStatus, String)> {
    if p.is_null() {
        return Err((BlStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (BlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn null(what: &str) -> (BlStatus, String) {
    (BlStatus::NullPointer, format!("{what} is NULL"))
}

/// Message of the last failing call on this thread; empty if none. The
/// pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn bl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses graph6 text into a new graph handle.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut BlGraph,
) -> BlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let graph = lift(parse_graph6(c_str(text, "text")?))?;
        *out = Box::into_raw(Box::new(BlGraph { graph }));
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be NULL when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut BlGraph,
) -> BlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if edges.is_null() && edge_count > 0 {
            return Err(null("edges"));
        }
        let flat = if edge_count == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        let graph = lift(Graph::from_edges(n, &pairs))?;
        *out = Box::into_raw(Box::new(BlGraph { graph }));
        Ok(())
    })
}

/// Generates a family member, e.g. `("spider", "2,2,2")`.
///
/// # Safety
/// `name` and `args` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_from_family(
    name: *const c_char,
    args: *const c_char,
    out: *mut *mut BlGraph,
) -> BlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let spec = lift(FamilySpec::parse(
            c_str(name, "name")?,
            c_str(args, "args")?,
        ))?;
        let graph = lift(generate(&spec))?;
        *out = Box::into_raw(Box::new(BlGraph { graph }));
        Ok(())
    })
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_vertex_count(g: *const BlGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// graph6 encoding of the graph, or NULL for a NULL handle.
///
/// # Safety
/// `g` must be NULL or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_to_graph6(g: *const BlGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => CString::new(write_graph6(&g.graph)).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bl_graph_free(g: *mut BlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Solves one parameter (`"Gamma_b"`, `"alpha_bnr"`, ...). A `node_budget`
/// of 0 keeps the default; `threads` of 0 uses the default worker count.
///
/// # Safety
/// `g` must be a live graph handle, `kind` a NUL-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn bl_solve(
    g: *const BlGraph,
    kind: *const c_char,
    node_budget: u64,
    threads: usize,
    out: *mut *mut BlResult,
) -> BlStatus {
    guard(|| {
        let g = g.as_ref().ok_or_else(|| null("graph"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let kind: ParameterKind = lift(c_str(kind, "kind")?.parse())?;
        let mut opts = SolveOptions::default();
        if node_budget > 0 {
            opts = opts.with_node_budget(node_budget);
        }
        if threads > 0 {
            opts = opts.with_threads(threads);
        }
        let result = lift(solve(&g.graph, kind, &opts))?;
        *out = Box::into_raw(Box::new(BlResult { result }));
        Ok(())
    })
}

/// # Safety
/// `r` must be NULL or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn bl_result_value(r: *const BlResult) -> u32 {
    r.as_ref().map_or(0, |r| r.result.value)
}

/// True when the value is proven optimal.
///
/// # Safety
/// `r` must be NULL or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn bl_result_optimal(r: *const BlResult) -> bool {
    r.as_ref().is_some_and(|r| r.result.optimal)
}

/// # Safety
/// `r` must be NULL or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn bl_result_nodes(r: *const BlResult) -> u64 {
    r.as_ref().map_or(0, |r| r.result.nodes_explored)
}

/// Copies the witness strengths into `buf`, which must hold one entry per
/// vertex.
///
/// # Safety
/// `r` must be a live result handle and `buf` writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn bl_result_witness(
    r: *const BlResult,
    buf: *mut u32,
    len: usize,
) -> BlStatus {
    guard(|| {
        let r = r.as_ref().ok_or_else(|| null("result"))?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let s = r.result.witness.strengths();
        if len < s.len() {
            return Err((
                BlStatus::BufferTooSmall,
                format!("need {} entries, got {len}", s.len()),
            ));
        }
        std::slice::from_raw_parts_mut(buf, s.len()).copy_from_slice(s);
        Ok(())
    })
}

/// JSON form of the result, or NULL for a NULL handle.
///
/// # Safety
/// `r` must be NULL or a live result handle.
#[no_mangle]
pub unsafe extern "C" fn bl_result_to_json(r: *const BlResult) -> *mut c_char {
    match r.as_ref() {
        Some(r) => {
            CString::new(serialize_result(&r.result)).map_or(ptr::null_mut(), CString::into_raw)
        }
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `r` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bl_result_free(r: *mut BlResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Builds and validates a named certificate on a family member, writing its
/// weight to `weight` on success.
///
/// # Safety
/// String arguments must be NUL-terminated; `weight` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bl_certificate_verify(
    certificate: *const c_char,
    family: *const c_char,
    args: *const c_char,
    weight: *mut u32,
) -> BlStatus {
    guard(|| {
        if weight.is_null() {
            return Err(null("weight"));
        }
        let name: CertificateName = lift(c_str(certificate, "certificate")?.parse())?;
        let spec = lift(FamilySpec::parse(
            c_str(family, "family")?,
            c_str(args, "args")?,
        ))?;
        let f = lift(build(&CertificateSpec::new(name, spec)))?;
        *weight = f.weight();
        Ok(())
    })
}

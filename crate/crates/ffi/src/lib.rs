//! C ABI over the `qcontract` graph library.
//!
//! Graphs are opaque `QcGraph` handles created by [`qc_graph_new`] or
//! [`qc_graph_from_graph6`] and released with [`qc_graph_free`]. Every fallible
//! call returns a [`QcStatus`] and writes its result through an out pointer,
//! which is left untouched on error.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qcontract::connectivity::{is_quasi_k_connected, vertex_connectivity};
use qcontract::contraction::{
    classify_contraction, contract_edge, is_contraction_critical, ContractionVerdict,
};
use qcontract::{graph6, Edge, Graph, GraphError};

/// Opaque graph handle.
pub struct QcGraph(Graph);

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    VertexOutOfRange = 4,
    NotAnEdge = 5,
    TooManyVertices = 6,
    InvalidArgument = 7,
    Precondition = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

/// Outcome of contracting one edge.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcVerdict {
    QuasiK = 0,
    ConnectedNotQuasi = 1,
    Below = 2,
}

impl From<ContractionVerdict> for QcVerdict {
    fn from(v: ContractionVerdict) -> Self {
        match v {
            ContractionVerdict::QuasiK => QcVerdict::QuasiK,
            ContractionVerdict::ConnectedNotQuasi => QcVerdict::ConnectedNotQuasi,
            ContractionVerdict::Below => QcVerdict::Below,
        }
    }
}

impl From<&GraphError> for QcStatus {
    fn from(e: &GraphError) -> Self {
        match e {
            GraphError::VertexOutOfRange { .. } => QcStatus::VertexOutOfRange,
            GraphError::TooManyVertices(_) => QcStatus::TooManyVertices,
            GraphError::NotAnEdge(..) => QcStatus::NotAnEdge,
            GraphError::Graph6(_) => QcStatus::ParseError,
            GraphError::Precondition(_) | GraphError::NotCubic => QcStatus::Precondition,
            _ => QcStatus::InvalidArgument,
        }
    }
}

fn guard(f: impl FnOnce() -> Result<(), QcStatus>) -> QcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QcStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => QcStatus::Panic,
    }
}

unsafe fn graph_ref<'a>(g: *const QcGraph) -> Result<&'a Graph, QcStatus> {
    g.as_ref().map(|h| &h.0).ok_or(QcStatus::NullPointer)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), QcStatus> {
    if out.is_null() {
        return Err(QcStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn into_handle(g: Graph) -> *mut QcGraph {
    Box::into_raw(Box::new(QcGraph(g)))
}

fn status(e: GraphError) -> QcStatus {
    QcStatus::from(&e)
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn qc_status_message(status: QcStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        QcStatus::Ok => b"ok\0",
        QcStatus::NullPointer => b"null pointer argument\0",
        QcStatus::InvalidUtf8 => b"string is not valid UTF-8\0",
        QcStatus::ParseError => b"malformed graph6\0",
        QcStatus::VertexOutOfRange => b"vertex out of range\0",
        QcStatus::NotAnEdge => b"vertex pair is not an edge\0",
        QcStatus::TooManyVertices => b"more than 64 vertices\0",
        QcStatus::InvalidArgument => b"invalid argument\0",
        QcStatus::Precondition => b"precondition not met\0",
        QcStatus::BufferTooSmall => b"output buffer too small\0",
        QcStatus::Panic => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Creates an edgeless graph on `n` vertices.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_new(n: usize, out: *mut *mut QcGraph) -> QcStatus {
    guard(|| {
        let g = Graph::new(n).map_err(status)?;
        write(out, into_handle(g))
    })
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut QcGraph,
) -> QcStatus {
    guard(|| {
        if text.is_null() {
            return Err(QcStatus::NullPointer);
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| QcStatus::InvalidUtf8)?;
        let g = graph6::decode(s.trim_end()).map_err(status)?;
        write(out, into_handle(g))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_free(g: *mut QcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_add_edge(g: *mut QcGraph, u: usize, v: usize) -> QcStatus {
    guard(|| {
        let h = g.as_mut().ok_or(QcStatus::NullPointer)?;
        h.0.add_edge(u, v).map_err(status)
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_vertex_count(g: *const QcGraph) -> usize {
    graph_ref(g).map(|g| g.n()).unwrap_or(0)
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_edge_count(g: *const QcGraph) -> usize {
    graph_ref(g).map(|g| g.edge_count()).unwrap_or(0)
}

/// Writes the graph6 encoding plus a NUL into `buf`. `needed` receives the
/// required size including the NUL, even when the buffer is too small.
///
/// # Safety
/// `g` must be a live handle, `buf` valid for `len` bytes (or null with
/// `len` 0) and `needed` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qc_graph_to_graph6(
    g: *const QcGraph,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> QcStatus {
    guard(|| {
        let s = graph6::encode(graph_ref(g)?);
        write(needed, s.len() + 1)?;
        if buf.is_null() || len < s.len() + 1 {
            return Err(QcStatus::BufferTooSmall);
        }
        ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
        *buf.add(s.len()) = 0;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qc_vertex_connectivity(g: *const QcGraph, out: *mut usize) -> QcStatus {
    guard(|| {
        let kappa = vertex_connectivity(graph_ref(g)?);
        write(out, kappa)
    })
}

/// `k` must be at least 2.
///
/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qc_is_quasi_k_connected(
    g: *const QcGraph,
    k: usize,
    out: *mut bool,
) -> QcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if k < 2 {
            return Err(QcStatus::InvalidArgument);
        }
        write(out, is_quasi_k_connected(g, k))
    })
}

/// Contracts edge `u v` into a new handle; the merged vertex is `min(u, v)`.
///
/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qc_contract_edge(
    g: *const QcGraph,
    u: usize,
    v: usize,
    out: *mut *mut QcGraph,
) -> QcStatus {
    guard(|| {
        let h = contract_edge(graph_ref(g)?, Edge::new(u, v)).map_err(status)?;
        write(out, into_handle(h.graph))
    })
}

/// Classifies `G/uv` against quasi k-connectivity.
///
/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qc_classify_contraction(
    g: *const QcGraph,
    u: usize,
    v: usize,
    k: usize,
    out: *mut QcVerdict,
) -> QcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if k < 2 {
            return Err(QcStatus::InvalidArgument);
        }
        let verdict = classify_contraction(g, Edge::new(u, v), k).map_err(status)?;
        write(out, verdict.into())
    })
}

/// Whether no edge is k-contractible (`quasi` false) or quasi k-contractible
/// (`quasi` true). The graph must be k-connected, respectively quasi
/// k-connected, else [`QcStatus::Precondition`].
///
/// # Safety
/// `g` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn qc_is_contraction_critical(
    g: *const QcGraph,
    k: usize,
    quasi: bool,
    out: *mut bool,
) -> QcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if k < 2 {
            return Err(QcStatus::InvalidArgument);
        }
        write(out, is_contraction_critical(g, k, quasi).map_err(status)?)
    })
}

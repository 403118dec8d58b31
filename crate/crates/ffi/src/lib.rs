//! C ABI for `cist-core`.
//!
//! Graphs and construction results are opaque handles owned by the caller
//! and released with the matching `*_free` function. Every fallible call
//! returns a [`CistStatus`]; on failure [`cist_last_error`] describes the
//! problem for the calling thread. Vertices are the dense ids `0..n`; use
//! [`cist_graph_label`] to map back to the labels of a parsed edge list.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cist_core::cist::{verify_cists_definitional, verify_cists_leafrule, Side, TreePair};
use cist_core::cli::{construct_certified, Certificate};
use cist_core::graph::{
    mu2, parse_edge_list, vertex_connectivity, ConditionReport, Edge, Ext, Graph,
};
use cist_core::oracle::oracle_2cist_partition;
use cist_core::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CistStatus {
    Ok = 0,
    /// The graph is disconnected, has fewer than 7 vertices, or μ₂ < n.
    PreconditionFailed = 1,
    /// The edge-list text could not be read.
    ParseError = 2,
    /// A null pointer, out-of-range vertex, short buffer or malformed tree.
    InvalidArgument = 3,
    /// The exhaustive search found no 2-CIST-partition.
    NotFound = 4,
    /// The graph exceeds the exhaustive search's size cap.
    TooLarge = 5,
    /// An internal consistency check failed; this is a bug.
    InternalError = 6,
    /// A panic was caught at the boundary; this is a bug.
    Panic = 7,
}

/// An undirected simple graph.
pub struct CistGraph(Graph);

/// A 2-CIST-partition with its two spanning trees.
pub struct CistConstruction {
    n: usize,
    v2: Vec<bool>,
    trees: TreePair,
    branch: CString,
    certificate: Certificate,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> CistStatus {
    match e {
        Error::PreconditionFailed(_) => CistStatus::PreconditionFailed,
        Error::Parse { .. } => CistStatus::ParseError,
        Error::TooLarge { .. } => CistStatus::TooLarge,
        Error::InternalInvariantViolation(_) => CistStatus::InternalError,
        _ => CistStatus::InvalidArgument,
    }
}

/// Runs `body`, converting errors and panics into a status.
fn guard(body: impl FnOnce() -> Result<CistStatus, Error>) -> CistStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(status)) => status,
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside cist".into());
            CistStatus::Panic
        }
    }
}

fn null_arg(name: &str) -> Error {
    Error::InvalidInput(format!("{name} is null"))
}

/// # Safety
/// `p` is null or valid for reads.
unsafe fn deref<'a, T>(p: *const T, name: &str) -> Result<&'a T, Error> {
    p.as_ref().ok_or_else(|| null_arg(name))
}

/// # Safety
/// `p` is null or valid for writes.
unsafe fn store<T>(p: *mut T, value: T, name: &str) -> Result<(), Error> {
    if p.is_null() {
        return Err(null_arg(name));
    }
    p.write(value);
    Ok(())
}

/// # Safety
/// `pairs` is null only when `count` is 0, and otherwise valid for `2 * count` reads.
unsafe fn read_edges(
    pairs: *const usize,
    count: usize,
    name: &str,
) -> Result<Vec<(usize, usize)>, Error> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if pairs.is_null() {
        return Err(null_arg(name));
    }
    let flat = std::slice::from_raw_parts(pairs, 2 * count);
    Ok(flat.chunks_exact(2).map(|c| (c[0], c[1])).collect())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cist_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must be valid for `2 * edge_count` reads; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut CistGraph,
) -> CistStatus {
    guard(|| {
        let pairs = read_edges(edges, edge_count, "edges")?;
        let g = Graph::from_edges(n, pairs)?;
        store(out, Box::into_raw(Box::new(CistGraph(g))), "out")?;
        Ok(CistStatus::Ok)
    })
}

/// Parses edge-list text (one `u v` pair per line, optional `p <n>` header).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_parse(
    text: *const c_char,
    out: *mut *mut CistGraph,
) -> CistStatus {
    guard(|| {
        if text.is_null() {
            return Err(null_arg("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Error::InvalidInput("text is not UTF-8".into()))?;
        let g = parse_edge_list(text)?;
        store(out, Box::into_raw(Box::new(CistGraph(g))), "out")?;
        Ok(CistStatus::Ok)
    })
}

/// # Safety
/// `graph` is null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_free(graph: *mut CistGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_vertex_count(graph: *const CistGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_edge_count(graph: *const CistGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Input label of vertex `v`.
///
/// # Safety
/// `graph` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_label(
    graph: *const CistGraph,
    v: usize,
    out: *mut usize,
) -> CistStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        g.check_vertex(v)?;
        store(out, g.label(v), "out")?;
        Ok(CistStatus::Ok)
    })
}

/// μ₂(G). When no pair is at distance two, `*infinite` is set and `*value` is 0.
///
/// # Safety
/// `graph` is a live handle; `value` and `infinite` are writable.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_mu2(
    graph: *const CistGraph,
    value: *mut usize,
    infinite: *mut bool,
) -> CistStatus {
    guard(|| {
        let m = mu2(&deref(graph, "graph")?.0);
        store(value, m.finite().unwrap_or(0), "value")?;
        store(infinite, m == Ext::Infinite, "infinite")?;
        Ok(CistStatus::Ok)
    })
}

/// Vertex connectivity κ(G).
///
/// # Safety
/// `graph` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_connectivity(
    graph: *const CistGraph,
    out: *mut usize,
) -> CistStatus {
    guard(|| {
        let k = vertex_connectivity(&deref(graph, "graph")?.0)?;
        store(out, k, "out")?;
        Ok(CistStatus::Ok)
    })
}

/// Whether the graph is connected with `n >= 7` and μ₂ >= n.
///
/// # Safety
/// `graph` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cist_graph_fan_ok(graph: *const CistGraph, out: *mut bool) -> CistStatus {
    guard(|| {
        let report = ConditionReport::compute(&deref(graph, "graph")?.0);
        store(out, report.fan_ok, "out")?;
        Ok(CistStatus::Ok)
    })
}

/// Builds a 2-CIST-partition and its two trees.
///
/// # Safety
/// `graph` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cist_construct(
    graph: *const CistGraph,
    out: *mut *mut CistConstruction,
) -> CistStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let (partition, trees, certificate) = construct_certified(g)?;
        if !certificate.verdicts.all_ok() {
            return Err(Error::InternalInvariantViolation(
                "construction failed verification".into(),
            ));
        }
        let built = CistConstruction {
            n: g.n(),
            v2: (0..g.n())
                .map(|v| partition.side_of(v) == Side::Second)
                .collect(),
            trees,
            branch: CString::new(certificate.trace.branch.label()).unwrap_or_default(),
            certificate,
        };
        store(out, Box::into_raw(Box::new(built)), "out")?;
        Ok(CistStatus::Ok)
    })
}

/// # Safety
/// `c` is null or a handle from [`cist_construct`] that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cist_construction_free(c: *mut CistConstruction) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Label of the case-analysis branch that produced the partition, or null.
/// Valid while `c` lives.
///
/// # Safety
/// `c` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cist_construction_branch(c: *const CistConstruction) -> *const c_char {
    c.as_ref().map_or(ptr::null(), |c| c.branch.as_ptr())
}

/// Side of vertex `v`: 1 for `V1`, 2 for `V2`.
///
/// # Safety
/// `c` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cist_construction_side(
    c: *const CistConstruction,
    v: usize,
    out: *mut u8,
) -> CistStatus {
    guard(|| {
        let c = deref(c, "construction")?;
        let second = *c.v2.get(v).ok_or(Error::InvalidVertex(v))?;
        store(out, if second { 2 } else { 1 }, "out")?;
        Ok(CistStatus::Ok)
    })
}

/// Copies tree `tree` (1 or 2) as flat `u v` pairs into `buf`, which holds
/// `capacity` values. `*written` receives the number of edges, `n - 1`;
/// when `capacity < 2 * (n - 1)` nothing is copied and the call fails.
///
/// # Safety
/// `c` is a live handle; `buf` is valid for `capacity` writes; `written` is writable.
#[no_mangle]
pub unsafe extern "C" fn cist_construction_tree(
    c: *const CistConstruction,
    tree: u8,
    buf: *mut usize,
    capacity: usize,
    written: *mut usize,
) -> CistStatus {
    guard(|| {
        let c = deref(c, "construction")?;
        let edges = match tree {
            1 => &c.trees.t1,
            2 => &c.trees.t2,
            _ => {
                return Err(Error::InvalidInput(format!(
                    "tree must be 1 or 2, got {tree}"
                )))
            }
        };
        store(written, edges.len(), "written")?;
        if capacity < 2 * edges.len() {
            return Err(Error::InvalidInput(format!(
                "buffer holds {capacity} values, need {}",
                2 * edges.len()
            )));
        }
        if buf.is_null() && !edges.is_empty() {
            return Err(null_arg("buf"));
        }
        for (i, e) in edges.iter().enumerate() {
            buf.add(2 * i).write(e.u());
            buf.add(2 * i + 1).write(e.v());
        }
        debug_assert_eq!(edges.len() + 1, c.n);
        Ok(CistStatus::Ok)
    })
}

/// The certificate as JSON, in input labels. Free with [`cist_string_free`].
/// Returns null on a null handle.
///
/// # Safety
/// `c` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cist_construction_certificate_json(
    c: *const CistConstruction,
) -> *mut c_char {
    c.as_ref()
        .and_then(|c| CString::new(c.certificate.to_json()).ok())
        .map_or(ptr::null_mut(), CString::into_raw)
}

/// # Safety
/// `s` is null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cist_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Checks whether two spanning trees, each given as `edge_count` flat
/// pairs, are completely independent. Both the path-based definition and
/// the edge-disjoint/internal-vertex criterion are evaluated; they must
/// agree. Input that is not a pair of spanning trees fails with
/// `CIST_STATUS_INVALID_ARGUMENT`.
///
/// # Safety
/// `graph` is a live handle; `t1` and `t2` are valid for `2 * edge_count`
/// reads; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cist_verify(
    graph: *const CistGraph,
    t1: *const usize,
    t2: *const usize,
    edge_count: usize,
    out: *mut bool,
) -> CistStatus {
    guard(|| {
        let g = &deref(graph, "graph")?.0;
        let tree = |pairs: Vec<(usize, usize)>| -> Result<Vec<Edge>, Error> {
            pairs
                .into_iter()
                .map(|(u, v)| {
                    g.check_vertex(u)?;
                    g.check_vertex(v)?;
                    Ok(Edge::new(u, v))
                })
                .collect()
        };
        let pair = TreePair::new(
            tree(read_edges(t1, edge_count, "t1")?)?,
            tree(read_edges(t2, edge_count, "t2")?)?,
        );
        let a = verify_cists_definitional(g, &pair)?;
        let b = verify_cists_leafrule(g, &pair)?;
        if a.ok != b.ok {
            return Err(Error::InternalInvariantViolation(
                "the two CIST criteria disagree".into(),
            ));
        }
        store(out, a.ok, "out")?;
        Ok(CistStatus::Ok)
    })
}

/// Exhaustive search for a 2-CIST-partition. Returns `CIST_STATUS_NOT_FOUND`
/// when none exists; `*checked` is the number of bipartitions examined.
///
/// # Safety
/// `graph` is a live handle; `checked` is writable.
#[no_mangle]
pub unsafe extern "C" fn cist_oracle(graph: *const CistGraph, checked: *mut u64) -> CistStatus {
    guard(|| {
        let r = oracle_2cist_partition(&deref(graph, "graph")?.0)?;
        store(checked, r.partitions_checked, "checked")?;
        Ok(if r.found {
            CistStatus::Ok
        } else {
            CistStatus::NotFound
        })
    })
}

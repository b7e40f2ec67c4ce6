//! C interface to the minimal dominating set enumerator.
//!
//! Graphs and collected solutions are opaque handles owned by the caller
//! and released with the matching `_free` function. Every fallible call
//! returns a [`CmdsStatus`]; on failure, [`cmds_last_error_message`]
//! describes the most recent error on the calling thread.

use chordal_mds::enumerate::enum_with_tree;
use chordal_mds::io::parse_graph;
use chordal_mds::{CliqueTree, Graph, GraphError, ParseError, TreeError};
use std::cell::RefCell;
use std::ffi::{c_char, c_int, c_void, CStr, CString};
use std::ops::ControlFlow;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmdsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidGraph = 2,
    ParseError = 3,
    InvalidUtf8 = 4,
    NotChordal = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// A graph with its clique tree, or the reason none exists.
pub struct CmdsGraph {
    graph: Graph,
    tree: Result<CliqueTree, TreeError>,
}

/// Solutions collected by `cmds_solutions_new`.
pub struct CmdsSolutions {
    sets: Vec<Vec<u32>>,
}

/// Receives one solution as ascending vertex ids. A non-zero return stops
/// the enumeration.
pub type CmdsVisit =
    Option<unsafe extern "C" fn(vertices: *const u32, len: usize, user_data: *mut c_void) -> c_int>;

#[derive(Debug, thiserror::Error)]
enum FfiError {
    #[error("{0} is null")]
    Null(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graph text is not valid UTF-8")]
    Utf8,
    #[error(transparent)]
    Tree(TreeError),
    #[error("index {index} out of range for {len} solutions")]
    Index { index: usize, len: usize },
    #[error("vertex id {0} does not fit in 32 bits")]
    VertexId(usize),
    #[error("panic inside the library")]
    Panic,
}

impl FfiError {
    fn status(&self) -> CmdsStatus {
        match self {
            Self::Null(_) => CmdsStatus::NullPointer,
            Self::Graph(_) => CmdsStatus::InvalidGraph,
            Self::Parse(_) => CmdsStatus::ParseError,
            Self::Utf8 => CmdsStatus::InvalidUtf8,
            Self::Tree(TreeError::NotChordal { .. }) => CmdsStatus::NotChordal,
            Self::Tree(_) => CmdsStatus::InvalidGraph,
            Self::Index { .. } | Self::VertexId(_) => CmdsStatus::OutOfRange,
            Self::Panic => CmdsStatus::Panic,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

/// Runs `body`, recording its error and converting panics.
fn guarded(body: impl FnOnce() -> Result<(), FfiError>) -> CmdsStatus {
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or(Err(FfiError::Panic));
    match outcome {
        Ok(()) => {
            set_last_error("");
            CmdsStatus::Ok
        }
        Err(e) => {
            set_last_error(&e.to_string());
            e.status()
        }
    }
}

fn non_null<'p, T>(p: *const T, what: &'static str) -> Result<&'p T, FfiError> {
    // SAFETY: callers pass pointers obtained from this library or valid
    // for reads; null is rejected here.
    unsafe { p.as_ref() }.ok_or(FfiError::Null(what))
}

fn publish<T>(out: *mut *mut T, value: T) -> Result<(), FfiError> {
    if out.is_null() {
        return Err(FfiError::Null("out"));
    }
    // SAFETY: `out` is non-null and points to writable storage.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

fn wrap(graph: Graph) -> CmdsGraph {
    let tree = CliqueTree::build(&graph);
    CmdsGraph { graph, tree }
}

/// Runs the enumerator, handing each solution to `visit` as u32 ids.
fn enumerate(
    handle: &CmdsGraph,
    limit: u64,
    mut visit: impl FnMut(&[u32]) -> ControlFlow<()>,
) -> Result<u64, FfiError> {
    let tree = handle
        .tree
        .as_ref()
        .map_err(|e| FfiError::Tree(e.clone()))?;
    if handle.graph.vertex_count() > u32::MAX as usize {
        return Err(FfiError::VertexId(handle.graph.vertex_count() - 1));
    }
    let mut count = 0u64;
    let mut ids = Vec::new();
    let _ = enum_with_tree(&handle.graph, tree, &mut |d| {
        ids.clear();
        ids.extend(d.iter().map(|v| v as u32));
        count += 1;
        visit(&ids)?;
        if limit != 0 && count >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(count)
}

/// Creates a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` ids). `edges` may be null when `edge_count`
/// is zero.
///
/// # Safety
/// `edges` must be valid for `2 * edge_count` reads and `out` for one write.
#[no_mangle]
pub unsafe extern "C" fn cmds_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut CmdsGraph,
) -> CmdsStatus {
    guarded(|| {
        let flat: &[u32] = match edge_count {
            0 => &[],
            _ if edges.is_null() => return Err(FfiError::Null("edges")),
            // SAFETY: non-null and valid for 2 * edge_count reads per the contract.
            _ => unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) },
        };
        let pairs: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        publish(out, wrap(Graph::new(n, &pairs)?))
    })
}

/// Parses a graph in the text format of the command-line tool: a line
/// `n m`, then `m` lines `u v`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn cmds_graph_parse(
    text: *const c_char,
    out: *mut *mut CmdsGraph,
) -> CmdsStatus {
    guarded(|| {
        if text.is_null() {
            return Err(FfiError::Null("text"));
        }
        // SAFETY: non-null and NUL-terminated per the contract.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| FfiError::Utf8)?;
        publish(out, wrap(parse_graph(text)?))
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cmds_graph_free(graph: *mut CmdsGraph) {
    if !graph.is_null() {
        // SAFETY: allocated by `publish` and released once per the contract.
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cmds_graph_vertex_count(graph: *const CmdsGraph) -> usize {
    non_null(graph, "graph").map_or(0, |g| g.graph.vertex_count())
}

/// Whether the graph is chordal. False for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cmds_graph_is_chordal(graph: *const CmdsGraph) -> bool {
    non_null(graph, "graph").is_ok_and(|g| g.tree.is_ok())
}

/// Streams every minimal dominating set to `visit`, stopping after `limit`
/// solutions when `limit` is non-zero or when `visit` returns non-zero.
/// The number of solutions delivered is stored in `out_count` when it is
/// not null. The vertex buffer passed to `visit` is valid only during the
/// call.
///
/// # Safety
/// `graph` must be a live handle, `visit` safe to call with `user_data`,
/// and `out_count` null or valid for one write.
#[no_mangle]
pub unsafe extern "C" fn cmds_enumerate(
    graph: *const CmdsGraph,
    limit: u64,
    visit: CmdsVisit,
    user_data: *mut c_void,
    out_count: *mut u64,
) -> CmdsStatus {
    guarded(|| {
        let handle = non_null(graph, "graph")?;
        let visit = visit.ok_or(FfiError::Null("visit"))?;
        let count = enumerate(handle, limit, |ids| {
            // SAFETY: the callback contract is the caller's.
            match unsafe { visit(ids.as_ptr(), ids.len(), user_data) } {
                0 => ControlFlow::Continue(()),
                _ => ControlFlow::Break(()),
            }
        })?;
        if !out_count.is_null() {
            // SAFETY: non-null and writable per the contract.
            unsafe { *out_count = count };
        }
        Ok(())
    })
}

/// Collects up to `limit` solutions (all when `limit` is 0).
///
/// # Safety
/// `graph` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn cmds_solutions_new(
    graph: *const CmdsGraph,
    limit: u64,
    out: *mut *mut CmdsSolutions,
) -> CmdsStatus {
    guarded(|| {
        let handle = non_null(graph, "graph")?;
        if out.is_null() {
            return Err(FfiError::Null("out"));
        }
        let mut sets = Vec::new();
        enumerate(handle, limit, |ids| {
            sets.push(ids.to_vec());
            ControlFlow::Continue(())
        })?;
        publish(out, CmdsSolutions { sets })
    })
}

/// Number of collected solutions, or 0 for a null handle.
///
/// # Safety
/// `solutions` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cmds_solutions_len(solutions: *const CmdsSolutions) -> usize {
    non_null(solutions, "solutions").map_or(0, |s| s.sets.len())
}

/// Points `out_vertices` at solution `index` (ascending ids) and stores its
/// size in `out_len`. The buffer lives as long as the handle.
///
/// # Safety
/// `solutions` must be a live handle; both out pointers valid for one write.
#[no_mangle]
pub unsafe extern "C" fn cmds_solutions_get(
    solutions: *const CmdsSolutions,
    index: usize,
    out_vertices: *mut *const u32,
    out_len: *mut usize,
) -> CmdsStatus {
    guarded(|| {
        let handle = non_null(solutions, "solutions")?;
        if out_vertices.is_null() || out_len.is_null() {
            return Err(FfiError::Null("out"));
        }
        let set = handle.sets.get(index).ok_or(FfiError::Index {
            index,
            len: handle.sets.len(),
        })?;
        // SAFETY: both pointers are non-null and writable per the contract.
        unsafe {
            *out_vertices = if set.is_empty() {
                ptr::null()
            } else {
                set.as_ptr()
            };
            *out_len = set.len();
        }
        Ok(())
    })
}

/// Releases collected solutions. Null is ignored.
///
/// # Safety
/// `solutions` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cmds_solutions_free(solutions: *mut CmdsSolutions) {
    if !solutions.is_null() {
        // SAFETY: allocated by `publish` and released once per the contract.
        drop(unsafe { Box::from_raw(solutions) });
    }
}

/// Static description of a status code; unknown codes get a generic text.
#[no_mangle]
pub extern "C" fn cmds_status_message(status: c_int) -> *const c_char {
    const CODES: [(CmdsStatus, &CStr); 8] = [
        (CmdsStatus::Ok, c"ok"),
        (CmdsStatus::NullPointer, c"null pointer argument"),
        (CmdsStatus::InvalidGraph, c"invalid graph"),
        (CmdsStatus::ParseError, c"graph text could not be parsed"),
        (CmdsStatus::InvalidUtf8, c"graph text is not valid UTF-8"),
        (CmdsStatus::NotChordal, c"graph is not chordal"),
        (CmdsStatus::OutOfRange, c"index out of range"),
        (CmdsStatus::Panic, c"internal panic"),
    ];
    CODES
        .iter()
        .find(|(code, _)| *code as c_int == status)
        .map_or(c"unknown status", |(_, text)| *text)
        .as_ptr()
}

/// Detail of the last failed call on this thread, or an empty string after
/// a successful one. Valid until the next library call on the thread.
#[no_mangle]
pub extern "C" fn cmds_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

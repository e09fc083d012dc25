//! C interface to the locdom graph toolkit.
//!
//! Graphs are opaque [`LocdomGraph`] handles created by the `locdom_graph_*`
//! constructors and released with [`locdom_graph_free`]. Every fallible
//! function returns a [`LocdomStatus`]; on failure a description is kept per
//! thread and can be read with [`locdom_last_error`]. Vertex sets cross the
//! boundary as 64-bit masks (bit `v` set when vertex `v` is a member).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use locdom::graph6::{emit_graph6, parse_graph6};
use locdom::greedy::greedy_partition;
use locdom::invariants::{
    chromatic_number, clique_number, domination_number, independence_number, is_locating_dominating, is_resolving,
    k_domination_number, location_domination_number, metric_dimension, upper_domination_number,
};
use locdom::matching::{maximum_matching, v1_construction};
use locdom::symmetry::{determining_number, is_determining};
use locdom::trees::tree_metric_dimension;
use locdom::{Error, Graph, SolverConfig, VertexSet};

/// Opaque graph handle.
pub struct LocdomGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocdomStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed graph6 text, bad edge or vertex, order outside 1..=64.
    InvalidInput = 2,
    /// The graph does not meet the computation's hypotheses.
    Precondition = 3,
    CapExceeded = 4,
    Timeout = 5,
    /// A bug: the library panicked.
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocdomInvariant {
    MetricDimension = 0,
    DeterminingNumber = 1,
    LocationDomination = 2,
    Domination = 3,
    /// Uses the `k` field of [`LocdomOptions`].
    KDomination = 4,
    UpperDomination = 5,
    Independence = 6,
    Clique = 7,
    Chromatic = 8,
    MatchingNumber = 9,
    /// Greedy locating-dominating set from seed vertex `k`.
    GreedyLd = 10,
    /// Matching-based locating-dominating set.
    MatchingLd = 11,
}

/// Solver limits. Zero means "default" for every field.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct LocdomOptions {
    pub cap: u32,
    pub time_budget_ms: u64,
    pub k: u32,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocdomSetKind {
    Resolving = 0,
    Determining = 1,
    LocatingDominating = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LocdomStatus {
    match e {
        Error::CapExceeded { .. } => LocdomStatus::CapExceeded,
        Error::Timeout => LocdomStatus::Timeout,
        _ if e.exit_code() == 2 => LocdomStatus::InvalidInput,
        _ => LocdomStatus::Precondition,
    }
}

fn guard(f: impl FnOnce() -> Result<(), LocdomStatus>) -> LocdomStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LocdomStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal error".into());
            LocdomStatus::Internal
        }
    }
}

fn fail(e: Error) -> LocdomStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

fn null() -> LocdomStatus {
    set_error("null pointer argument".into());
    LocdomStatus::NullPointer
}

unsafe fn graph_ref<'a>(g: *const LocdomGraph) -> Result<&'a Graph, LocdomStatus> {
    g.as_ref().map(|h| &h.0).ok_or_else(null)
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn locdom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a NUL-terminated graph6 string into `*out`.
///
/// # Safety
/// `text` must be NULL or a valid C string; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn locdom_graph_from_graph6(text: *const c_char, out: *mut *mut LocdomGraph) -> LocdomStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("graph6 text is not UTF-8".into());
            LocdomStatus::InvalidInput
        })?;
        let g = parse_graph6(s).map_err(fail)?;
        *out = Box::into_raw(Box::new(LocdomGraph(g)));
        Ok(())
    })
}

/// Builds a graph of order `n` from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be NULL when
/// `edge_count` is 0); `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn locdom_graph_from_edges(
    n: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut LocdomGraph,
) -> LocdomStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return Err(null());
        }
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let g = Graph::new(n as usize, &pairs).map_err(fail)?;
        *out = Box::into_raw(Box::new(LocdomGraph(g)));
        Ok(())
    })
}

/// Releases a graph. NULL is ignored.
///
/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn locdom_graph_free(g: *mut LocdomGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Order of the graph, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn locdom_graph_order(g: *const LocdomGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.0.order() as u32)
}

/// Whether `u` and `v` are adjacent. Out-of-range vertices are not.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn locdom_graph_has_edge(g: *const LocdomGraph, u: u32, v: u32) -> bool {
    g.as_ref().is_some_and(|h| {
        let n = h.0.order() as u32;
        u < n && v < n && h.0.has_edge(u as usize, v as usize)
    })
}

/// Writes a newly allocated graph6 string to `*out`; release it with
/// [`locdom_string_free`].
///
/// # Safety
/// `g` must be NULL or a live handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn locdom_graph_to_graph6(g: *const LocdomGraph, out: *mut *mut c_char) -> LocdomStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null());
        }
        *out = CString::new(emit_graph6(g)).expect("graph6 has no NUL").into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn locdom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn compute(g: &Graph, inv: LocdomInvariant, opts: &LocdomOptions) -> locdom::Result<(usize, VertexSet)> {
    let cfg = SolverConfig {
        cap: (opts.cap > 0).then_some(opts.cap as usize),
        time_budget: (opts.time_budget_ms > 0).then(|| Duration::from_millis(opts.time_budget_ms)),
    };
    let k = opts.k as usize;
    let r = match inv {
        LocdomInvariant::MetricDimension if g.is_tree() => tree_metric_dimension(g)?,
        LocdomInvariant::MetricDimension => metric_dimension(g, &cfg)?,
        LocdomInvariant::DeterminingNumber => determining_number(g, &cfg)?,
        LocdomInvariant::LocationDomination => location_domination_number(g, &cfg)?,
        LocdomInvariant::Domination => domination_number(g, &cfg)?,
        LocdomInvariant::KDomination => k_domination_number(g, k.max(1), &cfg)?,
        LocdomInvariant::UpperDomination => upper_domination_number(g, &cfg)?,
        LocdomInvariant::Independence => independence_number(g, &cfg)?,
        LocdomInvariant::Clique => clique_number(g, &cfg)?,
        LocdomInvariant::Chromatic => chromatic_number(g, &cfg)?,
        LocdomInvariant::MatchingNumber => {
            let m = maximum_matching(g);
            let covered = g.vertices() - m.mbar;
            return Ok((m.len(), covered));
        }
        LocdomInvariant::GreedyLd => {
            g.check_vertex(k)?;
            let ld = greedy_partition(g, k)?.ld_set(g)?;
            return Ok((ld.len(), ld));
        }
        LocdomInvariant::MatchingLd => {
            let v1 = v1_construction(g)?.v1;
            return Ok((v1.len(), v1));
        }
    };
    Ok((r.value, r.witness))
}

/// Computes an invariant. `*value` receives its value and, when `witness` is
/// not NULL, `*witness` a vertex set attaining it (for the chromatic number,
/// one colour class; for the matching number, the matched vertices). `opts`
/// may be NULL for defaults.
///
/// # Safety
/// `g` must be NULL or a live handle; `opts` NULL or readable; `value` and
/// `witness` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn locdom_compute(
    g: *const LocdomGraph,
    invariant: LocdomInvariant,
    opts: *const LocdomOptions,
    value: *mut u32,
    witness: *mut u64,
) -> LocdomStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if value.is_null() {
            return Err(null());
        }
        let opts = opts.as_ref().copied().unwrap_or_default();
        let (v, w) = compute(g, invariant, &opts).map_err(fail)?;
        *value = v as u32;
        if !witness.is_null() {
            *witness = w.bits();
        }
        Ok(())
    })
}

/// Tests whether the vertex set `set` has the given property in `g`.
///
/// # Safety
/// `g` must be NULL or a live handle; `out` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn locdom_check_set(
    g: *const LocdomGraph,
    kind: LocdomSetKind,
    set: u64,
    out: *mut bool,
) -> LocdomStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null());
        }
        let s = VertexSet::from_bits(set);
        if !s.is_subset(g.vertices()) {
            set_error("set contains vertices outside the graph".into());
            return Err(LocdomStatus::InvalidInput);
        }
        *out = match kind {
            LocdomSetKind::Resolving => is_resolving(g, s).map_err(fail)?,
            LocdomSetKind::Determining => is_determining(g, s),
            LocdomSetKind::LocatingDominating => is_locating_dominating(g, s),
        };
        Ok(())
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn locdom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

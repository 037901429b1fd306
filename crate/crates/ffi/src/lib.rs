//! C ABI for the hiergame library.
//!
//! Conventions:
//!
//! * Every function returns an [`HgStatus`]; results come back through
//!   out-pointers, which are written only on success.
//! * On failure a description is stored per thread and can be read with
//!   [`hg_last_error_message`].
//! * Graphs are opaque [`HgGraph`] handles created by [`hg_graph_new`] and
//!   released with [`hg_graph_free`].
//! * Panics never cross the boundary; they are reported as
//!   [`HgStatus::Panic`].

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hiergame::hierarchy::{general_reaching_centrality, h_nx, DirectedGraph, TwoLevelStructure};
use hiergame::sim::estimate_payoff;
use hiergame::{analytic, Error, GameParams, ModelVariant, Population, Role};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    /// A parameter is out of range; see the last error message.
    InvalidArgument = 1,
    /// A required pointer was null.
    NullPointer = 2,
    /// The requested quantity does not exist (e.g. parallel payoff lines).
    Undefined = 3,
    /// The simulator could not finish a round.
    SimulationFailed = 4,
    /// An internal error was caught at the boundary.
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgVariant {
    MultiLeader = 0,
    Retry = 1,
    NoMemory = 2,
    WithMemory = 3,
}

impl From<HgVariant> for ModelVariant {
    fn from(v: HgVariant) -> Self {
        match v {
            HgVariant::MultiLeader => ModelVariant::MultiLeader,
            HgVariant::Retry => ModelVariant::MarkRetry,
            HgVariant::NoMemory => ModelVariant::MarkNoMemory,
            HgVariant::WithMemory => ModelVariant::MarkWithMemory,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgRole {
    Cooperator = 0,
    Defector = 1,
}

impl From<HgRole> for Role {
    fn from(r: HgRole) -> Self {
        match r {
            HgRole::Cooperator => Role::Cooperator,
            HgRole::Defector => Role::Defector,
        }
    }
}

/// Monte Carlo payoff estimate: `mean = a_hat * c + b_hat * b`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct HgEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub a_hat: f64,
    pub b_hat: f64,
}

/// Opaque directed graph under construction.
pub struct HgGraph {
    node_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = CString::new(sanitized).expect("no interior nul"));
}

fn fail(status: HgStatus, message: &str) -> HgStatus {
    set_last_error(message);
    status
}

fn from_error(err: Error) -> HgStatus {
    let status = match err {
        Error::SignalingCapExceeded(_) => HgStatus::SimulationFailed,
        _ => HgStatus::InvalidArgument,
    };
    fail(status, &err.to_string())
}

/// Runs `body`, converting panics into [`HgStatus::Panic`].
fn guard(body: impl FnOnce() -> HgStatus) -> HgStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => fail(HgStatus::Panic, "internal error"),
    }
}

/// Writes `value` through `out` if it is non-null.
unsafe fn write_out<T>(out: *mut T, value: T) -> HgStatus {
    if out.is_null() {
        return fail(HgStatus::NullPointer, "output pointer is null");
    }
    out.write(value);
    HgStatus::Ok
}

/// Message describing the last failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Closed-form hierarchicalness `H_n(x)` of a two-level structure.
///
/// # Safety
/// `out` must be null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn hg_h_nx(n: usize, x: usize, out: *mut f64) -> HgStatus {
    guard(|| match TwoLevelStructure::new(n, x) {
        Ok(s) => write_out(out, h_nx(s)),
        Err(e) => from_error(e),
    })
}

fn params(n: usize, fc: f64, tau: f64, c: f64, b: f64) -> Result<GameParams, HgStatus> {
    GameParams::new(n, fc, tau, c, b).map_err(from_error)
}

/// Exact expected payoff of a focal status cooperator.
///
/// # Safety
/// `out` must be null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn hg_wc(
    variant: HgVariant,
    n: usize,
    fc: f64,
    tau: f64,
    c: f64,
    b: f64,
    out: *mut f64,
) -> HgStatus {
    guard(|| match params(n, fc, tau, c, b) {
        Ok(p) => write_out(out, analytic::wc(&p, variant.into())),
        Err(status) => status,
    })
}

/// Exact expected payoff of a focal defector.
///
/// # Safety
/// `out` must be null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn hg_wd(
    variant: HgVariant,
    n: usize,
    fc: f64,
    tau: f64,
    c: f64,
    b: f64,
    out: *mut f64,
) -> HgStatus {
    guard(|| match params(n, fc, tau, c, b) {
        Ok(p) => write_out(out, analytic::wd(&p, variant.into())),
        Err(status) => status,
    })
}

/// The `c/b` at which `W(C) = W(D)`; [`HgStatus::Undefined`] when the
/// payoff lines are parallel.
///
/// # Safety
/// `out` must be null or valid for writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn hg_equilibrium_cb(
    variant: HgVariant,
    n: usize,
    fc: f64,
    tau: f64,
    out: *mut f64,
) -> HgStatus {
    guard(|| {
        let pop = match Population::new(n, fc, tau) {
            Ok(p) => p,
            Err(e) => return from_error(e),
        };
        match analytic::equilibrium_cb(&pop, variant.into()) {
            Some(cb) => write_out(out, cb),
            None => fail(HgStatus::Undefined, "payoff lines never cross"),
        }
    })
}

/// Lower and upper bound of the stability region of `c/b`.
///
/// # Safety
/// `lower` and `upper` must be null or valid for writing one `double` each.
#[no_mangle]
pub unsafe extern "C" fn hg_stability_region(
    variant: HgVariant,
    n: usize,
    tau: f64,
    lower: *mut f64,
    upper: *mut f64,
) -> HgStatus {
    guard(|| {
        if lower.is_null() || upper.is_null() {
            return fail(HgStatus::NullPointer, "output pointer is null");
        }
        match analytic::stability_region(n, tau, variant.into()) {
            Ok(region) => {
                lower.write(region.lower);
                upper.write(region.upper);
                HgStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Seeded Monte Carlo estimate of a focal player's payoff over
/// `replications` rounds. Identical arguments give identical results.
///
/// # Safety
/// `out` must be null or valid for writing one `HgEstimate`.
#[no_mangle]
pub unsafe extern "C" fn hg_estimate_payoff(
    variant: HgVariant,
    role: HgRole,
    n: usize,
    fc: f64,
    tau: f64,
    c: f64,
    b: f64,
    replications: u64,
    seed: u64,
    out: *mut HgEstimate,
) -> HgStatus {
    guard(|| {
        if out.is_null() {
            return fail(HgStatus::NullPointer, "output pointer is null");
        }
        let p = match params(n, fc, tau, c, b) {
            Ok(p) => p,
            Err(status) => return status,
        };
        match estimate_payoff(&p, variant.into(), role.into(), replications, seed) {
            Ok(est) => write_out(
                out,
                HgEstimate {
                    mean: est.payoff.mean,
                    std_error: est.payoff.std_error,
                    a_hat: est.coefficients.a_hat,
                    b_hat: est.coefficients.b_hat,
                },
            ),
            Err(e) => from_error(e),
        }
    })
}

/// Creates an empty graph on `node_count` nodes.
///
/// # Safety
/// `out` must be null or valid for writing one pointer. The handle must be
/// released with [`hg_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn hg_graph_new(node_count: usize, out: *mut *mut HgGraph) -> HgStatus {
    guard(|| {
        if node_count == 0 {
            return fail(
                HgStatus::InvalidArgument,
                "graph must have at least one node",
            );
        }
        if out.is_null() {
            return fail(HgStatus::NullPointer, "output pointer is null");
        }
        let graph = Box::new(HgGraph {
            node_count,
            edges: BTreeSet::new(),
        });
        out.write(Box::into_raw(graph));
        HgStatus::Ok
    })
}

/// Adds the edge `from -> to`. Out-of-range nodes, self-loops and duplicate
/// edges are rejected and leave the graph unchanged.
///
/// # Safety
/// `graph` must be null or a live handle from [`hg_graph_new`].
#[no_mangle]
pub unsafe extern "C" fn hg_graph_add_edge(
    graph: *mut HgGraph,
    from: usize,
    to: usize,
) -> HgStatus {
    guard(|| {
        let Some(graph) = graph.as_mut() else {
            return fail(HgStatus::NullPointer, "graph handle is null");
        };
        if from >= graph.node_count || to >= graph.node_count {
            return from_error(Error::InvalidNode {
                node: from.max(to),
                node_count: graph.node_count,
            });
        }
        if from == to {
            return from_error(Error::SelfLoop(from));
        }
        if !graph.edges.insert((from, to)) {
            return from_error(Error::DuplicateEdge(from, to));
        }
        HgStatus::Ok
    })
}

/// General reaching centrality of the graph.
///
/// # Safety
/// `graph` must be null or a live handle; `out` must be null or valid for
/// writing one `double`.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_grc(graph: *const HgGraph, out: *mut f64) -> HgStatus {
    guard(|| {
        let Some(graph) = graph.as_ref() else {
            return fail(HgStatus::NullPointer, "graph handle is null");
        };
        let built = match DirectedGraph::new(graph.node_count, graph.edges.iter().copied()) {
            Ok(g) => g,
            Err(e) => return from_error(e),
        };
        match general_reaching_centrality(&built) {
            Ok(grc) => write_out(out, grc),
            Err(e) => from_error(e),
        }
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `graph` must be null or a handle from [`hg_graph_new`] that has not been
/// freed yet.
#[no_mangle]
pub unsafe extern "C" fn hg_graph_free(graph: *mut HgGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

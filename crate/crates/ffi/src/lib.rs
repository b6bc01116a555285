//! C ABI over `aqcist`.
//!
//! Families are opaque `AqFamily` handles created by one of the
//! `aq_family_*` constructors and released with `aq_family_free`. Every
//! fallible call returns an `AqStatus`; on anything other than `AQ_STATUS_OK`
//! the reason is available from `aq_last_error` on the same thread. Strings
//! returned through out-parameters are owned by the caller and released with
//! `aq_string_free`. Vertices are zero-based label values.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use aqcist::base_families::base_family;
use aqcist::io::{family_from_json, family_to_json};
use aqcist::lifting::construct_cists;
use aqcist::routing::Router;
use aqcist::topology::{are_adjacent, graph_stats};
use aqcist::{verify_family, CistFamily, Error, Mode, VertexId};

/// Result codes. `AQ_STATUS_NOT_CIST` is a verification verdict, not an
/// error.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AqStatus {
    Ok = 0,
    NotCist = 1,
    InvalidArgument = 2,
    Unsupported = 3,
    Parse = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AqMode {
    Characterization = 0,
    BruteForce = 1,
    Both = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AqGraphStats {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub degree: u32,
}

/// Opaque family handle.
pub struct AqFamily {
    family: CistFamily,
    router: Option<Router>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> AqStatus {
    match e {
        Error::Unsupported { .. }
        | Error::UnsupportedBase { .. }
        | Error::DimensionOutOfRange { .. }
        | Error::BruteForceCap { .. } => AqStatus::Unsupported,
        Error::Format(_) | Error::BadLabel(_) => AqStatus::Parse,
        Error::NotCist(_) => AqStatus::NotCist,
        Error::ModeDisagreement { .. } | Error::Io(_) => AqStatus::Internal,
        _ => AqStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> AqStatus {
    set_error(e.to_string());
    status_of(&e)
}

/// Runs `f`, mapping panics to `AQ_STATUS_INTERNAL`.
fn guard(f: impl FnOnce() -> AqStatus) -> AqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            AqStatus::Internal
        }
    }
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            set_error(concat!("null pointer: ", stringify!($p)));
            return AqStatus::NullPointer;
        })+
    };
}

fn into_handle(family: CistFamily, out: *mut *mut AqFamily) -> AqStatus {
    let handle = Box::new(AqFamily {
        family,
        router: None,
    });
    unsafe { *out = Box::into_raw(handle) };
    AqStatus::Ok
}

fn into_c_string(s: String, out: *mut *mut c_char) -> AqStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            AqStatus::Ok
        }
        Err(_) => {
            set_error("string contains a NUL byte");
            AqStatus::Internal
        }
    }
}

/// Message for the last failing call on this thread; empty if none. Valid
/// until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn aq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn aq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn aq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Whether `u` and `v` are adjacent in AQ_n.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aq_are_adjacent(n: u8, u: u32, v: u32, out: *mut bool) -> AqStatus {
    non_null!(out);
    guard(|| {
        let r = VertexId::new(u, n).and_then(|a| are_adjacent(a, VertexId::new(v, n)?));
        match r {
            Ok(adj) => {
                *out = adj;
                AqStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Vertex count, edge count and degree of AQ_n.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aq_graph_stats(n: u8, out: *mut AqGraphStats) -> AqStatus {
    non_null!(out);
    guard(|| match graph_stats(n) {
        Ok(s) => {
            *out = AqGraphStats {
                vertex_count: s.vertex_count,
                edge_count: s.edge_count,
                degree: s.degree,
            };
            AqStatus::Ok
        }
        Err(e) => fail(e),
    })
}

/// Builds the CIST family for AQ_n (3 <= n <= 14).
///
/// # Safety
/// `out` must be valid for writes; on success it receives a handle to free
/// with `aq_family_free`.
#[no_mangle]
pub unsafe extern "C" fn aq_family_construct(n: u32, out: *mut *mut AqFamily) -> AqStatus {
    non_null!(out);
    guard(|| match construct_cists(n) {
        Ok(f) => into_handle(f, out),
        Err(e) => fail(e),
    })
}

/// The stored base family for n in 3..=5.
///
/// # Safety
/// As for `aq_family_construct`.
#[no_mangle]
pub unsafe extern "C" fn aq_family_base(n: u8, out: *mut *mut AqFamily) -> AqStatus {
    non_null!(out);
    guard(|| match base_family(n) {
        Ok(f) => into_handle(f, out),
        Err(e) => fail(e),
    })
}

/// Parses a family JSON document. Each tree must be a spanning tree of
/// AQ_n; the family itself is not verified.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aq_family_from_json(
    json: *const c_char,
    out: *mut *mut AqFamily,
) -> AqStatus {
    non_null!(json, out);
    guard(|| {
        let Ok(text) = CStr::from_ptr(json).to_str() else {
            set_error("input is not UTF-8");
            return AqStatus::Parse;
        };
        match family_from_json(text) {
            Ok(f) => into_handle(f, out),
            Err(e) => fail(e),
        }
    })
}

/// Canonical JSON for the family. Free the result with `aq_string_free`.
///
/// # Safety
/// `family` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aq_family_to_json(
    family: *const AqFamily,
    out: *mut *mut c_char,
) -> AqStatus {
    non_null!(family, out);
    guard(|| into_c_string(family_to_json(&(*family).family), out))
}

/// Releases a family handle. Null is ignored.
///
/// # Safety
/// `family` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn aq_family_free(family: *mut AqFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// Dimension n of the family, or 0 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aq_family_dim(family: *const AqFamily) -> u8 {
    family.as_ref().map_or(0, |f| f.family.n())
}

/// Number of trees, or 0 for a null handle.
///
/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aq_family_tree_count(family: *const AqFamily) -> usize {
    family.as_ref().map_or(0, |f| f.family.k())
}

/// Diameter of tree `tree` (zero-based index).
///
/// # Safety
/// `family` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aq_family_tree_diameter(
    family: *const AqFamily,
    tree: usize,
    out: *mut u32,
) -> AqStatus {
    non_null!(family, out);
    guard(|| {
        let f = &(*family).family;
        if tree >= f.k() {
            set_error(format!(
                "tree index {tree} out of range, family has {}",
                f.k()
            ));
            return AqStatus::InvalidArgument;
        }
        *out = f.tree(tree).diameter();
        AqStatus::Ok
    })
}

/// Copies the sorted edges of tree `tree` into `buf` as `lo, hi` pairs.
/// `capacity` counts edges, so `buf` holds `2 * capacity` values. `out_len`
/// always receives the edge count; if it exceeds `capacity` nothing is
/// copied and `AQ_STATUS_BUFFER_TOO_SMALL` is returned. `buf` may be null
/// when `capacity` is 0.
///
/// # Safety
/// `family` must be a live handle, `buf` valid for `2 * capacity` writes and
/// `out_len` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aq_family_tree_edges(
    family: *const AqFamily,
    tree: usize,
    buf: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> AqStatus {
    non_null!(family, out_len);
    guard(|| {
        let f = &(*family).family;
        if tree >= f.k() {
            set_error(format!(
                "tree index {tree} out of range, family has {}",
                f.k()
            ));
            return AqStatus::InvalidArgument;
        }
        let edges = f.tree(tree).edges();
        *out_len = edges.len();
        if edges.len() > capacity || buf.is_null() {
            set_error(format!("need room for {} edges", edges.len()));
            return AqStatus::BufferTooSmall;
        }
        let dst = std::slice::from_raw_parts_mut(buf, 2 * edges.len());
        for (pair, e) in dst.chunks_exact_mut(2).zip(edges) {
            pair[0] = e.lo();
            pair[1] = e.hi();
        }
        AqStatus::Ok
    })
}

/// Verifies the family. Returns `AQ_STATUS_OK` when it is a set of CISTs and
/// `AQ_STATUS_NOT_CIST` when it is not. If `report_json` is non-null it
/// receives the report, to be freed with `aq_string_free`.
///
/// # Safety
/// `family` must be a live handle; `report_json` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aq_family_verify(
    family: *const AqFamily,
    mode: AqMode,
    report_json: *mut *mut c_char,
) -> AqStatus {
    non_null!(family);
    guard(|| {
        let mode = match mode {
            AqMode::Characterization => Mode::Characterization,
            AqMode::BruteForce => Mode::BruteForce,
            AqMode::Both => Mode::Both,
        };
        let report = match verify_family(&(*family).family, mode) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        if !report_json.is_null() {
            let status = into_c_string(report.to_json(), report_json);
            if status != AqStatus::Ok {
                return status;
            }
        }
        if report.passed() {
            AqStatus::Ok
        } else {
            set_error(report.to_string());
            AqStatus::NotCist
        }
    })
}

/// Writes the path from `u` to `v` in tree `tree` into `buf`, source first.
/// `out_len` always receives the number of vertices on the path; if it
/// exceeds `capacity` nothing is copied and `AQ_STATUS_BUFFER_TOO_SMALL` is
/// returned. The first call on a handle verifies the family and fails with
/// `AQ_STATUS_NOT_CIST` if it is not a set of CISTs.
///
/// # Safety
/// `family` must be a live handle not used concurrently from another
/// thread, `buf` valid for `capacity` writes, `out_len` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn aq_family_route(
    family: *mut AqFamily,
    tree: usize,
    u: u32,
    v: u32,
    buf: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> AqStatus {
    non_null!(family, out_len);
    guard(|| {
        let handle = &mut *family;
        if handle.router.is_none() {
            match Router::new(&handle.family) {
                Ok(r) => handle.router = Some(r),
                Err(e) => return fail(e),
            }
        }
        let router = handle.router.as_ref().expect("router set above");
        if tree >= router.k() {
            set_error(format!(
                "tree index {tree} out of range, family has {}",
                router.k()
            ));
            return AqStatus::InvalidArgument;
        }
        let n = router.n();
        let routes = match VertexId::new(u, n).and_then(|a| router.routes(a, VertexId::new(v, n)?))
        {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        let path = &routes[tree].vertices;
        *out_len = path.len();
        if path.len() > capacity || buf.is_null() {
            set_error(format!("need room for {} vertices", path.len()));
            return AqStatus::BufferTooSmall;
        }
        let dst = std::slice::from_raw_parts_mut(buf, path.len());
        for (d, x) in dst.iter_mut().zip(path) {
            *d = x.bits();
        }
        AqStatus::Ok
    })
}

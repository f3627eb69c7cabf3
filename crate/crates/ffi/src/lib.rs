//! C interface to `polydual`.
//!
//! Polytopes cross the boundary as opaque [`PdPolytope`] handles. Every
//! fallible call returns a [`PdStatus`]; on failure a message is available
//! from [`pd_last_error`] on the same thread. Points are passed as flat
//! `int64_t` arrays of `x, y, z` triples.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polydual::report::{build_report, VerifyOptions};
use polydual::{
    find_unimodular_embedding, hull, is_reflexive, kernel_basis, newton_polytope, parse_polynomial,
    polar_dual, weight_polytope, Case, EmbeddingMode, Error, LatticePolytope, Point, WeightSystem,
};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdStatus {
    Ok = 0,
    NullArgument = 1,
    /// Malformed weights, polynomial text, case name or UTF-8.
    InvalidInput = 2,
    /// Points span less than three dimensions.
    Degenerate = 3,
    /// A coordinate or intermediate value is out of range.
    Overflow = 4,
    /// The output buffer is too small; the required size is still reported.
    BufferTooSmall = 5,
    /// The polar dual has non-lattice vertices, or the origin is not interior.
    NotIntegral = 6,
    /// A shipped value failed to reproduce.
    FixtureMismatch = 7,
    Internal = 8,
    Panic = 9,
}

/// Opaque lattice polytope.
pub struct PdPolytope {
    inner: LatticePolytope,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> PdStatus {
    match e {
        Error::Degenerate { .. } => PdStatus::Degenerate,
        Error::Overflow(_) | Error::CoordinateTooLarge { .. } => PdStatus::Overflow,
        Error::OriginNotInterior => PdStatus::NotIntegral,
        Error::FixtureMismatch { .. } => PdStatus::FixtureMismatch,
        Error::Internal(_) => PdStatus::Internal,
        _ => PdStatus::InvalidInput,
    }
}

fn fail(e: Error) -> PdStatus {
    let s = status_of(&e);
    set_error(e.to_string());
    s
}

/// Runs `f`, converting panics into [`PdStatus::Panic`].
fn guard(f: impl FnOnce() -> PdStatus) -> PdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == PdStatus::Ok {
                set_error("");
            }
            s
        }
        Err(_) => {
            set_error("panic inside polydual");
            PdStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PdStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(PdStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        PdStatus::InvalidInput
    })
}

unsafe fn read_weights(weights: *const i64) -> Result<WeightSystem, PdStatus> {
    if weights.is_null() {
        set_error("null weights");
        return Err(PdStatus::NullArgument);
    }
    let mut w = [0i64; 4];
    ptr::copy_nonoverlapping(weights, w.as_mut_ptr(), 4);
    WeightSystem::new(w).map_err(fail)
}

unsafe fn emit(p: LatticePolytope, out: *mut *mut PdPolytope) -> PdStatus {
    *out = Box::into_raw(Box::new(PdPolytope { inner: p }));
    PdStatus::Ok
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer argument");
            return PdStatus::NullArgument;
        }
    };
}

/// Convex hull of `n_points` points read from `coords` (`3 * n_points`
/// values).
///
/// # Safety
/// `coords` must point to `3 * n_points` readable values and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_from_points(
    coords: *const i64,
    n_points: usize,
    out: *mut *mut PdPolytope,
) -> PdStatus {
    guard(|| {
        non_null!(coords, out);
        let flat = std::slice::from_raw_parts(coords, n_points.saturating_mul(3));
        let pts: Vec<Point> = flat.chunks_exact(3).map(|c| [c[0], c[1], c[2]]).collect();
        match hull(&pts) {
            Ok(p) => emit(p, out),
            Err(e) => fail(e),
        }
    })
}

/// Weight polytope of the weight system `weights[0..4]` in the Hermite
/// normal form basis of its kernel lattice.
///
/// # Safety
/// `weights` must point to four readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_from_weights(
    weights: *const i64,
    out: *mut *mut PdPolytope,
) -> PdStatus {
    guard(|| {
        non_null!(out);
        let w = match read_weights(weights) {
            Ok(w) => w,
            Err(s) => return s,
        };
        match kernel_basis(&w).and_then(|b| weight_polytope(&w, &b)) {
            Ok(p) => emit(p, out),
            Err(e) => fail(e),
        }
    })
}

/// Newton polytope of a weighted-homogeneous polynomial, in the same basis
/// as [`pd_polytope_from_weights`].
///
/// # Safety
/// `polynomial` must be a NUL-terminated string, `weights` must point to four
/// readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_from_newton(
    polynomial: *const c_char,
    weights: *const i64,
    out: *mut *mut PdPolytope,
) -> PdStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(polynomial) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let w = match read_weights(weights) {
            Ok(w) => w,
            Err(s) => return s,
        };
        let built = parse_polynomial(text)
            .and_then(|f| kernel_basis(&w).and_then(|b| newton_polytope(&f, &w, &b)));
        match built {
            Ok(p) => emit(p, out),
            Err(e) => fail(e),
        }
    })
}

/// Polar dual of a polytope whose dual is again a lattice polytope.
///
/// # Safety
/// `p` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_dual(
    p: *const PdPolytope,
    out: *mut *mut PdPolytope,
) -> PdStatus {
    guard(|| {
        non_null!(p, out);
        match polar_dual(&(*p).inner) {
            Ok(d) => match d.to_lattice() {
                Some(l) => emit(l, out),
                None => {
                    set_error("polar dual has non-lattice vertices");
                    PdStatus::NotIntegral
                }
            },
            Err(e) => fail(e),
        }
    })
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_vertex_count(p: *const PdPolytope) -> usize {
    if p.is_null() {
        return 0;
    }
    (*p).inner.vertices().len()
}

/// Copies the sorted vertices into `out` (room for `capacity` points). The
/// number of vertices is stored in `written` even when the buffer is too
/// small.
///
/// # Safety
/// `p` must be a live handle, `out` must have room for `3 * capacity` values
/// and `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_vertices(
    p: *const PdPolytope,
    out: *mut i64,
    capacity: usize,
    written: *mut usize,
) -> PdStatus {
    guard(|| {
        non_null!(p, written);
        let verts = (*p).inner.vertices();
        *written = verts.len();
        if capacity < verts.len() {
            set_error(format!(
                "buffer holds {capacity} points, need {}",
                verts.len()
            ));
            return PdStatus::BufferTooSmall;
        }
        non_null!(out);
        let flat: Vec<i64> = verts.iter().flatten().copied().collect();
        ptr::copy_nonoverlapping(flat.as_ptr(), out, flat.len());
        PdStatus::Ok
    })
}

/// # Safety
/// `p` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_lattice_point_count(
    p: *const PdPolytope,
    out: *mut usize,
) -> PdStatus {
    guard(|| {
        non_null!(p, out);
        *out = (*p).inner.lattice_points().len();
        PdStatus::Ok
    })
}

/// # Safety
/// `p` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_is_reflexive(
    p: *const PdPolytope,
    out: *mut bool,
) -> PdStatus {
    guard(|| {
        non_null!(p, out);
        *out = is_reflexive(&(*p).inner).is_reflexive();
        PdStatus::Ok
    })
}

/// Whether some unimodular map (plus a translation when `affine`) carries
/// `candidate` into `target`. The search is exhaustive.
///
/// # Safety
/// Both handles must be live and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_embeds(
    candidate: *const PdPolytope,
    target: *const PdPolytope,
    affine: bool,
    out: *mut bool,
) -> PdStatus {
    guard(|| {
        non_null!(candidate, target, out);
        let mode = if affine {
            EmbeddingMode::Affine
        } else {
            EmbeddingMode::OriginFixing
        };
        match find_unimodular_embedding(&(*candidate).inner, &(*target).inner, mode) {
            Ok(w) => {
                *out = w.is_some();
                PdStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_polytope_free(p: *mut PdPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Full duality check for the case `"Q16"` or `"S16"` against both targets.
/// The JSON report is stored in `json_out` and must be released with
/// [`pd_string_free`]. Returns [`PdStatus::FixtureMismatch`] (and still
/// the report) when a shipped value fails to reproduce.
///
/// # Safety
/// `case_name` must be a NUL-terminated string and `json_out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_verify_case(
    case_name: *const c_char,
    json_out: *mut *mut c_char,
) -> PdStatus {
    guard(|| {
        non_null!(json_out);
        *json_out = ptr::null_mut();
        let name = match read_str(case_name) {
            Ok(n) => n,
            Err(s) => return s,
        };
        let report = match name
            .parse::<Case>()
            .and_then(|c| build_report(c, VerifyOptions::default()))
        {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        *json_out = CString::new(report.to_json()).map_or(ptr::null_mut(), CString::into_raw);
        let failed = report.failed_checks();
        if failed.is_empty() {
            PdStatus::Ok
        } else {
            set_error(format!(
                "{} shipped values failed to reproduce",
                failed.len()
            ));
            PdStatus::FixtureMismatch
        }
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on this thread, empty after a
/// success. Valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn pd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

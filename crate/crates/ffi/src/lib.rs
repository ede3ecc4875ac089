//! C interface. Surfaces are opaque handles; every call returns a
//! `PcStatus` and writes results through out-pointers. Strings handed out
//! are owned by the caller and released with `pc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use parabolic_contact::report::{cylinder_report, full_report};
use parabolic_contact::sign::SignRule;
use parabolic_contact::specfile::{parse_curve, print_surface, read_surface, ParseOptions};
use parabolic_contact::{
    classify_contact, classify_projection, classify_stratum, degenerate_cylinder, KClass, MongeSurface, Scalar,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidSurface = 4,
    Classification = 5,
    Unreachable = 6,
    Panic = 7,
}

/// Opaque surface handle.
pub struct PcSurface {
    inner: MongeSurface,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let c = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: PcStatus, msg: impl ToString) -> PcStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> PcStatus) -> PcStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(PcStatus::Panic, msg)
        }
    }
}

unsafe fn read_text<'a>(p: *const c_char) -> Result<&'a str, PcStatus> {
    if p.is_null() {
        return Err(fail(PcStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|e| fail(PcStatus::InvalidUtf8, e))
}

unsafe fn surface<'a>(s: *const PcSurface) -> Result<&'a MongeSurface, PcStatus> {
    s.as_ref()
        .map(|s| &s.inner)
        .ok_or_else(|| fail(PcStatus::NullArgument, "null surface"))
}

unsafe fn emit(out: *mut *mut c_char, value: impl ToString) -> PcStatus {
    match CString::new(value.to_string()) {
        Ok(c) => {
            *out = c.into_raw();
            PcStatus::Ok
        }
        Err(e) => fail(PcStatus::Panic, e),
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! need {
    ($p:expr) => {
        if $p.is_null() {
            return fail(PcStatus::NullArgument, concat!("null ", stringify!($p)));
        }
    };
}

/// Parses a surface file (`monge K=<n>` header and `a i j value` lines).
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_surface_parse(
    text: *const c_char,
    allow_decimal: bool,
    out: *mut *mut PcSurface,
) -> PcStatus {
    guard(|| {
        need!(out);
        *out = ptr::null_mut();
        let t = tri!(read_text(text));
        match read_surface(t, ParseOptions { allow_decimal }) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(PcSurface { inner: s }));
                PcStatus::Ok
            }
            Err(e @ parabolic_contact::specfile::SpecError::Invalid(_)) => fail(PcStatus::InvalidSurface, e),
            Err(e) => fail(PcStatus::Parse, e),
        }
    })
}

/// Builds a surface from `n` rational coefficients `a_{i[k] j[k]} = num[k]/den[k]`.
///
/// # Safety
/// The four arrays must each hold `n` elements; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pc_surface_from_coeffs(
    bound: u32,
    n: usize,
    i: *const u32,
    j: *const u32,
    num: *const i64,
    den: *const i64,
    out: *mut *mut PcSurface,
) -> PcStatus {
    guard(|| {
        need!(out);
        *out = ptr::null_mut();
        if n > 0 {
            need!(i);
            need!(j);
            need!(num);
            need!(den);
        }
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let d = *den.add(k);
            if d == 0 {
                return fail(PcStatus::Parse, format!("coefficient {k}: zero denominator"));
            }
            coeffs.push((*i.add(k), *j.add(k), Scalar::ratio(*num.add(k), d)));
        }
        match MongeSurface::from_coeffs(bound, coeffs) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(PcSurface { inner: s }));
                PcStatus::Ok
            }
            Err(e) => fail(PcStatus::InvalidSurface, e),
        }
    })
}

/// # Safety
/// `s` must come from a constructor in this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn pc_surface_free(s: *mut PcSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Degree bound `K` of the handle, or 0 for a null handle.
///
/// # Safety
/// `s` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn pc_surface_degree_bound(s: *const PcSurface) -> u32 {
    s.as_ref().map_or(0, |s| s.inner.bound())
}

/// Canonical file text of the surface.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_surface_print(s: *const PcSurface, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        need!(out);
        let s = tri!(surface(s));
        emit(out, print_surface(s))
    })
}

/// Stratum label such as `(iii)`, or `outside` / `boundary(...)`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_classify_stratum(s: *const PcSurface, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        need!(out);
        let s = tri!(surface(s));
        let st = classify_stratum(s, &SignRule::Exact);
        match (st.id, st.boundary) {
            (Some(id), _) => emit(out, id),
            (None, Some(b)) => emit(out, format!("boundary({b})")),
            (None, None) => emit(out, "outside"),
        }
    })
}

/// Singularity of the projection, e.g. `lips` or `sixteen(+)`.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_classify_projection(s: *const PcSurface, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        need!(out);
        let s = tri!(surface(s));
        match classify_projection(s, &SignRule::Exact) {
            Ok(v) => emit(out, v.class),
            Err(e) => fail(PcStatus::Classification, e),
        }
    })
}

/// Contact class with the cylinder over the directrix `g1,g2,...`.
///
/// # Safety
/// `s` must be a live handle, `curve` a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn pc_classify_contact(
    s: *const PcSurface,
    curve: *const c_char,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        need!(out);
        let s = tri!(surface(s));
        let c = match parse_curve(tri!(read_text(curve)), ParseOptions::default()) {
            Ok(c) => c,
            Err(e) => return fail(PcStatus::Parse, e),
        };
        match classify_contact(s, &c, &SignRule::Exact) {
            Ok(v) => emit(out, v.class),
            Err(e) => fail(PcStatus::Classification, e),
        }
    })
}

/// Directrices realizing `target` (e.g. `D_5`), one `g1,g2,...` per line.
///
/// # Safety
/// `s` must be a live handle, `target` a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn pc_cylinder(s: *const PcSurface, target: *const c_char, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        need!(out);
        let s = tri!(surface(s));
        let t: KClass = match tri!(read_text(target)).parse() {
            Ok(t) => t,
            Err(e) => return fail(PcStatus::Parse, e),
        };
        match degenerate_cylinder(s, &t) {
            Ok(curves) => {
                let lines: Vec<String> = curves
                    .iter()
                    .map(|c| {
                        c.coefficients()
                            .iter()
                            .map(|g| g.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                emit(out, lines.join("\n"))
            }
            Err(e) => fail(PcStatus::Unreachable, e),
        }
    })
}

/// Full `key: value` report: stratum, invariants, projection and cylinders.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_report(s: *const PcSurface, trace: bool, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        need!(out);
        let s = tri!(surface(s));
        match full_report(s, &SignRule::Exact, trace) {
            Ok(r) => emit(out, r),
            Err(e) => fail(PcStatus::Classification, e),
        }
    })
}

/// Cylinder report for a single target in `key: value` form.
///
/// # Safety
/// `s` must be a live handle, `target` a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn pc_cylinder_report(
    s: *const PcSurface,
    target: *const c_char,
    out: *mut *mut c_char,
) -> PcStatus {
    guard(|| {
        need!(out);
        let s = tri!(surface(s));
        match tri!(read_text(target)).parse::<KClass>() {
            Ok(t) => emit(out, cylinder_report(s, &[t])),
            Err(e) => fail(PcStatus::Parse, e),
        }
    })
}

/// # Safety
/// `p` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message for the last failing call on this thread; empty after success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn pc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn pc_status_name(status: PcStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PcStatus::Ok => c"ok",
        PcStatus::NullArgument => c"null argument",
        PcStatus::InvalidUtf8 => c"invalid utf-8",
        PcStatus::Parse => c"parse error",
        PcStatus::InvalidSurface => c"invalid surface",
        PcStatus::Classification => c"classification failed",
        PcStatus::Unreachable => c"target unreachable",
        PcStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

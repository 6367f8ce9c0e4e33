//! C interface to knotforge.
//!
//! Diagrams and quandles are opaque handles released with their `_free`
//! function. Every call returns a [`KfStatus`]; on failure
//! [`kf_last_error_message`] describes the error for the calling thread.
//! Structured results come back as JSON strings owned by the caller and
//! released with [`kf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use knotforge::colorings::{dihedral_quandle, fox_coloring_group, fox_count, quandle_coloring_count, Magma2};
use knotforge::diagram::{corpus, parse_diagram, LinkDiagram};
use knotforge::distributive::{one_term_homology, rack_homology};
use knotforge::khovanov::{bracket_state_sum, khovanov_homology, unreduced_jones};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InputError = 3,
    PreconditionFailed = 4,
    ComputeError = 5,
    Panic = 6,
}

/// Parsed link diagram.
pub struct KfDiagram(LinkDiagram);

/// Finite quandle, rack or magma with two operations.
pub struct KfQuandle(Magma2);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

type Failure = (KfStatus, String);

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> KfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(msg);
            KfStatus::Panic
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    (KfStatus::InputError, e.to_string())
}

fn null(what: &str) -> Failure {
    (KfStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| (KfStatus::InvalidUtf8, e.to_string()))
}

unsafe fn diagram<'a>(d: *const KfDiagram) -> Result<&'a LinkDiagram, Failure> {
    d.as_ref().map(|d| &d.0).ok_or_else(|| null("diagram"))
}

unsafe fn quandle<'a>(q: *const KfQuandle) -> Result<&'a Magma2, Failure> {
    q.as_ref().map(|q| &q.0).ok_or_else(|| null("quandle"))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_json(out: *mut *mut c_char, v: serde_json::Value) -> Result<(), Failure> {
    let s = CString::new(v.to_string()).map_err(|e| (KfStatus::ComputeError, e.to_string()))?;
    put(out, s.into_raw())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn kf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn kf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse PD notation, a `{"pd": ..., "free_loops": ...}` document or a braid word.
///
/// # Safety
/// `src` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kf_diagram_parse(src: *const c_char, out: *mut *mut KfDiagram) -> KfStatus {
    guard(|| {
        let d = parse_diagram(text(src, "source")?).map_err(input)?;
        put(out, Box::into_raw(Box::new(KfDiagram(d))))
    })
}

/// Built-in diagram by name, e.g. `trefoil_right`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kf_diagram_corpus(name: *const c_char, out: *mut *mut KfDiagram) -> KfStatus {
    guard(|| {
        let name = text(name, "name")?;
        let d = corpus::load(name).ok_or_else(|| input(format!("no corpus diagram named {name}")))?;
        put(out, Box::into_raw(Box::new(KfDiagram(d))))
    })
}

/// # Safety
/// `d` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kf_diagram_free(d: *mut KfDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn kf_diagram_summary(
    d: *const KfDiagram,
    crossings: *mut usize,
    components: *mut usize,
    writhe: *mut i64,
) -> KfStatus {
    guard(|| {
        let d = diagram(d)?;
        put(crossings, d.crossing_count())?;
        put(components, d.component_count())?;
        put(writhe, d.writhe())
    })
}

/// Number of Fox `n`-colorings.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_fox_count(d: *const KfDiagram, n: usize, out: *mut u64) -> KfStatus {
    guard(|| {
        if n == 0 {
            return Err(input("modulus must be positive"));
        }
        put(out, fox_count(diagram(d)?, n) as u64)
    })
}

/// Fox coloring group as `{"rank", "torsion"}`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_coloring_group_json(d: *const KfDiagram, out: *mut *mut c_char) -> KfStatus {
    guard(|| {
        let g = fox_coloring_group(diagram(d)?);
        put_json(out, serde_json::to_value(g).map_err(input)?)
    })
}

/// Kauffman bracket as `[[exponent, coefficient], ...]` in `A`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_bracket_json(d: *const KfDiagram, out: *mut *mut c_char) -> KfStatus {
    guard(|| {
        let p = bracket_state_sum(diagram(d)?).map_err(input)?;
        put_json(out, p.terms_json())
    })
}

/// Unreduced Jones polynomial as `[[exponent, coefficient], ...]` in `q`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_jones_json(d: *const KfDiagram, out: *mut *mut c_char) -> KfStatus {
    guard(|| {
        let p = unreduced_jones(diagram(d)?).map_err(input)?;
        put_json(out, p.terms_json())
    })
}

/// Khovanov homology table, rows `j` descending and columns `i` ascending.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_khovanov_json(d: *const KfDiagram, out: *mut *mut c_char) -> KfStatus {
    guard(|| {
        let t = khovanov_homology(diagram(d)?).map_err(input)?;
        put_json(out, t.to_json())
    })
}

/// Quandle from `{"size", "star", "starbar"}`.
///
/// # Safety
/// `src` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_quandle_parse(src: *const c_char, out: *mut *mut KfQuandle) -> KfStatus {
    guard(|| {
        let q = Magma2::from_json(text(src, "source")?).map_err(input)?;
        put(out, Box::into_raw(Box::new(KfQuandle(q))))
    })
}

/// Dihedral quandle of order `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kf_quandle_dihedral(n: usize, out: *mut *mut KfQuandle) -> KfStatus {
    guard(|| {
        if n == 0 {
            return Err(input("order must be positive"));
        }
        put(out, Box::into_raw(Box::new(KfQuandle(dihedral_quandle(n)))))
    })
}

/// # Safety
/// `q` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn kf_quandle_free(q: *mut KfQuandle) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Number of colorings of `d` by `q`; `KF_STATUS_PRECONDITION_FAILED` if `q` is not a rack.
///
/// # Safety
/// `d` and `q` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_quandle_coloring_count(d: *const KfDiagram, q: *const KfQuandle, out: *mut u64) -> KfStatus {
    guard(|| {
        let n = quandle_coloring_count(diagram(d)?, quandle(q)?, false)
            .map_err(|e| (KfStatus::PreconditionFailed, e.to_string()))?;
        put(out, n as u64)
    })
}

/// Rack homology in `degree` as `{"rank", "torsion"}`.
///
/// # Safety
/// `q` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_rack_homology_json(q: *const KfQuandle, degree: usize, out: *mut *mut c_char) -> KfStatus {
    guard(|| {
        let g = rack_homology(quandle(q)?, degree, false).map_err(|e| (KfStatus::PreconditionFailed, e.to_string()))?;
        put_json(out, serde_json::to_value(g).map_err(input)?)
    })
}

/// One-term distributive homology in `degree` as `{"rank", "torsion"}`.
///
/// # Safety
/// `q` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kf_one_term_homology_json(q: *const KfQuandle, degree: usize, out: *mut *mut c_char) -> KfStatus {
    guard(|| {
        let g = one_term_homology(quandle(q)?, degree).map_err(|e| (KfStatus::PreconditionFailed, e.to_string()))?;
        put_json(out, serde_json::to_value(g).map_err(input)?)
    })
}

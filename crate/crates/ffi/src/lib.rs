//! C ABI over `e2homlab`.
//!
//! Every fallible function returns an [`E2hlStatus`]; on failure the message is kept per thread
//! and read with [`e2hl_last_error`]. Strings handed out by the library are released with
//! [`e2hl_string_free`], rings with [`e2hl_ring_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use e2homlab::check::{check_suite, family, CSV_HEADER};
use e2homlab::invariants::h1_compare;
use e2homlab::report::{parse_sections, run_report};
use e2homlab::{Caps, Error, Lab};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum E2hlStatus {
    Ok = 0,
    Precondition = 1,
    Parse = 2,
    CapExceeded = 3,
    CheckFailed = 4,
    NullArgument = 5,
    InvalidUtf8 = 6,
    Panic = 7,
}

impl From<&Error> for E2hlStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } => E2hlStatus::Parse,
            Error::CapExceeded { .. } => E2hlStatus::CapExceeded,
            Error::Precondition(_) => E2hlStatus::Precondition,
            Error::CheckFailed(_) | Error::Overflow => E2hlStatus::CheckFailed,
        }
    }
}

/// Opaque ring context.
pub struct E2hlRing {
    lab: Lab,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(E2hlStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail((&e).into(), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> E2hlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => E2hlStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            E2hlStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(E2hlStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(E2hlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ring<'a>(p: *const E2hlRing) -> Result<&'a E2hlRing, Fail> {
    p.as_ref().ok_or_else(|| Fail(E2hlStatus::NullArgument, "ring handle is null".into()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(E2hlStatus::NullArgument, "output pointer is null".into()));
    }
    out.write(v);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no nul").into_raw()
}

fn caps(basis_cap: usize) -> Caps {
    let mut caps = Caps::default();
    if basis_cap != 0 {
        caps.basis = basis_cap;
    }
    caps
}

/// Message of the last failed call on this thread, or null. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn e2hl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn e2hl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a ring spec such as `Z/12`, `GF(9)` or `F2[t]/t^2` and builds its context.
/// `basis_cap` of 0 keeps the default cap.
///
/// # Safety
/// `spec` must be a nul terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn e2hl_ring_new(spec: *const c_char, basis_cap: usize, out: *mut *mut E2hlRing) -> E2hlStatus {
    guard(|| {
        let spec = text(spec, "spec")?;
        let lab = Lab::from_spec(spec, caps(basis_cap))?;
        put(out, Box::into_raw(Box::new(E2hlRing { lab })))
    })
}

/// # Safety
/// `r` must come from [`e2hl_ring_new`] and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn e2hl_ring_free(r: *mut E2hlRing) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Basic sizes: `|A|`, `|A^x|`, `|G_A|` and `|W_A|`.
///
/// # Safety
/// `r` must be a live handle; every output pointer must be writable.
#[no_mangle]
pub unsafe extern "C" fn e2hl_ring_sizes(
    r: *const E2hlRing,
    order: *mut usize,
    units: *mut usize,
    square_classes: *mut usize,
    w_size: *mut usize,
) -> E2hlStatus {
    guard(|| {
        let lab = &ring(r)?.lab;
        put(order, lab.ring.order())?;
        put(units, lab.units.units.len())?;
        put(square_classes, lab.units.class_count())?;
        put(w_size, lab.w.len())
    })
}

/// Invariant factors of `H_1(E2(A), Z)` into `buf` (0 marks a free summand). The number of factors
/// is written to `len` even when it exceeds `cap`, in which case `buf` is left untouched.
///
/// # Safety
/// `r` must be a live handle, `buf` valid for `cap` writes, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn e2hl_ring_h1(r: *const E2hlRing, buf: *mut u64, cap: usize, len: *mut usize) -> E2hlStatus {
    guard(|| {
        let lab = &ring(r)?.lab;
        let h1 = h1_compare(lab)?.h1.to_small();
        put(len, h1.len())?;
        if h1.len() <= cap && !h1.is_empty() {
            if buf.is_null() {
                return Err(Fail(E2hlStatus::NullArgument, "buffer is null".into()));
            }
            ptr::copy_nonoverlapping(h1.as_ptr(), buf, h1.len());
        }
        Ok(())
    })
}

/// JSON report for one ring; `checks` is a comma separated section list or null for all.
/// The string in `out` is released with [`e2hl_string_free`].
///
/// # Safety
/// `spec` and `checks` (when not null) must be nul terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn e2hl_report_json(
    spec: *const c_char,
    degree: usize,
    checks: *const c_char,
    basis_cap: usize,
    out: *mut *mut c_char,
) -> E2hlStatus {
    guard(|| {
        let spec = text(spec, "spec")?;
        let checks = if checks.is_null() { "all" } else { text(checks, "checks")? };
        let sections = parse_sections(checks).map_err(|m| Fail(E2hlStatus::Parse, m))?;
        let rep = run_report(spec, caps(basis_cap), degree, &sections, false)?;
        put(out, owned(rep.to_json()))
    })
}

/// Acceptance suite over a named family, as CSV. Returns `CheckFailed` when some criterion
/// fails; the table is written either way.
///
/// # Safety
/// `family_name` must be a nul terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn e2hl_check_family(
    family_name: *const c_char,
    jobs: usize,
    basis_cap: usize,
    out: *mut *mut c_char,
) -> E2hlStatus {
    guard(|| {
        let name = text(family_name, "family")?;
        let rings = family(name).ok_or_else(|| Fail(E2hlStatus::Parse, format!("unknown family '{name}'")))?;
        let criteria: Vec<u8> = (1..=13).collect();
        let verdicts = check_suite(&rings, caps(basis_cap), &criteria, jobs)?;
        let mut csv = format!("{CSV_HEADER}\n");
        for v in &verdicts {
            csv.push_str(&v.csv_row(false));
            csv.push('\n');
        }
        put(out, owned(csv))?;
        let failing: Vec<String> = verdicts
            .iter()
            .filter(|v| v.status == e2homlab::check::Status::Fail)
            .map(|v| format!("{}:{}", v.ring, v.criterion))
            .collect();
        if failing.is_empty() {
            Ok(())
        } else {
            Err(Fail(E2hlStatus::CheckFailed, format!("failing criteria: {}", failing.join(" "))))
        }
    })
}

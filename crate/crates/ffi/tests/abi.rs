use std::ffi::{CStr, CString};
use std::ptr;

use e2homlab_ffi::*;

fn last_error() -> String {
    let p = e2hl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn ring_sizes_of_gf9() {
    let spec = CString::new("GF(9)").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { e2hl_ring_new(spec.as_ptr(), 0, &mut r) }, E2hlStatus::Ok);
    let (mut order, mut units, mut classes, mut w) = (0, 0, 0, 0);
    let st = unsafe { e2hl_ring_sizes(r, &mut order, &mut units, &mut classes, &mut w) };
    assert_eq!(st, E2hlStatus::Ok);
    assert_eq!((order, units, classes), (9, 8, 2));
    // W is the set of units x with 1 - x also a unit
    assert_eq!(w, 7);
    unsafe { e2hl_ring_free(r) };
}

#[test]
fn h1_of_z4() {
    let spec = CString::new("Z/4").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { e2hl_ring_new(spec.as_ptr(), 0, &mut r) }, E2hlStatus::Ok);
    let mut len = 0;
    assert_eq!(unsafe { e2hl_ring_h1(r, ptr::null_mut(), 0, &mut len) }, E2hlStatus::Ok);
    let mut buf = vec![0u64; len];
    assert_eq!(unsafe { e2hl_ring_h1(r, buf.as_mut_ptr(), len, &mut len) }, E2hlStatus::Ok);
    assert_eq!(buf, vec![4]);
    unsafe { e2hl_ring_free(r) };
}

#[test]
fn parse_error_sets_message() {
    let spec = CString::new("GF(6)").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { e2hl_ring_new(spec.as_ptr(), 0, &mut r) }, E2hlStatus::Parse);
    assert!(r.is_null());
    assert!(last_error().contains("prime power"));
}

#[test]
fn null_arguments_are_rejected() {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { e2hl_ring_new(ptr::null(), 0, &mut r) }, E2hlStatus::NullArgument);
    let mut n = 0;
    let st = unsafe { e2hl_ring_sizes(ptr::null(), &mut n, &mut n, &mut n, &mut n) };
    assert_eq!(st, E2hlStatus::NullArgument);
    unsafe {
        e2hl_ring_free(ptr::null_mut());
        e2hl_string_free(ptr::null_mut());
    }
}

#[test]
fn report_json_round_trip() {
    let spec = CString::new("GF(5)").unwrap();
    let checks = CString::new("ring,h1").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { e2hl_report_json(spec.as_ptr(), 2, checks.as_ptr(), 0, &mut out) };
    assert_eq!(st, E2hlStatus::Ok);
    let text = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    unsafe { e2hl_string_free(out) };
    assert!(text.contains("\"ring_label\""));
    assert!(text.contains("\"h1\""));
    assert!(!text.contains("\"bloch\""));
}

#[test]
fn cap_exceeded_status() {
    let spec = CString::new("GF(7)").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { e2hl_report_json(spec.as_ptr(), 4, ptr::null(), 500, &mut out) };
    assert_eq!(st, E2hlStatus::CapExceeded, "{}", last_error());
}

#[test]
fn check_family_csv() {
    let name = CString::new("local-char2").unwrap();
    let mut out = ptr::null_mut();
    let st = unsafe { e2hl_check_family(name.as_ptr(), 1, 0, &mut out) };
    assert_eq!(st, E2hlStatus::Ok);
    let csv = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_owned();
    unsafe { e2hl_string_free(out) };
    assert!(csv.starts_with("ring,criterion,expected,got,verdict,millis\n"));
    assert_eq!(csv.lines().count(), 1 + 3 * 13);
}

#[test]
fn header_is_current() {
    let header = include_str!("../include/e2homlab.h");
    for sym in [
        "e2hl_ring_new",
        "e2hl_ring_free",
        "e2hl_ring_sizes",
        "e2hl_ring_h1",
        "e2hl_report_json",
        "e2hl_check_family",
        "e2hl_string_free",
        "e2hl_last_error",
        "E2HL_STATUS_CAP_EXCEEDED = 3",
    ] {
        assert!(header.contains(sym), "{sym} missing from header");
    }
}

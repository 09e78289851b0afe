use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cyclohecke_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    ch_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(ch_last_error_message()).to_string_lossy().into_owned()
}

unsafe fn hecke(m: usize, n: usize, q: &str, v: &[&str]) -> Result<*mut ChHecke, ChStatus> {
    let q = c(q);
    let vs: Vec<CString> = v.iter().map(|x| c(x)).collect();
    let ptrs: Vec<*const c_char> = vs.iter().map(|x| x.as_ptr()).collect();
    let mut h = ptr::null_mut();
    match ch_hecke_new(m, n, q.as_ptr(), ptrs.as_ptr(), 5000, &mut h) {
        ChStatus::Ok => Ok(h),
        s => Err(s),
    }
}

#[test]
fn hecke_handle_roundtrip() {
    unsafe {
        let h = hecke(2, 2, "-1", &["1", "-1"]).unwrap();
        assert_eq!(ch_hecke_dim(h), 8);
        let mut ss = true;
        assert_eq!(ch_hecke_is_semisimple(h, &mut ss), ChStatus::Ok);
        assert!(!ss);
        let mut labels = ptr::null_mut();
        assert_eq!(ch_simple_labels_json(h, &mut labels), ChStatus::Ok);
        let labels: Vec<String> = serde_json::from_str(&take_string(labels)).unwrap();
        assert!(!labels.is_empty());
        ch_hecke_free(h);
    }
}

#[test]
fn gram_rank_at_minus_one() {
    unsafe {
        let h = hecke(1, 2, "-1", &["1"]).unwrap();
        let mut rank = 99;
        let lambda = c("[2]");
        assert_eq!(ch_gram_rank(h, lambda.as_ptr(), &mut rank), ChStatus::Ok);
        assert_eq!(rank, 0);
        let lambda = c("[1,1]");
        assert_eq!(ch_gram_rank(h, lambda.as_ptr(), &mut rank), ChStatus::Ok);
        assert_eq!(rank, 1);
        ch_hecke_free(h);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        assert_eq!(hecke(1, 2, "0", &["1"]).unwrap_err(), ChStatus::InvalidArgument);
        assert!(last_error().contains("nonzero"));
        assert_eq!(hecke(3, 7, "2", &["1", "3", "5"]).unwrap_err(), ChStatus::ResourceCap);
        assert_eq!(ch_hecke_is_semisimple(ptr::null(), ptr::null_mut()), ChStatus::NullPointer);
        assert_eq!(ch_hecke_dim(ptr::null()), 0);
        let lambda = c("[2");
        let h = hecke(1, 2, "2", &["1"]).unwrap();
        let mut rank = 0;
        assert_eq!(ch_gram_rank(h, lambda.as_ptr(), &mut rank), ChStatus::InvalidArgument);
        ch_hecke_free(h);
        ch_hecke_free(ptr::null_mut());
        ch_string_free(ptr::null_mut());
    }
}

#[test]
fn kleshchev_and_counts() {
    unsafe {
        let gamma = [0i64];
        let mut out = false;
        let lambda = c("[2,1]");
        assert_eq!(ch_is_kleshchev(2, gamma.as_ptr(), 1, lambda.as_ptr(), &mut out), ChStatus::Ok);
        assert!(out);
        let lambda = c("[2,2]");
        assert_eq!(ch_is_kleshchev(2, gamma.as_ptr(), 1, lambda.as_ptr(), &mut out), ChStatus::Ok);
        assert!(!out);
        assert_eq!(ch_is_kleshchev(1, gamma.as_ptr(), 1, lambda.as_ptr(), &mut out), ChStatus::InvalidArgument);

        let mut count = 0u64;
        assert_eq!(ch_count_aperiodic(3, 2, &mut count), ChStatus::Ok);
        // lengths {3}: 2, {2,1}: 4, {1,1,1}: 2
        assert_eq!(count, 8);

        let mut json = ptr::null_mut();
        assert_eq!(ch_llt_decomposition_json(2, 2, &mut json), ChStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert!(v.is_object());
    }
}

#[test]
fn header_declares_every_symbol() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cyclohecke.h")).unwrap();
    for sym in [
        "ch_hecke_new",
        "ch_hecke_free",
        "ch_hecke_dim",
        "ch_hecke_is_semisimple",
        "ch_gram_rank",
        "ch_simple_labels_json",
        "ch_is_kleshchev",
        "ch_llt_decomposition_json",
        "ch_count_aperiodic",
        "ch_last_error_message",
        "ch_string_free",
        "CH_STATUS_RESOURCE_CAP",
    ] {
        assert!(header.contains(sym), "{sym}");
    }
}

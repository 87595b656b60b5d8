//! Own test binary: it sets a process-wide environment variable.

use hopfgs_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

#[test]
fn budget_status() {
    std::env::set_var("HOPFGS_BUDGET", "50");
    let args: Vec<CString> = ["cohomology", "group-gs", "--group", "S3"]
        .iter()
        .map(|a| CString::new(*a).unwrap())
        .collect();
    let argv: Vec<*const c_char> = args.iter().map(|a| a.as_ptr()).collect();
    let e = hopfgs_engine_new();
    let mut out = ptr::null_mut();
    let s = unsafe { hopfgs_run(e, argv.as_ptr(), argv.len(), &mut out) };
    assert_eq!(s, HopfgsStatus::BudgetExceeded);
    assert!(out.is_null());
    let msg = unsafe { CStr::from_ptr(hopfgs_last_error()) }.to_str().unwrap();
    assert!(msg.contains("budget exceeded"), "{}", msg);
    unsafe { hopfgs_engine_free(e) };
}

//! C interface to `hopfgs`.
//!
//! Reports cross the boundary as JSON strings owned by the library; free
//! them with [`hopfgs_string_free`]. Every call that returns a status code
//! also records a message for [`hopfgs_last_error`] on failure, per thread.

use hopfgs::cli::{self, Outcome};
use hopfgs::measured::MeasuredAlgebra;
use hopfgs::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfgsStatus {
    Ok = 0,
    /// The computation ran and produced a report, but a check failed.
    CheckFailed = 1,
    NullArgument = 2,
    InvalidUtf8 = 3,
    /// Bad arguments, malformed input or an unsupported parameter.
    InvalidInput = 4,
    BudgetExceeded = 5,
    /// Any other computation error.
    Computation = 6,
    Panic = 7,
}

/// Run options shared by every call on one engine.
pub struct HopfgsEngine {
    seed: u64,
    format_table: bool,
}

/// A finite-dimensional measured algebra parsed from JSON.
pub struct HopfgsMeasured {
    inner: MeasuredAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn fail(status: HopfgsStatus, msg: &str) -> HopfgsStatus {
    set_error(msg);
    status
}

fn status_of(e: &Error) -> HopfgsStatus {
    match e {
        Error::Parse(_) | Error::Invalid(_) | Error::DegreeOverflow { .. } => HopfgsStatus::InvalidInput,
        Error::Budget { .. } => HopfgsStatus::BudgetExceeded,
        _ => HopfgsStatus::Computation,
    }
}

/// Runs `f`, turning panics into [`HopfgsStatus::Panic`].
fn guarded(f: impl FnOnce() -> HopfgsStatus) -> HopfgsStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            fail(HopfgsStatus::Panic, &format!("panic: {}", msg))
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, HopfgsStatus> {
    if s.is_null() {
        return Err(fail(HopfgsStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(HopfgsStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn write_out(out: *mut *mut c_char, s: String) -> HopfgsStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            HopfgsStatus::Ok
        }
        Err(_) => fail(HopfgsStatus::Computation, "output contains a nul byte"),
    }
}

/// Creates an engine with seed 1 and JSON output. Free with
/// [`hopfgs_engine_free`].
#[no_mangle]
pub extern "C" fn hopfgs_engine_new() -> *mut HopfgsEngine {
    Box::into_raw(Box::new(HopfgsEngine {
        seed: 1,
        format_table: false,
    }))
}

/// # Safety
/// `engine` must come from [`hopfgs_engine_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_engine_free(engine: *mut HopfgsEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Seed for randomized checks, used unless the arguments pass `--seed`.
///
/// # Safety
/// `engine` must be a live engine or null.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_engine_set_seed(engine: *mut HopfgsEngine, seed: u64) -> HopfgsStatus {
    match engine.as_mut() {
        Some(e) => {
            e.seed = seed;
            HopfgsStatus::Ok
        }
        None => fail(HopfgsStatus::NullArgument, "null engine"),
    }
}

/// Selects the flat table rendering instead of JSON (nonzero = table).
///
/// # Safety
/// `engine` must be a live engine or null.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_engine_set_table_format(engine: *mut HopfgsEngine, table: i32) -> HopfgsStatus {
    match engine.as_mut() {
        Some(e) => {
            e.format_table = table != 0;
            HopfgsStatus::Ok
        }
        None => fail(HopfgsStatus::NullArgument, "null engine"),
    }
}

fn outcome_status(o: &Outcome) -> HopfgsStatus {
    match o.code {
        cli::EXIT_PASS => HopfgsStatus::Ok,
        cli::EXIT_FAIL => HopfgsStatus::CheckFailed,
        _ => {
            let status = o.error.as_ref().map_or(HopfgsStatus::InvalidInput, status_of);
            let msg = o.stderr.trim();
            fail(status, msg.strip_prefix("error: ").unwrap_or(msg))
        }
    }
}

/// Runs one command, given as the argument list of the command-line tool
/// without the program name, e.g. `{"cohomology", "psl2", "--q", "2"}`.
///
/// On [`HopfgsStatus::Ok`] and [`HopfgsStatus::CheckFailed`], `*out`
/// receives the report. Otherwise `*out` is set to null.
///
/// # Safety
/// `engine` must be a live engine, `argv` must point to `argc` valid C
/// strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_run(
    engine: *const HopfgsEngine,
    argv: *const *const c_char,
    argc: usize,
    out: *mut *mut c_char,
) -> HopfgsStatus {
    guarded(|| {
        if out.is_null() {
            return fail(HopfgsStatus::NullArgument, "null output pointer");
        }
        *out = ptr::null_mut();
        let Some(engine) = engine.as_ref() else {
            return fail(HopfgsStatus::NullArgument, "null engine");
        };
        if argv.is_null() && argc > 0 {
            return fail(HopfgsStatus::NullArgument, "null argv");
        }
        let mut args = vec!["hopfgs".to_string()];
        for i in 0..argc {
            match read_str(*argv.add(i)) {
                Ok(s) => args.push(s.to_string()),
                Err(status) => return status,
            }
        }
        let given =
            |args: &[String], flag: &str| args.iter().any(|a| a == flag || a.starts_with(&format!("{}=", flag)));
        if !given(&args, "--seed") {
            args.extend(["--seed".to_string(), engine.seed.to_string()]);
        }
        if engine.format_table && !given(&args, "--format") {
            args.extend(["--format".to_string(), "table".to_string()]);
        }
        let o = cli::run(&args);
        let status = outcome_status(&o);
        match status {
            HopfgsStatus::Ok | HopfgsStatus::CheckFailed => match write_out(out, o.stdout) {
                HopfgsStatus::Ok => status,
                other => other,
            },
            other => other,
        }
    })
}

/// Parses a measured algebra from the JSON input format
/// (`{"dim", "mult", "unit", "phi"}`).
///
/// # Safety
/// `json` and `name` must be valid C strings and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_measured_from_json(
    name: *const c_char,
    json: *const c_char,
    out: *mut *mut HopfgsMeasured,
) -> HopfgsStatus {
    guarded(|| {
        if out.is_null() {
            return fail(HopfgsStatus::NullArgument, "null output pointer");
        }
        *out = ptr::null_mut();
        let (name, json) = match (read_str(name), read_str(json)) {
            (Ok(n), Ok(j)) => (n, j),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        match MeasuredAlgebra::from_json(name, json) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(HopfgsMeasured { inner }));
                HopfgsStatus::Ok
            }
            Err(e) => fail(status_of(&e), &e.to_string()),
        }
    })
}

/// # Safety
/// `algebra` must come from [`hopfgs_measured_from_json`] and not be used
/// afterwards.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_measured_free(algebra: *mut HopfgsMeasured) {
    if !algebra.is_null() {
        drop(Box::from_raw(algebra));
    }
}

/// Dimension of the algebra, 0 for null.
///
/// # Safety
/// `algebra` must be live or null.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_measured_dim(algebra: *const HopfgsMeasured) -> usize {
    algebra.as_ref().map_or(0, |a| a.inner.dim())
}

/// Normalizability report as JSON. Returns [`HopfgsStatus::CheckFailed`]
/// (with the report) when the snake identities fail.
///
/// # Safety
/// `algebra` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_measured_normalizability(
    algebra: *const HopfgsMeasured,
    out: *mut *mut c_char,
) -> HopfgsStatus {
    guarded(|| {
        if out.is_null() {
            return fail(HopfgsStatus::NullArgument, "null output pointer");
        }
        *out = ptr::null_mut();
        let Some(a) = algebra.as_ref() else {
            return fail(HopfgsStatus::NullArgument, "null algebra");
        };
        let report = a.inner.normalizability();
        let json = match serde_json::to_string_pretty(&report) {
            Ok(s) => s,
            Err(e) => return fail(HopfgsStatus::Computation, &e.to_string()),
        };
        match write_out(out, json) {
            HopfgsStatus::Ok if !report.snake_identities => HopfgsStatus::CheckFailed,
            s => s,
        }
    })
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn hopfgs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hopfgs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn hopfgs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

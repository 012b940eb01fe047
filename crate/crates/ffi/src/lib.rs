//! C ABI over the `berezin` crate.
//!
//! Spaces and operators cross the boundary as opaque handles created by
//! `bz_*_new`/`bz_*_from_json` and released by the matching `bz_*_free`.
//! Every function returns a [`BzStatus`]; on failure the message is kept per
//! thread and read with [`bz_last_error_message`]. Complex numbers are passed
//! as interleaved `re, im` pairs of doubles, matrices in row-major order.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use berezin::calculus::{min_modulus, op_norm, spectral_radius};
use berezin::config::RunConfig;
use berezin::report::{to_json, ReportMeta};
use berezin::suite::{exit_code, run};
use berezin::{berezin_number, berezin_symbol, Complex64, Error, KernelSpace, Operator, SampledSpace, SpaceSpec};

/// Result code of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    IndexOutOfRange = 4,
    NumericFailure = 5,
    ConfigError = 6,
    Io = 7,
    Panic = 8,
}

/// A sampled kernel space.
pub struct BzSpace(SampledSpace);

/// A square complex matrix.
pub struct BzOperator(Operator);

struct Failure {
    status: BzStatus,
    message: String,
}

impl Failure {
    fn new(status: BzStatus, message: impl Into<String>) -> Self {
        Self { status, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::DimensionMismatch(_) => BzStatus::DimensionMismatch,
            Error::IndexOutOfRange { .. } => BzStatus::IndexOutOfRange,
            Error::NumericFailure(_) | Error::NotPositive { .. } => BzStatus::NumericFailure,
            Error::Config(_) => BzStatus::ConfigError,
            Error::Io(_) | Error::Csv(_) => BzStatus::Io,
            _ => BzStatus::InvalidArgument,
        };
        Self::new(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BzStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BzStatus::Ok,
        Ok(Err(e)) => {
            set_error(e.message);
            e.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            BzStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(BzStatus::NullPointer, format!("{name} is null")))
}

unsafe fn as_mut<'a, T>(p: *mut T, name: &str) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| Failure::new(BzStatus::NullPointer, format!("{name} is null")))
}

unsafe fn as_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(BzStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(BzStatus::InvalidArgument, format!("{name} is not valid UTF-8")))
}

/// Message of the last failed call on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a space from its JSON description.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bz_space_from_json(json: *const c_char, out: *mut *mut BzSpace) -> BzStatus {
    guard(|| {
        let out = as_mut(out, "out")?;
        *out = ptr::null_mut();
        let text = as_str(json, "json")?;
        let spec: SpaceSpec = serde_json::from_str(text)
            .map_err(|e| Failure::new(BzStatus::InvalidArgument, format!("space spec: {e}")))?;
        *out = Box::into_raw(Box::new(BzSpace(spec.build()?)));
        Ok(())
    })
}

/// Releases a space. Null is ignored.
///
/// # Safety
/// `space` must come from [`bz_space_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bz_space_free(space: *mut BzSpace) {
    if !space.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(space))));
    }
}

/// Hilbert-space dimension.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_space_dim(space: *const BzSpace, out: *mut usize) -> BzStatus {
    guard(|| {
        *as_mut(out, "out")? = as_ref(space, "space")?.0.dim();
        Ok(())
    })
}

/// Number of grid points.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_space_len(space: *const BzSpace, out: *mut usize) -> BzStatus {
    guard(|| {
        *as_mut(out, "out")? = as_ref(space, "space")?.0.len();
        Ok(())
    })
}

/// Unit kernel at grid point `index`, written as `2·dim` doubles.
///
/// # Safety
/// `out` must hold `out_len` doubles.
#[no_mangle]
pub unsafe extern "C" fn bz_space_kernel(
    space: *const BzSpace,
    index: usize,
    out: *mut f64,
    out_len: usize,
) -> BzStatus {
    guard(|| {
        let space = &as_ref(space, "space")?.0;
        if out.is_null() {
            return Err(Failure::new(BzStatus::NullPointer, "out is null"));
        }
        if out_len != 2 * space.dim() {
            return Err(Failure::new(
                BzStatus::DimensionMismatch,
                format!("out_len is {out_len}, expected {}", 2 * space.dim()),
            ));
        }
        let k = space.normalized_kernel(index)?;
        let out = std::slice::from_raw_parts_mut(out, out_len);
        for (j, z) in k.iter().enumerate() {
            out[2 * j] = z.re;
            out[2 * j + 1] = z.im;
        }
        Ok(())
    })
}

/// Operator from `dim·dim` row-major complex entries (`2·dim·dim` doubles).
///
/// # Safety
/// `entries` must hold `len` doubles and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_operator_new(
    dim: usize,
    entries: *const f64,
    len: usize,
    out: *mut *mut BzOperator,
) -> BzStatus {
    guard(|| {
        let out = as_mut(out, "out")?;
        *out = ptr::null_mut();
        if dim == 0 {
            return Err(Failure::new(BzStatus::InvalidArgument, "dim must be at least 1"));
        }
        if entries.is_null() {
            return Err(Failure::new(BzStatus::NullPointer, "entries is null"));
        }
        if len != 2 * dim * dim {
            return Err(Failure::new(BzStatus::DimensionMismatch, format!("len is {len}, expected {}", 2 * dim * dim)));
        }
        let e = std::slice::from_raw_parts(entries, len);
        let rows: Vec<Vec<Complex64>> =
            e.chunks(2 * dim).map(|row| row.chunks(2).map(|z| Complex64::new(z[0], z[1])).collect()).collect();
        *out = Box::into_raw(Box::new(BzOperator(Operator::from_rows(&rows)?)));
        Ok(())
    })
}

/// Releases an operator. Null is ignored.
///
/// # Safety
/// `op` must come from [`bz_operator_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bz_operator_free(op: *mut BzOperator) {
    if !op.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(op))));
    }
}

/// Grid Berezin number of `op` on `space`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_berezin_number(op: *const BzOperator, space: *const BzSpace, out: *mut f64) -> BzStatus {
    guard(|| {
        let out = as_mut(out, "out")?;
        *out = berezin_number(&as_ref(op, "op")?.0, &as_ref(space, "space")?.0)?;
        Ok(())
    })
}

/// Berezin symbol of `op` at grid point `index`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_berezin_symbol(
    op: *const BzOperator,
    space: *const BzSpace,
    index: usize,
    re: *mut f64,
    im: *mut f64,
) -> BzStatus {
    guard(|| {
        let (re, im) = (as_mut(re, "re")?, as_mut(im, "im")?);
        let z = berezin_symbol(&as_ref(op, "op")?.0, &as_ref(space, "space")?.0, index)?;
        (*re, *im) = (z.re, z.im);
        Ok(())
    })
}

unsafe fn scalar(op: *const BzOperator, out: *mut f64, f: fn(&Operator) -> berezin::Result<f64>) -> BzStatus {
    guard(|| {
        let out = as_mut(out, "out")?;
        *out = f(&as_ref(op, "op")?.0)?;
        Ok(())
    })
}

/// Spectral radius.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_spectral_radius(op: *const BzOperator, out: *mut f64) -> BzStatus {
    scalar(op, out, spectral_radius)
}

/// Operator norm.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_op_norm(op: *const BzOperator, out: *mut f64) -> BzStatus {
    scalar(op, out, op_norm)
}

/// Minimum modulus (smallest singular value).
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_min_modulus(op: *const BzOperator, out: *mut f64) -> BzStatus {
    scalar(op, out, min_modulus)
}

/// Runs a configuration given as JSON and returns the report JSON in
/// `report` (release with [`bz_string_free`]) and the run's exit code
/// (0 clean, 1 violations) in `exit`. The config's output directory is
/// ignored.
///
/// # Safety
/// `config_json` must be NUL-terminated; `report` and `exit` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bz_run_config_json(
    config_json: *const c_char,
    report: *mut *mut c_char,
    exit: *mut i32,
) -> BzStatus {
    guard(|| {
        let report = as_mut(report, "report")?;
        *report = ptr::null_mut();
        let exit = as_mut(exit, "exit")?;
        let config = RunConfig::from_json(as_str(config_json, "config_json")?)?;
        config.resolve()?;
        let reports = run(&config)?;
        let json = to_json(&ReportMeta::new(&config, &reports), &reports)?;
        *exit = exit_code(&reports);
        *report = CString::new(json).map_err(|_| Failure::new(BzStatus::Panic, "report contains NUL"))?.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn bz_string_free(s: *mut c_char) {
    if !s.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(CString::from_raw(s))));
    }
}

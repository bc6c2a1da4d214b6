//! C ABI over `cubelab`.
//!
//! Matrices and spectra cross the boundary as opaque handles that the caller
//! releases with the matching `*_free`. Every fallible call returns a
//! [`CubelabStatus`]; the message of the most recent failure on the calling
//! thread is available from [`cubelab_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cubelab::cubegraphs::{self, Family, GraphMatrix};
use cubelab::predicates::{caf, rational_to_f64};
use cubelab::spectra::{self, Spectrum};
use cubelab::verify::{self, Claim, VerifyOptions};
use cubelab::{Error, OrderingScheme};

/// Result codes shared by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubelabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    OutOfRange = 4,
    BufferTooSmall = 5,
    /// Eigensolver or structural failure.
    Numeric = 6,
    /// Some verification entry failed; the report is still returned.
    VerifyFailed = 7,
    Panic = 8,
    Internal = 9,
}

/// Opaque dense matrix.
pub struct CubelabMatrix {
    inner: GraphMatrix,
}

/// Opaque spectrum with clustered multiplicities.
pub struct CubelabSpectrum {
    inner: Spectrum,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> CubelabStatus {
    match err {
        Error::InvalidArgument(_)
        | Error::UnsupportedOrdering { .. }
        | Error::UnknownClaim(_)
        | Error::Parse(_)
        | Error::InvalidAnum(_) => CubelabStatus::InvalidArgument,
        Error::DimensionMismatch { .. } => CubelabStatus::OutOfRange,
        Error::Structure(_) | Error::AmbiguousWeight(_) | Error::Eigen(_) => CubelabStatus::Numeric,
        _ => CubelabStatus::Internal,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (CubelabStatus, String)>) -> CubelabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CubelabStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside cubelab");
            CubelabStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (CubelabStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (CubelabStatus, String)> {
    if s.is_null() {
        return Err((CubelabStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (CubelabStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn null(what: &str) -> (CubelabStatus, String) {
    (CubelabStatus::NullPointer, format!("{what} is null"))
}

/// Message of the last failure on this thread, or null. Owned by the
/// library and valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cubelab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cubelab_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a family's matrix (`ncube`, `hamming`, `tricube`, `regtricube`,
/// `powcube`, `powtri`, `powhamming`). `ordering` may be null for binary.
///
/// # Safety
/// `family` and a non-null `ordering` must be NUL-terminated strings; `out`
/// must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cubelab_matrix_build(
    family: *const c_char,
    n: u32,
    ordering: *const c_char,
    out: *mut *mut CubelabMatrix,
) -> CubelabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let family: Family = read_str(family, "family")?.parse().map_err(lib_err)?;
        let ordering: OrderingScheme = if ordering.is_null() {
            OrderingScheme::Binary
        } else {
            read_str(ordering, "ordering")?.parse().map_err(lib_err)?
        };
        let m = cubegraphs::build(family, n as usize, &ordering).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CubelabMatrix { inner: m }));
        Ok(())
    })
}

/// Side length of the matrix; 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cubelab_matrix_dim(m: *const CubelabMatrix) -> usize {
    m.as_ref().map_or(0, |m| m.inner.dim())
}

/// Copies the entries row-major into `buf`, which must hold `dim * dim`
/// values; `len` is its capacity.
///
/// # Safety
/// `m` must be a live handle and `buf` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn cubelab_matrix_entries(m: *const CubelabMatrix, buf: *mut f64, len: usize) -> CubelabStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let d = m.inner.dim();
        if len < d * d {
            return Err((CubelabStatus::BufferTooSmall, format!("need {} values, got {len}", d * d)));
        }
        let out = std::slice::from_raw_parts_mut(buf, d * d);
        for (i, row) in m.inner.entries.row_iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                out[i * d + j] = x;
            }
        }
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle and `value` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cubelab_matrix_get(
    m: *const CubelabMatrix,
    row: usize,
    col: usize,
    value: *mut f64,
) -> CubelabStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        if value.is_null() {
            return Err(null("value"));
        }
        let d = m.inner.dim();
        if row >= d || col >= d {
            return Err((CubelabStatus::OutOfRange, format!("({row}, {col}) outside {d}x{d}")));
        }
        *value = m.inner.entries[(row, col)];
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a handle from [`cubelab_matrix_build`], freed once.
#[no_mangle]
pub unsafe extern "C" fn cubelab_matrix_free(m: *mut CubelabMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Eigenvalues of a matrix, clustered at `tol` (the default when `tol <= 0`).
///
/// # Safety
/// `m` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn cubelab_spectrum_compute(
    m: *const CubelabMatrix,
    tol: f64,
    out: *mut *mut CubelabSpectrum,
) -> CubelabStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let m = m.as_ref().ok_or_else(|| null("matrix"))?;
        let tol = if tol > 0.0 { tol } else { spectra::DEFAULT_CLUSTER_TOL };
        let s = spectra::eigenvalues(&m.inner, tol).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CubelabSpectrum { inner: s }));
        Ok(())
    })
}

/// Number of eigenvalues; 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cubelab_spectrum_len(s: *const CubelabSpectrum) -> usize {
    s.as_ref().map_or(0, |s| s.inner.len())
}

/// Ascending eigenvalues into `buf` (capacity `len`).
///
/// # Safety
/// `s` must be a live handle and `buf` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn cubelab_spectrum_values(s: *const CubelabSpectrum, buf: *mut f64, len: usize) -> CubelabStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("spectrum"))?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let v = &s.inner.values;
        if len < v.len() {
            return Err((CubelabStatus::BufferTooSmall, format!("need {} values, got {len}", v.len())));
        }
        std::slice::from_raw_parts_mut(buf, v.len()).copy_from_slice(v);
        Ok(())
    })
}

/// Number of distinct eigenvalue clusters; 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cubelab_spectrum_cluster_count(s: *const CubelabSpectrum) -> usize {
    s.as_ref().map_or(0, |s| s.inner.clusters.len())
}

/// Representative value and multiplicity of cluster `index`.
///
/// # Safety
/// `s` must be a live handle; `value` and `multiplicity` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cubelab_spectrum_cluster(
    s: *const CubelabSpectrum,
    index: usize,
    value: *mut f64,
    multiplicity: *mut usize,
) -> CubelabStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("spectrum"))?;
        if value.is_null() || multiplicity.is_null() {
            return Err(null("output"));
        }
        let c = s.inner.clusters.get(index).ok_or_else(|| {
            (CubelabStatus::OutOfRange, format!("cluster {index} of {}", s.inner.clusters.len()))
        })?;
        *value = c.value;
        *multiplicity = c.multiplicity;
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from [`cubelab_spectrum_compute`], freed once.
#[no_mangle]
pub unsafe extern "C" fn cubelab_spectrum_free(s: *mut CubelabSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Activation value `caf(n, r, p)` as a double.
///
/// # Safety
/// `value` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cubelab_caf(n: u32, r: u64, p: u64, value: *mut f64) -> CubelabStatus {
    guard(|| {
        if value.is_null() {
            return Err(null("value"));
        }
        let q = caf(n as usize, r, p).map_err(lib_err)?;
        *value = rational_to_f64(&q);
        Ok(())
    })
}

/// Runs the comma-separated `claims` (or `all`) over `lo..=hi`, or each
/// claim's default range when `lo > hi`, offline. The JSON report is written
/// to `out` even when entries fail (status `VERIFY_FAILED`); release it with
/// [`cubelab_string_free`].
///
/// # Safety
/// `claims` must be a NUL-terminated string and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn cubelab_verify_json(
    claims: *const c_char,
    lo: u32,
    hi: u32,
    out: *mut *mut c_char,
) -> CubelabStatus {
    let mut failed = false;
    let status = guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let claims = Claim::parse_list(read_str(claims, "claims")?).map_err(lib_err)?;
        let range = (lo <= hi).then_some(lo as usize..=hi as usize);
        let rep = verify::run(&claims, range, &VerifyOptions::default()).map_err(lib_err)?;
        let json = rep.to_json().map_err(lib_err)?;
        let c = CString::new(json).map_err(|_| (CubelabStatus::Internal, "NUL in report".to_string()))?;
        *out = c.into_raw();
        failed = rep.has_failures();
        Ok(())
    });
    if status == CubelabStatus::Ok && failed {
        set_error("verification reported failures");
        return CubelabStatus::VerifyFailed;
    }
    status
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn cubelab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

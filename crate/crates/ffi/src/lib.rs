//! C ABI for `springer-points`.
//!
//! Every object crosses the boundary as an opaque handle created by a
//! `*_parse` or computing function and released with the matching `*_free`.
//! Functions return an [`SpStatus`]; on failure a description is available
//! from [`sp_last_error`] on the same thread. Strings returned to the caller
//! are owned by the caller and released with [`sp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use springer_points::error::Error;
use springer_points::rewrite::{normalize_deletion, DeletionSite};
use springer_points::schubert_points::{schubert_factorization, schubert_point, SchubertPoints};
use springer_points::shapes::{Partition, RowStrictTableau};
use springer_points::springer::springer_poincare;
use springer_points::verify::{self, Claim, VerificationReport};
use springer_points::weyl::{union_poincare, Permutation, PoincarePolynomial};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpStatus {
    Ok = 0,
    NullPointer = 1,
    ParseError = 2,
    InvalidArgument = 3,
    Unsupported = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpClaim {
    Theorem1 = 0,
    Closure = 1,
    Deletion = 2,
    Maximality = 3,
}

pub struct SpPartition(Partition);
pub struct SpTableau(RowStrictTableau);
pub struct SpPermutation(Permutation);
pub struct SpPolynomial(PoincarePolynomial);
pub struct SpReport(VerificationReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = message);
}

fn status_of(error: &Error) -> SpStatus {
    match error {
        Error::Parse(_) | Error::InvalidPartition(_) | Error::InvalidTableau(_) | Error::InvalidPermutation(_) => {
            SpStatus::ParseError
        }
        Error::UnsupportedShape { .. } | Error::NotStandard(_) => SpStatus::Unsupported,
        Error::Trace { .. } => SpStatus::Internal,
        _ => SpStatus::InvalidArgument,
    }
}

fn fail(error: Error) -> SpStatus {
    let status = status_of(&error);
    set_error(error.to_string());
    status
}

/// Runs `body`, turning panics into [`SpStatus::Internal`].
fn guard(body: impl FnOnce() -> Result<(), SpStatus>) -> SpStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SpStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic".into());
            SpStatus::Internal
        }
    }
}

fn null(name: &str) -> SpStatus {
    set_error(format!("{name} is null"));
    SpStatus::NullPointer
}

unsafe fn borrow<'a, T>(p: *const T, name: &str) -> Result<&'a T, SpStatus> {
    // SAFETY: the caller passes a live handle or null.
    unsafe { p.as_ref() }.ok_or_else(|| null(name))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, SpStatus> {
    if p.is_null() {
        return Err(null(name));
    }
    // SAFETY: non-null and NUL-terminated per the caller's contract.
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|_| {
        set_error(format!("{name} is not UTF-8"));
        SpStatus::ParseError
    })
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), SpStatus> {
    if out.is_null() {
        return Err(null("out"));
    }
    // SAFETY: `out` is non-null and writable per the caller's contract.
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        // SAFETY: `p` came from `Box::into_raw` in this crate.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Message for the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` is null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sp_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: `s` came from `CString::into_raw` in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses `"2,2,1"`, `"(2,2,1)"` or `"2 2 1"`.
///
/// # Safety
/// `text` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sp_partition_parse(text: *const c_char, out: *mut *mut SpPartition) -> SpStatus {
    guard(|| {
        let text = unsafe { read_str(text, "text") }?;
        let shape: Partition = text.parse().map_err(fail)?;
        unsafe { write_out(out, SpPartition(shape)) }
    })
}

/// Size `n` of the partition, or 0 for a null handle.
///
/// # Safety
/// `shape` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_partition_size(shape: *const SpPartition) -> usize {
    unsafe { shape.as_ref() }.map_or(0, |s| s.0.size())
}

/// # Safety
/// `shape` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sp_partition_free(shape: *mut SpPartition) {
    unsafe { free(shape) }
}

/// Parses a tableau such as `"1,2/3,4/5"` and checks it has shape `shape`.
///
/// # Safety
/// `text` is a NUL-terminated string, `shape` a live handle, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sp_tableau_parse(
    text: *const c_char,
    shape: *const SpPartition,
    out: *mut *mut SpTableau,
) -> SpStatus {
    guard(|| {
        let text = unsafe { read_str(text, "text") }?;
        let shape = unsafe { borrow(shape, "shape") }?;
        let tableau = RowStrictTableau::parse_with_shape(text, &shape.0).map_err(fail)?;
        unsafe { write_out(out, SpTableau(tableau)) }
    })
}

/// The tableau in `"1,2/3,4/5"` form; free with [`sp_string_free`].
///
/// # Safety
/// `tableau` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_tableau_to_string(tableau: *const SpTableau) -> *mut c_char {
    unsafe { tableau.as_ref() }.map_or(ptr::null_mut(), |t| into_c_string(t.0.to_string()))
}

/// # Safety
/// `tableau` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sp_tableau_free(tableau: *mut SpTableau) {
    unsafe { free(tableau) }
}

/// Parses one-line notation `"[3,5,2,4,1]"`.
///
/// # Safety
/// `text` is a NUL-terminated string and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_parse(text: *const c_char, out: *mut *mut SpPermutation) -> SpStatus {
    guard(|| {
        let text = unsafe { read_str(text, "text") }?;
        let w: Permutation = text.parse().map_err(fail)?;
        unsafe { write_out(out, SpPermutation(w)) }
    })
}

/// # Safety
/// `w` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_rank(w: *const SpPermutation) -> usize {
    unsafe { w.as_ref() }.map_or(0, |w| w.0.rank())
}

/// Coxeter length (number of inversions).
///
/// # Safety
/// `w` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_length(w: *const SpPermutation) -> usize {
    unsafe { w.as_ref() }.map_or(0, |w| w.0.length())
}

/// Copies the one-line notation into `buffer`, which must hold the rank.
///
/// # Safety
/// `w` is a live handle and `buffer` has room for `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_one_line(
    w: *const SpPermutation,
    buffer: *mut usize,
    capacity: usize,
) -> SpStatus {
    guard(|| {
        let w = unsafe { borrow(w, "w") }?;
        if buffer.is_null() {
            return Err(null("buffer"));
        }
        let one_line = w.0.one_line();
        if capacity < one_line.len() {
            set_error(format!("buffer holds {capacity} values, {} needed", one_line.len()));
            return Err(SpStatus::BufferTooSmall);
        }
        // SAFETY: `buffer` has at least `one_line.len()` slots.
        unsafe { ptr::copy_nonoverlapping(one_line.as_ptr(), buffer, one_line.len()) };
        Ok(())
    })
}

/// Reduced word from the monotone factorization, e.g. `"s3 s4 s3 s2"`.
///
/// # Safety
/// `w` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_word(w: *const SpPermutation) -> *mut c_char {
    unsafe { w.as_ref() }.map_or(ptr::null_mut(), |w| {
        into_c_string(springer_points::weyl::canonical_factorization(&w.0).to_word().to_string())
    })
}

/// # Safety
/// `w` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sp_permutation_free(w: *mut SpPermutation) {
    unsafe { free(w) }
}

/// The Schubert point `w_T` of a tableau.
///
/// # Safety
/// `tableau` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sp_schubert_point(tableau: *const SpTableau, out: *mut *mut SpPermutation) -> SpStatus {
    guard(|| {
        let t = unsafe { borrow(tableau, "tableau") }?;
        unsafe { write_out(out, SpPermutation(schubert_point(&t.0))) }
    })
}

/// Whether `w` is the Schubert point of some tableau of `shape`. When it is
/// and `tableau_out` is non-null, the tableau is written there.
///
/// # Safety
/// `w` and `shape` are live handles; `found` is writable; `tableau_out` is
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn sp_is_schubert_point(
    w: *const SpPermutation,
    shape: *const SpPartition,
    found: *mut bool,
    tableau_out: *mut *mut SpTableau,
) -> SpStatus {
    guard(|| {
        let w = unsafe { borrow(w, "w") }?;
        let shape = unsafe { borrow(shape, "shape") }?;
        if found.is_null() {
            return Err(null("found"));
        }
        let tableau = springer_points::is_schubert_point(&w.0, &shape.0).map_err(fail)?;
        // SAFETY: checked non-null above.
        unsafe { *found = tableau.is_some() };
        if let (Some(t), false) = (tableau, tableau_out.is_null()) {
            unsafe { write_out(tableau_out, SpTableau(t)) }?;
        }
        Ok(())
    })
}

/// Erase the letter at position `pos` (from 1) of string `w_string` in the
/// Schubert point of `tableau` and return the resulting permutation.
///
/// # Safety
/// `tableau` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sp_delete_and_normalize(
    tableau: *const SpTableau,
    string: usize,
    pos: usize,
    out: *mut *mut SpPermutation,
) -> SpStatus {
    guard(|| {
        let t = unsafe { borrow(tableau, "tableau") }?;
        let f = schubert_factorization(&t.0);
        let rewrite = normalize_deletion(&f, DeletionSite::new(string, pos)).map_err(fail)?;
        unsafe { write_out(out, SpPermutation(rewrite.result.to_permutation())) }
    })
}

/// Poincaré polynomial of the Springer fiber of Jordan type `shape`.
///
/// # Safety
/// `shape` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sp_springer_poincare(shape: *const SpPartition, out: *mut *mut SpPolynomial) -> SpStatus {
    guard(|| {
        let shape = unsafe { borrow(shape, "shape") }?;
        unsafe { write_out(out, SpPolynomial(springer_poincare(&shape.0))) }
    })
}

/// Poincaré polynomial of the union of Schubert varieties of all points of `shape`.
///
/// # Safety
/// `shape` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sp_schubert_poincare(shape: *const SpPartition, out: *mut *mut SpPolynomial) -> SpStatus {
    guard(|| {
        let shape = unsafe { borrow(shape, "shape") }?;
        let poly = union_poincare(SchubertPoints::new(&shape.0).points()).map_err(fail)?;
        unsafe { write_out(out, SpPolynomial(poly)) }
    })
}

/// Degree of the polynomial, or -1 for zero or a null handle.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_polynomial_degree(p: *const SpPolynomial) -> isize {
    unsafe { p.as_ref() }.and_then(|p| p.0.degree()).map_or(-1, |d| d as isize)
}

/// Coefficient of `t^degree`; 0 beyond the degree or for a null handle.
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_polynomial_coefficient(p: *const SpPolynomial, degree: usize) -> u64 {
    unsafe { p.as_ref() }.map_or(0, |p| p.0.coefficient(degree))
}

/// Coefficient-wise equality; false if either handle is null.
///
/// # Safety
/// `a` and `b` are null or live handles.
#[no_mangle]
pub unsafe extern "C" fn sp_polynomial_equal(a: *const SpPolynomial, b: *const SpPolynomial) -> bool {
    match unsafe { (a.as_ref(), b.as_ref()) } {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Text form such as `"5t^4+11t^3+9t^2+4t+1"`; free with [`sp_string_free`].
///
/// # Safety
/// `p` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_polynomial_to_string(p: *const SpPolynomial) -> *mut c_char {
    unsafe { p.as_ref() }.map_or(ptr::null_mut(), |p| into_c_string(p.0.to_string()))
}

/// # Safety
/// `p` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sp_polynomial_free(p: *mut SpPolynomial) {
    unsafe { free(p) }
}

/// Check one claim for one shape.
///
/// # Safety
/// `shape` is a live handle and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sp_verify(shape: *const SpPartition, claim: SpClaim, out: *mut *mut SpReport) -> SpStatus {
    guard(|| {
        let shape = unsafe { borrow(shape, "shape") }?;
        let claim = match claim {
            SpClaim::Theorem1 => Claim::Theorem1,
            SpClaim::Closure => Claim::Closure,
            SpClaim::Deletion => Claim::Deletion,
            SpClaim::Maximality => Claim::Maximality,
        };
        let report = verify::check(&shape.0, claim).map_err(fail)?;
        unsafe { write_out(out, SpReport(report)) }
    })
}

/// Point-set inclusion for `lambda ≥ mu` in dominance order.
///
/// # Safety
/// `lambda` and `mu` are live handles and `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn sp_verify_dominance(
    lambda: *const SpPartition,
    mu: *const SpPartition,
    out: *mut *mut SpReport,
) -> SpStatus {
    guard(|| {
        let lambda = unsafe { borrow(lambda, "lambda") }?;
        let mu = unsafe { borrow(mu, "mu") }?;
        let report = verify::check_dominance(&lambda.0, &mu.0).map_err(fail)?;
        unsafe { write_out(out, SpReport(report)) }
    })
}

/// # Safety
/// `report` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_report_holds(report: *const SpReport) -> bool {
    unsafe { report.as_ref() }.is_some_and(|r| r.0.holds())
}

/// # Safety
/// `report` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_report_witness_count(report: *const SpReport) -> usize {
    unsafe { report.as_ref() }.map_or(0, |r| r.0.witnesses.len())
}

/// The report as JSON; free with [`sp_string_free`].
///
/// # Safety
/// `report` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sp_report_to_json(report: *const SpReport) -> *mut c_char {
    unsafe { report.as_ref() }.map_or(ptr::null_mut(), |r| into_c_string(r.0.to_json()))
}

/// # Safety
/// `report` is null or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sp_report_free(report: *mut SpReport) {
    unsafe { free(report) }
}

//! C ABI over zsurf-core.
//!
//! Polynomials and matrices cross the boundary as opaque handles. Every
//! fallible entry point returns a [`ZsStatus`] and writes its result through
//! an out-pointer; on failure the message is available from
//! [`zs_last_error_message`]. Strings returned to the caller are owned by the
//! caller and must be released with [`zs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use zsurf_core::forms::{factor_out_z, standard_form, FormsError, HermMatrix, MatrixRecord, PolyMatrix};
use zsurf_core::homology::{h1_presentation, invariants};
use zsurf_core::units::enumerate_unit_classes_default;
use zsurf_core::{classify, LaurentPoly};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    NotDivisible = 5,
    NotHermitian = 6,
    Overflow = 7,
    Internal = 8,
}

/// Opaque Laurent polynomial.
pub struct ZsPoly(LaurentPoly);

/// Opaque matrix over the Laurent ring.
pub struct ZsMatrix(PolyMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

struct Failure(ZsStatus, String);

impl From<FormsError> for Failure {
    fn from(e: FormsError) -> Self {
        let status = match e {
            FormsError::NotHermitian { .. } => ZsStatus::NotHermitian,
            FormsError::NotDivisible { .. } => ZsStatus::NotDivisible,
            FormsError::SizeMismatch(_) => ZsStatus::Dimension,
            FormsError::Malformed(_) => ZsStatus::Parse,
            FormsError::EntryTooLarge => ZsStatus::Overflow,
            FormsError::Laurent(_) => ZsStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ZsStatus {
    let outcome = catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| Err(Failure(ZsStatus::Internal, "panic inside zsurf".into())));
    match outcome {
        Ok(()) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            ZsStatus::Ok
        }
        Err(Failure(status, msg)) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
            status
        }
    }
}

fn null() -> Failure {
    Failure(ZsStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(ZsStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(ZsStatus::Internal, "interior NUL in output".into()))?;
    put(out, c.into_raw())
}

unsafe fn put_json<T: serde::Serialize>(out: *mut *mut c_char, v: &T) -> Result<(), Failure> {
    let s = serde_json::to_string(v).map_err(|e| Failure(ZsStatus::Internal, e.to_string()))?;
    put_string(out, s)
}

unsafe fn poly<'a>(p: *const ZsPoly) -> Result<&'a LaurentPoly, Failure> {
    p.as_ref().map(|p| &p.0).ok_or_else(null)
}

unsafe fn matrix<'a>(m: *const ZsMatrix) -> Result<&'a PolyMatrix, Failure> {
    m.as_ref().map(|m| &m.0).ok_or_else(null)
}

fn boxed_poly(p: LaurentPoly) -> *mut ZsPoly {
    Box::into_raw(Box::new(ZsPoly(p)))
}

fn boxed_matrix(m: PolyMatrix) -> *mut ZsMatrix {
    Box::into_raw(Box::new(ZsMatrix(m)))
}

fn size(v: u32) -> usize {
    v as usize
}

/// Message of the last failed call on this thread, or null if it succeeded.
/// The caller owns the returned string.
#[no_mangle]
pub extern "C" fn zs_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow().as_deref() {
        Some(msg) => CString::new(msg.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library.
#[no_mangle]
pub unsafe extern "C" fn zs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses text such as `2 - t - t^-1`.
///
/// # Safety
/// `src` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_parse(src: *const c_char, out: *mut *mut ZsPoly) -> ZsStatus {
    guard(|| {
        let p: LaurentPoly = text(src)?
            .parse()
            .map_err(|e| Failure(ZsStatus::Parse, format!("{e}")))?;
        put(out, boxed_poly(p))
    })
}

/// The twisted Alexander polynomial `n(2 - t - t^-1) + 1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_twist_alexander(n: i64, out: *mut *mut ZsPoly) -> ZsStatus {
    guard(|| put(out, boxed_poly(LaurentPoly::twist_alexander(n))))
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_free(p: *mut ZsPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_to_string(p: *const ZsPoly, out: *mut *mut c_char) -> ZsStatus {
    guard(|| put_string(out, poly(p)?.to_string()))
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_add(a: *const ZsPoly, b: *const ZsPoly, out: *mut *mut ZsPoly) -> ZsStatus {
    guard(|| put(out, boxed_poly(poly(a)? + poly(b)?)))
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_mul(a: *const ZsPoly, b: *const ZsPoly, out: *mut *mut ZsPoly) -> ZsStatus {
    guard(|| put(out, boxed_poly(poly(a)? * poly(b)?)))
}

/// The involution `t -> t^-1`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_involute(p: *const ZsPoly, out: *mut *mut ZsPoly) -> ZsStatus {
    guard(|| put(out, boxed_poly(poly(p)?.involute())))
}

/// Value at `t = 1`; fails with `Overflow` if it does not fit in 64 bits.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_eval_one(p: *const ZsPoly, out: *mut i64) -> ZsStatus {
    guard(|| {
        let v: BigInt = poly(p)?.eval_one();
        let v = i64::try_from(&v).map_err(|_| Failure(ZsStatus::Overflow, format!("{v} does not fit in i64")))?;
        put(out, v)
    })
}

/// Writes 1 if the polynomials are equal and 0 otherwise.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_poly_equal(a: *const ZsPoly, b: *const ZsPoly, out: *mut i32) -> ZsStatus {
    guard(|| put(out, i32::from(poly(a)? == poly(b)?)))
}

/// Reads `{"size": n, "rows": [["2 - t - t^-1", ...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_from_json(json: *const c_char, out: *mut *mut ZsMatrix) -> ZsStatus {
    guard(|| {
        let rec: MatrixRecord =
            serde_json::from_str(text(json)?).map_err(|e| Failure(ZsStatus::Parse, e.to_string()))?;
        put(out, boxed_matrix(PolyMatrix::from_record(&rec)?))
    })
}

/// The standard hermitian form for `c+` positive and `c-` negative double points and genus `g`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_standard_form(
    c_plus: u32,
    c_minus: u32,
    genus: u32,
    out: *mut *mut ZsMatrix,
) -> ZsStatus {
    guard(|| {
        put(
            out,
            boxed_matrix(standard_form(size(c_plus), size(c_minus), size(genus)).matrix().clone()),
        )
    })
}

/// # Safety
/// `m` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_free(m: *mut ZsMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_to_json(m: *const ZsMatrix, out: *mut *mut c_char) -> ZsStatus {
    guard(|| put_json(out, &matrix(m)?.to_record()))
}

/// # Safety
/// `m` must be a live handle; `rows` and `cols` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_shape(m: *const ZsMatrix, rows: *mut u32, cols: *mut u32) -> ZsStatus {
    guard(|| {
        let m = matrix(m)?;
        let fit = |v: usize| u32::try_from(v).map_err(|_| Failure(ZsStatus::Overflow, "dimension exceeds u32".into()));
        put(rows, fit(m.rows())?)?;
        put(cols, fit(m.cols())?)
    })
}

/// Copies entry `(i, j)`, 0-based.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_get(m: *const ZsMatrix, i: u32, j: u32, out: *mut *mut ZsPoly) -> ZsStatus {
    guard(|| {
        let m = matrix(m)?;
        let (i, j) = (size(i), size(j));
        if i >= m.rows() || j >= m.cols() {
            return Err(Failure(
                ZsStatus::Dimension,
                format!("entry ({i}, {j}) outside {}x{}", m.rows(), m.cols()),
            ));
        }
        put(out, boxed_poly(m.get(i, j).clone()))
    })
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_det(m: *const ZsMatrix, out: *mut *mut ZsPoly) -> ZsStatus {
    guard(|| put(out, boxed_poly(matrix(m)?.det()?)))
}

/// Writes 1 if the matrix is square and equals its conjugate transpose.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_is_hermitian(m: *const ZsMatrix, out: *mut i32) -> ZsStatus {
    guard(|| put(out, i32::from(matrix(m)?.is_hermitian())))
}

/// Divides a hermitian matrix entrywise by `z = 2 - t - t^-1`.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_matrix_factor_out_z(m: *const ZsMatrix, out: *mut *mut ZsMatrix) -> ZsStatus {
    guard(|| {
        let h = HermMatrix::new(matrix(m)?.clone())?;
        put(out, boxed_matrix(factor_out_z(&h)?.matrix().clone()))
    })
}

/// Unit group report for `Z[t, t^-1] / (Delta_n)` as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_units_classify_json(n: i64, out: *mut *mut c_char) -> ZsStatus {
    guard(|| put_json(out, &enumerate_unit_classes_default(n)))
}

/// Presentation and invariants of the twisted first homology as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn zs_homology_invariants_json(
    genus: u32,
    c_plus: u32,
    c_minus: u32,
    out: *mut *mut c_char,
) -> ZsStatus {
    guard(|| {
        let pres = h1_presentation(size(genus), size(c_plus), size(c_minus));
        let inv = invariants(&pres).map_err(|e| Failure(ZsStatus::Internal, e.to_string()))?;
        put_json(out, &serde_json::json!({ "presentation": pres, "invariants": inv }))
    })
}

/// Standardness checks of `lambda` against the standard form, as JSON.
/// `witness` may be null.
///
/// # Safety
/// `lambda` must be a live handle, `witness` null or live, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn zs_standardness_json(
    lambda: *const ZsMatrix,
    c_plus: u32,
    c_minus: u32,
    genus: u32,
    witness: *const ZsMatrix,
    out: *mut *mut c_char,
) -> ZsStatus {
    guard(|| {
        let w = if witness.is_null() {
            None
        } else {
            Some(matrix(witness)?)
        };
        let report = classify::standardness_report(matrix(lambda)?, size(c_plus), size(c_minus), size(genus), w);
        put_json(out, &report)
    })
}

/// Algebraic unknotting checks as JSON. Either matrix may be null, but not both.
///
/// # Safety
/// `a` and `b` must be null or live handles; `out` valid.
#[no_mangle]
pub unsafe extern "C" fn zs_unknotting_json(
    a: *const ZsMatrix,
    b: *const ZsMatrix,
    c_plus: u32,
    c_minus: u32,
    entry_bound: u32,
    out: *mut *mut c_char,
) -> ZsStatus {
    guard(|| {
        if a.is_null() && b.is_null() {
            return Err(null());
        }
        let a = if a.is_null() { None } else { Some(matrix(a)?) };
        let b = if b.is_null() { None } else { Some(matrix(b)?) };
        let report = classify::unknotting_report(a, b, size(c_plus), size(c_minus), size(entry_bound));
        put_json(out, &report)
    })
}

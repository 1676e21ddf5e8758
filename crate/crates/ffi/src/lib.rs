//! C ABI for the `excitation` library.
//!
//! Every fallible function returns an [`ExcStatus`] and writes its result
//! through an out-pointer. On failure the message is available from
//! [`exc_last_error`] on the same thread. Objects are passed as opaque
//! handles and released with the matching `*_free` function; strings
//! returned through `*mut *mut c_char` are released with [`exc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_traits::ToPrimitive;

use excitation::bijections::{dyck_to_standard, standard_to_dyck, verify_chain, DyckWord};
use excitation::enumeration::{catalan, narayana, BigCount};
use excitation::fock::{invariant_dimension, verify_fock};
use excitation::ideal::{buchberger_verify, ExcitationRing};
use excitation::poly::{parse_polynomial, ExponentMatrix};
use excitation::stdmono::{enumerate_standard, is_standard};
use excitation::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidParameters = 3,
    IndexOutOfRange = 4,
    DimensionMismatch = 5,
    ShapeMismatch = 6,
    Malformed = 7,
    Parse = 8,
    BudgetExceeded = 9,
    ZeroPolynomial = 10,
    PropertyViolation = 11,
    LinearDependence = 12,
    Overflow = 13,
    Panic = 14,
}

impl From<&Error> for ExcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::DimensionMismatch { .. } => ExcStatus::DimensionMismatch,
            Error::InvalidParameters(_) => ExcStatus::InvalidParameters,
            Error::IndexOutOfRange(_) => ExcStatus::IndexOutOfRange,
            Error::ZeroPolynomial => ExcStatus::ZeroPolynomial,
            Error::ShapeMismatch(_) => ExcStatus::ShapeMismatch,
            Error::Malformed { .. } => ExcStatus::Malformed,
            Error::BudgetExceeded { .. } => ExcStatus::BudgetExceeded,
            Error::Parse(_) => ExcStatus::Parse,
            Error::PropertyViolation(_) => ExcStatus::PropertyViolation,
            Error::LinearDependence(_) => ExcStatus::LinearDependence,
        }
    }
}

struct Failure {
    status: ExcStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: ExcStatus::from(&e),
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn new(status: ExcStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }

    fn null(what: &str) -> Self {
        Failure::new(ExcStatus::NullArgument, format!("{what} is null"))
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ExcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            ExcStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(failure.message);
            failure.status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            ExcStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure::new(ExcStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure::new(ExcStatus::Malformed, e.to_string()))?;
    write_out(out, c.into_raw())
}

unsafe fn read_matrix(entries: *const u32, rows: usize, cols: usize) -> Result<ExponentMatrix, Failure> {
    let len = rows
        .checked_mul(cols)
        .ok_or_else(|| Failure::new(ExcStatus::Overflow, "rows * cols overflows"))?;
    let flat = if len == 0 {
        Vec::new()
    } else {
        if entries.is_null() {
            return Err(Failure::null("entries"));
        }
        std::slice::from_raw_parts(entries, len).to_vec()
    };
    Ok(ExponentMatrix::from_flat(rows, cols, flat)?)
}

fn to_u64(value: &BigCount, what: &str) -> Result<u64, Failure> {
    value.to_u64().ok_or_else(|| {
        Failure::new(
            ExcStatus::Overflow,
            format!("{what} = {value} does not fit in 64 bits"),
        )
    })
}

/// Message of the most recent failure on this thread, or null after a
/// success. The pointer stays valid until the next call into this library
/// on the same thread.
#[no_mangle]
pub extern "C" fn exc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn exc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `N(n, r)` written to `out`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_narayana(n: u64, r: u64, out: *mut u64) -> ExcStatus {
    guard(|| write_out(out, to_u64(&narayana(n, r), "narayana")?))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_catalan(n: u64, out: *mut u64) -> ExcStatus {
    guard(|| write_out(out, to_u64(&catalan(n), "catalan")?))
}

/// Dimension of the quotient ring, counted by enumerating standard monomials.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_dimension(m: usize, k: usize, out: *mut u64) -> ExcStatus {
    guard(|| write_out(out, enumerate_standard(m, k)?.len() as u64))
}

/// Whether the `rows x cols` row-major exponent matrix is standard.
///
/// # Safety
/// `entries` must point to `rows * cols` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_is_standard(
    entries: *const u32,
    rows: usize,
    cols: usize,
    out: *mut bool,
) -> ExcStatus {
    guard(|| write_out(out, is_standard(&read_matrix(entries, rows, cols)?)))
}

/// Dimension of the sl2-invariant subspace of the `d`-particle space on `m` sites.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_fock_invariant_dimension(m: usize, d: usize, out: *mut u64) -> ExcStatus {
    guard(|| write_out(out, invariant_dimension(m, d)? as u64))
}

/// Dyck word of a standard `k x (m - k)` matrix, as a `u`/`d` string.
///
/// # Safety
/// `entries` must point to `rows * cols` values; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_matrix_to_dyck(
    entries: *const u32,
    rows: usize,
    cols: usize,
    out: *mut *mut c_char,
) -> ExcStatus {
    guard(|| {
        let mat = read_matrix(entries, rows, cols)?;
        let w = standard_to_dyck(&mat, rows + cols)?;
        write_string(out, w.to_string())
    })
}

/// Standard matrix of a Dyck word; the result is a list holding one matrix.
///
/// # Safety
/// `word` must be a nul-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_dyck_to_matrix(word: *const c_char, out: *mut *mut ExcMatrixList) -> ExcStatus {
    guard(|| {
        let w: DyckWord = read_str(word, "word")?.parse()?;
        let n = w.semilength();
        if n == 0 {
            return Err(Failure::new(
                ExcStatus::InvalidParameters,
                "the empty word has no matrix",
            ));
        }
        let mat = dyck_to_standard(&w, n - 1, w.valleys().len())?;
        write_out(out, ExcMatrixList::boxed(mat.dims(), vec![mat]))
    })
}

/// A list of exponent matrices of equal shape.
pub struct ExcMatrixList {
    rows: usize,
    cols: usize,
    items: Vec<ExponentMatrix>,
}

impl ExcMatrixList {
    fn boxed((rows, cols): (usize, usize), items: Vec<ExponentMatrix>) -> *mut Self {
        Box::into_raw(Box::new(ExcMatrixList { rows, cols, items }))
    }
}

/// Standard monomials of the quotient, degree ascending.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_standard_monomials(
    m: usize,
    k: usize,
    out: *mut *mut ExcMatrixList,
) -> ExcStatus {
    guard(|| {
        let basis = enumerate_standard(m, k)?;
        write_out(out, ExcMatrixList::boxed((k, m - k), basis))
    })
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_matrix_list_len(list: *const ExcMatrixList) -> usize {
    list.as_ref().map_or(0, |l| l.items.len())
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_matrix_list_rows(list: *const ExcMatrixList) -> usize {
    list.as_ref().map_or(0, |l| l.rows)
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_matrix_list_cols(list: *const ExcMatrixList) -> usize {
    list.as_ref().map_or(0, |l| l.cols)
}

/// Row-major entries of matrix `index`, or null when out of range. The
/// pointer lives as long as the list.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_matrix_list_get(list: *const ExcMatrixList, index: usize) -> *const u32 {
    list.as_ref()
        .and_then(|l| l.items.get(index))
        .map_or(ptr::null(), |m| m.entries().as_ptr())
}

/// # Safety
/// `list` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn exc_matrix_list_free(list: *mut ExcMatrixList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// The quotient ring with its generators loaded for normal forms.
pub struct ExcRing {
    inner: ExcitationRing,
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_ring_new(m: usize, k: usize, out: *mut *mut ExcRing) -> ExcStatus {
    guard(|| {
        let inner = ExcitationRing::new(m, k)?;
        write_out(out, Box::into_raw(Box::new(ExcRing { inner })))
    })
}

/// # Safety
/// `ring` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn exc_ring_free(ring: *mut ExcRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_ring_m(ring: *const ExcRing) -> usize {
    ring.as_ref().map_or(0, |r| r.inner.ideal().m())
}

/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_ring_k(ring: *const ExcRing) -> usize {
    ring.as_ref().map_or(0, |r| r.inner.ideal().k())
}

/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_ring_generator_count(ring: *const ExcRing) -> usize {
    ring.as_ref().map_or(0, |r| r.inner.ideal().generators().len())
}

/// Normal form of a polynomial given in the text format, e.g.
/// `"3*X[1,1]^2*X[2,2] - 1/2"`.
///
/// # Safety
/// `ring` must be a live handle, `poly` a nul-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_ring_normal_form(
    ring: *const ExcRing,
    poly: *const c_char,
    out: *mut *mut c_char,
) -> ExcStatus {
    guard(|| {
        let ring = ring.as_ref().ok_or_else(|| Failure::null("ring"))?;
        let p = parse_polynomial(read_str(poly, "poly")?, ring.inner.dims())?;
        write_string(out, ring.inner.normal_form(&p)?.to_string())
    })
}

struct Check {
    name: CString,
    passed: bool,
    detail: CString,
}

/// Named pass/fail checks from one of the verifiers.
pub struct ExcReport {
    checks: Vec<Check>,
}

impl ExcReport {
    fn boxed(rows: Vec<(&str, bool, String)>) -> *mut Self {
        let cstr = |s: &str| CString::new(s.replace('\0', " ")).expect("interior nul removed");
        let checks = rows
            .into_iter()
            .map(|(name, passed, detail)| Check {
                name: cstr(name),
                passed,
                detail: cstr(&detail),
            })
            .collect();
        Box::into_raw(Box::new(ExcReport { checks }))
    }
}

/// Buchberger's criterion for the generators.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_verify_groebner(m: usize, k: usize, out: *mut *mut ExcReport) -> ExcStatus {
    guard(|| {
        let r = buchberger_verify(m, k)?;
        let detail = format!(
            "{} generators, {} pairs checked, {} coprime skipped, {} failures",
            r.generators,
            r.pairs_checked,
            r.coprime_skipped,
            r.witnesses.len()
        );
        write_out(
            out,
            ExcReport::boxed(vec![("s_pairs_reduce", r.all_reduced, detail)]),
        )
    })
}

/// Round trips through the matrix, tableau, plane partition and Dyck word bijections.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_verify_chain(m: usize, k: usize, out: *mut *mut ExcReport) -> ExcStatus {
    guard(|| {
        let r = verify_chain(m, k)?;
        let counts = format!("{} standard, narayana {}", r.standard, r.narayana);
        let rows = vec![
            ("standard_count", r.standard as u64 == r.narayana, counts),
            ("rsk_round_trip", r.rsk_round_trip, String::new()),
            ("tableaux_round_trip", r.tableaux_round_trip, String::new()),
            ("dyck_round_trip", r.dyck_round_trip, String::new()),
            ("full_round_trip", r.full_round_trip, String::new()),
            ("onto_family", r.onto_family, String::new()),
            ("transpose_compatible", r.transpose_compatible, String::new()),
        ];
        write_out(out, ExcReport::boxed(rows))
    })
}

/// Operator algebra, invariant subspace and excitation basis checks on the Fock space.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn exc_verify_fock(m: usize, k: usize, out: *mut *mut ExcReport) -> ExcStatus {
    guard(|| {
        let r = verify_fock(m, k)?;
        let rows = r
            .checks
            .into_iter()
            .map(|c| (c.name, c.passed, c.detail))
            .collect();
        write_out(out, ExcReport::boxed(rows))
    })
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_report_len(report: *const ExcReport) -> usize {
    report.as_ref().map_or(0, |r| r.checks.len())
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_report_all_passed(report: *const ExcReport) -> bool {
    report.as_ref().is_some_and(|r| r.checks.iter().all(|c| c.passed))
}

/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_report_passed(report: *const ExcReport, index: usize) -> bool {
    report
        .as_ref()
        .and_then(|r| r.checks.get(index))
        .is_some_and(|c| c.passed)
}

/// Name of check `index`, or null when out of range. Lives as long as the report.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_report_name(report: *const ExcReport, index: usize) -> *const c_char {
    report
        .as_ref()
        .and_then(|r| r.checks.get(index))
        .map_or(ptr::null(), |c| c.name.as_ptr())
}

/// Detail line of check `index`, or null when out of range. Lives as long as the report.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn exc_report_detail(report: *const ExcReport, index: usize) -> *const c_char {
    report
        .as_ref()
        .and_then(|r| r.checks.get(index))
        .map_or(ptr::null(), |c| c.detail.as_ptr())
}

/// # Safety
/// `report` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn exc_report_free(report: *mut ExcReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

//! C ABI over the `dsc` library.
//!
//! Semigroups and Byleen monoids are opaque handles created by `*_new` or
//! `*_from_*` functions and released with the matching `*_free`. Every
//! fallible call returns a [`DscStatus`]; on failure a message is kept in a
//! thread-local slot readable through [`dsc_last_error_message`]. Strings
//! returned through `char **` out-parameters are owned by the caller and
//! must be released with [`dsc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dsc::byleen::{parse_letter, parse_word, Byleen, ByleenError, NormalForm};
use dsc::cli::{cmd_models, witness_json, ModelName};
use dsc::finite::{default_names, is_completely_simple, is_group, is_inverse, is_simple};
use dsc::relations::{brute_force_is_dsc, is_dsc_fast, witness_non_dsc, RelationsError};
use dsc::{CayleyError, FiniteSemigroup};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DscStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidTable = 4,
    TooLarge = 5,
    IsGroup = 6,
    NotAMonoid = 7,
    EqualElements = 8,
    NotRegular = 9,
    Verification = 10,
    OutOfRange = 11,
    Internal = 12,
}

/// A finite semigroup given by a validated Cayley table.
pub struct DscSemigroup(FiniteSemigroup);

/// Byleen's monoid over a finite base monoid.
pub struct DscByleen(Byleen);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(DscStatus, String);

type FfiResult<T> = Result<T, Failure>;

fn fail<T>(status: DscStatus, message: impl Into<String>) -> FfiResult<T> {
    Err(Failure(status, message.into()))
}

fn set_last_error(message: String) {
    let text = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

/// Runs `body`, mapping errors and panics to a status code.
fn guard(body: impl FnOnce() -> FfiResult<()>) -> DscStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DscStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            DscStatus::Internal
        }
    }
}

fn cayley_failure(err: CayleyError) -> Failure {
    let status = match err {
        CayleyError::Parse(_) => DscStatus::ParseError,
        _ => DscStatus::InvalidTable,
    };
    Failure(status, err.to_string())
}

fn relations_failure(err: RelationsError) -> Failure {
    let status = match err {
        RelationsError::TooLarge { .. } => DscStatus::TooLarge,
        RelationsError::IsGroup => DscStatus::IsGroup,
        RelationsError::WitnessRejected(_) => DscStatus::Verification,
    };
    Failure(status, err.to_string())
}

fn byleen_failure(err: ByleenError) -> Failure {
    let status = match err {
        ByleenError::NotAMonoid => DscStatus::NotAMonoid,
        ByleenError::EqualElements | ByleenError::EqualIndices => DscStatus::EqualElements,
        ByleenError::NotRegularBase(_) => DscStatus::NotRegular,
        ByleenError::MatrixMismatch => DscStatus::OutOfRange,
        ByleenError::Parse(_) => DscStatus::ParseError,
        ByleenError::Unverified(_) => DscStatus::Verification,
    };
    Failure(status, err.to_string())
}

unsafe fn borrow<'a, T>(p: *const T) -> FfiResult<&'a T> {
    // SAFETY: the caller guarantees `p` is null or a live handle.
    unsafe { p.as_ref() }.map_or_else(|| fail(DscStatus::NullPointer, "null handle"), Ok)
}

unsafe fn text<'a>(p: *const c_char) -> FfiResult<&'a str> {
    if p.is_null() {
        return fail(DscStatus::NullPointer, "null string");
    }
    // SAFETY: the caller guarantees a nul-terminated string.
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .or_else(|e| fail(DscStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return fail(DscStatus::NullPointer, "null out-pointer");
    }
    // SAFETY: non-null and, per the contract, writable.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> FfiResult<()> {
    let c = CString::new(value).or_else(|e| fail(DscStatus::Internal, e.to_string()))?;
    unsafe { write(out, c.into_raw()) }
}

/// Parses a Cayley table in JSON form: `{"order": n, "names": [...],
/// "table": [[...]]}`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_from_json(
    json: *const c_char,
    out: *mut *mut DscSemigroup,
) -> DscStatus {
    guard(|| {
        let s = FiniteSemigroup::from_json(unsafe { text(json)? }).map_err(cayley_failure)?;
        unsafe { write(out, Box::into_raw(Box::new(DscSemigroup(s)))) }
    })
}

/// Builds a semigroup from a row-major table of `order * order` entries.
///
/// # Safety
/// `table` must point to `order * order` readable values and `out` be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_from_table(
    order: usize,
    table: *const usize,
    out: *mut *mut DscSemigroup,
) -> DscStatus {
    guard(|| {
        if table.is_null() {
            return fail(DscStatus::NullPointer, "null table");
        }
        let len = order
            .checked_mul(order)
            .map_or_else(|| fail(DscStatus::TooLarge, "order overflows"), Ok)?;
        // SAFETY: the caller guarantees `len` readable entries.
        let entries = unsafe { std::slice::from_raw_parts(table, len) }.to_vec();
        let s = FiniteSemigroup::from_flat(order, entries, default_names(order))
            .map_err(cayley_failure)?;
        unsafe { write(out, Box::into_raw(Box::new(DscSemigroup(s)))) }
    })
}

/// Releases a semigroup handle. Null is ignored.
///
/// # Safety
/// `s` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_free(s: *mut DscSemigroup) {
    if !s.is_null() {
        drop(unsafe { Box::from_raw(s) });
    }
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_order(s: *const DscSemigroup, out: *mut usize) -> DscStatus {
    guard(|| {
        let s = unsafe { borrow(s)? };
        unsafe { write(out, s.0.order()) }
    })
}

/// The product `x · y`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_mul(
    s: *const DscSemigroup,
    x: usize,
    y: usize,
    out: *mut usize,
) -> DscStatus {
    guard(|| {
        let s = unsafe { borrow(s)? };
        let n = s.0.order();
        if x >= n || y >= n {
            return fail(
                DscStatus::OutOfRange,
                format!("element out of range for order {n}"),
            );
        }
        unsafe { write(out, s.0.mul(x, y)) }
    })
}

unsafe fn predicate(
    s: *const DscSemigroup,
    out: *mut bool,
    f: impl FnOnce(&FiniteSemigroup) -> FfiResult<bool>,
) -> DscStatus {
    guard(|| {
        let s = unsafe { borrow(s)? };
        let value = f(&s.0)?;
        unsafe { write(out, value) }
    })
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_is_group(
    s: *const DscSemigroup,
    out: *mut bool,
) -> DscStatus {
    unsafe { predicate(s, out, |s| Ok(is_group(s))) }
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_is_simple(
    s: *const DscSemigroup,
    out: *mut bool,
) -> DscStatus {
    unsafe { predicate(s, out, |s| Ok(is_simple(s))) }
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_is_completely_simple(
    s: *const DscSemigroup,
    out: *mut bool,
) -> DscStatus {
    unsafe { predicate(s, out, |s| Ok(is_completely_simple(s))) }
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_is_inverse(
    s: *const DscSemigroup,
    out: *mut bool,
) -> DscStatus {
    unsafe { predicate(s, out, |s| Ok(is_inverse(s))) }
}

/// Whether every diagonal subsemigroup is a congruence.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_is_dsc(s: *const DscSemigroup, out: *mut bool) -> DscStatus {
    unsafe { predicate(s, out, |s| Ok(is_dsc_fast(s))) }
}

/// The exhaustive decision over all subsets of `S × S ∖ Δ`. Fails with
/// `TooLarge` above the scan limit.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_brute_force_is_dsc(
    s: *const DscSemigroup,
    out: *mut bool,
) -> DscStatus {
    unsafe {
        predicate(s, out, |s| {
            brute_force_is_dsc(s)
                .map(|scan| scan.is_dsc)
                .map_err(relations_failure)
        })
    }
}

/// A verified non-congruence diagonal subsemigroup as JSON. Fails with
/// `IsGroup` for a group.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_semigroup_witness_json(
    s: *const DscSemigroup,
    out: *mut *mut c_char,
) -> DscStatus {
    guard(|| {
        let s = unsafe { borrow(s)? };
        let w = witness_non_dsc(&s.0).map_err(relations_failure)?;
        unsafe { write_string(out, witness_json(&s.0, &w, true).to_string()) }
    })
}

/// Byleen's monoid over the monoid `base`. The base handle may be freed
/// afterwards.
///
/// # Safety
/// `base` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_byleen_new(
    base: *const DscSemigroup,
    out: *mut *mut DscByleen,
) -> DscStatus {
    guard(|| {
        let base = unsafe { borrow(base)? };
        let m = Byleen::new(base.0.clone()).map_err(byleen_failure)?;
        unsafe { write(out, Box::into_raw(Box::new(DscByleen(m)))) }
    })
}

/// Releases a Byleen handle. Null is ignored.
///
/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dsc_byleen_free(m: *mut DscByleen) {
    if !m.is_null() {
        drop(unsafe { Box::from_raw(m) });
    }
}

unsafe fn word(m: &Byleen, p: *const c_char) -> FfiResult<NormalForm> {
    parse_word(m, unsafe { text(p)? }).map_err(byleen_failure)
}

/// Normal form of a whitespace-separated word such as `"a(0,s1) s1 b(2,s0)"`.
///
/// # Safety
/// `m` must be a live handle, `word_text` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_byleen_eval(
    m: *const DscByleen,
    word_text: *const c_char,
    out: *mut *mut c_char,
) -> DscStatus {
    guard(|| {
        let m = unsafe { borrow(m)? };
        let nf = unsafe { word(&m.0, word_text)? };
        unsafe { write_string(out, nf.to_string()) }
    })
}

/// Normal form of the product `x · y`.
///
/// # Safety
/// `m` must be a live handle, `x` and `y` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_byleen_mul(
    m: *const DscByleen,
    x: *const c_char,
    y: *const c_char,
    out: *mut *mut c_char,
) -> DscStatus {
    guard(|| {
        let m = unsafe { borrow(m)? };
        let (x, y) = unsafe { (word(&m.0, x)?, word(&m.0, y)?) };
        let product = m.0.mul(&x, &y).map_err(byleen_failure)?;
        unsafe { write_string(out, product.to_string()) }
    })
}

/// A verified inverse `t′` with `t t′ t = t` and `t′ t t′ = t′`.
///
/// # Safety
/// `m` must be a live handle, `t` nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_byleen_inverse(
    m: *const DscByleen,
    t: *const c_char,
    out: *mut *mut c_char,
) -> DscStatus {
    guard(|| {
        let m = unsafe { borrow(m)? };
        let t = unsafe { word(&m.0, t)? };
        let inv = m.0.regular_inverse(&t).map_err(byleen_failure)?;
        unsafe { write_string(out, inv.to_string()) }
    })
}

/// A verified certificate, as JSON, that the letter pair `(w1, w2)` lies in
/// the diagonal subsemigroup generated by `(g, h)`.
///
/// # Safety
/// `m` must be a live handle, the strings nul-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_byleen_span_json(
    m: *const DscByleen,
    g: *const c_char,
    h: *const c_char,
    w1: *const c_char,
    w2: *const c_char,
    out: *mut *mut c_char,
) -> DscStatus {
    guard(|| {
        let m = unsafe { borrow(m)? };
        let (g, h) = unsafe { (word(&m.0, g)?, word(&m.0, h)?) };
        let order = m.0.base().order();
        let e = m.0.base_identity();
        let w1 = parse_letter(unsafe { text(w1)? }.trim(), order, e).map_err(byleen_failure)?;
        let w2 = parse_letter(unsafe { text(w2)? }.trim(), order, e).map_err(byleen_failure)?;
        let cert = m.0.span_witness(&g, &h, &w1, &w2).map_err(byleen_failure)?;
        let json =
            serde_json::to_string(&cert).or_else(|e| fail(DscStatus::Internal, e.to_string()))?;
        unsafe { write_string(out, json) }
    })
}

/// The report of an infinite model (`bicyclic`, `bruck-reilly`,
/// `baer-levi` or `z`) as JSON. `window` bounds the Baer–Levi validation.
/// `passed` receives whether every check held.
///
/// # Safety
/// `name` must be nul-terminated; `out` and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn dsc_models_report_json(
    name: *const c_char,
    window: u64,
    out: *mut *mut c_char,
    passed: *mut bool,
) -> DscStatus {
    guard(|| {
        let model = match unsafe { text(name)? } {
            "bicyclic" => ModelName::Bicyclic,
            "bruck-reilly" => ModelName::BruckReilly,
            "baer-levi" => ModelName::BaerLevi,
            "z" => ModelName::Z,
            other => return fail(DscStatus::ParseError, format!("unknown model `{other}`")),
        };
        let outcome =
            cmd_models(model, window).or_else(|e| fail(DscStatus::Verification, e.to_string()))?;
        if passed.is_null() {
            return fail(DscStatus::NullPointer, "null out-pointer");
        }
        unsafe { write_string(out, outcome.report.to_string())? };
        unsafe { write(passed, outcome.exit == dsc::cli::EXIT_PASS) }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dsc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// The message of the last failure on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dsc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// A static name for a status code.
#[no_mangle]
pub extern "C" fn dsc_status_name(status: DscStatus) -> *const c_char {
    let name: &'static CStr = match status {
        DscStatus::Ok => c"ok",
        DscStatus::NullPointer => c"null-pointer",
        DscStatus::InvalidUtf8 => c"invalid-utf8",
        DscStatus::ParseError => c"parse-error",
        DscStatus::InvalidTable => c"invalid-table",
        DscStatus::TooLarge => c"too-large",
        DscStatus::IsGroup => c"is-group",
        DscStatus::NotAMonoid => c"not-a-monoid",
        DscStatus::EqualElements => c"equal-elements",
        DscStatus::NotRegular => c"not-regular",
        DscStatus::Verification => c"verification",
        DscStatus::OutOfRange => c"out-of-range",
        DscStatus::Internal => c"internal",
    };
    name.as_ptr()
}

//! C ABI for the ievec library.
//!
//! Handles are opaque pointers created and destroyed by this library; every
//! other function borrows them. All fallible calls return an [`IevecStatus`]
//! and leave a human-readable message retrievable per thread via
//! [`ievec_last_error_message`]. Strings returned as `char*` are owned by
//! the caller and must be released with [`ievec_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ievec::json::{self, IeVectorDoc, TubeMeta};
use ievec::mobius::mobius_ie_vector;
use ievec::tube::build_tube;
use ievec::validate::{check_ie_vector, measure_oracle_check};
use ievec::{Error, VennDiagram};

/// Status codes; nonzero values match the CLI exit codes where one exists.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IevecStatus {
    Ok = 0,
    /// A null pointer or otherwise unusable argument.
    NullArgument = 1,
    /// Malformed or semantically invalid input.
    BadInput = 2,
    /// The system's union is empty.
    EmptyUnion = 3,
    /// The tube construction exhausted its restart budget.
    RestartsExhausted = 4,
    /// The vector is not an IE-vector for the system.
    ValidationFailed = 5,
    /// A size budget (nerve, lattice) was exceeded.
    ResourceExceeded = 6,
    /// An internal panic was caught; the handle state is unchanged.
    Panic = 7,
}

/// A standardized set system (its Venn diagram). Opaque.
pub struct IevecVenn {
    venn: VennDiagram,
}

/// An IE coefficient vector, with optional tube metadata. Opaque.
pub struct IevecVector {
    doc: IeVectorDoc,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(err: &Error) -> IevecStatus {
    match err.exit_code() {
        2 => IevecStatus::BadInput,
        3 => IevecStatus::EmptyUnion,
        4 => IevecStatus::RestartsExhausted,
        5 => IevecStatus::ValidationFailed,
        6 => IevecStatus::ResourceExceeded,
        _ => IevecStatus::BadInput,
    }
}

fn guarded<F: FnOnce() -> IevecStatus>(f: F) -> IevecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(&msg);
            IevecStatus::Panic
        }
    }
}

/// # Safety
/// `text` must be a valid NUL-terminated C string.
unsafe fn parse_utf8<'a>(text: *const c_char) -> Result<&'a str, IevecStatus> {
    if text.is_null() {
        set_error("null input pointer");
        return Err(IevecStatus::NullArgument);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        IevecStatus::BadInput
    })
}

fn export_string(text: String) -> *mut c_char {
    match CString::new(text) {
        Ok(s) => s.into_raw(),
        Err(_) => ptr::null_mut(),
    }
}

/// Last error message raised on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ievec_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `text` must have been returned by an ievec function and not freed yet.
#[no_mangle]
pub unsafe extern "C" fn ievec_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// Parses a `set_system` or `venn` JSON document and standardizes it.
/// On success writes a fresh handle to `out`.
///
/// # Safety
/// `json_text` must be a valid NUL-terminated C string and `out` a valid
/// pointer to a pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ievec_venn_parse(
    json_text: *const c_char,
    out: *mut *mut IevecVenn,
) -> IevecStatus {
    if out.is_null() {
        set_error("null output pointer");
        return IevecStatus::NullArgument;
    }
    let text = match parse_utf8(json_text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    guarded(|| match json::read_as_venn(text) {
        Ok(venn) => {
            *out = Box::into_raw(Box::new(IevecVenn { venn }));
            IevecStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    })
}

/// # Safety
/// `handle` must come from `ievec_venn_parse` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ievec_venn_free(handle: *mut IevecVenn) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of sets n, or 0 for a null handle.
///
/// # Safety
/// `handle` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ievec_venn_set_count(handle: *const IevecVenn) -> u32 {
    handle.as_ref().map_or(0, |h| h.venn.n())
}

/// Number of Venn regions m, or 0 for a null handle.
///
/// # Safety
/// `handle` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ievec_venn_region_count(handle: *const IevecVenn) -> usize {
    handle.as_ref().map_or(0, |h| h.venn.m())
}

/// Canonical `venn` JSON for a handle; caller frees via `ievec_string_free`.
///
/// # Safety
/// `handle` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ievec_venn_to_json(handle: *const IevecVenn) -> *mut c_char {
    match handle.as_ref() {
        Some(h) => export_string(json::write_venn(&h.venn)),
        None => ptr::null_mut(),
    }
}

/// Computes the unique IE-vector supported on the Venn diagram.
///
/// # Safety
/// `handle` must be a live handle; `out` a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ievec_mobius(
    handle: *const IevecVenn,
    out: *mut *mut IevecVector,
) -> IevecStatus {
    let Some(h) = handle.as_ref() else {
        set_error("null venn handle");
        return IevecStatus::NullArgument;
    };
    if out.is_null() {
        set_error("null output pointer");
        return IevecStatus::NullArgument;
    }
    guarded(|| {
        let vector = mobius_ie_vector(&h.venn);
        *out = Box::into_raw(Box::new(IevecVector { doc: IeVectorDoc { vector, meta: None } }));
        IevecStatus::Ok
    })
}

/// Computes a ±1 abstract-tube IE-vector with the given seed and restart
/// budget; metadata (permutation, restarts, bound, complex size) rides along
/// in the handle and its JSON form.
///
/// # Safety
/// `handle` must be a live handle; `out` a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ievec_tube(
    handle: *const IevecVenn,
    seed: u64,
    max_restarts: u32,
    out: *mut *mut IevecVector,
) -> IevecStatus {
    let Some(h) = handle.as_ref() else {
        set_error("null venn handle");
        return IevecStatus::NullArgument;
    };
    if out.is_null() {
        set_error("null output pointer");
        return IevecStatus::NullArgument;
    }
    guarded(|| match build_tube(&h.venn, seed, max_restarts.max(1)) {
        Ok(result) => {
            let meta = TubeMeta {
                permutation: result.permutation.clone(),
                restarts: result.restarts,
                d_bound: result.d_bound,
                complex_size: result.complex.len(),
            };
            *out = Box::into_raw(Box::new(IevecVector {
                doc: IeVectorDoc { vector: result.ie, meta: Some(meta) },
            }));
            IevecStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    })
}

/// Parses an `ie_vector` JSON document.
///
/// # Safety
/// `json_text` must be a valid NUL-terminated C string and `out` a valid
/// pointer slot.
#[no_mangle]
pub unsafe extern "C" fn ievec_vector_parse(
    json_text: *const c_char,
    out: *mut *mut IevecVector,
) -> IevecStatus {
    if out.is_null() {
        set_error("null output pointer");
        return IevecStatus::NullArgument;
    }
    let text = match parse_utf8(json_text) {
        Ok(t) => t,
        Err(status) => return status,
    };
    guarded(|| match json::read_ie_vector(text) {
        Ok(doc) => {
            *out = Box::into_raw(Box::new(IevecVector { doc }));
            IevecStatus::Ok
        }
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    })
}

/// # Safety
/// `handle` must come from a vector-producing call and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ievec_vector_free(handle: *mut IevecVector) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of nonzero coefficients.
///
/// # Safety
/// `handle` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ievec_vector_support_size(handle: *const IevecVector) -> usize {
    handle.as_ref().map_or(0, |h| h.doc.vector.support_size())
}

/// Largest term cardinality.
///
/// # Safety
/// `handle` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ievec_vector_max_term_size(handle: *const IevecVector) -> usize {
    handle.as_ref().map_or(0, |h| h.doc.vector.max_term_size())
}

/// ℓ1-norm as a decimal string (coefficients can exceed any fixed width);
/// caller frees via `ievec_string_free`.
///
/// # Safety
/// `handle` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ievec_vector_l1_decimal(handle: *const IevecVector) -> *mut c_char {
    match handle.as_ref() {
        Some(h) => export_string(h.doc.vector.l1_norm().to_string()),
        None => ptr::null_mut(),
    }
}

/// Canonical `ie_vector` JSON (including summary fields and any tube
/// metadata); caller frees via `ievec_string_free`.
///
/// # Safety
/// `handle` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn ievec_vector_to_json(handle: *const IevecVector) -> *mut c_char {
    match handle.as_ref() {
        Some(h) => export_string(json::write_ie_vector(&h.doc.vector, h.doc.meta.as_ref())),
        None => ptr::null_mut(),
    }
}

/// Certifies `vector` against `venn`: the exact per-region sums plus
/// `trials` random-measure spot checks. Returns `Ok` on PASS and
/// `ValidationFailed` (with a message listing the first violations) on FAIL.
///
/// # Safety
/// Both handles must be live.
#[no_mangle]
pub unsafe extern "C" fn ievec_validate(
    venn: *const IevecVenn,
    vector: *const IevecVector,
    trials: u32,
    seed: u64,
) -> IevecStatus {
    let (Some(v), Some(x)) = (venn.as_ref(), vector.as_ref()) else {
        set_error("null handle");
        return IevecStatus::NullArgument;
    };
    if v.venn.n() != x.doc.vector.n() {
        set_error("n mismatch between system and vector");
        return IevecStatus::BadInput;
    }
    guarded(|| {
        let exact = check_ie_vector(&v.venn, &x.doc.vector);
        let measures = measure_oracle_check(&v.venn, &x.doc.vector, trials.max(1), seed);
        if exact.passed() && measures.passed() {
            IevecStatus::Ok
        } else {
            let detail = serde_json::to_string(&exact.violations).unwrap_or_default();
            set_error(&format!("validation failed: {detail}"));
            IevecStatus::ValidationFailed
        }
    })
}

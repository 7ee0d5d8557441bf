//! C ABI over `acyclic-orient`.
//!
//! Instances and results are opaque heap handles released with their `_free` function.
//! Every fallible call returns an `ORIENT_*` status code; on failure the message is available
//! from [`orient_last_error`] on the same thread. Vertex ids in arrays are 0-based; JSON
//! documents use the 1-based ids of the instance files.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use acyclic_orient::cli::{decision_json, reduce_instance, Reduction};
use acyclic_orient::dispatch::{oracle_instance, solve_instance, Answer, Decision};
use acyclic_orient::{
    orientation_from_order, parse_instance, serialize_instance, verify_dcaop, verify_pr1, Instance,
    OracleConfig, OrientError, VertexOrder,
};

pub const ORIENT_OK: i32 = 0;
pub const ORIENT_ERR_NULL: i32 = 1;
pub const ORIENT_ERR_UTF8: i32 = 2;
pub const ORIENT_ERR_PARSE: i32 = 3;
pub const ORIENT_ERR_TOO_LARGE: i32 = 4;
pub const ORIENT_ERR_INVALID_ARGUMENT: i32 = 5;
pub const ORIENT_ERR_BUFFER_TOO_SMALL: i32 = 6;
pub const ORIENT_ERR_INTERNAL: i32 = 7;

pub const ORIENT_KIND_DCAOP: i32 = 0;
pub const ORIENT_KIND_PR1: i32 = 1;
pub const ORIENT_KIND_VC: i32 = 2;
pub const ORIENT_KIND_NAE: i32 = 3;
pub const ORIENT_KIND_PROBLEM3: i32 = 4;

/// Opaque parsed instance.
pub struct OrientInstance {
    inner: Instance,
}

/// Opaque solver outcome.
pub struct OrientResult {
    instance: Instance,
    decision: Decision,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let sanitized = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = sanitized);
}

fn status_of(error: &OrientError) -> i32 {
    match error {
        OrientError::Parse { .. } => ORIENT_ERR_PARSE,
        OrientError::TooLarge { .. } => ORIENT_ERR_TOO_LARGE,
        _ => ORIENT_ERR_INVALID_ARGUMENT,
    }
}

/// Run `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (i32, String)>) -> i32 {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            ORIENT_OK
        }
        Ok(Err((code, message))) => {
            set_last_error(&message);
            code
        }
        Err(_) => {
            set_last_error("internal panic");
            ORIENT_ERR_INTERNAL
        }
    }
}

fn lib_error(error: OrientError) -> (i32, String) {
    (status_of(&error), error.to_string())
}

fn null_error(name: &str) -> (i32, String) {
    (ORIENT_ERR_NULL, format!("{name} is null"))
}

unsafe fn read_str<'a>(text: *const c_char, name: &str) -> Result<&'a str, (i32, String)> {
    if text.is_null() {
        return Err(null_error(name));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| (ORIENT_ERR_UTF8, format!("{name} is not valid UTF-8")))
}

fn into_c_string(text: String) -> *mut c_char {
    CString::new(text).map_or(ptr::null_mut(), CString::into_raw)
}

/// Parse instance text (the `p <kind> ...` file format) into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orient_instance_parse(text: *const c_char, out: *mut *mut OrientInstance) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(null_error("out"));
        }
        let text = read_str(text, "text")?;
        let inner = parse_instance(text).map_err(lib_error)?;
        *out = Box::into_raw(Box::new(OrientInstance { inner }));
        Ok(())
    })
}

/// # Safety
/// `instance` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn orient_instance_free(instance: *mut OrientInstance) {
    if !instance.is_null() {
        drop(Box::from_raw(instance));
    }
}

/// One of the `ORIENT_KIND_*` values, or -1 for a null handle.
///
/// # Safety
/// `instance` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orient_instance_kind(instance: *const OrientInstance) -> i32 {
    match instance.as_ref().map(|i| &i.inner) {
        None => -1,
        Some(Instance::Dcaop(_)) => ORIENT_KIND_DCAOP,
        Some(Instance::Pr1(_)) => ORIENT_KIND_PR1,
        Some(Instance::Vc(_)) => ORIENT_KIND_VC,
        Some(Instance::Nae(_)) => ORIENT_KIND_NAE,
        Some(Instance::Problem3(_)) => ORIENT_KIND_PROBLEM3,
    }
}

/// Vertex count of the graph, variable count of a formula, 0 for a null handle.
///
/// # Safety
/// `instance` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orient_instance_vertex_count(instance: *const OrientInstance) -> usize {
    match instance.as_ref().map(|i| &i.inner) {
        None => 0,
        Some(Instance::Nae(formula)) => formula.variable_count,
        Some(other) => other.graph().map_or(0, |g| g.vertex_count()),
    }
}

/// Canonical text form; release with [`orient_string_free`]. Null on a null handle.
///
/// # Safety
/// `instance` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orient_instance_serialize(instance: *const OrientInstance) -> *mut c_char {
    match instance.as_ref() {
        Some(i) => into_c_string(serialize_instance(&i.inner)),
        None => ptr::null_mut(),
    }
}

unsafe fn decide(
    instance: *const OrientInstance,
    out: *mut *mut OrientResult,
    run: impl FnOnce(&Instance) -> acyclic_orient::Result<Decision>,
) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(null_error("out"));
        }
        let instance = instance.as_ref().ok_or_else(|| null_error("instance"))?;
        let decision = run(&instance.inner).map_err(lib_error)?;
        *out = Box::into_raw(Box::new(OrientResult {
            instance: instance.inner.clone(),
            decision,
        }));
        Ok(())
    })
}

/// Decide with the fastest exact method; falls back to the exhaustive search (default cap).
///
/// # Safety
/// `instance` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orient_solve(instance: *const OrientInstance, out: *mut *mut OrientResult) -> i32 {
    decide(instance, out, |inst| solve_instance(inst, &OracleConfig::default()))
}

/// Decide by exhaustive search. `max_vertices` of 0 means the default cap.
///
/// # Safety
/// `instance` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orient_oracle(
    instance: *const OrientInstance,
    max_vertices: usize,
    out: *mut *mut OrientResult,
) -> i32 {
    let config = if max_vertices == 0 {
        OracleConfig::default()
    } else {
        OracleConfig::with_max_vertices(max_vertices)
    };
    decide(instance, out, |inst| oracle_instance(inst, &config))
}

/// # Safety
/// `result` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn orient_result_free(result: *mut OrientResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// 1 if feasible, 0 if infeasible, -1 for a null handle.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orient_result_is_feasible(result: *const OrientResult) -> i32 {
    match result.as_ref() {
        None => -1,
        Some(r) => i32::from(r.decision.is_feasible()),
    }
}

fn witness(result: &OrientResult) -> &[usize] {
    match &result.decision.outcome {
        Ok(Answer::Order(order)) => order.as_slice(),
        Ok(Answer::Cover(cover)) => cover,
        _ => &[],
    }
}

/// Length of the witness vertex list: the order, or the cover for vertex cover instances.
/// 0 when infeasible, for formulas, or for a null handle.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orient_result_witness_len(result: *const OrientResult) -> usize {
    result.as_ref().map_or(0, |r| witness(r).len())
}

/// Copy the witness vertex list (0-based) into `buffer` of `capacity` entries.
///
/// # Safety
/// `result` must be a live handle and `buffer` valid for `capacity` writes.
#[no_mangle]
pub unsafe extern "C" fn orient_result_copy_witness(
    result: *const OrientResult,
    buffer: *mut usize,
    capacity: usize,
) -> i32 {
    guard(|| {
        let result = result.as_ref().ok_or_else(|| null_error("result"))?;
        let items = witness(result);
        if items.len() > capacity {
            return Err((
                ORIENT_ERR_BUFFER_TOO_SMALL,
                format!("need {} entries, have {capacity}", items.len()),
            ));
        }
        if !items.is_empty() {
            if buffer.is_null() {
                return Err(null_error("buffer"));
            }
            ptr::copy_nonoverlapping(items.as_ptr(), buffer, items.len());
        }
        Ok(())
    })
}

/// The same JSON document the command line prints; release with [`orient_string_free`].
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn orient_result_json(result: *const OrientResult) -> *mut c_char {
    match result.as_ref() {
        Some(r) => into_c_string(decision_json(&r.instance, &r.decision).to_string()),
        None => ptr::null_mut(),
    }
}

/// Check a 0-based vertex order against a bounded-orientation, path or four-terminal
/// instance. Writes 1 to `valid` when accepted, 0 otherwise.
///
/// # Safety
/// `instance` must be a live handle, `order` valid for `len` reads, `valid` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn orient_verify_order(
    instance: *const OrientInstance,
    order: *const usize,
    len: usize,
    valid: *mut i32,
) -> i32 {
    guard(|| {
        let instance = instance.as_ref().ok_or_else(|| null_error("instance"))?;
        if valid.is_null() || (order.is_null() && len > 0) {
            return Err(null_error("order or valid"));
        }
        let items = if len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(order, len).to_vec()
        };
        let graph = instance
            .inner
            .graph()
            .ok_or_else(|| (ORIENT_ERR_INVALID_ARGUMENT, "formulas have no vertex order".to_string()))?;
        if items.len() != graph.vertex_count() {
            return Err(lib_error(OrientError::LengthMismatch {
                expected: graph.vertex_count(),
                actual: items.len(),
            }));
        }
        let order = VertexOrder::new(items).map_err(lib_error)?;
        let ok = match &instance.inner {
            Instance::Dcaop(inst) => {
                let o = orientation_from_order(&inst.graph, &order).map_err(lib_error)?;
                verify_dcaop(inst, &o).map_err(lib_error)?.is_ok()
            }
            Instance::Pr1(inst) => {
                let o = orientation_from_order(&inst.graph, &order).map_err(lib_error)?;
                verify_pr1(inst, &o).map_err(lib_error)?.is_ok()
            }
            Instance::Problem3(inst) => inst.verify(&order).map_err(lib_error)?.is_ok(),
            _ => {
                return Err((
                    ORIENT_ERR_INVALID_ARGUMENT,
                    "vertex cover witnesses are sets, not orders".to_string(),
                ))
            }
        };
        *valid = i32::from(ok);
        Ok(())
    })
}

/// Apply a named reduction (`vc2dcaop`, `dcaop2pr1`, `nae2pr1`, `simplify`, `pr1toP3`).
///
/// # Safety
/// `instance` must be a live handle, `reduction` a NUL-terminated string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn orient_reduce(
    instance: *const OrientInstance,
    reduction: *const c_char,
    out: *mut *mut OrientInstance,
) -> i32 {
    guard(|| {
        if out.is_null() {
            return Err(null_error("out"));
        }
        let instance = instance.as_ref().ok_or_else(|| null_error("instance"))?;
        let name = read_str(reduction, "reduction")?;
        let reduction = Reduction::from_name(name)
            .ok_or_else(|| (ORIENT_ERR_INVALID_ARGUMENT, format!("unknown reduction '{name}'")))?;
        let inner = reduce_instance(reduction, &instance.inner).map_err(lib_error)?;
        *out = Box::into_raw(Box::new(OrientInstance { inner }));
        Ok(())
    })
}

/// Message for the last failed call on this thread; empty after a success. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn orient_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `text` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn orient_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

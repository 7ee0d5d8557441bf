use std::ffi::{CStr, CString};
use std::ptr;

use acyclic_orient_ffi::*;

fn parse(text: &str) -> *mut OrientInstance {
    let text = CString::new(text).unwrap();
    let mut handle = ptr::null_mut();
    let status = unsafe { orient_instance_parse(text.as_ptr(), &mut handle) };
    assert_eq!(status, ORIENT_OK, "{}", last_error());
    assert!(!handle.is_null());
    handle
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(orient_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn take_string(raw: *mut std::ffi::c_char) -> String {
    assert!(!raw.is_null());
    let text = unsafe { CStr::from_ptr(raw) }.to_string_lossy().into_owned();
    unsafe { orient_string_free(raw) };
    text
}

#[test]
fn solve_and_copy_order() {
    let inst = parse("p dcaop 3 2\nv 1 0 1\nv 3 1 0\ne 1 2\ne 2 3\n");
    unsafe {
        assert_eq!(orient_instance_kind(inst), ORIENT_KIND_DCAOP);
        assert_eq!(orient_instance_vertex_count(inst), 3);
        let mut result = ptr::null_mut();
        assert_eq!(orient_solve(inst, &mut result), ORIENT_OK);
        assert_eq!(orient_result_is_feasible(result), 1);
        let len = orient_result_witness_len(result);
        assert_eq!(len, 3);
        let mut small = [0usize; 2];
        assert_eq!(
            orient_result_copy_witness(result, small.as_mut_ptr(), small.len()),
            ORIENT_ERR_BUFFER_TOO_SMALL
        );
        assert!(last_error().contains("need 3"));
        let mut order = vec![0usize; len];
        assert_eq!(orient_result_copy_witness(result, order.as_mut_ptr(), len), ORIENT_OK);
        let mut valid = -1;
        assert_eq!(orient_verify_order(inst, order.as_ptr(), len, &mut valid), ORIENT_OK);
        assert_eq!(valid, 1);
        let json = take_string(orient_result_json(result));
        assert!(json.contains("\"solver\":\"disjoint_bounds\""), "{json}");
        orient_result_free(result);
        orient_instance_free(inst);
    }
}

#[test]
fn infeasible_result_and_rejected_order() {
    let inst = parse("p dcaop 3 3\nv 1 1 0\nv 2 1 0\nv 3 1 0\ne 1 2\ne 2 3\ne 1 3\n");
    unsafe {
        let mut result = ptr::null_mut();
        assert_eq!(orient_oracle(inst, 0, &mut result), ORIENT_OK);
        assert_eq!(orient_result_is_feasible(result), 0);
        assert_eq!(orient_result_witness_len(result), 0);
        let json = take_string(orient_result_json(result));
        assert!(json.contains("\"status\":\"infeasible\""), "{json}");
        orient_result_free(result);

        let order = [0usize, 1, 2];
        let mut valid = -1;
        assert_eq!(orient_verify_order(inst, order.as_ptr(), 3, &mut valid), ORIENT_OK);
        assert_eq!(valid, 0);
        let bad = [0usize, 0, 2];
        assert_eq!(
            orient_verify_order(inst, bad.as_ptr(), 3, &mut valid),
            ORIENT_ERR_INVALID_ARGUMENT
        );
        orient_instance_free(inst);
    }
}

#[test]
fn parse_errors_carry_position() {
    let text = CString::new("p dcaop 2 1\ne 1 1\n").unwrap();
    let mut handle = ptr::null_mut();
    let status = unsafe { orient_instance_parse(text.as_ptr(), &mut handle) };
    assert_eq!(status, ORIENT_ERR_PARSE);
    assert!(handle.is_null());
    assert!(last_error().starts_with("line 2, column 5"), "{}", last_error());
}

#[test]
fn null_arguments_are_reported() {
    unsafe {
        let mut handle = ptr::null_mut();
        assert_eq!(orient_instance_parse(ptr::null(), &mut handle), ORIENT_ERR_NULL);
        let mut result = ptr::null_mut();
        assert_eq!(orient_solve(ptr::null(), &mut result), ORIENT_ERR_NULL);
        assert_eq!(orient_result_is_feasible(ptr::null()), -1);
        assert_eq!(orient_instance_kind(ptr::null()), -1);
        assert!(orient_result_json(ptr::null()).is_null());
        orient_instance_free(ptr::null_mut());
        orient_result_free(ptr::null_mut());
        orient_string_free(ptr::null_mut());
    }
}

#[test]
fn reduce_and_serialize() {
    let formula = parse("p nae 3 1\nc 1 -2 3\n");
    unsafe {
        let name = CString::new("nae2pr1").unwrap();
        let mut gadget = ptr::null_mut();
        assert_eq!(orient_reduce(formula, name.as_ptr(), &mut gadget), ORIENT_OK);
        assert_eq!(orient_instance_kind(gadget), ORIENT_KIND_PR1);
        assert_eq!(orient_instance_vertex_count(gadget), 29);
        let text = take_string(orient_instance_serialize(gadget));
        assert!(text.starts_with("p pr1 29 76 1 16 2 2\n"), "{text}");

        let unknown = CString::new("nope").unwrap();
        let mut other = ptr::null_mut();
        assert_eq!(orient_reduce(formula, unknown.as_ptr(), &mut other), ORIENT_ERR_INVALID_ARGUMENT);
        let wrong = CString::new("vc2dcaop").unwrap();
        assert_eq!(orient_reduce(formula, wrong.as_ptr(), &mut other), ORIENT_ERR_INVALID_ARGUMENT);
        assert!(other.is_null());

        orient_instance_free(gadget);
        orient_instance_free(formula);
    }
}

#[test]
fn oracle_cap_is_enforced() {
    let inst = parse("p dcaop 30 2\nv 1 1 1\ne 1 2\ne 1 3\n");
    unsafe {
        let mut result = ptr::null_mut();
        assert_eq!(orient_oracle(inst, 0, &mut result), ORIENT_ERR_TOO_LARGE);
        assert_eq!(orient_oracle(inst, 30, &mut result), ORIENT_OK);
        assert_eq!(orient_result_is_feasible(result), 1);
        orient_result_free(result);
        orient_instance_free(inst);
    }
}

#[test]
fn cover_witness_is_exposed() {
    let inst = parse("p vc 3 2 1\ne 1 2\ne 2 3\n");
    unsafe {
        let mut result = ptr::null_mut();
        assert_eq!(orient_solve(inst, &mut result), ORIENT_OK);
        let mut cover = [usize::MAX; 1];
        assert_eq!(orient_result_copy_witness(result, cover.as_mut_ptr(), 1), ORIENT_OK);
        assert_eq!(cover, [1]);
        orient_result_free(result);
        orient_instance_free(inst);
    }
}

#[test]
fn header_lists_the_api() {
    let header = include_str!("../include/orient.h");
    for symbol in [
        "orient_instance_parse",
        "orient_solve",
        "orient_result_copy_witness",
        "orient_last_error",
        "typedef struct OrientInstance OrientInstance",
        "#define ORIENT_ERR_PARSE 3",
    ] {
        assert!(header.contains(symbol), "{symbol} missing from header");
    }
}

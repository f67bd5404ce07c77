use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use zsurf_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { zs_string_free(s) };
    out
}

fn parse(src: &str) -> *mut ZsPoly {
    let c = CString::new(src).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { zs_poly_parse(c.as_ptr(), &mut p) }, ZsStatus::Ok);
    p
}

fn render(p: *const ZsPoly) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { zs_poly_to_string(p, &mut s) }, ZsStatus::Ok);
    take_string(s)
}

fn json(s: *mut c_char) -> serde_json::Value {
    serde_json::from_str(&take_string(s)).unwrap()
}

#[test]
fn poly_arithmetic_through_handles() {
    let z = parse("2 - t - t^-1");
    let mut delta = ptr::null_mut();
    assert_eq!(unsafe { zs_poly_twist_alexander(1, &mut delta) }, ZsStatus::Ok);
    let one = parse("1");
    let mut sum = ptr::null_mut();
    assert_eq!(unsafe { zs_poly_add(z, one, &mut sum) }, ZsStatus::Ok);
    let mut eq = -1;
    assert_eq!(unsafe { zs_poly_equal(sum, delta, &mut eq) }, ZsStatus::Ok);
    assert_eq!(eq, 1);

    let t = parse("t");
    let mut bar = ptr::null_mut();
    assert_eq!(unsafe { zs_poly_involute(t, &mut bar) }, ZsStatus::Ok);
    let mut prod = ptr::null_mut();
    assert_eq!(unsafe { zs_poly_mul(t, bar, &mut prod) }, ZsStatus::Ok);
    assert_eq!(render(prod), "1");

    let mut v = 0;
    assert_eq!(unsafe { zs_poly_eval_one(z, &mut v) }, ZsStatus::Ok);
    assert_eq!(v, 0);
    assert_eq!(unsafe { zs_poly_eval_one(delta, &mut v) }, ZsStatus::Ok);
    assert_eq!(v, 1);

    for p in [z, delta, one, sum, t, bar, prod] {
        unsafe { zs_poly_free(p) };
    }
}

#[test]
fn errors_set_status_and_message() {
    let bad = CString::new("2 + + t").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { zs_poly_parse(bad.as_ptr(), &mut p) }, ZsStatus::Parse);
    assert!(p.is_null());
    let msg = take_string(zs_last_error_message());
    assert!(!msg.is_empty());

    assert_eq!(unsafe { zs_poly_parse(ptr::null(), &mut p) }, ZsStatus::NullPointer);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { zs_poly_to_string(ptr::null(), &mut s) }, ZsStatus::NullPointer);

    let ok = parse("t");
    assert!(zs_last_error_message().is_null());
    let big = parse("100000000000000000000*t");
    let mut v = 0;
    assert_eq!(unsafe { zs_poly_eval_one(big, &mut v) }, ZsStatus::Overflow);
    unsafe {
        zs_poly_free(ok);
        zs_poly_free(big);
        zs_poly_free(ptr::null_mut());
        zs_string_free(ptr::null_mut());
    }
}

#[test]
fn matrix_json_round_trip_and_det() {
    let src = CString::new(r#"{"size":2,"rows":[["2 - t - t^-1","1 - t"],["1 - t^-1","1"]]}"#).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { zs_matrix_from_json(src.as_ptr(), &mut m) }, ZsStatus::Ok);
    let (mut r, mut c) = (0, 0);
    assert_eq!(unsafe { zs_matrix_shape(m, &mut r, &mut c) }, ZsStatus::Ok);
    assert_eq!((r, c), (2, 2));
    let mut h = 0;
    assert_eq!(unsafe { zs_matrix_is_hermitian(m, &mut h) }, ZsStatus::Ok);
    assert_eq!(h, 1);

    // z - (1 - t)(1 - t^-1) = 0
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { zs_matrix_det(m, &mut d) }, ZsStatus::Ok);
    assert_eq!(render(d), "0");

    let mut e = ptr::null_mut();
    assert_eq!(unsafe { zs_matrix_get(m, 0, 1, &mut e) }, ZsStatus::Ok);
    let expect = parse("1 - t");
    let mut eq = 0;
    unsafe { zs_poly_equal(e, expect, &mut eq) };
    assert_eq!(eq, 1);
    assert_eq!(unsafe { zs_matrix_get(m, 2, 0, &mut e) }, ZsStatus::Dimension);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { zs_matrix_to_json(m, &mut s) }, ZsStatus::Ok);
    let v = json(s);
    assert_eq!(v["size"], 2);
    let back = CString::new(v.to_string()).unwrap();
    let mut m2 = ptr::null_mut();
    assert_eq!(unsafe { zs_matrix_from_json(back.as_ptr(), &mut m2) }, ZsStatus::Ok);
    let mut d2 = ptr::null_mut();
    unsafe { zs_matrix_det(m2, &mut d2) };
    assert_eq!(render(d2), "0");

    let ragged = CString::new(r#"{"size":2,"rows":[["1"]]}"#).unwrap();
    let mut bad = ptr::null_mut();
    assert_ne!(unsafe { zs_matrix_from_json(ragged.as_ptr(), &mut bad) }, ZsStatus::Ok);
    let junk = CString::new("not json").unwrap();
    assert_eq!(unsafe { zs_matrix_from_json(junk.as_ptr(), &mut bad) }, ZsStatus::Parse);

    unsafe {
        zs_poly_free(d);
        zs_poly_free(d2);
        zs_poly_free(e);
        zs_poly_free(expect);
        zs_matrix_free(m);
        zs_matrix_free(m2);
    }
}

#[test]
fn factor_out_z_status() {
    let zi = CString::new(r#"{"size":1,"rows":[["2 - t - t^-1"]]}"#).unwrap();
    let mut m = ptr::null_mut();
    unsafe { zs_matrix_from_json(zi.as_ptr(), &mut m) };
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { zs_matrix_factor_out_z(m, &mut f) }, ZsStatus::Ok);
    let mut e = ptr::null_mut();
    unsafe { zs_matrix_get(f, 0, 0, &mut e) };
    assert_eq!(render(e), "1");

    let one = CString::new(r#"{"size":1,"rows":[["3"]]}"#).unwrap();
    let mut m3 = ptr::null_mut();
    unsafe { zs_matrix_from_json(one.as_ptr(), &mut m3) };
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { zs_matrix_factor_out_z(m3, &mut g) }, ZsStatus::NotDivisible);

    let skew = CString::new(r#"{"size":2,"rows":[["0","t"],["t","0"]]}"#).unwrap();
    let mut ms = ptr::null_mut();
    unsafe { zs_matrix_from_json(skew.as_ptr(), &mut ms) };
    assert_eq!(unsafe { zs_matrix_factor_out_z(ms, &mut g) }, ZsStatus::NotHermitian);
    unsafe {
        zs_poly_free(e);
        zs_matrix_free(m);
        zs_matrix_free(f);
        zs_matrix_free(m3);
        zs_matrix_free(ms);
    }
}

#[test]
fn json_reports() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { zs_units_classify_json(-4, &mut s) }, ZsStatus::Ok);
    let v = json(s);
    assert_eq!(v["classification"], "Z4");
    assert_eq!(v["representatives"].as_array().unwrap().len(), 4);

    assert_eq!(unsafe { zs_homology_invariants_json(1, 1, 0, &mut s) }, ZsStatus::Ok);
    let v = json(s);
    assert_eq!(v["invariants"]["rank_at_one"], 3);

    let mut std = ptr::null_mut();
    assert_eq!(unsafe { zs_matrix_standard_form(1, 1, 1, &mut std) }, ZsStatus::Ok);
    let (mut r, mut c) = (0, 0);
    unsafe { zs_matrix_shape(std, &mut r, &mut c) };
    assert_eq!((r, c), (4, 4));
    assert_eq!(
        unsafe { zs_standardness_json(std, 1, 1, 1, ptr::null(), &mut s) },
        ZsStatus::Ok
    );
    let v = json(s);
    assert!(v["invariant_checks"].as_array().unwrap().len() >= 4);

    let tre = CString::new(r#"{"size":1,"rows":[["-1 + t + t^-1"]]}"#).unwrap();
    let mut a = ptr::null_mut();
    unsafe { zs_matrix_from_json(tre.as_ptr(), &mut a) };
    assert_eq!(
        unsafe { zs_unknotting_json(a, ptr::null(), 1, 0, 3, &mut s) },
        ZsStatus::Ok
    );
    let _ = json(s);
    assert_eq!(
        unsafe { zs_unknotting_json(ptr::null(), ptr::null(), 1, 0, 3, &mut s) },
        ZsStatus::NullPointer
    );
    unsafe {
        zs_matrix_free(std);
        zs_matrix_free(a);
    }
}

#[test]
fn header_declares_every_export_and_compiles() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/zsurf.h")).unwrap();
    let src = std::fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 20);
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    // A C compiler is optional in build environments.
    if let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(dir.join("include/zsurf.h"))
        .output()
    {
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}

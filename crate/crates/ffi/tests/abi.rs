use cayley_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

fn take(s: *mut c_char) -> String {
    let r = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { cayley_string_free(s) };
    r
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cayley_last_error()) }.to_str().unwrap().to_owned()
}

fn vector(coords: &[&str]) -> *mut CayleyExterior {
    let owned: Vec<CString> = coords.iter().map(|c| CString::new(*c).unwrap()).collect();
    let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cayley_vector_new(ptrs.as_ptr(), ptrs.len(), &mut out) }, CayleyStatus::Ok);
    out
}

#[test]
fn eval_round_trip() {
    let e = CString::new("e1 ^ e2 & e2 ^ e3").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cayley_eval(e.as_ptr(), 3, &mut out) }, CayleyStatus::Ok);
    assert_eq!(take(out), "e2");
}

#[test]
fn syntax_errors_report_position() {
    let e = CString::new("e1 ^ ^").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cayley_eval(e.as_ptr(), 3, &mut out) }, CayleyStatus::Syntax);
    assert!(out.is_null());
    assert!(last_error().contains("column"), "{}", last_error());
}

#[test]
fn null_and_utf8_are_rejected() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cayley_eval(ptr::null(), 3, &mut out) }, CayleyStatus::NullPointer);
    let bad = [0xffu8 as c_char, 0];
    assert_eq!(unsafe { cayley_eval(bad.as_ptr(), 3, &mut out) }, CayleyStatus::InvalidUtf8);
    let e = CString::new("e1").unwrap();
    assert_eq!(unsafe { cayley_eval(e.as_ptr(), 3, ptr::null_mut()) }, CayleyStatus::NullPointer);
}

#[test]
fn exterior_handles() {
    let a = vector(&["1", "0", "0"]);
    let b = vector(&["0", "1", "0"]);
    let c = vector(&["0", "1/2", "1"]);
    let mut ab = ptr::null_mut();
    let mut bc = ptr::null_mut();
    let mut m = ptr::null_mut();
    let mut h = ptr::null_mut();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(cayley_wedge(a, b, &mut ab), CayleyStatus::Ok);
        assert_eq!(cayley_wedge(b, c, &mut bc), CayleyStatus::Ok);
        assert_eq!(cayley_meet(ab, bc, &mut m), CayleyStatus::Ok);
        assert_eq!(cayley_exterior_to_string(m, &mut s), CayleyStatus::Ok);
        assert_eq!(take(s), "e2");
        assert_eq!(cayley_hodge(ab, &mut h), CayleyStatus::Ok);
        assert_eq!(cayley_exterior_to_string(h, &mut s), CayleyStatus::Ok);
        assert_eq!(take(s), "e3");
        let short = vector(&["1", "2"]);
        let mut bad = ptr::null_mut();
        assert_eq!(cayley_wedge(a, short, &mut bad), CayleyStatus::DimensionMismatch);
        for x in [a, b, c, ab, bc, m, h, short] {
            cayley_exterior_free(x);
        }
        cayley_exterior_free(ptr::null_mut());
    }
}

#[test]
fn bad_coordinate() {
    let owned = [CString::new("1").unwrap(), CString::new("x").unwrap()];
    let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cayley_vector_new(ptrs.as_ptr(), 2, &mut out) }, CayleyStatus::InvalidArgument);
}

#[test]
fn matroid_queries() {
    let json = CString::new(r#"{"kind":"uniform","n":4,"k":2}"#).unwrap();
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(cayley_matroid_from_json(json.as_ptr(), &mut m), CayleyStatus::Ok);
        let mut rank = 0usize;
        let abc = CString::new("abc").unwrap();
        assert_eq!(cayley_matroid_rank(m, abc.as_ptr(), &mut rank), CayleyStatus::Ok);
        assert_eq!(rank, 2);
        let (u, v) = (CString::new("ab").unwrap(), CString::new("c").unwrap());
        let mut holds = false;
        assert_eq!(cayley_exchange_check(m, u.as_ptr(), v.as_ptr(), &mut holds), CayleyStatus::Ok);
        assert!(holds);
        cayley_matroid_free(m);
    }
    let broken = CString::new(r#"{"kind":"uniform","n":2,"k":5}"#).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { cayley_matroid_from_json(broken.as_ptr(), &mut m) }, CayleyStatus::MalformedMatroid);
}

#[test]
fn straighten_and_verify() {
    let e = CString::new("bp(xy; 2:1, 1:1)").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { cayley_straighten(e.as_ptr(), 0, &mut out) }, CayleyStatus::Ok);
    assert!(!take(out).is_empty());
    let suite = CString::new("modular").unwrap();
    let mut failed = usize::MAX;
    assert_eq!(unsafe { cayley_verify(suite.as_ptr(), 3, &mut failed) }, CayleyStatus::Ok);
    assert_eq!(failed, 0);
    let unknown = CString::new("nope").unwrap();
    assert_ne!(unsafe { cayley_verify(unknown.as_ptr(), 3, &mut failed) }, CayleyStatus::Ok);
}

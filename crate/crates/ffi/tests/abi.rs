use std::ffi::{CStr, CString};
use std::ptr;

use cubelab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = cubelab_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn tricube_round_trip() {
    unsafe {
        let mut m = ptr::null_mut();
        let fam = c("tricube");
        assert_eq!(cubelab_matrix_build(fam.as_ptr(), 3, ptr::null(), &mut m), CubelabStatus::Ok);
        assert_eq!(cubelab_matrix_dim(m), 8);
        let mut buf = vec![0.0; 64];
        assert_eq!(cubelab_matrix_entries(m, buf.as_mut_ptr(), buf.len()), CubelabStatus::Ok);
        assert_eq!(buf[0], 3.0);
        assert_eq!(buf[1], -1.0);
        let mut x = 0.0;
        assert_eq!(cubelab_matrix_get(m, 0, 7, &mut x), CubelabStatus::Ok);
        assert_eq!(x, 0.0);
        assert_eq!(cubelab_matrix_get(m, 8, 0, &mut x), CubelabStatus::OutOfRange);

        let mut s = ptr::null_mut();
        assert_eq!(cubelab_spectrum_compute(m, 0.0, &mut s), CubelabStatus::Ok);
        assert_eq!(cubelab_spectrum_len(s), 8);
        assert_eq!(cubelab_spectrum_cluster_count(s), 4);
        let (mut v, mut k) = (0.0, 0usize);
        let want = [(0.0, 1), (2.0, 3), (4.0, 3), (6.0, 1)];
        for (i, &(wv, wk)) in want.iter().enumerate() {
            assert_eq!(cubelab_spectrum_cluster(s, i, &mut v, &mut k), CubelabStatus::Ok);
            assert!((v - wv).abs() < 1e-9);
            assert_eq!(k, wk);
        }
        let mut small = [0.0; 4];
        assert_eq!(cubelab_spectrum_values(s, small.as_mut_ptr(), 4), CubelabStatus::BufferTooSmall);
        cubelab_spectrum_free(s);
        cubelab_matrix_free(m);
    }
}

#[test]
fn ternary_ordering_and_errors() {
    unsafe {
        let mut m = ptr::null_mut();
        let (fam, ord) = (c("powhamming"), c("ternary-gray"));
        assert_eq!(cubelab_matrix_build(fam.as_ptr(), 2, ord.as_ptr(), &mut m), CubelabStatus::Ok);
        assert_eq!(cubelab_matrix_dim(m), 9);
        cubelab_matrix_free(m);

        let bad = c("dodecahedron");
        assert_eq!(cubelab_matrix_build(bad.as_ptr(), 2, ptr::null(), &mut m), CubelabStatus::InvalidArgument);
        assert!(m.is_null());
        assert!(last_error().contains("dodecahedron"));
        assert_eq!(cubelab_matrix_build(ptr::null(), 2, ptr::null(), &mut m), CubelabStatus::NullPointer);
        assert_eq!(cubelab_matrix_dim(ptr::null()), 0);
        cubelab_matrix_free(ptr::null_mut());
    }
}

#[test]
fn caf_and_verify() {
    unsafe {
        let mut v = 0.0;
        assert_eq!(cubelab_caf(3, 2, 1, &mut v), CubelabStatus::Ok);
        assert_eq!(v, 0.25);
        assert_eq!(cubelab_caf(3, 0, 1, &mut v), CubelabStatus::InvalidArgument);

        let mut out = ptr::null_mut();
        let claims = c("theorem7,caf");
        assert_eq!(cubelab_verify_json(claims.as_ptr(), 1, 3, &mut out), CubelabStatus::Ok);
        let json = CStr::from_ptr(out).to_str().unwrap().to_owned();
        cubelab_string_free(out);
        assert!(json.contains("\"claim\": \"theorem7\""));
        assert!(json.contains("\"fail\": 0"));

        let claims = c("theorem9");
        assert_eq!(cubelab_verify_json(claims.as_ptr(), 1, 0, &mut out), CubelabStatus::InvalidArgument);
        assert!(out.is_null());
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(cubelab_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

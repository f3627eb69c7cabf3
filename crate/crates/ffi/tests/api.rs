use std::ffi::{CStr, CString};
use std::ptr;

use polydual_ffi::*;

const CUBE: [i64; 24] = [
    -1, -1, -1, 1, -1, -1, -1, 1, -1, 1, 1, -1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1, 1,
];

fn polytope(coords: &[i64]) -> *mut PdPolytope {
    let mut p = ptr::null_mut();
    let s = unsafe { pd_polytope_from_points(coords.as_ptr(), coords.len() / 3, &mut p) };
    assert_eq!(s, PdStatus::Ok);
    p
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(pd_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn cube_round_trip() {
    let cube = polytope(&CUBE);
    unsafe {
        assert_eq!(pd_polytope_vertex_count(cube), 8);
        let mut n = 0;
        assert_eq!(pd_polytope_lattice_point_count(cube, &mut n), PdStatus::Ok);
        assert_eq!(n, 27);

        let mut buf = [0i64; 24];
        let mut written = 0;
        assert_eq!(
            pd_polytope_vertices(cube, buf.as_mut_ptr(), 2, &mut written),
            PdStatus::BufferTooSmall
        );
        assert_eq!(written, 8);
        assert_eq!(
            pd_polytope_vertices(cube, buf.as_mut_ptr(), 8, &mut written),
            PdStatus::Ok
        );
        assert_eq!(&buf[..6], &[-1, -1, -1, -1, -1, 1]);

        let mut oct = ptr::null_mut();
        assert_eq!(pd_polytope_dual(cube, &mut oct), PdStatus::Ok);
        assert_eq!(pd_polytope_vertex_count(oct), 6);
        let mut yes = false;
        assert_eq!(pd_polytope_embeds(oct, cube, false, &mut yes), PdStatus::Ok);
        assert!(yes);
        assert_eq!(pd_polytope_embeds(cube, oct, true, &mut yes), PdStatus::Ok);
        assert!(!yes);
        pd_polytope_free(oct);
        pd_polytope_free(cube);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let mut p = ptr::null_mut();
    let flat = [0i64, 0, 0, 1, 0, 0, 2, 0, 0, 0, 1, 0];
    unsafe {
        assert_eq!(
            pd_polytope_from_points(flat.as_ptr(), 4, &mut p),
            PdStatus::Degenerate
        );
        assert!(p.is_null());
        assert!(last_error().contains("dimension"));

        assert_eq!(
            pd_polytope_from_points(ptr::null(), 4, &mut p),
            PdStatus::NullArgument
        );

        let w = [2i64, 4, 6, 9];
        assert_eq!(
            pd_polytope_from_weights(w.as_ptr(), &mut p),
            PdStatus::InvalidInput
        );

        let w = [1i64, 1, 1, 1];
        let text = CString::new("X^^2").unwrap();
        assert_eq!(
            pd_polytope_from_newton(text.as_ptr(), w.as_ptr(), &mut p),
            PdStatus::InvalidInput
        );
        assert!(last_error().contains("position"));

        let big = [1i64 << 40, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0];
        assert_eq!(
            pd_polytope_from_points(big.as_ptr(), 4, &mut p),
            PdStatus::Overflow
        );

        let text = CString::new("W^4+X^4+Y^4+Z^4").unwrap();
        assert_eq!(
            pd_polytope_from_newton(text.as_ptr(), w.as_ptr(), &mut p),
            PdStatus::Ok
        );
        assert_eq!(last_error(), "");
        pd_polytope_free(p);
        pd_polytope_free(ptr::null_mut());
    }
}

#[test]
fn verify_returns_json() {
    unsafe {
        let mut json = ptr::null_mut();
        let name = CString::new("q16").unwrap();
        assert_eq!(pd_verify_case(name.as_ptr(), &mut json), PdStatus::Ok);
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        pd_string_free(json);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["verdict"], "no duality");
        assert_eq!(v["analysis"]["intermediates"].as_array().unwrap().len(), 5);

        let name = CString::new("E12").unwrap();
        assert_eq!(
            pd_verify_case(name.as_ptr(), &mut json),
            PdStatus::InvalidInput
        );
        assert!(json.is_null());
    }
}

use std::ffi::{CStr, CString};
use std::ptr;

use broadcast_lab_ffi::*;

fn cs(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(bl_last_error()) }
        .to_str()
        .unwrap()
        .to_owned()
}

#[test]
fn solve_through_handles() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            bl_graph_from_family(cs("spider").as_ptr(), cs("2,2,2").as_ptr(), &mut g),
            BlStatus::Ok
        );
        assert_eq!(bl_graph_vertex_count(g), 7);
        let mut r = ptr::null_mut();
        assert_eq!(
            bl_solve(g, cs("alpha_bn").as_ptr(), 0, 1, &mut r),
            BlStatus::Ok
        );
        assert_eq!(bl_result_value(r), 6);
        assert!(bl_result_optimal(r));
        assert!(bl_result_nodes(r) > 0);
        let mut buf = [0u32; 7];
        assert_eq!(bl_result_witness(r, buf.as_mut_ptr(), 7), BlStatus::Ok);
        assert_eq!(buf.iter().sum::<u32>(), 6);
        assert_eq!(
            bl_result_witness(r, buf.as_mut_ptr(), 3),
            BlStatus::BufferTooSmall
        );
        let json = bl_result_to_json(r);
        assert!(CStr::from_ptr(json)
            .to_str()
            .unwrap()
            .starts_with(r#"{"kind":"alpha_bn","value":6"#));
        bl_string_free(json);
        bl_result_free(r);
        bl_graph_free(g);
    }
}

#[test]
fn graph6_and_edges() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            bl_graph_from_graph6(cs("Ch").as_ptr(), &mut g),
            BlStatus::Ok
        );
        let text = bl_graph_to_graph6(g);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), "Ch");
        bl_string_free(text);
        bl_graph_free(g);

        let edges = [0u32, 1, 1, 2, 2, 3];
        let mut h = ptr::null_mut();
        assert_eq!(
            bl_graph_from_edges(4, edges.as_ptr(), 3, &mut h),
            BlStatus::Ok
        );
        let mut r = ptr::null_mut();
        assert_eq!(
            bl_solve(h, cs("Gamma_b").as_ptr(), 0, 0, &mut r),
            BlStatus::Ok
        );
        assert_eq!(bl_result_value(r), 3);
        bl_result_free(r);
        bl_graph_free(h);
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            bl_graph_from_graph6(cs("B").as_ptr(), &mut g),
            BlStatus::Graph6
        );
        assert!(last_error().starts_with("graph6"));
        assert_eq!(
            bl_graph_from_graph6(ptr::null(), &mut g),
            BlStatus::NullPointer
        );
        assert_eq!(
            bl_graph_from_edges(2, [0u32, 5].as_ptr(), 1, &mut g),
            BlStatus::InvalidGraph
        );

        assert_eq!(
            bl_graph_from_edges(4, [0u32, 1, 2, 3].as_ptr(), 2, &mut g),
            BlStatus::Ok
        );
        let mut r = ptr::null_mut();
        assert_eq!(
            bl_solve(g, cs("alpha").as_ptr(), 0, 0, &mut r),
            BlStatus::Disconnected
        );
        assert_eq!(
            bl_solve(g, cs("beta").as_ptr(), 0, 0, &mut r),
            BlStatus::InvalidArgument
        );
        assert!(last_error().contains("beta"));
        assert!(r.is_null());
        bl_graph_free(g);

        assert_eq!(
            bl_solve(ptr::null(), cs("alpha").as_ptr(), 0, 0, &mut r),
            BlStatus::NullPointer
        );
        assert_eq!(bl_result_value(ptr::null()), 0);
        assert!(bl_result_to_json(ptr::null()).is_null());
        bl_graph_free(ptr::null_mut());
        bl_result_free(ptr::null_mut());
        bl_string_free(ptr::null_mut());
    }
}

#[test]
fn certificates_through_c_api() {
    unsafe {
        let mut w = 0u32;
        let status = bl_certificate_verify(
            cs("Hk_lambda").as_ptr(),
            cs("linked_trees_Hk").as_ptr(),
            cs("1").as_ptr(),
            &mut w,
        );
        assert_eq!(status, BlStatus::Ok);
        assert_eq!(w, 41);
        let status = bl_certificate_verify(
            cs("Tk_gamma_f").as_ptr(),
            cs("path").as_ptr(),
            cs("4").as_ptr(),
            &mut w,
        );
        assert_ne!(status, BlStatus::Ok);
        assert!(!last_error().is_empty());
        assert!(!CStr::from_ptr(bl_version()).to_str().unwrap().is_empty());
    }
}

//! Exercises the C ABI through the exported symbols, the way a foreign
//! caller would (modulo the calling language).

use std::ffi::{CStr, CString};
use std::ptr;

use ievec_capi::*;

fn cstring(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn last_error() -> String {
    CStr::from_ptr(ievec_last_error_message()).to_string_lossy().into_owned()
}

const THREE_SETS: &str =
    r#"{"type":"set_system","n":3,"points":[[1],[2],[3],[1,2],[2,3],[1,2,3]]}"#;

#[test]
fn parse_solve_validate_roundtrip() {
    unsafe {
        let text = cstring(THREE_SETS);
        let mut venn: *mut IevecVenn = ptr::null_mut();
        assert_eq!(ievec_venn_parse(text.as_ptr(), &mut venn), IevecStatus::Ok);
        assert_eq!(ievec_venn_set_count(venn), 3);
        assert_eq!(ievec_venn_region_count(venn), 6);

        let venn_json = ievec_venn_to_json(venn);
        assert!(CStr::from_ptr(venn_json).to_str().unwrap().contains("\"venn\""));
        ievec_string_free(venn_json);

        let mut mobius: *mut IevecVector = ptr::null_mut();
        assert_eq!(ievec_mobius(venn, &mut mobius), IevecStatus::Ok);
        assert_eq!(ievec_vector_support_size(mobius), 5);
        let l1 = ievec_vector_l1_decimal(mobius);
        assert_eq!(CStr::from_ptr(l1).to_str().unwrap(), "5");
        ievec_string_free(l1);
        assert_eq!(ievec_validate(venn, mobius, 5, 1), IevecStatus::Ok);

        let mut tube: *mut IevecVector = ptr::null_mut();
        assert_eq!(ievec_tube(venn, 0, 64, &mut tube), IevecStatus::Ok);
        assert_eq!(ievec_validate(venn, tube, 5, 1), IevecStatus::Ok);

        // tube JSON carries metadata and reparses to an equivalent handle
        let tube_json = ievec_vector_to_json(tube);
        let tube_text = CStr::from_ptr(tube_json).to_str().unwrap().to_owned();
        assert!(tube_text.contains("\"meta\""));
        let reparse = cstring(&tube_text);
        let mut back: *mut IevecVector = ptr::null_mut();
        assert_eq!(ievec_vector_parse(reparse.as_ptr(), &mut back), IevecStatus::Ok);
        let back_json = ievec_vector_to_json(back);
        assert_eq!(CStr::from_ptr(back_json).to_str().unwrap(), tube_text);
        ievec_string_free(back_json);
        ievec_string_free(tube_json);
        ievec_vector_free(back);

        ievec_vector_free(tube);
        ievec_vector_free(mobius);
        ievec_venn_free(venn);
    }
}

#[test]
fn error_paths_set_messages_and_codes() {
    unsafe {
        let mut venn: *mut IevecVenn = ptr::null_mut();

        let garbage = cstring("not json");
        assert_eq!(ievec_venn_parse(garbage.as_ptr(), &mut venn), IevecStatus::BadInput);
        assert!(last_error().contains("JSON"));

        let empty = cstring(r#"{"type":"set_system","n":2,"points":[[]]}"#);
        assert_eq!(ievec_venn_parse(empty.as_ptr(), &mut venn), IevecStatus::EmptyUnion);

        assert_eq!(
            ievec_venn_parse(ptr::null(), &mut venn),
            IevecStatus::NullArgument
        );
        let ok = cstring(THREE_SETS);
        assert_eq!(ievec_venn_parse(ok.as_ptr(), ptr::null_mut()), IevecStatus::NullArgument);

        // validation failure surfaces as its own status
        assert_eq!(ievec_venn_parse(ok.as_ptr(), &mut venn), IevecStatus::Ok);
        let broken = cstring(
            r#"{"type":"ie_vector","n":3,"terms":[{"set":[1],"coeff":"1"}]}"#,
        );
        let mut vector: *mut IevecVector = ptr::null_mut();
        assert_eq!(ievec_vector_parse(broken.as_ptr(), &mut vector), IevecStatus::Ok);
        assert_eq!(ievec_validate(venn, vector, 3, 0), IevecStatus::ValidationFailed);
        assert!(last_error().contains("region_sum"));

        // n mismatch is bad input, not a validation verdict
        let small = cstring(r#"{"type":"ie_vector","n":2,"terms":[{"set":[1],"coeff":"1"}]}"#);
        let mut small_vec: *mut IevecVector = ptr::null_mut();
        assert_eq!(ievec_vector_parse(small.as_ptr(), &mut small_vec), IevecStatus::Ok);
        assert_eq!(ievec_validate(venn, small_vec, 3, 0), IevecStatus::BadInput);

        ievec_vector_free(small_vec);
        ievec_vector_free(vector);
        ievec_venn_free(venn);
    }
}

use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use lcrng_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(lcr_last_error()) }.to_string_lossy().into_owned()
}

fn catalog(name: &str) -> CString {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/catalog").join(name);
    CString::new(std::fs::read_to_string(path).unwrap()).unwrap()
}

fn load(name: &str) -> *mut LcrStructure {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { lcr_structure_from_json(catalog(name).as_ptr(), &mut s) }, LcrStatus::Ok);
    s
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { lcr_string_free(p) };
    s
}

#[test]
fn r4_basics() {
    let s = load("r4.json");
    let (mut order, mut one, mut halo) = (0usize, 0usize, 0u64);
    unsafe {
        assert_eq!(lcr_structure_order(s, &mut order), LcrStatus::Ok);
        assert_eq!(lcr_structure_left_identity(s, &mut one), LcrStatus::Ok);
        assert_eq!(lcr_structure_halo_bits(s, &mut halo), LcrStatus::Ok);
    }
    assert_eq!((order, one, halo), (4, 1, 0b0101));
    let mut v = 99usize;
    assert_eq!(unsafe { lcr_induced_product(s, 3, 3, &mut v) }, LcrStatus::Ok);
    assert_eq!(v, 1);
    assert_eq!(unsafe { lcr_induced_product(s, 4, 0, &mut v) }, LcrStatus::InvalidInput);
    assert!(last_error().contains("out of range"));
    unsafe { lcr_structure_free(s) };
}

#[test]
fn json_round_trip_is_byte_exact() {
    let s = load("r8.json");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lcr_structure_to_json(s, &mut out) }, LcrStatus::Ok);
    let text = take_string(out);
    // the handle keeps the name but not the metadata
    assert!(text.contains("\"name\": \"R8 = Z4 ⋉ Z2\""));
    let mut again = ptr::null_mut();
    let c = CString::new(text.clone()).unwrap();
    assert_eq!(unsafe { lcr_structure_from_json(c.as_ptr(), &mut again) }, LcrStatus::Ok);
    let mut out2 = ptr::null_mut();
    unsafe { lcr_structure_to_json(again, &mut out2) };
    assert_eq!(take_string(out2), text);
    unsafe {
        lcr_structure_free(s);
        lcr_structure_free(again);
    }
}

#[test]
fn spectrum_and_lying_over() {
    let s = load("u8.json");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { lcr_spectrum_csv(s, &mut out) }, LcrStatus::Ok);
    let csv = take_string(out);
    assert!(csv.starts_with("subset;is_prime;components\n"));
    let diagonal = (1 << 0) | (1 << 3) | (1 << 4) | (1 << 7);
    assert_eq!(unsafe { lcr_verify_lying_over(s, diagonal, false) }, LcrStatus::Ok);
    assert_eq!(unsafe { lcr_verify_lying_over(s, 0b111, false) }, LcrStatus::InvalidInput);
    assert!(last_error().contains("not a subrng"));
    assert_eq!(unsafe { lcr_verify_lying_over(s, 1 << 9, false) }, LcrStatus::InvalidInput);
    unsafe { lcr_structure_free(s) };
}

#[test]
fn semidirect_constructor() {
    let mut s = ptr::null_mut();
    let (a, b) = (CString::new("zmod:2xzmod:2").unwrap(), CString::new("zmod:2").unwrap());
    let phi = CString::new("proj:0").unwrap();
    assert_eq!(
        unsafe { lcr_structure_semidirect(a.as_ptr(), b.as_ptr(), phi.as_ptr(), &mut s) },
        LcrStatus::Ok
    );
    let mut halo = 0u64;
    unsafe { lcr_structure_halo_bits(s, &mut halo) };
    assert_eq!(halo, (1 << 0) | (1 << 4));
    unsafe { lcr_structure_free(s) };

    let bad = CString::new("map:0,1,1,1").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(
        unsafe { lcr_structure_semidirect(a.as_ptr(), b.as_ptr(), bad.as_ptr(), &mut t) },
        LcrStatus::InvalidInput
    );
    assert!(t.is_null());
}

#[test]
fn errors_and_null_pointers() {
    let mut s = ptr::null_mut();
    let junk = CString::new("{\"kind\": ").unwrap();
    assert_eq!(unsafe { lcr_structure_from_json(junk.as_ptr(), &mut s) }, LcrStatus::InvalidInput);
    assert!(last_error().contains("malformed"));

    let broken = catalog("r4.json").into_string().unwrap().replacen(
        "[0, 1, 2, 3],\n    [0, 0, 0, 0],\n    [0, 1, 2, 3]",
        "[0, 1, 2, 3],\n    [0, 0, 0, 1],\n    [0, 1, 2, 3]",
        1,
    );
    let broken = CString::new(broken).unwrap();
    assert_eq!(unsafe { lcr_structure_from_json(broken.as_ptr(), &mut s) }, LcrStatus::Violation);
    assert!(!last_error().is_empty());

    let hl = catalog("r4_hl.json");
    assert_eq!(unsafe { lcr_structure_from_json(hl.as_ptr(), &mut s) }, LcrStatus::InvalidInput);

    assert_eq!(unsafe { lcr_structure_from_json(ptr::null(), &mut s) }, LcrStatus::NullPointer);
    assert_eq!(unsafe { lcr_structure_order(ptr::null(), &mut 0) }, LcrStatus::NullPointer);
    let r4 = load("r4.json");
    assert_eq!(unsafe { lcr_structure_order(r4, ptr::null_mut()) }, LcrStatus::NullPointer);
    assert_eq!(unsafe { lcr_spectrum_csv(r4, ptr::null_mut()) }, LcrStatus::NullPointer);
    assert_eq!(unsafe { lcr_structure_order(r4, &mut 0) }, LcrStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe {
        lcr_structure_free(r4);
        lcr_structure_free(ptr::null_mut());
        lcr_string_free(ptr::null_mut());
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let crate_dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(crate_dir.join("include/lcrng.h")).unwrap();
    for f in ["lcr_structure_from_json", "lcr_spectrum_csv", "lcr_last_error", "LCR_STATUS_VIOLATION"] {
        assert!(header.contains(f), "{f} missing from header");
    }
    let archive = target_dir().join("liblcrng_ffi.a");
    assert!(archive.exists(), "{} not built", archive.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("cc");
    assert!(status.success());
    let catalog = crate_dir.join("../core/catalog/r8.json");
    let out = Command::new(&exe).arg(catalog).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "order 8\nsubset;is_prime;components\n0,2;true;0,2/0\n0,2,4,6;true;0,2/0,4\n"
    );
}

//! C interface to the workbench.
//!
//! Structures are opaque handles created by `lcr_structure_from_json` or
//! `lcr_structure_semidirect` and released with `lcr_structure_free`. Every
//! function returns an [`LcrStatus`]; on anything but `LCR_STATUS_OK` a
//! message is available from `lcr_last_error` on the same thread. Strings
//! handed out by the library are freed with `lcr_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lcrng_core::cli::{parse_phi, parse_ring_spec};
use lcrng_core::constructions::semidirect_null;
use lcrng_core::format::{emit_structure, parse_structure, Document, Structure};
use lcrng_core::ideals::{spectrum, SubrngMode};
use lcrng_core::kernel::Subset;
use lcrng_core::lcrng::{induced_product, validate_lcrng, LcRng};
use lcrng_core::lyingover::{embed_check, verify_lying_over_all};

/// Result codes. Values 1 and 2 mirror the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcrStatus {
    Ok = 0,
    /// An axiom or claimed property fails.
    Violation = 1,
    /// Malformed input or an unmet precondition.
    InvalidInput = 2,
    NullPointer = 3,
    Panic = 4,
}

/// A validated left commutative rng.
pub struct LcrStructure {
    ring: LcRng,
    name: String,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

type Failure = (LcrStatus, String);

/// Runs `f`, recording its error message and turning panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LcrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LcrStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LcrStatus::Panic
        }
    }
}

fn null() -> Failure {
    (LcrStatus::NullPointer, "null pointer argument".into())
}

fn input(msg: impl ToString) -> Failure {
    (LcrStatus::InvalidInput, msg.to_string())
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|_| input("string is not UTF-8"))
}

unsafe fn handle<'a>(s: *const LcrStructure) -> Result<&'a LcrStructure, Failure> {
    s.as_ref().ok_or_else(null)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| input("output contains NUL"))
}

fn validated(raw: lcrng_core::lcrng::RawLcRng) -> Result<LcRng, Failure> {
    validate_lcrng(raw).map_err(|e| (LcrStatus::Violation, e.to_string()))
}

/// Parses a structure document of kind `lcrng` and validates it.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcr_structure_from_json(
    json: *const c_char,
    out: *mut *mut LcrStructure,
) -> LcrStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let doc = parse_structure(read_str(json)?).map_err(input)?;
        let Structure::LcRng(raw) = doc.structure else {
            return Err(input(format!("expected kind \"lcrng\", found {:?}", doc.structure.kind())));
        };
        let ring = validated(raw)?;
        write_out(out, Box::into_raw(Box::new(LcrStructure { ring, name: doc.name })))
    })
}

/// Builds `A ⋉ B` from ring specs such as `zmod:4` or `zmod:2xzmod:2` and a
/// homomorphism spec (`auto`, `id`, `reduce`, `proj:<i>`, `map:<i,j,...>`).
///
/// # Safety
/// String arguments must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcr_structure_semidirect(
    a: *const c_char,
    b: *const c_char,
    phi: *const c_char,
    out: *mut *mut LcrStructure,
) -> LcrStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let (a_spec, b_spec, phi_spec) = (read_str(a)?, read_str(b)?, read_str(phi)?);
        let ring_a = parse_ring_spec(a_spec).map_err(input)?;
        let ring_b = parse_ring_spec(b_spec).map_err(input)?;
        let hom = parse_phi(phi_spec, a_spec, &ring_a, &ring_b).map_err(input)?;
        let raw = semidirect_null(&ring_a, &ring_b, &hom).map_err(input)?;
        let ring = validated(raw)?;
        let name = format!("{a_spec} ⋉ {b_spec}");
        write_out(out, Box::into_raw(Box::new(LcrStructure { ring, name })))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lcr_structure_free(s: *mut LcrStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcr_structure_order(s: *const LcrStructure, out: *mut usize) -> LcrStatus {
    guard(|| write_out(out, handle(s)?.ring.order()))
}

/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcr_structure_left_identity(
    s: *const LcrStructure,
    out: *mut usize,
) -> LcrStatus {
    guard(|| write_out(out, handle(s)?.ring.left_identity()))
}

/// The halo as a bitmask: bit `i` is set when element `i` is in it.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcr_structure_halo_bits(s: *const LcrStructure, out: *mut u64) -> LcrStatus {
    guard(|| write_out(out, handle(s)?.ring.halo().bits()))
}

/// The canonical JSON document. Free the result with `lcr_string_free`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcr_structure_to_json(
    s: *const LcrStructure,
    out: *mut *mut c_char,
) -> LcrStatus {
    guard(|| {
        let h = handle(s)?;
        if out.is_null() {
            return Err(null());
        }
        let text = emit_structure(&Document::lcrng(h.name.clone(), &h.ring));
        write_out(out, into_c_string(text)?)
    })
}

/// `x•y = xy + yx - (yx)·1l`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcr_induced_product(
    s: *const LcrStructure,
    x: usize,
    y: usize,
    out: *mut usize,
) -> LcrStatus {
    guard(|| {
        let h = handle(s)?;
        let n = h.ring.order();
        if x >= n || y >= n {
            return Err(input(format!("element out of range 0..{n}")));
        }
        write_out(out, induced_product(&h.ring, x, y))
    })
}

/// The Hu-Liu prime ideals as `subset;is_prime;components` rows with a header
/// line. Free the result with `lcr_string_free`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lcr_spectrum_csv(s: *const LcrStructure, out: *mut *mut c_char) -> LcrStatus {
    guard(|| {
        let h = handle(s)?;
        if out.is_null() {
            return Err(null());
        }
        let mut text = String::from("subset;is_prime;components\n");
        for p in spectrum(&h.ring).primes {
            text.push_str(&format!(
                "{};true;{}/{}\n",
                p.carrier.to_list_string(),
                p.i0.to_list_string(),
                p.i1.to_list_string()
            ));
        }
        write_out(out, into_c_string(text)?)
    })
}

/// Checks lying-over for the subrng whose elements are the set bits of
/// `subset`. Returns `LCR_STATUS_OK` when every prime of the subrng has a
/// prime lying over it and every maximal element of each T-set is prime,
/// `LCR_STATUS_VIOLATION` otherwise, and `LCR_STATUS_INVALID_INPUT` when the
/// subset is not a subrng over which the structure is graded integral.
///
/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lcr_verify_lying_over(
    s: *const LcrStructure,
    subset: u64,
    lenient: bool,
) -> LcrStatus {
    guard(|| {
        let h = handle(s)?;
        let n = h.ring.order();
        if n < 64 && subset >> n != 0 {
            return Err(input(format!("subset has bits beyond order {n}")));
        }
        let mode = if lenient { SubrngMode::Lenient } else { SubrngMode::Strict };
        let pair = embed_check(&h.ring, &Subset::from_bits(n, subset), mode).map_err(input)?;
        let report = verify_lying_over_all(&pair);
        if report.pass && report.maximal_elements_ok() {
            Ok(())
        } else {
            Err((LcrStatus::Violation, "lying-over fails".into()))
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn lcr_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message for the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn lcr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

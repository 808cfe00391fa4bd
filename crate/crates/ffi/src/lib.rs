//! C ABI over `newton-roots`.
//!
//! Systems live behind an opaque [`NrSystem`] handle. Every call returns an
//! [`NrStatus`]; on failure the message is available from [`nr_last_error_message`].
//! Strings handed out by the library must be released with [`nr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use newton_roots::cli::{exit_code, EXIT_CONSISTENCY, EXIT_PRECONDITION, EXIT_USAGE};
use newton_roots::exactalg::rational::format_rational;
use newton_roots::exactalg::LaurentPolynomial;
use newton_roots::formulas::{bernstein_number, minkowski_of, product_over_roots, sum_over_roots, SystemInstance};
use newton_roots::parse::parse_laurent;
use newton_roots::polytope::{is_developed, mixed_volume_ie};
use newton_roots::Error;

/// Status codes; the nonzero values match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NrStatus {
    Ok = 0,
    Usage = 1,
    Precondition = 2,
    Consistency = 3,
    NullPointer = 4,
    Panic = 5,
}

/// A parsed system of `n` Laurent polynomials in `t1..tn`.
pub struct NrSystem {
    n: usize,
    system: Vec<LaurentPolynomial>,
    instance: Result<SystemInstance, Error>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> NrStatus {
    match exit_code(e) {
        EXIT_USAGE => NrStatus::Usage,
        EXIT_PRECONDITION => NrStatus::Precondition,
        EXIT_CONSISTENCY => NrStatus::Consistency,
        _ => NrStatus::Consistency,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (NrStatus, String)>) -> NrStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NrStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            NrStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (NrStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (NrStatus, String) {
    (NrStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, (NrStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    // SAFETY: caller passes a nul-terminated string.
    CStr::from_ptr(p).to_str().map_err(|_| (NrStatus::Usage, format!("{what} is not UTF-8")))
}

unsafe fn sys_arg<'a>(p: *const NrSystem) -> Result<&'a NrSystem, (NrStatus, String)> {
    // SAFETY: caller passes a handle from `nr_system_from_text` or null.
    p.as_ref().ok_or_else(|| null("system"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (NrStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| (NrStatus::Consistency, "string contains nul".to_string()))?;
    // SAFETY: `out` is a valid, writable pointer.
    *out = c.into_raw();
    Ok(())
}

fn instance(s: &NrSystem) -> Result<&SystemInstance, (NrStatus, String)> {
    s.instance.as_ref().map_err(|e| lib_err(e.clone()))
}

/// Parse `count` equations in `n` variables into a new handle.
///
/// # Safety
/// `equations` must point to `count` nul-terminated strings and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nr_system_from_text(
    n: usize,
    equations: *const *const c_char,
    count: usize,
    out: *mut *mut NrSystem,
) -> NrStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if equations.is_null() && count > 0 {
            return Err(null("equations"));
        }
        if n == 0 || count != n {
            return Err((NrStatus::Usage, format!("expected {n} equations in {n} variables, found {count}")));
        }
        let system = (0..count)
            .map(|i| {
                let s = str_arg(*equations.add(i), "equation")?;
                parse_laurent(s, n).map_err(lib_err)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let instance = SystemInstance::new(system.clone());
        *out = Box::into_raw(Box::new(NrSystem { n, system, instance }));
        Ok(())
    })
}

/// Release a handle; null is ignored.
///
/// # Safety
/// `system` must come from [`nr_system_from_text`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nr_system_free(system: *mut NrSystem) {
    if !system.is_null() {
        drop(Box::from_raw(system));
    }
}

/// Number of variables of the system.
///
/// # Safety
/// `system` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn nr_system_dimension(system: *const NrSystem) -> usize {
    system.as_ref().map_or(0, |s| s.n)
}

/// Whether the Newton polytopes form a developed collection.
///
/// # Safety
/// `system` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_is_developed(system: *const NrSystem, out: *mut bool) -> NrStatus {
    guard(|| {
        let s = sys_arg(system)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let ms = minkowski_of(&s.system).map_err(lib_err)?;
        *out = is_developed(&ms).developed;
        Ok(())
    })
}

/// Mixed volume by inclusion–exclusion, as a decimal string.
///
/// # Safety
/// `system` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_mixed_volume(system: *const NrSystem, out: *mut *mut c_char) -> NrStatus {
    guard(|| {
        let s = sys_arg(system)?;
        let ms = minkowski_of(&s.system).map_err(lib_err)?;
        put_string(out, mixed_volume_ie(ms.summands()).map_err(lib_err)?.to_string())
    })
}

/// Root count of a developed system, checked against the mixed volume.
///
/// # Safety
/// `system` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_bernstein_number(system: *const NrSystem, out: *mut *mut c_char) -> NrStatus {
    guard(|| {
        let inst = instance(sys_arg(system)?)?;
        put_string(out, bernstein_number(inst).map_err(lib_err)?.to_string())
    })
}

/// Product of the monomial `f0` over the roots, as `"p/q"`.
///
/// # Safety
/// `system` must be a live handle, `f0` a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_product_over_roots(
    system: *const NrSystem,
    f0: *const c_char,
    out: *mut *mut c_char,
) -> NrStatus {
    guard(|| {
        let s = sys_arg(system)?;
        let f = parse_laurent(str_arg(f0, "f0")?, s.n).map_err(lib_err)?;
        let m = f.as_monomial().ok_or_else(|| lib_err(Error::NotMonomial))?;
        let r = product_over_roots(&m, instance(s)?).map_err(lib_err)?;
        put_string(out, format_rational(&r))
    })
}

/// Sum of `f0` over the roots, as `"p/q"`.
///
/// # Safety
/// `system` must be a live handle, `f0` a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_sum_over_roots(
    system: *const NrSystem,
    f0: *const c_char,
    out: *mut *mut c_char,
) -> NrStatus {
    guard(|| {
        let s = sys_arg(system)?;
        let f = parse_laurent(str_arg(f0, "f0")?, s.n).map_err(lib_err)?;
        let r = sum_over_roots(&f, instance(s)?).map_err(lib_err)?;
        put_string(out, format_rational(&r))
    })
}

/// Combinatorial coefficients as JSON `[{"vertex":[..],"c":k},..]` in vertex order.
///
/// # Safety
/// `system` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn nr_coefficients_json(system: *const NrSystem, out: *mut *mut c_char) -> NrStatus {
    guard(|| {
        let inst = instance(sys_arg(system)?)?;
        let rows: Vec<serde_json::Value> = inst
            .vertices()
            .iter()
            .zip(inst.coefficients())
            .map(|(v, c)| serde_json::json!({ "vertex": v.to_vec(), "c": c }))
            .collect();
        put_string(out, serde_json::Value::Array(rows).to_string())
    })
}

/// Copy of the last error message on this thread, or null if the last call succeeded.
/// Release with [`nr_string_free`].
#[no_mangle]
pub extern "C" fn nr_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Release a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

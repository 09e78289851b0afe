//! C ABI for `cyclohecke`.
//!
//! Every fallible function returns a [`ChStatus`]; on failure the message is
//! available from [`ch_last_error_message`] on the same thread. Strings
//! returned through `out` pointers are owned by the caller and released with
//! [`ch_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cyclohecke::canon::decomposition_matrix;
use cyclohecke::exactnum::Scalar;
use cyclohecke::fock::{is_kleshchev, FockConfig};
use cyclohecke::hecke::{is_semisimple, HeckeAlgebra, HeckeParams};
use cyclohecke::linalg;
use cyclohecke::multiseg::count_aperiodic;
use cyclohecke::shapes::{Modulus, Multipartition};
use cyclohecke::specht::CellularTable;
use cyclohecke::Error;

/// Result codes. The first four match the command-line exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChStatus {
    Ok = 0,
    InvalidArgument = 1,
    AssertionFailed = 2,
    ResourceCap = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Opaque handle to a cyclotomic Hecke algebra.
pub struct ChHecke {
    alg: HeckeAlgebra<Scalar>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ChStatus {
    match e {
        Error::Invariant(_) | Error::Singular | Error::NotDivisible(..) => ChStatus::AssertionFailed,
        Error::ResourceCap(_) => ChStatus::ResourceCap,
        _ => ChStatus::InvalidArgument,
    }
}

enum Failure {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Run `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> ChStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ChStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_error(&format!("null pointer: {what}"));
            ChStatus::NullPointer
        }
        Err(_) => {
            set_error("internal panic");
            ChStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Lib(Error::Parse(format!("{what} is not UTF-8"))))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn modulus(r: u32) -> Result<Modulus, Failure> {
    match r {
        0 => Ok(Modulus::Infinite),
        1 => Err(Failure::Lib(Error::InvalidArgument("r must be 0 (infinite) or >= 2".into()))),
        r => Ok(Modulus::Finite(r)),
    }
}

/// Build `H_n(v_1, …, v_m; q)`. `q` and each of the `m` entries of `v` use the
/// scalar syntax `p/q`, `z{e}^{a}` and sums. Refuses dimensions above
/// `max_dim`.
///
/// # Safety
/// `q` must be a nul-terminated string, `v` an array of `m` such strings and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_hecke_new(
    m: usize,
    n: usize,
    q: *const c_char,
    v: *const *const c_char,
    max_dim: usize,
    out: *mut *mut ChHecke,
) -> ChStatus {
    guard(|| {
        let q: Scalar = str_arg(q, "q")?.parse()?;
        if v.is_null() {
            return Err(Failure::Null("v"));
        }
        let v = (0..m)
            .map(|k| Ok(str_arg(*v.add(k), "v[k]")?.parse::<Scalar>()?))
            .collect::<Result<Vec<_>, Failure>>()?;
        let params = HeckeParams::new(m, n, q, v)?;
        let dim = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(m)?.checked_mul(k));
        if dim.map_or(true, |d| d > max_dim) {
            return Err(Error::ResourceCap(format!("dimension for m={m}, n={n} exceeds {max_dim}")).into());
        }
        let alg = HeckeAlgebra::new(&params)?;
        write_out(out, Box::into_raw(Box::new(ChHecke { alg })), "out")
    })
}

/// # Safety
/// `h` must come from [`ch_hecke_new`] and not be used afterwards. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn ch_hecke_free(h: *mut ChHecke) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// `m^n n!`, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ch_hecke_dim(h: *const ChHecke) -> usize {
    h.as_ref().map_or(0, |h| h.alg.dim())
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_hecke_is_semisimple(h: *const ChHecke, out: *mut bool) -> ChStatus {
    guard(|| {
        let h = h.as_ref().ok_or(Failure::Null("h"))?;
        write_out(out, is_semisimple(h.alg.params()).semisimple, "out")
    })
}

/// Rank of the Gram matrix of `S^λ`, i.e. `dim D^λ`.
///
/// # Safety
/// `h` must be a live handle, `lambda` a nul-terminated string such as
/// `"[[2],[1]]"` and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_gram_rank(h: *const ChHecke, lambda: *const c_char, out: *mut usize) -> ChStatus {
    guard(|| {
        let h = h.as_ref().ok_or(Failure::Null("h"))?;
        let lambda = Multipartition::parse(str_arg(lambda, "lambda")?)?;
        let table = CellularTable::new(&h.alg)?;
        write_out(out, linalg::rank(&table.gram(&lambda)?), "out")
    })
}

/// JSON array of the shapes with `D^λ ≠ 0`.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_simple_labels_json(h: *const ChHecke, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let h = h.as_ref().ok_or(Failure::Null("h"))?;
        let labels: Vec<String> = CellularTable::new(&h.alg)?
            .simple_labels()?
            .iter()
            .map(|l| l.to_string())
            .collect();
        let json = serde_json::to_string(&labels).expect("json");
        write_out(out, to_c_string(json), "out")
    })
}

/// Kleshchev test for `λ` with modulus `r` (0 for infinity) and residues
/// `gamma[0..m]`.
///
/// # Safety
/// `gamma` must point to `m` integers, `lambda` be a nul-terminated string
/// and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_is_kleshchev(
    r: u32,
    gamma: *const i64,
    m: usize,
    lambda: *const c_char,
    out: *mut bool,
) -> ChStatus {
    guard(|| {
        if gamma.is_null() {
            return Err(Failure::Null("gamma"));
        }
        let cfg = FockConfig::new(modulus(r)?, std::slice::from_raw_parts(gamma, m).to_vec())?;
        let lambda = Multipartition::parse(str_arg(lambda, "lambda")?)?;
        write_out(out, is_kleshchev(&lambda, &cfg)?, "out")
    })
}

/// Decomposition matrix of the Hecke algebra of `S_n` at `q = ζ_r`, as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_llt_decomposition_json(n: usize, r: u32, out: *mut *mut c_char) -> ChStatus {
    guard(|| {
        let d = decomposition_matrix(n, r)?;
        write_out(out, to_c_string(d.to_json().to_string()), "out")
    })
}

/// Number of aperiodic multisegments of size `n` over `Z/r`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ch_count_aperiodic(n: usize, r: u32, out: *mut u64) -> ChStatus {
    guard(|| write_out(out, count_aperiodic(n, r)? as u64, "out"))
}

/// Message of the last failure on this thread, or null. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn ch_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn ch_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

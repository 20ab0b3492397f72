//! C ABI over the cayley engine. Objects cross the boundary as opaque
//! handles; every call returns a status code, and the message of the last
//! failure on the calling thread is available from `cayley_last_error`.

use cayley::cg_algebra::{MeetSide, OrderedBasis, PeanoSpace};
use cayley::cli::{eval, parse, print_value, Env, Value};
use cayley::letterplace::{word, Straightener, TermOrder, DEFAULT_BUDGET};
use cayley::ring::parse_q;
use cayley::whitney::{exchange_check, Matroid};
use cayley::{Error, ExteriorElement, Exterior};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleyStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    DimensionMismatch = 4,
    InvalidArgument = 5,
    BudgetExceeded = 6,
    MalformedMatroid = 7,
    Evaluation = 8,
    Internal = 9,
}

/// Exterior algebra element with rational coefficients.
pub struct CayleyExterior(ExteriorElement);

pub struct CayleyMatroid(Matroid);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CayleyStatus {
    match e {
        Error::Syntax { .. } => CayleyStatus::Syntax,
        Error::DimensionMismatch(..) | Error::FoldMismatch(..) => CayleyStatus::DimensionMismatch,
        Error::BudgetExceeded(_) | Error::ComponentTooLarge(..) => CayleyStatus::BudgetExceeded,
        Error::MalformedMatroid(_) => CayleyStatus::MalformedMatroid,
        Error::Eval(_) => CayleyStatus::Evaluation,
        _ => CayleyStatus::InvalidArgument,
    }
}

struct Fail(CayleyStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> CayleyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CayleyStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            CayleyStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(CayleyStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(CayleyStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(CayleyStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(CayleyStatus::NullPointer, "null output pointer".into()));
    }
    out.write(v);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread; valid until the next
/// failing call.
#[no_mangle]
pub extern "C" fn cayley_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn cayley_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates an expression in the standard space and writes its canonical
/// printout to `out` (free with `cayley_string_free`).
///
/// # Safety
/// `expr` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_eval(expr: *const c_char, dim: usize, out: *mut *mut c_char) -> CayleyStatus {
    guard(|| {
        let e = parse(text(expr)?)?;
        let v = eval(&e, &Env::standard(dim))?;
        put(out, owned_string(print_value(&v)))
    })
}

/// Straightens a bitableau or letterplace expression into standard
/// bitableaux; `budget` 0 selects the default.
///
/// # Safety
/// `expr` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_straighten(expr: *const c_char, budget: u64, out: *mut *mut c_char) -> CayleyStatus {
    guard(|| {
        let e = parse(text(expr)?)?;
        let budget = if budget == 0 { DEFAULT_BUDGET } else { budget };
        let mut s = Straightener::new(TermOrder::default(), budget);
        let r = match eval(&e, &Env::standard(3))? {
            Value::Bitableau(b) => s.straighten(&b)?,
            Value::Letterplace(lp) => s.standard_expansion(&lp)?,
            _ => return Err(Fail(CayleyStatus::InvalidArgument, "not a letterplace expression".into())),
        };
        put(out, owned_string(print_value(&Value::Bitableau(r))))
    })
}

/// Builds a vector from `dim` rational coordinates given as strings
/// ("3", "-1/2").
///
/// # Safety
/// `coords` must point to `dim` valid C strings; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cayley_vector_new(
    coords: *const *const c_char,
    dim: usize,
    out: *mut *mut CayleyExterior,
) -> CayleyStatus {
    guard(|| {
        if coords.is_null() || dim == 0 || dim > 64 {
            return Err(Fail(CayleyStatus::InvalidArgument, "need 1..=64 coordinates".into()));
        }
        let mut v = Vec::with_capacity(dim);
        for i in 0..dim {
            let s = text(*coords.add(i))?;
            v.push(parse_q(s).ok_or_else(|| Fail(CayleyStatus::InvalidArgument, format!("bad rational {s:?}")))?);
        }
        put(out, Box::into_raw(Box::new(CayleyExterior(Exterior::from_vector(&v)))))
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_wedge(
    a: *const CayleyExterior,
    b: *const CayleyExterior,
    out: *mut *mut CayleyExterior,
) -> CayleyStatus {
    guard(|| {
        let r = handle(a)?.0.wedge(&handle(b)?.0)?;
        put(out, Box::into_raw(Box::new(CayleyExterior(r))))
    })
}

/// Meet with respect to the standard integral e₁ ∧ ⋯ ∧ eₙ.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_meet(
    a: *const CayleyExterior,
    b: *const CayleyExterior,
    out: *mut *mut CayleyExterior,
) -> CayleyStatus {
    guard(|| {
        let (a, b) = (&handle(a)?.0, &handle(b)?.0);
        let r = PeanoSpace::standard(a.dim()).meet(a, b, MeetSide::Left)?;
        put(out, Box::into_raw(Box::new(CayleyExterior(r))))
    })
}

/// Hodge star of the standard basis.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_hodge(a: *const CayleyExterior, out: *mut *mut CayleyExterior) -> CayleyStatus {
    guard(|| {
        let a = &handle(a)?.0;
        let r = OrderedBasis::standard(a.dim()).hodge(a)?;
        put(out, Box::into_raw(Box::new(CayleyExterior(r))))
    })
}

/// Canonical printout of an exterior element.
///
/// # Safety
/// `a` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_exterior_to_string(a: *const CayleyExterior, out: *mut *mut c_char) -> CayleyStatus {
    guard(|| {
        let s = print_value(&Value::Ext(handle(a)?.0.clone()));
        put(out, owned_string(s))
    })
}

/// # Safety
/// `a` must come from this library or be null; it must not be used again.
#[no_mangle]
pub unsafe extern "C" fn cayley_exterior_free(a: *mut CayleyExterior) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Parses a matroid document such as `{"kind":"uniform","n":4,"k":2}`.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_matroid_from_json(json: *const c_char, out: *mut *mut CayleyMatroid) -> CayleyStatus {
    guard(|| {
        let m = Matroid::from_json(text(json)?)?;
        put(out, Box::into_raw(Box::new(CayleyMatroid(m))))
    })
}

/// Rank of the set of letters in `letters` (e.g. "abc").
///
/// # Safety
/// `m` must be a live handle, `letters` a valid C string, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cayley_matroid_rank(
    m: *const CayleyMatroid,
    letters: *const c_char,
    out: *mut usize,
) -> CayleyStatus {
    guard(|| {
        let w = letters_of(text(letters)?)?;
        put(out, handle(m)?.0.rank(&w)?)
    })
}

fn letters_of(s: &str) -> Result<Vec<cayley::letterplace::Letter>, Fail> {
    if !s.chars().all(|c| c.is_ascii_alphabetic()) {
        return Err(Fail(CayleyStatus::InvalidArgument, format!("bad word {s:?}")));
    }
    Ok(word(s))
}

/// Whether the exchange relation for independent words u, v holds in the
/// Whitney algebra (normal form and brute-force ideal membership).
///
/// # Safety
/// `m` must be a live handle, `u`, `v` valid C strings, `holds` valid.
#[no_mangle]
pub unsafe extern "C" fn cayley_exchange_check(
    m: *const CayleyMatroid,
    u: *const c_char,
    v: *const c_char,
    holds: *mut bool,
) -> CayleyStatus {
    guard(|| {
        let (u, v) = (letters_of(text(u)?)?, letters_of(text(v)?)?);
        put(holds, exchange_check(&u, &v, &handle(m)?.0)?)
    })
}

/// # Safety
/// `m` must come from this library or be null; it must not be used again.
#[no_mangle]
pub unsafe extern "C" fn cayley_matroid_free(m: *mut CayleyMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Runs a named identity suite and writes the number of failed checks.
///
/// # Safety
/// `suite` must be a valid C string and `failed` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cayley_verify(suite: *const c_char, seed: u64, failed: *mut usize) -> CayleyStatus {
    guard(|| {
        let reports = cayley::identity_suite::run_suite(text(suite)?, seed)?;
        put(failed, reports.iter().filter(|r| !r.equal).count())
    })
}

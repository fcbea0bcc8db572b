//! C ABI for the propiso decision procedures.
//!
//! Formulas are opaque handles created by [`propiso_parse`] and released
//! with [`propiso_formula_free`]. Every fallible call returns a
//! [`PropisoStatus`] and writes its result through an out pointer; on failure
//! [`propiso_last_error`] describes the problem. Strings returned by the
//! library are owned by the caller and released with [`propiso_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use propiso::canon::{ac_canonical, nnf_formula};
use propiso::construct::{decide_iso_boolean_capped, decide_iso_generality};
use propiso::semantics::is_tautology_capped;
use propiso::{Error, Formula};

/// Default cap on distinct letters for truth-table checks.
pub const PROPISO_DEFAULT_LETTER_CAP: usize = 24;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PropisoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    /// The formula is outside the language an operation accepts.
    WrongLanguage = 4,
    LetterCap = 5,
    /// Any other library error; see `propiso_last_error`.
    Failed = 6,
    Panic = 7,
}

/// Opaque formula handle.
pub struct PropisoFormula {
    formula: Formula,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PropisoStatus {
    match e {
        Error::Parse(_) => PropisoStatus::ParseError,
        Error::WrongLanguage { .. } | Error::NotNegReduced => PropisoStatus::WrongLanguage,
        Error::LetterCap { .. } => PropisoStatus::LetterCap,
        _ => PropisoStatus::Failed,
    }
}

enum Failure {
    Status(PropisoStatus, String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

/// Runs `body`, recording failures and turning panics into `Panic`.
fn guarded(body: impl FnOnce() -> Result<(), Failure>) -> PropisoStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PropisoStatus::Ok,
        Ok(Err(Failure::Status(s, message))) => {
            set_error(&message);
            s
        }
        Ok(Err(Failure::Library(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            PropisoStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::Status(PropisoStatus::NullPointer, format!("{what} is null"))
}

unsafe fn formula<'a>(h: *const PropisoFormula, what: &str) -> Result<&'a Formula, Failure> {
    h.as_ref().map(|h| &h.formula).ok_or_else(|| null(what))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("rendered formulas contain no nul").into_raw()
}

fn boxed(formula: Formula) -> *mut PropisoFormula {
    Box::into_raw(Box::new(PropisoFormula { formula }))
}

/// Parses `text` (nul-terminated UTF-8) into a new handle stored in `*out`.
///
/// # Safety
/// `text` must be null or a valid nul-terminated string; `out` must be null
/// or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn propiso_parse(text: *const c_char, out: *mut *mut PropisoFormula) -> PropisoStatus {
    guarded(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure::Status(PropisoStatus::InvalidUtf8, e.to_string()))?;
        *out = boxed(propiso::parse(text).map_err(Error::from)?);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `f` must be null or a handle returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn propiso_formula_free(f: *mut PropisoFormula) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Renders the formula in the input syntax; null if `f` is null.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn propiso_formula_to_string(f: *const PropisoFormula) -> *mut c_char {
    match f.as_ref() {
        Some(h) => to_c_string(h.formula.to_string()),
        None => ptr::null_mut(),
    }
}

/// Number of letter occurrences; 0 if `f` is null.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn propiso_formula_size(f: *const PropisoFormula) -> usize {
    f.as_ref().map_or(0, |h| h.formula.size())
}

/// Negation normal form as a new handle.
///
/// # Safety
/// `f` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn propiso_nnf(f: *const PropisoFormula, out: *mut *mut PropisoFormula) -> PropisoStatus {
    guarded(|| {
        let out = out_ref(out)?;
        *out = boxed(nnf_formula(formula(f, "formula")?));
        Ok(())
    })
}

/// AC-canonical form, e.g. `AND[p, p, q]`, as a caller-owned string.
///
/// # Safety
/// `f` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn propiso_canonical(f: *const PropisoFormula, out: *mut *mut c_char) -> PropisoStatus {
    guarded(|| {
        let out = out_ref(out)?;
        *out = to_c_string(ac_canonical(formula(f, "formula")?).to_string());
        Ok(())
    })
}

/// Truth-table check over at most `max_letters` distinct letters.
///
/// # Safety
/// `f` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn propiso_is_tautology(
    f: *const PropisoFormula,
    max_letters: usize,
    out: *mut bool,
) -> PropisoStatus {
    guarded(|| {
        let out = out_ref(out)?;
        *out = is_tautology_capped(formula(f, "formula")?, max_letters)?;
        Ok(())
    })
}

/// Theoremhood of `a <-> b` under associativity, commutativity, double
/// negation and De Morgan; this is isomorphism in the generality sense.
/// Formulas with constants are rejected with `WrongLanguage`.
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn propiso_iso_generality(
    a: *const PropisoFormula,
    b: *const PropisoFormula,
    out: *mut bool,
) -> PropisoStatus {
    guarded(|| {
        let out = out_ref(out)?;
        *out = decide_iso_generality(formula(a, "a")?, formula(b, "b")?)?.iso;
        Ok(())
    })
}

/// Isomorphism in the Boolean category.
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn propiso_iso_boolean(
    a: *const PropisoFormula,
    b: *const PropisoFormula,
    max_letters: usize,
    out: *mut bool,
) -> PropisoStatus {
    guarded(|| {
        let out = out_ref(out)?;
        *out = decide_iso_boolean_capped(formula(a, "a")?, formula(b, "b")?, max_letters)?.iso;
        Ok(())
    })
}

/// Boolean isomorphism witness as JSON
/// (`{"f": [[s,t],...], "g": [...], "gf_is_identity": .., "fg_is_identity": ..}`),
/// or the string `null` when the formulas are not isomorphic.
///
/// # Safety
/// `a`, `b` must be null or live handles; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn propiso_iso_witness_json(
    a: *const PropisoFormula,
    b: *const PropisoFormula,
    max_letters: usize,
    out: *mut *mut c_char,
) -> PropisoStatus {
    guarded(|| {
        let out = out_ref(out)?;
        let v = decide_iso_boolean_capped(formula(a, "a")?, formula(b, "b")?, max_letters)?;
        let json = serde_json::to_string(&v.witness.map(|w| w.to_json())).expect("plain data serializes");
        *out = to_c_string(json);
        Ok(())
    })
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn propiso_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn propiso_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

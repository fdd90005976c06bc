//! C ABI over the mini-language codec, passes, folds and law suites.
//!
//! Every function returns an [`MpStatus`]; on failure a description is
//! available from [`mp_last_error`] until the next call on the same thread.
//! Handles and strings returned here are owned by the caller and released
//! with [`mp_term_free`] and [`mp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use multiplate::minilang::codec::{encode, read_term, ReadError};
use multiplate::minilang::passes::{
    collect_vars_fold, count_nodes_fold, parse_pipeline, run_pipeline,
};
use multiplate::minilang::{Sort, Term};
use multiplate::suites::{self, Suite, SuiteOptions, MAX_SIZE};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MpStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DecodeError = 4,
    /// Unknown pass, sort or suite name, or a size out of range.
    Usage = 5,
    /// A law suite ran and at least one law failed.
    LawFailure = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

/// An owned mini-language term of any sort.
pub struct MpTerm {
    term: Term,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', "\\0")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(MpStatus, String);

type Outcome = Result<(), Fail>;

fn guard(body: impl FnOnce() -> Outcome) -> MpStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MpStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MpStatus::Internal
        }
    }
}

/// # Safety
/// `p` is null or a NUL-terminated string valid for the call.
unsafe fn utf8<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(MpStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(MpStatus::InvalidUtf8, format!("{what}: {e}")))
}

/// # Safety
/// `p` is null or a handle from [`mp_term_parse`] not yet freed.
unsafe fn term<'a>(p: *const MpTerm) -> Result<&'a Term, Fail> {
    p.as_ref()
        .map(|t| &t.term)
        .ok_or_else(|| Fail(MpStatus::NullArgument, "term is null".into()))
}

fn check_out<T>(out: *mut T) -> Outcome {
    if out.is_null() {
        Err(Fail(
            MpStatus::NullArgument,
            "output pointer is null".into(),
        ))
    } else {
        Ok(())
    }
}

fn owned_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s).map(CString::into_raw).map_err(|e| {
        Fail(
            MpStatus::InvalidUtf8,
            format!("result holds a NUL byte at {}", e.nul_position()),
        )
    })
}

/// Parses and decodes `text`. `root` names the sort (`stm`, `expr`, `var`,
/// `typ`) or is null to infer it from the head constructor.
///
/// # Safety
/// `text` is a NUL-terminated string; `root` is null or one; `out` is
/// writable.
#[no_mangle]
pub unsafe extern "C" fn mp_term_parse(
    text: *const c_char,
    root: *const c_char,
    out: *mut *mut MpTerm,
) -> MpStatus {
    guard(|| {
        check_out(out)?;
        let source = utf8(text, "text")?;
        let sort = if root.is_null() {
            None
        } else {
            let name = utf8(root, "root")?;
            Some(
                name.parse::<Sort>()
                    .map_err(|e| Fail(MpStatus::Usage, e.to_string()))?,
            )
        };
        let term = read_term(source, sort).map_err(|e| match e {
            ReadError::Parse(_) => Fail(MpStatus::ParseError, e.to_string()),
            ReadError::Decode(_) => Fail(MpStatus::DecodeError, e.to_string()),
        })?;
        *out = Box::into_raw(Box::new(MpTerm { term }));
        Ok(())
    })
}

/// Releases a term. Null is ignored.
///
/// # Safety
/// `t` is null or a live handle from [`mp_term_parse`].
#[no_mangle]
pub unsafe extern "C" fn mp_term_free(t: *mut MpTerm) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Runs a comma-separated pipeline of `rename` and `constfold` in place.
/// An unknown pass name leaves the term untouched.
///
/// # Safety
/// `t` is a live handle; `passes` is a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn mp_term_apply_passes(t: *mut MpTerm, passes: *const c_char) -> MpStatus {
    guard(|| {
        let handle = t
            .as_mut()
            .ok_or_else(|| Fail(MpStatus::NullArgument, "term is null".into()))?;
        let csv = utf8(passes, "passes")?;
        let pipeline = parse_pipeline(csv).map_err(|e| Fail(MpStatus::Usage, e.to_string()))?;
        let term = std::mem::replace(&mut handle.term, Term::Typ(multiplate::minilang::Typ::TInt));
        handle.term = run_pipeline(&pipeline, term);
        Ok(())
    })
}

/// Writes the canonical s-expression, without a trailing newline.
///
/// # Safety
/// `t` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn mp_term_to_sexpr(t: *const MpTerm, out: *mut *mut c_char) -> MpStatus {
    guard(|| {
        check_out(out)?;
        *out = owned_string(encode(term(t)?).to_string())?;
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` is null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Counts constructor nodes.
///
/// # Safety
/// `t` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn mp_term_count_nodes(t: *const MpTerm, out: *mut i64) -> MpStatus {
    guard(|| {
        check_out(out)?;
        *out = count_nodes_fold(term(t)?);
        Ok(())
    })
}

/// Variable names in preorder, one per line, each line newline-terminated.
///
/// # Safety
/// `t` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn mp_term_collect_vars(t: *const MpTerm, out: *mut *mut c_char) -> MpStatus {
    guard(|| {
        check_out(out)?;
        let names: String = collect_vars_fold(term(t)?)
            .iter()
            .map(|v| format!("{v}\n"))
            .collect();
        *out = owned_string(names)?;
        Ok(())
    })
}

/// Runs a law suite by name (`store`, `cartesian`, `lens`, `biplate`, `vl`,
/// `multiplate`, `all`) at term-size bound `size`, 0 meaning the default.
/// `failed` receives the number of failing laws and may be null.
///
/// # Safety
/// `suite` is a NUL-terminated string; `failed` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn mp_run_laws(
    suite: *const c_char,
    size: u32,
    failed: *mut u32,
) -> MpStatus {
    guard(|| {
        let name = utf8(suite, "suite")?;
        let suite: Suite = name
            .parse()
            .map_err(|e: suites::UnknownSuite| Fail(MpStatus::Usage, e.to_string()))?;
        let mut opts = SuiteOptions::default();
        if size != 0 {
            if size as usize > MAX_SIZE {
                return Err(Fail(
                    MpStatus::Usage,
                    format!("size {size} exceeds {MAX_SIZE}"),
                ));
            }
            opts.size = size as usize;
        }
        let lines = suites::run(suite, &opts);
        let bad: Vec<_> = lines.iter().filter(|l| !l.passed()).collect();
        if !failed.is_null() {
            *failed = bad.len() as u32;
        }
        match bad.first() {
            None => Ok(()),
            Some(first) => Err(Fail(MpStatus::LawFailure, first.to_string())),
        }
    })
}

/// The message for the last failing call on this thread, or null. Valid
/// until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn mp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

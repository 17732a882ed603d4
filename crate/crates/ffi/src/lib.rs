//! C ABI for the appell2 library.
//!
//! Every evaluator writes its result through an out-pointer and returns an
//! [`Appell2Status`] code. Expressions and corpora are opaque handles with
//! explicit free functions; strings returned by the library must be released
//! with [`appell2_string_free`].
//!
//! Safety contract, uniformly: pointer arguments must be null or valid for
//! the call; handles must come from this library and not be used after free.

#![allow(clippy::missing_safety_doc)]
// Scalar C signatures mirror the mathematical parameter lists.
#![allow(clippy::too_many_arguments)]

use appell2::appell::{
    f2_double_integral, f2_series, f2_single_integral, f2_theorem1_log, f2_theorem1_shift,
    EvalPoint, F2Params,
};
use appell2::dsl::{eval_expr, load_corpus, parse_expr, CorpusEntry, Expr};
use appell2::error::MathError;
use appell2::special::{clausen3f2_series, gauss2f1_euler, gauss2f1_series, HypParams2F1, HypParams3F2};
use appell2::verify::{verify_builtins, verify_corpus, GridSpec, VerifySettings};
use libc::{c_char, size_t};
use std::ffi::{CStr, CString};
use std::fs::File;
use std::io::BufReader;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Appell2Status {
    Ok = 0,
    /// Argument outside the routine's domain or a violated precondition.
    DomainError = 1,
    /// A lower parameter sits on a non-positive integer.
    PoleError = 2,
    /// A parameter value the formula itself excludes.
    ParamError = 3,
    /// A series hit its term cap before reaching the tolerance.
    NoConverge = 4,
    /// A required pointer argument was null.
    NullArg = 5,
    /// A string argument was not valid UTF-8.
    Utf8Error = 6,
    /// Expression or corpus text failed to parse.
    ParseError = 7,
    /// File could not be read.
    IoError = 8,
    /// Expression evaluation failed (domain of ln, sqrt, ...).
    EvalError = 9,
}

fn status_of(err: &MathError) -> Appell2Status {
    match err {
        MathError::Domain(_) => Appell2Status::DomainError,
        MathError::Pole(_) => Appell2Status::PoleError,
        MathError::Param(_) => Appell2Status::ParamError,
    }
}

unsafe fn write_out(out: *mut f64, value: f64) -> Appell2Status {
    if out.is_null() {
        return Appell2Status::NullArg;
    }
    *out = value;
    Appell2Status::Ok
}

/// F2 by the defining double series. `tol` is the relative stopping
/// tolerance; the value lands in `*out`.
#[no_mangle]
pub unsafe extern "C" fn appell2_f2_series(
    sigma: f64,
    alpha1: f64,
    alpha2: f64,
    beta1: f64,
    beta2: f64,
    x: f64,
    y: f64,
    tol: f64,
    out: *mut f64,
) -> Appell2Status {
    let p = F2Params::new(sigma, alpha1, alpha2, beta1, beta2);
    match f2_series(&p, EvalPoint::new(x, y), tol) {
        Ok(r) if r.diagnostics.converged => write_out(out, r.value),
        Ok(_) => Appell2Status::NoConverge,
        Err(e) => status_of(&e),
    }
}

/// F2 by the single-integral route (needs beta1 > alpha1 > 0).
#[no_mangle]
pub unsafe extern "C" fn appell2_f2_single_integral(
    sigma: f64,
    alpha1: f64,
    alpha2: f64,
    beta1: f64,
    beta2: f64,
    x: f64,
    y: f64,
    tol: f64,
    out: *mut f64,
) -> Appell2Status {
    let p = F2Params::new(sigma, alpha1, alpha2, beta1, beta2);
    match f2_single_integral(&p, EvalPoint::new(x, y), tol) {
        Ok(r) => write_out(out, r.value),
        Err(e) => status_of(&e),
    }
}

/// F2 by the tensor-product double integral (needs beta_j > alpha_j > 0);
/// fixed accuracy target around 1e-6.
#[no_mangle]
pub unsafe extern "C" fn appell2_f2_double_integral(
    sigma: f64,
    alpha1: f64,
    alpha2: f64,
    beta1: f64,
    beta2: f64,
    x: f64,
    y: f64,
    out: *mut f64,
) -> Appell2Status {
    let p = F2Params::new(sigma, alpha1, alpha2, beta1, beta2);
    match f2_double_integral(&p, EvalPoint::new(x, y)) {
        Ok(r) => write_out(out, r.value),
        Err(e) => status_of(&e),
    }
}

/// F2(a+1; alpha1, 1; beta1, 2; x, y) by the two-term 2F1 combination.
#[no_mangle]
pub unsafe extern "C" fn appell2_f2_theorem1_shift(
    a: f64,
    alpha1: f64,
    beta1: f64,
    x: f64,
    y: f64,
    tol: f64,
    out: *mut f64,
) -> Appell2Status {
    match f2_theorem1_shift(a, alpha1, beta1, EvalPoint::new(x, y), tol) {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    }
}

/// F2(1; alpha1, 1; beta1, 2; x, y) by the 3F2 bracket plus -ln(1-y)/y.
#[no_mangle]
pub unsafe extern "C" fn appell2_f2_theorem1_log(
    alpha1: f64,
    beta1: f64,
    x: f64,
    y: f64,
    tol: f64,
    out: *mut f64,
) -> Appell2Status {
    match f2_theorem1_log(alpha1, beta1, EvalPoint::new(x, y), tol) {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    }
}

/// Gauss 2F1 by series summation, |z| < 1.
#[no_mangle]
pub unsafe extern "C" fn appell2_gauss2f1(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    tol: f64,
    out: *mut f64,
) -> Appell2Status {
    match gauss2f1_series(HypParams2F1::new(a, b, c), z, tol) {
        Ok(r) if r.converged => write_out(out, r.value),
        Ok(_) => Appell2Status::NoConverge,
        Err(e) => status_of(&e),
    }
}

/// Gauss 2F1 by the Euler integral route (c > b > 0, z < 1).
#[no_mangle]
pub unsafe extern "C" fn appell2_gauss2f1_euler(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    tol: f64,
    out: *mut f64,
) -> Appell2Status {
    match gauss2f1_euler(HypParams2F1::new(a, b, c), z, tol) {
        Ok(v) => write_out(out, v),
        Err(e) => status_of(&e),
    }
}

/// Clausen 3F2 by series summation, |z| < 1.
#[no_mangle]
pub unsafe extern "C" fn appell2_clausen3f2(
    a1: f64,
    a2: f64,
    a3: f64,
    b1: f64,
    b2: f64,
    z: f64,
    tol: f64,
    out: *mut f64,
) -> Appell2Status {
    match clausen3f2_series(HypParams3F2::new(a1, a2, a3, b1, b2), z, tol) {
        Ok(r) if r.converged => write_out(out, r.value),
        Ok(_) => Appell2Status::NoConverge,
        Err(e) => status_of(&e),
    }
}

/// Opaque parsed expression over the variables x and y.
pub struct Appell2Expr(Expr);

/// Parses an expression; on success stores a heap handle in `*out` that
/// must be released with [`appell2_expr_free`].
#[no_mangle]
pub unsafe extern "C" fn appell2_expr_parse(
    text: *const c_char,
    out: *mut *mut Appell2Expr,
) -> Appell2Status {
    if text.is_null() || out.is_null() {
        return Appell2Status::NullArg;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return Appell2Status::Utf8Error;
    };
    match parse_expr(text) {
        Ok(expr) => {
            *out = Box::into_raw(Box::new(Appell2Expr(expr)));
            Appell2Status::Ok
        }
        Err(_) => Appell2Status::ParseError,
    }
}

/// Evaluates a parsed expression at (x, y).
#[no_mangle]
pub unsafe extern "C" fn appell2_expr_eval(
    expr: *const Appell2Expr,
    x: f64,
    y: f64,
    out: *mut f64,
) -> Appell2Status {
    if expr.is_null() {
        return Appell2Status::NullArg;
    }
    match eval_expr(&(*expr).0, x, y) {
        Ok(v) => write_out(out, v),
        Err(_) => Appell2Status::EvalError,
    }
}

/// Releases an expression handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn appell2_expr_free(expr: *mut Appell2Expr) {
    if !expr.is_null() {
        drop(Box::from_raw(expr));
    }
}

/// Opaque loaded corpus: entries plus per-line load issues.
pub struct Appell2Corpus {
    entries: Vec<CorpusEntry>,
    issues: usize,
}

/// Loads a corpus file; `*out` must be released with
/// [`appell2_corpus_free`]. Unparseable rows are counted, not fatal.
#[no_mangle]
pub unsafe extern "C" fn appell2_corpus_load(
    path: *const c_char,
    out: *mut *mut Appell2Corpus,
) -> Appell2Status {
    if path.is_null() || out.is_null() {
        return Appell2Status::NullArg;
    }
    let Ok(path) = CStr::from_ptr(path).to_str() else {
        return Appell2Status::Utf8Error;
    };
    let Ok(file) = File::open(path) else {
        return Appell2Status::IoError;
    };
    match load_corpus(BufReader::new(file)) {
        Ok(load) => {
            *out = Box::into_raw(Box::new(Appell2Corpus {
                entries: load.entries,
                issues: load.issues.len(),
            }));
            Appell2Status::Ok
        }
        Err(_) => Appell2Status::IoError,
    }
}

/// Number of successfully parsed entries.
#[no_mangle]
pub unsafe extern "C" fn appell2_corpus_len(corpus: *const Appell2Corpus) -> size_t {
    if corpus.is_null() {
        return 0;
    }
    (*corpus).entries.len()
}

/// Number of rows that failed to parse.
#[no_mangle]
pub unsafe extern "C" fn appell2_corpus_issue_count(corpus: *const Appell2Corpus) -> size_t {
    if corpus.is_null() {
        return 0;
    }
    (*corpus).issues
}

/// Releases a corpus handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn appell2_corpus_free(corpus: *mut Appell2Corpus) {
    if !corpus.is_null() {
        drop(Box::from_raw(corpus));
    }
}

fn verdict_and_json(
    report: appell2::verify::VerificationReport,
    verdict: *mut i32,
    json_out: *mut *mut c_char,
) -> Appell2Status {
    unsafe {
        if !verdict.is_null() {
            *verdict = report.exit_code();
        }
        if !json_out.is_null() {
            match CString::new(report.to_json()) {
                Ok(s) => *json_out = s.into_raw(),
                Err(_) => return Appell2Status::Utf8Error,
            }
        }
    }
    Appell2Status::Ok
}

/// Verifies a loaded corpus against the series oracle on the default grid.
/// `*verdict` receives the exit-code-style outcome (0 pass, 1 fail, 2
/// suspected misprint); `*json_out`, when non-null, receives the full JSON
/// report (release with [`appell2_string_free`]).
#[no_mangle]
pub unsafe extern "C" fn appell2_verify_corpus_json(
    corpus: *const Appell2Corpus,
    pass_tol: f64,
    oracle_tol: f64,
    verdict: *mut i32,
    json_out: *mut *mut c_char,
) -> Appell2Status {
    if corpus.is_null() {
        return Appell2Status::NullArg;
    }
    let settings = VerifySettings {
        pass_tol,
        oracle_tol,
        ..Default::default()
    };
    let report = verify_corpus(&(*corpus).entries, &GridSpec::default(), &settings, None);
    verdict_and_json(report, verdict, json_out)
}

/// Runs the built-in identity suite; same outputs as
/// [`appell2_verify_corpus_json`].
#[no_mangle]
pub unsafe extern "C" fn appell2_verify_builtins_json(
    pass_tol: f64,
    oracle_tol: f64,
    verdict: *mut i32,
    json_out: *mut *mut c_char,
) -> Appell2Status {
    let settings = VerifySettings {
        pass_tol,
        oracle_tol,
        ..Default::default()
    };
    let report = verify_builtins(&GridSpec::default(), &settings, None);
    verdict_and_json(report, verdict, json_out)
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn appell2_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

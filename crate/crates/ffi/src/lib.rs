//! C ABI for `confalg`.
//!
//! Objects are opaque handles created by `cfa_*_builtin` / `cfa_*_parse` and
//! released with the matching `*_free`. Every fallible call returns a
//! [`CfaStatus`]; on failure `cfa_last_error` gives a message for the
//! calling thread. Strings returned through `char **` are owned by the
//! caller and released with `cfa_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use confalg::cohomology::h2_dimension;
use confalg::modes::{expand_modes, jacobi_check};
use confalg::module::ConformalModule;
use confalg::structure::{is_nilpotent, is_solvable, default_depth, Verdict};
use confalg::{builtins, dsl, json, ConformalSuperalgebra, Error};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    UnknownBuiltin = 4,
    InvalidArgument = 5,
    /// A computation failed for a mathematical reason (e.g. not free).
    Unsupported = 6,
    Panic = 7,
}

/// Opaque conformal superalgebra.
pub struct CfaAlgebra {
    inner: Arc<ConformalSuperalgebra>,
}

/// Opaque conformal module.
pub struct CfaModule {
    inner: ConformalModule,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: CfaStatus, msg: impl AsRef<str>) -> CfaStatus {
    set_error(msg.as_ref());
    status
}

fn from_error(e: &Error) -> CfaStatus {
    let status = match e {
        Error::Parse(_) => CfaStatus::ParseError,
        Error::UnknownBuiltin(_) => CfaStatus::UnknownBuiltin,
        Error::OutOfRange(_) | Error::DimensionMismatch { .. } | Error::IndexOutOfRange { .. } => {
            CfaStatus::InvalidArgument
        }
        _ => CfaStatus::Unsupported,
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> CfaStatus) -> CfaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(CfaStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, CfaStatus> {
    if p.is_null() {
        return Err(fail(CfaStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(CfaStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> CfaStatus {
    if out.is_null() {
        return fail(CfaStatus::NullPointer, "null output pointer");
    }
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CfaStatus::Ok
        }
        Err(_) => fail(CfaStatus::InvalidArgument, "string contains NUL"),
    }
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! deref {
    ($p:expr) => {{
        if $p.is_null() {
            return fail(CfaStatus::NullPointer, "null handle");
        }
        &*$p
    }};
}

/// Message for the last failed call on this thread; valid until the next
/// failing call. Never null.
#[no_mangle]
pub extern "C" fn cfa_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn cfa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Built-in algebra such as `vir`, `current-sl2`, `w2`, `ck6`.
///
/// # Safety
/// `name` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_builtin(name: *const c_char, out: *mut *mut CfaAlgebra) -> CfaStatus {
    guard(|| {
        let name = try_ffi!(str_arg(name));
        if out.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        match builtins::algebra(name) {
            Ok(a) => {
                *out = Box::into_raw(Box::new(CfaAlgebra { inner: Arc::new(a) }));
                CfaStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Parses the first `algebra` block of `src`.
///
/// # Safety
/// `src` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_parse(src: *const c_char, out: *mut *mut CfaAlgebra) -> CfaStatus {
    guard(|| {
        let src = try_ffi!(str_arg(src));
        if out.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        match dsl::parse_algebra(src) {
            Ok(a) => {
                *out = Box::into_raw(Box::new(CfaAlgebra { inner: Arc::new(a) }));
                CfaStatus::Ok
            }
            Err(e) => fail(CfaStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `a` must come from this library or be null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_free(a: *mut CfaAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of generators.
///
/// # Safety
/// `a` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_rank(a: *const CfaAlgebra, out: *mut usize) -> CfaStatus {
    let a = deref!(a);
    if out.is_null() {
        return fail(CfaStatus::NullPointer, "null output pointer");
    }
    *out = a.inner.rank();
    CfaStatus::Ok
}

/// Number of axiom violations (0 means the axioms hold).
///
/// # Safety
/// `a` and `violations` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_check(a: *const CfaAlgebra, violations: *mut usize) -> CfaStatus {
    guard(|| {
        let a = deref!(a);
        if violations.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        *violations = a.inner.check_axioms().violations.len();
        CfaStatus::Ok
    })
}

/// Product table as canonical JSON.
///
/// # Safety
/// `a` and `out` must be valid; free the result with `cfa_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_table_json(a: *const CfaAlgebra, out: *mut *mut c_char) -> CfaStatus {
    guard(|| {
        let a = deref!(a);
        let bytes = json::to_bytes(&json::algebra_table(&a.inner));
        write_string(out, String::from_utf8(bytes).unwrap_or_default())
    })
}

/// Product table in the text format accepted by `cfa_algebra_parse`.
///
/// # Safety
/// `a` and `out` must be valid; free the result with `cfa_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_emit(a: *const CfaAlgebra, out: *mut *mut c_char) -> CfaStatus {
    guard(|| {
        let a = deref!(a);
        write_string(out, dsl::emit_algebra(&a.inner))
    })
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Yes => 1,
        Verdict::No => 0,
        Verdict::Unknown => -1,
    }
}

/// Solvability: `*out` is 1 (yes), 0 (no) or -1 (undecided at `depth`;
/// pass 0 for the default depth).
///
/// # Safety
/// `a` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_is_solvable(a: *const CfaAlgebra, depth: usize, out: *mut i32) -> CfaStatus {
    guard(|| {
        let a = deref!(a);
        if out.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        let depth = if depth == 0 { default_depth(&a.inner) } else { depth };
        *out = verdict_code(is_solvable(&a.inner, depth).verdict);
        CfaStatus::Ok
    })
}

/// Nilpotency, with the same encoding as `cfa_algebra_is_solvable`.
///
/// # Safety
/// `a` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_is_nilpotent(a: *const CfaAlgebra, depth: usize, out: *mut i32) -> CfaStatus {
    guard(|| {
        let a = deref!(a);
        if out.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        let depth = if depth == 0 { default_depth(&a.inner) } else { depth };
        *out = verdict_code(is_nilpotent(&a.inner, depth).verdict);
        CfaStatus::Ok
    })
}

/// Dimension of the second cohomology within the given bounds.
///
/// # Safety
/// `a` and `dim` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_h2(
    a: *const CfaAlgebra,
    n_bound: usize,
    f_degree_bound: usize,
    dim: *mut usize,
) -> CfaStatus {
    guard(|| {
        let a = deref!(a);
        if dim.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        *dim = h2_dimension(&a.inner, n_bound, f_degree_bound).dimension;
        CfaStatus::Ok
    })
}

/// Mode-level Jacobi check in the window `[lo, hi]`.
///
/// # Safety
/// `a` and `violations` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_algebra_modes_check(
    a: *const CfaAlgebra,
    lo: i64,
    hi: i64,
    violations: *mut usize,
) -> CfaStatus {
    guard(|| {
        let a = deref!(a);
        if violations.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        if lo > hi {
            return fail(CfaStatus::InvalidArgument, "empty window");
        }
        *violations = jacobi_check(&expand_modes(&a.inner, (lo, hi))).violations.len();
        CfaStatus::Ok
    })
}

/// Built-in module such as `mad:1/2:2` or `ext-torsion:0:1`.
///
/// # Safety
/// `spec` must be a NUL-terminated string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cfa_module_builtin(spec: *const c_char, out: *mut *mut CfaModule) -> CfaStatus {
    guard(|| {
        let spec = try_ffi!(str_arg(spec));
        if out.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        match builtins::module(spec) {
            Ok((m, _)) => {
                *out = Box::into_raw(Box::new(CfaModule { inner: m }));
                CfaStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Parses the first `module` block of `src`; `over` may be null, otherwise
/// it is tried when resolving the block's algebra name.
///
/// # Safety
/// `src` must be a NUL-terminated string, `over` valid or null, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_module_parse(
    src: *const c_char,
    over: *const CfaAlgebra,
    out: *mut *mut CfaModule,
) -> CfaStatus {
    guard(|| {
        let src = try_ffi!(str_arg(src));
        if out.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        let known: Vec<Arc<ConformalSuperalgebra>> =
            if over.is_null() { Vec::new() } else { vec![(*over).inner.clone()] };
        match dsl::parse_module(src, &known) {
            Ok(m) => {
                *out = Box::into_raw(Box::new(CfaModule { inner: m }));
                CfaStatus::Ok
            }
            Err(e) => fail(CfaStatus::ParseError, e.to_string()),
        }
    })
}

/// # Safety
/// `m` must come from this library or be null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn cfa_module_free(m: *mut CfaModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of module axiom violations.
///
/// # Safety
/// `m` and `violations` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_module_check(m: *const CfaModule, violations: *mut usize) -> CfaStatus {
    guard(|| {
        let m = deref!(m);
        if violations.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        *violations = m.inner.check().violations.len();
        CfaStatus::Ok
    })
}

/// Irreducibility of a free rank-1 module: `*out` is 1 or 0.
///
/// # Safety
/// `m` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_module_is_irreducible(m: *const CfaModule, out: *mut i32) -> CfaStatus {
    guard(|| {
        let m = deref!(m);
        if out.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        match m.inner.is_irreducible_rank1() {
            Ok(b) => {
                *out = i32::from(b);
                CfaStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Whether the module maps faithfully and homomorphically into `gc_N`:
/// `*out` is 1 or 0.
///
/// # Safety
/// `m` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn cfa_module_faithful_gc(m: *const CfaModule, out: *mut i32) -> CfaStatus {
    guard(|| {
        let m = deref!(m);
        if out.is_null() {
            return fail(CfaStatus::NullPointer, "null output pointer");
        }
        match m.inner.rep_to_gc() {
            Ok(r) => {
                *out = i32::from(r.is_homomorphism() && r.faithful);
                CfaStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Module table as canonical JSON.
///
/// # Safety
/// `m` and `out` must be valid; free the result with `cfa_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cfa_module_table_json(m: *const CfaModule, out: *mut *mut c_char) -> CfaStatus {
    guard(|| {
        let m = deref!(m);
        let bytes = json::to_bytes(&json::module_table(&m.inner));
        write_string(out, String::from_utf8(bytes).unwrap_or_default())
    })
}

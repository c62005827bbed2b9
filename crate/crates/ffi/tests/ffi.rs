use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use confalg_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cfa_last_error()).to_string_lossy().into_owned() }
}

#[test]
fn builtin_algebra_roundtrip() {
    unsafe {
        let mut a: *mut CfaAlgebra = ptr::null_mut();
        assert_eq!(cfa_algebra_builtin(cstr("vir").as_ptr(), &mut a), CfaStatus::Ok);
        let mut rank = 0usize;
        assert_eq!(cfa_algebra_rank(a, &mut rank), CfaStatus::Ok);
        assert_eq!(rank, 1);
        let mut bad = 9usize;
        assert_eq!(cfa_algebra_check(a, &mut bad), CfaStatus::Ok);
        assert_eq!(bad, 0);

        let mut text = ptr::null_mut();
        assert_eq!(cfa_algebra_emit(a, &mut text), CfaStatus::Ok);
        let mut b: *mut CfaAlgebra = ptr::null_mut();
        assert_eq!(cfa_algebra_parse(text, &mut b), CfaStatus::Ok);
        cfa_string_free(text);

        let (mut ja, mut jb) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(cfa_algebra_table_json(a, &mut ja), CfaStatus::Ok);
        assert_eq!(cfa_algebra_table_json(b, &mut jb), CfaStatus::Ok);
        assert_eq!(CStr::from_ptr(ja), CStr::from_ptr(jb));
        cfa_string_free(ja);
        cfa_string_free(jb);

        let mut dim = 0usize;
        assert_eq!(cfa_algebra_h2(a, 6, 8, &mut dim), CfaStatus::Ok);
        assert_eq!(dim, 1);
        let mut v = 1usize;
        assert_eq!(cfa_algebra_modes_check(a, -6, 6, &mut v), CfaStatus::Ok);
        assert_eq!(v, 0);
        let mut s = 0i32;
        assert_eq!(cfa_algebra_is_solvable(a, 0, &mut s), CfaStatus::Ok);
        assert_eq!(s, 0);
        cfa_algebra_free(a);
        cfa_algebra_free(b);
    }
}

#[test]
fn structure_verdicts() {
    unsafe {
        let mut a: *mut CfaAlgebra = ptr::null_mut();
        assert_eq!(cfa_algebra_builtin(cstr("current-h3").as_ptr(), &mut a), CfaStatus::Ok);
        let mut n = 0i32;
        assert_eq!(cfa_algebra_is_nilpotent(a, 0, &mut n), CfaStatus::Ok);
        assert_eq!(n, 1);
        cfa_algebra_free(a);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut a: *mut CfaAlgebra = ptr::null_mut();
        assert_eq!(cfa_algebra_builtin(cstr("nope").as_ptr(), &mut a), CfaStatus::UnknownBuiltin);
        assert!(a.is_null());
        assert!(last_error().contains("nope"));

        let src = cstr("algebra x {\n even L;\n [L 0 M] = d M;\n}");
        assert_eq!(cfa_algebra_parse(src.as_ptr(), &mut a), CfaStatus::ParseError);
        assert!(last_error().starts_with("3:"), "{}", last_error());

        assert_eq!(cfa_algebra_builtin(ptr::null(), &mut a), CfaStatus::NullPointer);
        assert_eq!(cfa_algebra_rank(ptr::null(), ptr::null_mut()), CfaStatus::NullPointer);
        let bytes = [0xffu8, 0];
        assert_eq!(cfa_algebra_parse(bytes.as_ptr().cast(), &mut a), CfaStatus::InvalidUtf8);

        let mut m: *mut CfaModule = ptr::null_mut();
        assert_eq!(cfa_module_builtin(cstr("ext-torsion:0:1").as_ptr(), &mut m), CfaStatus::Ok);
        let mut irr = 0i32;
        assert_eq!(cfa_module_is_irreducible(m, &mut irr), CfaStatus::Unsupported);
        cfa_module_free(m);
        cfa_algebra_free(ptr::null_mut());
        cfa_string_free(ptr::null_mut());
    }
}

#[test]
fn modules() {
    unsafe {
        let mut m: *mut CfaModule = ptr::null_mut();
        assert_eq!(cfa_module_builtin(cstr("mad:1/2:2").as_ptr(), &mut m), CfaStatus::Ok);
        let (mut bad, mut irr, mut faithful) = (1usize, 0i32, 0i32);
        assert_eq!(cfa_module_check(m, &mut bad), CfaStatus::Ok);
        assert_eq!(bad, 0);
        assert_eq!(cfa_module_is_irreducible(m, &mut irr), CfaStatus::Ok);
        assert_eq!(irr, 1);
        assert_eq!(cfa_module_faithful_gc(m, &mut faithful), CfaStatus::Ok);
        assert_eq!(faithful, 1);
        cfa_module_free(m);

        let mut a: *mut CfaAlgebra = ptr::null_mut();
        let src = cstr("algebra myvir { even L; [L 0 L] = d L; [L 1 L] = 2 L; }");
        assert_eq!(cfa_algebra_parse(src.as_ptr(), &mut a), CfaStatus::Ok);
        let msrc = cstr("module m over myvir { even v; <L 0 v> = d v; <L 1 v> = v; }");
        assert_eq!(cfa_module_parse(msrc.as_ptr(), a, &mut m), CfaStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(cfa_module_table_json(m, &mut json), CfaStatus::Ok);
        assert!(CStr::from_ptr(json).to_str().unwrap().contains("\"myvir\""));
        cfa_string_free(json);
        cfa_module_free(m);
        assert_eq!(cfa_module_parse(msrc.as_ptr(), ptr::null(), &mut m), CfaStatus::ParseError);
        cfa_algebra_free(a);
    }
}

#[test]
fn header_declares_api_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/confalg.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for sym in ["typedef struct CfaAlgebra CfaAlgebra", "CFA_STATUS_PARSE_ERROR", "cfa_algebra_builtin", "cfa_module_check", "cfa_last_error"] {
        assert!(text.contains(sym), "{sym}");
    }
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("use.c");
    std::fs::write(
        &c,
        "#include \"confalg.h\"\nint main(void) { CfaAlgebra *a = 0; CfaStatus s = cfa_algebra_builtin(\"vir\", &a); cfa_algebra_free(a); return (int)s; }\n",
    )
    .unwrap();
    let staticlib = std::env::current_exe()
        .ok()
        .and_then(|p| Some(p.parent()?.parent()?.join("libconfalg_ffi.a")))
        .filter(|p| p.is_file());
    let mut cmd = Command::new("cc");
    cmd.args(["-std=c99", "-Wall", "-Werror", "-I"]).arg(header.parent().unwrap()).arg(&c);
    let exe = dir.path().join("use");
    match &staticlib {
        Some(lib) => cmd.arg(lib).args(["-lpthread", "-ldl", "-lm", "-o"]).arg(&exe),
        None => cmd.arg("-fsyntax-only"),
    };
    let Ok(out) = cmd.output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    if staticlib.is_some() {
        let status = Command::new(&exe).status().unwrap();
        assert_eq!(status.code(), Some(0));
    }
}

use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use multiplate_ffi::*;

const P0: &str = "(SBlock (SDecl TInt (V \"x\")) (SAss (V \"x\") (EAdd (EVar (V \"x\")) (EInt 1))) (SReturn (EVar (V \"x\"))))";

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = mp_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn parse(text: &str, root: Option<&str>) -> Result<*mut MpTerm, MpStatus> {
    let text = c(text);
    let root = root.map(c);
    let mut out = ptr::null_mut();
    let st = unsafe {
        mp_term_parse(
            text.as_ptr(),
            root.as_ref().map_or(ptr::null(), |r| r.as_ptr()),
            &mut out,
        )
    };
    if st == MpStatus::Ok {
        Ok(out)
    } else {
        assert!(out.is_null());
        Err(st)
    }
}

fn take(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { mp_string_free(p) };
    s
}

fn sexpr(t: *const MpTerm) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mp_term_to_sexpr(t, &mut out) }, MpStatus::Ok);
    take(out)
}

#[test]
fn parse_rename_print() {
    let t = parse(P0, None).unwrap();
    assert_eq!(sexpr(t), P0);
    assert_eq!(
        unsafe { mp_term_apply_passes(t, c("rename,constfold").as_ptr()) },
        MpStatus::Ok
    );
    assert_eq!(sexpr(t), P0.replace("\"x\"", "\"_x\""));
    assert!(mp_last_error().is_null());
    unsafe { mp_term_free(t) };
}

#[test]
fn folds() {
    let t = parse(P0, None).unwrap();
    let mut n = 0;
    assert_eq!(unsafe { mp_term_count_nodes(t, &mut n) }, MpStatus::Ok);
    assert_eq!(n, 13);
    let mut vars = ptr::null_mut();
    assert_eq!(unsafe { mp_term_collect_vars(t, &mut vars) }, MpStatus::Ok);
    assert_eq!(take(vars), "x\nx\nx\nx\n");
    unsafe { mp_term_free(t) };
}

#[test]
fn error_codes() {
    assert_eq!(parse("(SBlock", None).unwrap_err(), MpStatus::ParseError);
    assert!(
        last_error().contains("byte 0: unbalanced"),
        "{}",
        last_error()
    );
    assert_eq!(
        parse("(SAss (V \"x\"))", None).unwrap_err(),
        MpStatus::DecodeError
    );
    assert_eq!(
        parse("(V \"x\")", Some("statement")).unwrap_err(),
        MpStatus::Usage
    );
    assert_eq!(
        parse("(V \"x\")", Some("stm")).unwrap_err(),
        MpStatus::DecodeError
    );

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { mp_term_parse(ptr::null(), ptr::null(), &mut out) },
        MpStatus::NullArgument
    );
    let bad = [0xffu8, 0];
    assert_eq!(
        unsafe { mp_term_parse(bad.as_ptr().cast(), ptr::null(), &mut out) },
        MpStatus::InvalidUtf8
    );
    assert_eq!(
        unsafe { mp_term_count_nodes(ptr::null(), &mut 0) },
        MpStatus::NullArgument
    );

    let t = parse("(EInt 2)", None).unwrap();
    assert_eq!(
        unsafe { mp_term_apply_passes(t, c("rename,inline").as_ptr()) },
        MpStatus::Usage
    );
    assert!(last_error().contains("unknown pass `inline`"));
    assert_eq!(sexpr(t), "(EInt 2)");
    unsafe { mp_term_free(t) };
}

#[test]
fn law_suites() {
    let mut failed = 99;
    assert_eq!(
        unsafe { mp_run_laws(c("multiplate").as_ptr(), 3, &mut failed) },
        MpStatus::Ok
    );
    assert_eq!(failed, 0);
    assert_eq!(
        unsafe { mp_run_laws(c("lens").as_ptr(), 0, ptr::null_mut()) },
        MpStatus::Ok
    );
    assert_eq!(
        unsafe { mp_run_laws(c("prisms").as_ptr(), 0, &mut failed) },
        MpStatus::Usage
    );
    assert_eq!(
        unsafe { mp_run_laws(c("store").as_ptr(), 99, &mut failed) },
        MpStatus::Usage
    );
}

#[test]
fn null_handles_are_ignored_on_free() {
    unsafe {
        mp_term_free(ptr::null_mut());
        mp_string_free(ptr::null_mut());
    }
}

#[test]
fn c_program_links_against_the_header_and_static_library() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libmultiplate_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let exe = std::env::temp_dir().join(format!("multiplate-smoke-{}", std::process::id()));
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    std::fs::remove_file(&exe).unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(run.stdout, b"ok\n");
}

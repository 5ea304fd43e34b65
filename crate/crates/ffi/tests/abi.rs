use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use pathext_ffi::*;

fn make(f: impl FnOnce(*mut *mut PxTournament) -> PxStatus) -> *mut PxTournament {
    let mut t = ptr::null_mut();
    assert_eq!(f(&mut t), PxStatus::Ok);
    assert!(!t.is_null());
    t
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(px_last_error_message()).to_string_lossy().into_owned() }
}

#[test]
fn paley_invariants_through_the_abi() {
    unsafe {
        let t = make(|o| px_tournament_paley(11, o));
        assert_eq!(px_tournament_order(t), 11);
        let mut v = 0;
        assert_eq!(px_pi2(t, &mut v), PxStatus::Ok);
        assert_eq!(v, 2);
        assert_eq!(px_irregularity(t, &mut v), PxStatus::Ok);
        assert_eq!(v, 0);
        let (mut ext, mut len) = (false, 99);
        let mut cert = [0usize; 16];
        assert_eq!(px_is_path_extendable(t, 1, &mut ext, cert.as_mut_ptr(), 16, &mut len), PxStatus::Ok);
        assert!(ext);
        assert_eq!(len, 0);
        px_tournament_free(t);
    }
}

#[test]
fn trn_round_trip_and_small_buffer() {
    unsafe {
        let text = CString::new("4\n101100\n").unwrap();
        let t = make(|o| px_tournament_from_trn(text.as_ptr(), o));
        let mut needed = 0;
        let mut small = [0 as std::ffi::c_char; 4];
        assert_eq!(px_tournament_to_trn(t, small.as_mut_ptr(), 4, &mut needed), PxStatus::BufferTooSmall);
        assert_eq!(needed, 10);
        let mut buf = vec![0 as std::ffi::c_char; needed];
        assert_eq!(px_tournament_to_trn(t, buf.as_mut_ptr(), needed, &mut needed), PxStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "4\n101100\n");
        px_tournament_free(t);
    }
}

#[test]
fn errors_map_to_codes() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(px_tournament_paley(9, &mut t), PxStatus::Argument);
        assert!(t.is_null());
        assert!(last_error().contains("9"));
        assert_eq!(px_tournament_transitive(30, &mut t), PxStatus::Capacity);
        let bad = CString::new("3\n10\n").unwrap();
        assert_eq!(px_tournament_from_trn(bad.as_ptr(), &mut t), PxStatus::Parse);
        assert_eq!(px_tournament_from_trn(ptr::null(), &mut t), PxStatus::NullPointer);
        let mut v = 0;
        assert_eq!(px_pi2(ptr::null(), &mut v), PxStatus::NullPointer);
        let p = make(|o| px_tournament_paley(7, o));
        assert_eq!(px_p2(p, 3, 3, &mut v), PxStatus::Argument);
        assert_eq!(px_pi2(p, ptr::null_mut()), PxStatus::NullPointer);
        px_tournament_free(p);
        px_tournament_free(ptr::null_mut());
    }
}

#[test]
fn certificates_and_single_path_extension() {
    unsafe {
        let t = make(|o| px_tournament_three_block(1, o));
        let (mut ext, mut len) = (true, 0);
        let mut cert = [0usize; 24];
        assert_eq!(px_is_path_extendable(t, 1, &mut ext, cert.as_mut_ptr(), 24, &mut len), PxStatus::Ok);
        assert!(!ext);
        assert!(len >= 2);
        // The certificate itself must not extend.
        let mut out = [0usize; 24];
        let mut out_len = 0;
        assert_eq!(
            px_extend_path(t, cert.as_ptr(), len, &mut ext, out.as_mut_ptr(), 24, &mut out_len),
            PxStatus::Ok
        );
        assert!(!ext);
        assert_eq!(out_len, 0);
        // Too small a certificate buffer is reported with the needed size.
        let mut tiny = [0usize; 1];
        assert_eq!(
            px_is_path_extendable(t, 1, &mut ext, tiny.as_mut_ptr(), 1, &mut out_len),
            PxStatus::BufferTooSmall
        );
        assert_eq!(out_len, len);
        px_tournament_free(t);

        let tr = make(|o| px_tournament_transitive(4, o));
        let path = [0usize, 3];
        assert_eq!(px_extend_path(tr, path.as_ptr(), 2, &mut ext, out.as_mut_ptr(), 24, &mut out_len), PxStatus::Ok);
        assert!(ext);
        assert_eq!(&out[..out_len], &[0, 1, 3]);
        let backwards = [3usize, 0];
        assert_eq!(
            px_extend_path(tr, backwards.as_ptr(), 2, &mut ext, out.as_mut_ptr(), 24, &mut out_len),
            PxStatus::Argument
        );
        px_tournament_free(tr);
    }
}

#[test]
fn figure4_and_random_handles() {
    unsafe {
        let f = make(|o| px_tournament_figure4(3, 0, o));
        let mut v = 9;
        assert_eq!(px_pi2(f, &mut v), PxStatus::Ok);
        assert_eq!(v, 0);
        px_tournament_free(f);
        let a = make(|o| px_tournament_random(9, 42, o));
        let b = make(|o| px_tournament_random(9, 42, o));
        let (mut ba, mut bb) = ([0 as std::ffi::c_char; 64], [0 as std::ffi::c_char; 64]);
        let mut n = 0;
        px_tournament_to_trn(a, ba.as_mut_ptr(), 64, &mut n);
        px_tournament_to_trn(b, bb.as_mut_ptr(), 64, &mut n);
        assert_eq!(CStr::from_ptr(ba.as_ptr()), CStr::from_ptr(bb.as_ptr()));
        px_tournament_free(a);
        px_tournament_free(b);
    }
}

/// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_against_header() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // tests run from target/<profile>/deps
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libpathext_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out = tempfile_path("px_smoke");
    let status = Command::new("cc")
        .arg(root.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(root.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("{stem}_{}", std::process::id()))
}

//! C ABI over `pathext`.
//!
//! Tournaments cross the boundary as opaque `PxTournament` handles created by
//! one of the constructors and released with `px_tournament_free`. Every
//! fallible call returns a `PxStatus`; on failure `px_last_error_message`
//! describes the most recent error on the calling thread. Results go through
//! caller-provided out-pointers. Panics never unwind into C.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pathext::construct::{figure4_tournament, paley_tournament, random_tournament, t3_tournament, T3Spec};
use pathext::{Error, Tournament};

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PxStatus {
    Ok = 0,
    NullPointer = 1,
    Argument = 2,
    Capacity = 3,
    Parse = 4,
    Domain = 5,
    Io = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

/// Opaque tournament handle.
pub struct PxTournament(Tournament);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: PxStatus, msg: impl Into<String>) -> PxStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> PxStatus {
    let status = match e {
        Error::Argument(_) => PxStatus::Argument,
        Error::Capacity(_) => PxStatus::Capacity,
        Error::Parse(_) => PxStatus::Parse,
        Error::Domain(_) => PxStatus::Domain,
        Error::Io(_) => PxStatus::Io,
    };
    fail(status, e.to_string())
}

/// Runs `f`, mapping library errors and panics onto status codes.
fn guard(f: impl FnOnce() -> Result<(), PxStatus>) -> PxStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PxStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(PxStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: pathext::Result<T>) -> Result<T, PxStatus> {
    r.map_err(from_error)
}

unsafe fn handle<'a>(t: *const PxTournament) -> Result<&'a Tournament, PxStatus> {
    t.as_ref().map(|h| &h.0).ok_or_else(|| fail(PxStatus::NullPointer, "null tournament handle"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, PxStatus> {
    p.as_mut().ok_or_else(|| fail(PxStatus::NullPointer, "null output pointer"))
}

unsafe fn emit_handle(out: *mut *mut PxTournament, t: pathext::Result<Tournament>) -> Result<(), PxStatus> {
    let slot = out_ref(out)?;
    *slot = ptr::null_mut();
    *slot = Box::into_raw(Box::new(PxTournament(lift(t)?)));
    Ok(())
}

/// Copies `items` to `buf` when it fits; always reports the needed length.
unsafe fn copy_out(items: &[usize], buf: *mut usize, cap: usize, len: *mut usize) -> Result<(), PxStatus> {
    *out_ref(len)? = items.len();
    if items.len() > cap {
        return Err(fail(PxStatus::BufferTooSmall, format!("need {} slots, have {cap}", items.len())));
    }
    if !items.is_empty() {
        if buf.is_null() {
            return Err(fail(PxStatus::NullPointer, "null output buffer"));
        }
        ptr::copy_nonoverlapping(items.as_ptr(), buf, items.len());
    }
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn px_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses TRN text (`"n\npairs\n"`).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_from_trn(text: *const c_char, out: *mut *mut PxTournament) -> PxStatus {
    guard(|| {
        if text.is_null() {
            return Err(fail(PxStatus::NullPointer, "null TRN text"));
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| fail(PxStatus::Parse, e.to_string()))?;
        emit_handle(out, Tournament::from_trn(s))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_transitive(n: usize, out: *mut *mut PxTournament) -> PxStatus {
    guard(|| emit_handle(out, Tournament::transitive(n)))
}

/// Quadratic-residue tournament on `q` vertices (`q` prime, `q ≡ 3 mod 4`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_paley(q: usize, out: *mut *mut PxTournament) -> PxStatus {
    guard(|| emit_handle(out, paley_tournament(q)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_random(n: usize, seed: u64, out: *mut *mut PxTournament) -> PxStatus {
    guard(|| emit_handle(out, random_tournament(n, seed)))
}

/// Three Paley blocks of order `4t + 3` arranged in a directed triangle.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_three_block(t: usize, out: *mut *mut PxTournament) -> PxStatus {
    guard(|| emit_handle(out, T3Spec::new(t).and_then(t3_tournament)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_figure4(k: usize, seed: u64, out: *mut *mut PxTournament) -> PxStatus {
    guard(|| emit_handle(out, figure4_tournament(k, seed)))
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `t` must come from a constructor here and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_free(t: *mut PxTournament) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `t` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_order(t: *const PxTournament) -> usize {
    t.as_ref().map_or(0, |h| h.0.order())
}

/// Writes the TRN encoding plus a NUL into `buf`. `needed` receives the
/// byte count including the NUL, also when `cap` is too small.
///
/// # Safety
/// `buf` must have room for `cap` bytes; `needed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn px_tournament_to_trn(
    t: *const PxTournament,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> PxStatus {
    guard(|| {
        let text = handle(t)?.to_trn();
        let size = text.len() + 1;
        *out_ref(needed)? = size;
        if size > cap {
            return Err(fail(PxStatus::BufferTooSmall, format!("need {size} bytes, have {cap}")));
        }
        if buf.is_null() {
            return Err(fail(PxStatus::NullPointer, "null output buffer"));
        }
        ptr::copy_nonoverlapping(text.as_ptr() as *const c_char, buf, text.len());
        *buf.add(text.len()) = 0;
        Ok(())
    })
}

/// Number of `w` with `u -> w -> v`.
///
/// # Safety
/// `t` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn px_p2(t: *const PxTournament, u: usize, v: usize, out: *mut usize) -> PxStatus {
    guard(|| {
        let value = lift(pathext::p2(handle(t)?, u, v))?;
        *out_ref(out)? = value;
        Ok(())
    })
}

/// Minimum 2-path count over ordered pairs.
///
/// # Safety
/// `t` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn px_pi2(t: *const PxTournament, out: *mut usize) -> PxStatus {
    guard(|| {
        let value = pathext::pi2(handle(t)?);
        *out_ref(out)? = value;
        Ok(())
    })
}

/// `max |d⁺(v) − d⁻(v)|`.
///
/// # Safety
/// `t` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn px_irregularity(t: *const PxTournament, out: *mut usize) -> PxStatus {
    guard(|| {
        let value = pathext::irregularity(handle(t)?);
        *out_ref(out)? = value;
        Ok(())
    })
}

/// Decides whether every nonhamiltonian path with at least `k` arcs is
/// extendable. When it is not, the certificate path is written to
/// `cert` (capacity `cert_cap`) and its vertex count to `cert_len`;
/// otherwise `cert_len` is 0.
///
/// # Safety
/// `t` must be a live handle; `extendable` and `cert_len` writable;
/// `cert` must have room for `cert_cap` entries.
#[no_mangle]
pub unsafe extern "C" fn px_is_path_extendable(
    t: *const PxTournament,
    k: usize,
    extendable: *mut bool,
    cert: *mut usize,
    cert_cap: usize,
    cert_len: *mut usize,
) -> PxStatus {
    guard(|| {
        let verdict = lift(pathext::is_path_extendable(handle(t)?, k))?;
        *out_ref(extendable)? = verdict.extendable;
        let path = verdict.certificate.as_ref().map_or(&[][..], |p| p.vertices());
        copy_out(path, cert, cert_cap, cert_len)
    })
}

/// Tries to extend one path. On success `extended` is true and the longer
/// path (same endpoints, one more vertex) is written to `out`.
///
/// # Safety
/// `path` must point to `len` entries; `out` must have room for
/// `out_cap` entries; `extended` and `out_len` writable.
#[no_mangle]
pub unsafe extern "C" fn px_extend_path(
    t: *const PxTournament,
    path: *const usize,
    len: usize,
    extended: *mut bool,
    out: *mut usize,
    out_cap: usize,
    out_len: *mut usize,
) -> PxStatus {
    guard(|| {
        let t = handle(t)?;
        if path.is_null() && len > 0 {
            return Err(fail(PxStatus::NullPointer, "null path"));
        }
        let vertices = if len == 0 { Vec::new() } else { std::slice::from_raw_parts(path, len).to_vec() };
        let p = lift(pathext::DirectedPath::new(t, vertices))?;
        let longer = lift(pathext::extend_path(t, &p))?;
        *out_ref(extended)? = longer.is_some();
        copy_out(longer.as_ref().map_or(&[][..], |q| q.vertices()), out, out_cap, out_len)
    })
}

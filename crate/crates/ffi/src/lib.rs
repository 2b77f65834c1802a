//! C ABI over `wordlab`.
//!
//! Every fallible function returns a [`WlStatus`] and writes results through
//! out-pointers. On failure [`wl_last_error_message`] describes the error for
//! the calling thread. Words are opaque [`WlWord`] handles released with
//! [`wl_word_free`]; strings returned to the caller are released with
//! [`wl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wordlab::output::OutputRecord;
use wordlab::search::{self, CampaignConfig, Target};
use wordlab::{critical, duval, periodicity, Error, Verdict, Word};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlStatus {
    Ok = 0,
    NullPointer = 1,
    Format = 2,
    Range = 3,
    Precondition = 4,
    Invariant = 5,
    Runtime = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlVerdict {
    NotExtension = 0,
    Trivial = 1,
    NontrivialMinimal = 2,
    NontrivialNonMinimal = 3,
}

/// Opaque word handle.
pub struct WlWord(Word);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WlClassification {
    pub verdict: WlVerdict,
    pub period_wu: usize,
    pub mu_wu: usize,
    /// Set only for non-extensions; `witness_start` is 1-based.
    pub has_witness: bool,
    pub witness_start: usize,
    pub witness_len: usize,
    pub structural_form: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WlVerifySummary {
    pub verified: bool,
    pub words_scanned: u64,
    pub vacuous: u64,
    pub violations: usize,
    pub tight_cases: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(WlStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Range { .. } => WlStatus::Range,
            Error::Precondition(_) => WlStatus::Precondition,
            Error::Format { .. } | Error::Symbol { .. } => WlStatus::Format,
            Error::Invariant(_) => WlStatus::Invariant,
            Error::Runtime(_) => WlStatus::Runtime,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(WlStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> WlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => WlStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            WlStatus::Panic
        }
    }
}

unsafe fn word<'a>(w: *const WlWord, what: &str) -> Result<&'a Word, Failure> {
    unsafe { w.as_ref() }.map(|w| &w.0).ok_or_else(|| null(what))
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| Failure(WlStatus::Format, format!("{what} is not valid UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    unsafe { out.write(value) };
    Ok(())
}

fn into_handle(w: Word) -> *mut WlWord {
    Box::into_raw(Box::new(WlWord(w)))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn wl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Decodes a word over `a..=z`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_word_from_text(text: *const c_char, out: *mut *mut WlWord) -> WlStatus {
    guard(|| {
        let t = unsafe { c_str(text, "text") }?;
        let w = Word::decode_text(t)?;
        unsafe { put(out, into_handle(w), "out") }
    })
}

/// # Safety
/// `w` must be null or a handle from this library that was not freed yet.
#[no_mangle]
pub unsafe extern "C" fn wl_word_free(w: *mut WlWord) {
    if !w.is_null() {
        drop(unsafe { Box::from_raw(w) });
    }
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn wl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_word_len(w: *const WlWord, out: *mut usize) -> WlStatus {
    guard(|| {
        let w = unsafe { word(w, "w") }?;
        unsafe { put(out, w.len(), "out") }
    })
}

/// Writes a newly allocated string; release it with [`wl_string_free`].
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_word_to_text(w: *const WlWord, out: *mut *mut c_char) -> WlStatus {
    guard(|| {
        let w = unsafe { word(w, "w") }?;
        unsafe { put(out, into_c_string(w.encode_text()), "out") }
    })
}

/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_word_period(w: *const WlWord, out: *mut usize) -> WlStatus {
    guard(|| {
        let w = unsafe { word(w, "w") }?;
        unsafe { put(out, periodicity::period(w)?, "out") }
    })
}

/// Length and 1-based start of the leftmost longest unbordered factor.
///
/// # Safety
/// `w` must be a live handle; `mu` and `start` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn wl_word_mu(w: *const WlWord, mu: *mut usize, start: *mut usize) -> WlStatus {
    guard(|| {
        let w = unsafe { word(w, "w") }?;
        let (len, at) = periodicity::mu(w)?;
        unsafe { put(mu, len, "mu") }?;
        unsafe { put(start, at.start, "start") }
    })
}

/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_word_is_unbordered(w: *const WlWord, out: *mut bool) -> WlStatus {
    guard(|| {
        let w = unsafe { word(w, "w") }?;
        unsafe { put(out, periodicity::is_unbordered(w)?, "out") }
    })
}

/// Local period at point `p`, `1 <= p < |w|`.
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_word_local_period(w: *const WlWord, p: usize, out: *mut usize) -> WlStatus {
    guard(|| {
        let w = unsafe { word(w, "w") }?;
        unsafe { put(out, critical::local_period(w, p)?, "out") }
    })
}

/// Writes up to `cap` critical points into `buf` and their total count into
/// `needed`. Returns `BufferTooSmall` (with `needed` set) when `cap` is short.
///
/// # Safety
/// `w` must be a live handle, `needed` a valid pointer, and `buf` valid for
/// `cap` writes (it may be null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn wl_word_critical_points(
    w: *const WlWord,
    buf: *mut usize,
    cap: usize,
    needed: *mut usize,
) -> WlStatus {
    guard(|| {
        let w = unsafe { word(w, "w") }?;
        let points = critical::critical_points(w)?;
        unsafe { put(needed, points.len(), "needed") }?;
        if points.len() > cap {
            return Err(Failure(
                WlStatus::BufferTooSmall,
                format!("{} critical points, buffer holds {cap}", points.len()),
            ));
        }
        if !points.is_empty() {
            if buf.is_null() {
                return Err(null("buf"));
            }
            unsafe { ptr::copy_nonoverlapping(points.as_ptr(), buf, points.len()) };
        }
        Ok(())
    })
}

/// # Safety
/// `w` and `u` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_classify_extension(
    w: *const WlWord,
    u: *const WlWord,
    out: *mut WlClassification,
) -> WlStatus {
    guard(|| {
        let (w, u) = (unsafe { word(w, "w") }?, unsafe { word(u, "u") }?);
        let c = duval::classify_extension(w, u)?;
        let verdict = match c.verdict {
            Verdict::NotExtension => WlVerdict::NotExtension,
            Verdict::Trivial => WlVerdict::Trivial,
            Verdict::NontrivialMinimal => WlVerdict::NontrivialMinimal,
            Verdict::NontrivialNonMinimal => WlVerdict::NontrivialNonMinimal,
        };
        let result = WlClassification {
            verdict,
            period_wu: c.period_wu,
            mu_wu: c.mu_wu,
            has_witness: c.witness.is_some(),
            witness_start: c.witness.map_or(0, |r| r.start),
            witness_len: c.witness.map_or(0, |r| r.len),
            structural_form: c.structural_form,
        };
        unsafe { put(out, result, "out") }
    })
}

/// # Safety
/// `w_out` and `u_out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn wl_family_tightness(
    n: usize,
    m: usize,
    w_out: *mut *mut WlWord,
    u_out: *mut *mut WlWord,
) -> WlStatus {
    guard(|| {
        if w_out.is_null() || u_out.is_null() {
            return Err(null("output pointer"));
        }
        let (w, u) = duval::family_tightness(n, m)?;
        unsafe {
            w_out.write(into_handle(w));
            u_out.write(into_handle(u));
        }
        Ok(())
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_family_assous_pouzet(n: usize, out: *mut *mut WlWord) -> WlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let w = duval::family_assous_pouzet(n)?;
        unsafe { put(out, into_handle(w), "out") }
    })
}

unsafe fn campaign(
    target: *const c_char,
    alphabet: u8,
    max_len: usize,
    workers: usize,
) -> Result<search::CampaignReport, Failure> {
    let name = unsafe { c_str(target, "target") }?;
    let target: Target = name.parse()?;
    let cfg = CampaignConfig::new(target, alphabet, max_len).with_workers(workers.max(1));
    Ok(search::run(&cfg)?)
}

/// Runs a campaign (`main-theorem`, `corollary`, `cft`, `lemmas`,
/// `extremal-ratio`). A campaign that finds violations still returns `Ok`
/// with `verified` false. `workers` of 0 means 1.
///
/// # Safety
/// `target` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_verify(
    target: *const c_char,
    alphabet: u8,
    max_len: usize,
    workers: usize,
    out: *mut WlVerifySummary,
) -> WlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let r = unsafe { campaign(target, alphabet, max_len, workers) }?;
        let summary = WlVerifySummary {
            verified: r.verified,
            words_scanned: r.words_scanned,
            vacuous: r.vacuous,
            violations: r.violations.len(),
            tight_cases: r.tight_cases.len(),
        };
        unsafe { put(out, summary, "out") }
    })
}

/// Same campaign as [`wl_verify`], reported as the CLI's JSON record.
///
/// # Safety
/// `target` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wl_verify_json(
    target: *const c_char,
    alphabet: u8,
    max_len: usize,
    workers: usize,
    out: *mut *mut c_char,
) -> WlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let r = unsafe { campaign(target, alphabet, max_len, workers) }?;
        let json = OutputRecord::new("verify", r).to_json();
        unsafe { put(out, into_c_string(json), "out") }
    })
}

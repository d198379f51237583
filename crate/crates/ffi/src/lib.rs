//! C ABI over `irrwalk`.
//!
//! Every function returns an [`IrwStatus`]. Results come back through out
//! pointers. Objects are opaque handles released with their `_free` function.
//! String outputs use caller buffers: the required size including the
//! terminating NUL is always written to `needed`, and `IRW_STATUS_BUFFER_TOO_SMALL`
//! is returned when `capacity` is short. The message for the last failure on
//! the calling thread is available from [`irw_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use irrwalk::asymptotics::GlSampler;
use irrwalk::hsp::{hsp_bounds, parse_generators, subgroup_closure};
use irrwalk::numeric::q_to_f64;
use irrwalk::walk::{tv_to_plancherel, walk_distribution, Mode, WalkDistribution};
use irrwalk::{Error, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Outcome of an FFI call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrwStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Capacity = 3,
    Parse = 4,
    BufferTooSmall = 5,
    AcceptanceFailure = 6,
    Internal = 7,
}

/// Distribution of the walk on Irr(S_n) after `r` steps.
pub struct IrwWalkDistribution {
    inner: WalkDistribution,
    labels: Vec<String>,
}

/// Exact Plancherel sampler for Irr(GL(n, q)).
pub struct IrwGlSampler {
    inner: GlSampler,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(err: &Error) -> IrwStatus {
    match err {
        Error::Capacity { .. } => IrwStatus::Capacity,
        Error::InvalidParameter(_) | Error::SizeMismatch { .. } => IrwStatus::InvalidArgument,
        Error::Parse(_) => IrwStatus::Parse,
        Error::AcceptanceFailure { .. } => IrwStatus::AcceptanceFailure,
        Error::Internal(_) | Error::Io(_) => IrwStatus::Internal,
    }
}

/// Runs `f`, recording errors and converting panics into `IRW_STATUS_INTERNAL`.
fn guard(f: impl FnOnce() -> Result<(), IrwStatus>) -> IrwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IrwStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            IrwStatus::Internal
        }
    }
}

fn lib<T>(r: irrwalk::Result<T>) -> Result<T, IrwStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

fn fail<T>(status: IrwStatus, msg: &str) -> Result<T, IrwStatus> {
    set_error(msg.into());
    Err(status)
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, IrwStatus> {
    match unsafe { p.as_mut() } {
        Some(r) => Ok(r),
        None => fail(IrwStatus::NullPointer, "null output pointer"),
    }
}

unsafe fn in_ref<'a, T>(p: *const T) -> Result<&'a T, IrwStatus> {
    match unsafe { p.as_ref() } {
        Some(r) => Ok(r),
        None => fail(IrwStatus::NullPointer, "null handle"),
    }
}

unsafe fn in_str<'a>(p: *const c_char) -> Result<&'a str, IrwStatus> {
    if p.is_null() {
        return fail(IrwStatus::NullPointer, "null string");
    }
    match unsafe { CStr::from_ptr(p) }.to_str() {
        Ok(s) => Ok(s),
        Err(_) => fail(IrwStatus::Parse, "string is not UTF-8"),
    }
}

/// Copies `s` and a NUL into `buf` when it fits; always reports the size needed.
unsafe fn copy_str(
    s: &str,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> Result<(), IrwStatus> {
    let need = s.len() + 1;
    if !needed.is_null() {
        unsafe { *needed = need };
    }
    if buf.is_null() || capacity < need {
        return Err(IrwStatus::BufferTooSmall);
    }
    unsafe {
        ptr::copy_nonoverlapping(s.as_ptr(), buf as *mut u8, s.len());
        *buf.add(s.len()) = 0;
    }
    Ok(())
}

/// [`copy_str`] that records a short buffer as the last error.
unsafe fn write_str(
    s: &str,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> Result<(), IrwStatus> {
    unsafe { copy_str(s, buf, capacity, needed) }.or_else(|st| fail(st, "buffer too small"))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn irw_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message for the last failed call on this thread.
///
/// Every string output works the same way: the size including the NUL is
/// written to `needed` when it is non-null, and the text is copied only when
/// `capacity` is large enough, otherwise `IRW_STATUS_BUFFER_TOO_SMALL`.
///
/// # Safety
/// `buf` must point to `capacity` writable bytes or be null; `needed` must be
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn irw_last_error(
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> IrwStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    guard(|| unsafe { copy_str(&msg, buf, capacity, needed) })
}

/// Distribution after `r` steps from the trivial representation of S_n,
/// in rational arithmetic when `exact` is nonzero.
///
/// # Safety
/// `out` must be writable. The handle must be released with [`irw_walk_free`].
#[no_mangle]
pub unsafe extern "C" fn irw_walk_new(
    n: usize,
    r: usize,
    exact: i32,
    out: *mut *mut IrwWalkDistribution,
) -> IrwStatus {
    guard(|| {
        let out = unsafe { out_ref(out)? };
        let mode = if exact != 0 { Mode::Exact } else { Mode::Float };
        if n == 0 {
            return fail(IrwStatus::InvalidArgument, "n must be at least 1");
        }
        let inner = lib(walk_distribution(n, r, &Partition::row(n), mode))?;
        let labels = inner.rows().into_iter().map(|(p, _)| p).collect();
        *out = Box::into_raw(Box::new(IrwWalkDistribution { inner, labels }));
        Ok(())
    })
}

/// Releases a distribution handle; null is ignored.
///
/// # Safety
/// `h` must come from [`irw_walk_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn irw_walk_free(h: *mut IrwWalkDistribution) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Number of partitions of `n`.
///
/// # Safety
/// `h` must be a live handle and `len` writable.
#[no_mangle]
pub unsafe extern "C" fn irw_walk_len(h: *const IrwWalkDistribution, len: *mut usize) -> IrwStatus {
    guard(|| {
        let h = unsafe { in_ref(h)? };
        *unsafe { out_ref(len)? } = h.labels.len();
        Ok(())
    })
}

/// Mass of the `i`-th partition in enumeration order, as a double.
///
/// # Safety
/// `h` must be a live handle and `mass` writable.
#[no_mangle]
pub unsafe extern "C" fn irw_walk_mass(
    h: *const IrwWalkDistribution,
    i: usize,
    mass: *mut f64,
) -> IrwStatus {
    guard(|| {
        let h = unsafe { in_ref(h)? };
        let out = unsafe { out_ref(mass)? };
        match h.inner.masses_f64().get(i) {
            Some(m) => {
                *out = *m;
                Ok(())
            }
            None => fail(IrwStatus::InvalidArgument, "index out of range"),
        }
    })
}

/// Label of the `i`-th partition, e.g. `"3+1"`.
///
/// # Safety
/// `h` must be a live handle; strings follow [`irw_last_error`].
#[no_mangle]
pub unsafe extern "C" fn irw_walk_partition(
    h: *const IrwWalkDistribution,
    i: usize,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
) -> IrwStatus {
    guard(|| {
        let h = unsafe { in_ref(h)? };
        match h.labels.get(i) {
            Some(s) => unsafe { write_str(s, buf, capacity, needed) },
            None => fail(IrwStatus::InvalidArgument, "index out of range"),
        }
    })
}

/// Total variation distance to Plancherel measure.
///
/// # Safety
/// `h` must be a live handle and `tv` writable.
#[no_mangle]
pub unsafe extern "C" fn irw_walk_tv(h: *const IrwWalkDistribution, tv: *mut f64) -> IrwStatus {
    guard(|| {
        let h = unsafe { in_ref(h)? };
        *unsafe { out_ref(tv)? } = match &h.inner {
            WalkDistribution::Exact(d) => q_to_f64(&tv_to_plancherel(d)),
            WalkDistribution::Float(d) => tv_to_plancherel(d),
        };
        Ok(())
    })
}

/// Upper bound on the distance to Plancherel after `r` steps on Irr(S_n).
///
/// # Safety
/// `bound` must be writable.
#[no_mangle]
pub unsafe extern "C" fn irw_sn_upper_bound(n: usize, r: usize, bound: *mut f64) -> IrwStatus {
    guard(|| {
        let out = unsafe { out_ref(bound)? };
        if n == 0 {
            return fail(IrwStatus::InvalidArgument, "n must be at least 1");
        }
        *out = irrwalk::walk::sn_upper_bound(n, r);
        Ok(())
    })
}

/// Upper bound on the distance to Plancherel after `r` steps on Irr(GL(n, q)).
///
/// # Safety
/// `bound` must be writable.
#[no_mangle]
pub unsafe extern "C" fn irw_gl_upper_bound(
    n: usize,
    q: u64,
    r: usize,
    bound: *mut f64,
) -> IrwStatus {
    guard(|| {
        let out = unsafe { out_ref(bound)? };
        *out = lib(irrwalk::gl::gl_upper_bound(n, q, r))?;
        Ok(())
    })
}

/// Exact Plancherel sampler for Irr(GL(n, q)). When `u_den` is zero the
/// default size bias is used, otherwise `u = u_num/u_den`.
///
/// # Safety
/// `out` must be writable. Release with [`irw_gl_sampler_free`].
#[no_mangle]
pub unsafe extern "C" fn irw_gl_sampler_new(
    n: usize,
    q: u64,
    u_num: i64,
    u_den: i64,
    out: *mut *mut IrwGlSampler,
) -> IrwStatus {
    guard(|| {
        let out = unsafe { out_ref(out)? };
        let u = (u_den != 0).then(|| BigRational::new(BigInt::from(u_num), BigInt::from(u_den)));
        let inner = lib(GlSampler::new(n, q, u))?;
        *out = Box::into_raw(Box::new(IrwGlSampler { inner }));
        Ok(())
    })
}

/// Releases a sampler handle; null is ignored.
///
/// # Safety
/// `h` must come from [`irw_gl_sampler_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn irw_gl_sampler_free(h: *mut IrwGlSampler) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Draws one family for `seed` and writes its descriptor, e.g. `"1.0:2;2.0:1"`.
/// `attempts` receives the number of proposals used and may be null.
///
/// # Safety
/// `h` must be a live handle; strings follow [`irw_last_error`].
#[no_mangle]
pub unsafe extern "C" fn irw_gl_sampler_draw(
    h: *const IrwGlSampler,
    seed: u64,
    buf: *mut c_char,
    capacity: usize,
    needed: *mut usize,
    attempts: *mut u64,
) -> IrwStatus {
    guard(|| {
        let h = unsafe { in_ref(h)? };
        let (phi, tries) = lib(h.inner.sample(seed))?;
        if !attempts.is_null() {
            unsafe { *attempts = tries };
        }
        unsafe { write_str(&phi.descriptor(), buf, capacity, needed) }
    })
}

/// Distance from Plancherel of the weak Fourier sampling distribution for the
/// subgroup of S_n generated by `gens` (e.g. `"(1 2)(3 4),(1 3)"`), with the
/// two class-sum upper bounds.
///
/// # Safety
/// `gens` must be a NUL-terminated string; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn irw_hsp_bounds(
    n: usize,
    gens: *const c_char,
    tv: *mut f64,
    sharp: *mut f64,
    ks: *mut f64,
) -> IrwStatus {
    guard(|| {
        let gens = unsafe { in_str(gens)? };
        let (tv, sharp, ks) = unsafe { (out_ref(tv)?, out_ref(sharp)?, out_ref(ks)?) };
        let h = lib(parse_generators(n, gens).and_then(|g| subgroup_closure(n, &g)))?;
        let b = lib(hsp_bounds(&h))?;
        *tv = b.tv;
        *sharp = b.sharp;
        *ks = b.ks;
        Ok(())
    })
}

//! C interface to `cubenoise`.
//!
//! Objects cross the boundary as opaque handles created by `*_new` / `*_from_*`
//! and released by the matching `*_free`. Every fallible call returns a
//! [`CnStatus`]; on failure [`cn_last_error`] describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use cubenoise::codes::{lemma13_values, rank_deficiency, weight_distribution, LinearCode};
use cubenoise::cube::{entropy, lq_norm, noise_operator, wht_forward, CubeFunction};
use cubenoise::inequalities::{log_sobolev_gap, main_inequality_gap, noisy_entropy_gap, r_exponent, SubsetMode};
use cubenoise::matroids::{graphic_matroid, lemma17_gap, tail_bound_check, BinaryMatroid, Graph};
use cubenoise::{Error, GapReport};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CnStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    CapExceeded = 3,
    /// The input violates a mathematical precondition (zero function, dependent rows, ...).
    Domain = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// Both sides of a checked inequality `lhs ≤ rhs`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CnGap {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`.
    pub gap: f64,
    pub equality: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CnLemma13 {
    pub f2: f64,
    pub f_inf: f64,
    pub dual_sum: f64,
    pub primal_sum: f64,
    pub max_residual: f64,
}

pub struct CnCube(CubeFunction);
pub struct CnCode(LinearCode);
pub struct CnMatroid(BinaryMatroid);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

struct Failure(CnStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::DimensionOverCap { .. } | Error::CapExceeded { .. } | Error::TooManyColumns { .. } => {
                CnStatus::CapExceeded
            }
            Error::ZeroFunction
            | Error::NegativeValue { .. }
            | Error::Unnormalized { .. }
            | Error::ConstantFunction
            | Error::DependentRows { .. }
            | Error::NonIntegralTransform { .. }
            | Error::Overflow(_) => CnStatus::Domain,
            _ => CnStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CnStatus::NullPointer, format!("{what} is NULL"))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> CnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CnStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            CnStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn input<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn output<'a, T>(p: *mut T, len: usize, need: usize, what: &str) -> Result<&'a mut [T], Failure> {
    if len < need {
        return Err(Failure(CnStatus::BufferTooSmall, format!("{what} holds {len} entries, {need} needed")));
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts_mut(p, len))
}

fn gap(r: &GapReport) -> CnGap {
    CnGap { lhs: r.lhs, rhs: r.rhs, gap: r.gap, equality: r.equality }
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

// ---- cube functions ----

/// Builds a function on `{0,1}^n` from `len = 2^n` values, point `x` at index `Σ x_i 2^{i-1}`.
///
/// # Safety
/// `values` must point to `len` readable doubles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_cube_new(n: usize, values: *const f64, len: usize, out: *mut *mut CnCube) -> CnStatus {
    guard(|| {
        let v = input(values, len, "values")?.to_vec();
        let f = CubeFunction::new(n, v)?;
        put(out, boxed(CnCube(f)), "out")
    })
}

/// # Safety
/// `cube` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn cn_cube_free(cube: *mut CnCube) {
    if !cube.is_null() {
        drop(Box::from_raw(cube));
    }
}

/// Number of points, `2^n`; 0 for NULL.
///
/// # Safety
/// `cube` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cn_cube_len(cube: *const CnCube) -> usize {
    cube.as_ref().map_or(0, |c| c.0.len())
}

/// Copies the values into `out[0..2^n]`.
///
/// # Safety
/// `cube` must be a live handle; `out` must have room for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn cn_cube_values(cube: *const CnCube, out: *mut f64, len: usize) -> CnStatus {
    guard(|| {
        let f = &get(cube, "cube")?.0;
        output(out, len, f.len(), "out")?[..f.len()].copy_from_slice(f.values());
        Ok(())
    })
}

/// Fourier coefficients `f̂(R) = E_x f(x) w_R(x)`, indexed by the subset mask of `R`.
///
/// # Safety
/// `cube` must be a live handle; `out` must have room for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn cn_cube_wht(cube: *const CnCube, out: *mut f64, len: usize) -> CnStatus {
    guard(|| {
        let f = &get(cube, "cube")?.0;
        let spec = wht_forward(f);
        output(out, len, f.len(), "out")?[..f.len()].copy_from_slice(spec.coeffs());
        Ok(())
    })
}

/// New handle holding `T_ε f`.
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_cube_noise(cube: *const CnCube, eps: f64, out: *mut *mut CnCube) -> CnStatus {
    guard(|| {
        let g = noise_operator(&get(cube, "cube")?.0, eps)?;
        put(out, boxed(CnCube(g)), "out")
    })
}

/// `‖f‖_q`; pass `INFINITY` for the max norm.
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_cube_norm(cube: *const CnCube, q: f64, out: *mut f64) -> CnStatus {
    guard(|| put(out, lq_norm(&get(cube, "cube")?.0, q)?, "out"))
}

/// Entropy in bits.
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_cube_entropy(cube: *const CnCube, out: *mut f64) -> CnStatus {
    guard(|| put(out, entropy(&get(cube, "cube")?.0)?, "out"))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_r_exponent(q: f64, out: *mut f64) -> CnStatus {
    guard(|| put(out, r_exponent(q)?, "out"))
}

/// Main norm inequality at `(q, ε)`, natural logs, exact subset sum.
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_main_gap(cube: *const CnCube, q: f64, eps: f64, out: *mut CnGap) -> CnStatus {
    guard(|| {
        let r = main_inequality_gap(&get(cube, "cube")?.0, q, eps, &SubsetMode::Exact)?;
        put(out, gap(&r), "out")
    })
}

/// Noisy entropy inequality at `ε`, entropies in bits.
///
/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_entropy_gap(cube: *const CnCube, eps: f64, out: *mut CnGap) -> CnStatus {
    guard(|| {
        let r = noisy_entropy_gap(&get(cube, "cube")?.0, eps, &SubsetMode::Exact)?;
        put(out, gap(&r), "out")
    })
}

/// # Safety
/// `cube` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_log_sobolev_gap(cube: *const CnCube, q: f64, out: *mut CnGap) -> CnStatus {
    guard(|| {
        let r = log_sobolev_gap(&get(cube, "cube")?.0, q)?;
        put(out, gap(&r), "out")
    })
}

// ---- codes ----

/// Code of length `n` spanned by `k` linearly independent rows; bit `j` of a row is coordinate `j + 1`.
///
/// # Safety
/// `rows` must point to `k` readable words; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_code_from_rows(n: usize, rows: *const u64, k: usize, out: *mut *mut CnCode) -> CnStatus {
    guard(|| {
        let code = LinearCode::from_rows(n, input(rows, k, "rows")?.to_vec())?;
        put(out, boxed(CnCode(code)), "out")
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_code_reed_muller(r: usize, m: usize, out: *mut *mut CnCode) -> CnStatus {
    guard(|| put(out, boxed(CnCode(LinearCode::reed_muller(r, m)?)), "out"))
}

/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cn_code_free(code: *mut CnCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Length `n`; 0 for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cn_code_length(code: *const CnCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.n())
}

/// Dimension `k`; 0 for NULL.
///
/// # Safety
/// `code` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cn_code_dimension(code: *const CnCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.k())
}

/// Writes `a_0 … a_n` into `out`, which must hold at least `n + 1` entries.
///
/// # Safety
/// `code` must be a live handle; `out` must have room for `len` words.
#[no_mangle]
pub unsafe extern "C" fn cn_code_weight_distribution(code: *const CnCode, out: *mut u64, len: usize) -> CnStatus {
    guard(|| {
        let a = weight_distribution(&get(code, "code")?.0)?;
        let counts = a.counts();
        output(out, len, counts.len(), "out")?[..counts.len()].copy_from_slice(counts);
        Ok(())
    })
}

/// `λn − E_{T~λ} r(T)` by exact enumeration.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_code_rank_deficiency(code: *const CnCode, lambda: f64, out: *mut f64) -> CnStatus {
    guard(|| put(out, rank_deficiency(&get(code, "code")?.0, lambda, &SubsetMode::Exact)?, "out"))
}

/// The four coinciding expressions for `F(λ, 2) = F(λ, ∞)`, in bits.
///
/// # Safety
/// `code` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_code_lemma13(code: *const CnCode, lambda: f64, out: *mut CnLemma13) -> CnStatus {
    guard(|| {
        let v = lemma13_values(&get(code, "code")?.0, lambda)?;
        let row = CnLemma13 {
            f2: v.f2,
            f_inf: v.f_inf,
            dual_sum: v.dual_sum,
            primal_sum: v.primal_sum,
            max_residual: v.max_residual(),
        };
        put(out, row, "out")
    })
}

// ---- matroids ----

/// Binary matroid on the `n` columns of a `count × n` matrix; rows may be dependent.
///
/// # Safety
/// `rows` must point to `count` readable words; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_matroid_from_rows(
    n: usize,
    rows: *const u64,
    count: usize,
    out: *mut *mut CnMatroid,
) -> CnStatus {
    guard(|| {
        let m = BinaryMatroid::from_rows(n, input(rows, count, "rows")?.to_vec())?;
        put(out, boxed(CnMatroid(m)), "out")
    })
}

/// Graphic matroid of a multigraph; `endpoints` holds `2 · edge_count` vertex indices.
///
/// # Safety
/// `endpoints` must point to `2 · edge_count` readable integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_matroid_from_graph(
    vertex_count: usize,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut CnMatroid,
) -> CnStatus {
    guard(|| {
        let flat = input(endpoints, 2 * edge_count, "endpoints")?;
        let edges = flat.chunks_exact(2).map(|e| (e[0] as usize, e[1] as usize)).collect();
        let g = Graph::new(vertex_count, edges)?;
        put(out, boxed(CnMatroid(graphic_matroid(&g))), "out")
    })
}

/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cn_matroid_free(m: *mut CnMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// `log₂ E_{S~p} 2^{|S|−r(S)}` against `E_{T~t}(|T| − r(T))`, exact.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_matroid_lemma17(m: *const CnMatroid, p: f64, out: *mut CnGap) -> CnStatus {
    guard(|| {
        let r = lemma17_gap(&get(m, "matroid")?.0, p, &SubsetMode::Exact)?;
        put(out, gap(&r), "out")
    })
}

/// Exact tail probability (`lhs`) against `2^{−Δ}` (`rhs`).
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cn_matroid_tail(m: *const CnMatroid, p: f64, delta: f64, out: *mut CnGap) -> CnStatus {
    guard(|| {
        let r = tail_bound_check(&get(m, "matroid")?.0, p, delta)?;
        put(out, gap(&r), "out")
    })
}

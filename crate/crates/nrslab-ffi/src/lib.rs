//! C ABI for the nrslab verification engine.
//!
//! Polynomials are opaque handles created from the JSON form
//! `{"a0": "p/q", "roots": ["p/q", ...]}` and released with
//! `nrslab_poly_free`. Every fallible call returns an `NrslabStatus`
//! code and writes results through out pointers. Strings returned
//! through `char**` out parameters are owned by the caller and must be
//! released with `nrslab_string_free`.

use std::ffi::{c_char, CStr, CString};

use num::complex::Complex64;

use nrslab::attractor::{certify_fixed_point, AlgebraCtx, v_set};
use nrslab::comb::subsets_k;
use nrslab::jacobian::{check_det_m_eq_det_uv, check_factorization, RootSplit};
use nrslab::lgv::{build_g, CoeffCtx};
use nrslab::nrs2::{classify_limit, iterate, IterStatus, Nrs2System};
use nrslab::polyspec::PolySpec;
use nrslab::report::RunConfig;
use nrslab::suites::run_suite;

/// Result codes for every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NrslabStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
}

/// Opaque handle over an exact input polynomial.
pub struct NrslabPoly {
    spec: PolySpec,
}

/// Outcome of one NRS(2) iteration run.
#[repr(C)]
pub struct NrslabIterResult {
    /// 0 converged, 1 diverged, 2 hit the step limit, 3 singular Jacobian.
    pub status: i32,
    pub steps: u64,
    pub limit_re0: f64,
    pub limit_im0: f64,
    pub limit_re1: f64,
    pub limit_im1: f64,
    /// Root indices i < j with z_i + z_j matching the limit, or -1.
    pub matched_i: i64,
    pub matched_j: i64,
}

fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, NrslabStatus> {
    if ptr.is_null() {
        return Err(NrslabStatus::NullArgument);
    }
    unsafe { CStr::from_ptr(ptr) }
        .to_str()
        .map_err(|_| NrslabStatus::InvalidUtf8)
}

fn write_string(out: *mut *mut c_char, s: String) -> NrslabStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            NrslabStatus::Ok
        }
        Err(_) => NrslabStatus::DomainError,
    }
}

/// Parses a polynomial from its JSON form into a new handle.
#[no_mangle]
pub extern "C" fn nrslab_poly_from_json(
    json: *const c_char,
    out: *mut *mut NrslabPoly,
) -> NrslabStatus {
    if out.is_null() {
        return NrslabStatus::NullArgument;
    }
    let text = match read_str(json) {
        Ok(t) => t,
        Err(e) => return e,
    };
    match PolySpec::from_json(text) {
        Ok(spec) => {
            let handle = Box::new(NrslabPoly { spec });
            unsafe { *out = Box::into_raw(handle) };
            NrslabStatus::Ok
        }
        Err(_) => NrslabStatus::ParseError,
    }
}

/// Degree of the polynomial, or -1 for a null handle.
#[no_mangle]
pub extern "C" fn nrslab_poly_degree(poly: *const NrslabPoly) -> i32 {
    if poly.is_null() {
        return -1;
    }
    unsafe { &*poly }.spec.degree() as i32
}

/// Serializes the polynomial back to its JSON form.
#[no_mangle]
pub extern "C" fn nrslab_poly_to_json(
    poly: *const NrslabPoly,
    out: *mut *mut c_char,
) -> NrslabStatus {
    if poly.is_null() || out.is_null() {
        return NrslabStatus::NullArgument;
    }
    write_string(out, unsafe { &*poly }.spec.to_json())
}

/// Releases a polynomial handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn nrslab_poly_free(poly: *mut NrslabPoly) {
    if !poly.is_null() {
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub extern "C" fn nrslab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Certifies every attractor point of NRS(m): each candidate built from an
/// m-subset of roots satisfies all fixed-point relations exactly.
#[no_mangle]
pub extern "C" fn nrslab_certify_attractors(
    poly: *const NrslabPoly,
    m: usize,
    out_pass: *mut bool,
) -> NrslabStatus {
    if poly.is_null() || out_pass.is_null() {
        return NrslabStatus::NullArgument;
    }
    let spec = &unsafe { &*poly }.spec;
    if m < 1 || m >= spec.degree() {
        return NrslabStatus::DomainError;
    }
    let ctx = AlgebraCtx::from_spec(spec);
    let alphas = match v_set(&ctx, m) {
        Ok(v) => v,
        Err(_) => return NrslabStatus::DomainError,
    };
    let mut pass = true;
    for alpha in &alphas {
        match certify_fixed_point(&ctx, alpha) {
            Ok(ok) => pass &= ok,
            Err(_) => return NrslabStatus::DomainError,
        }
    }
    unsafe { *out_pass = pass };
    NrslabStatus::Ok
}

/// Checks the Jacobian determinant factorization for every m-subset of roots:
/// det equals the product of pairwise root differences across the split, via
/// both the matrix route and the closed form.
#[no_mangle]
pub extern "C" fn nrslab_check_jacobian(
    poly: *const NrslabPoly,
    m: usize,
    out_pass: *mut bool,
) -> NrslabStatus {
    if poly.is_null() || out_pass.is_null() {
        return NrslabStatus::NullArgument;
    }
    let spec = &unsafe { &*poly }.spec;
    let d = spec.degree();
    if m < 1 || m >= d {
        return NrslabStatus::DomainError;
    }
    let mut pass = true;
    for sel in subsets_k(d, m) {
        let split = match RootSplit::from_spec(spec, &sel) {
            Ok(s) => s,
            Err(_) => return NrslabStatus::DomainError,
        };
        pass &= check_det_m_eq_det_uv(&split) && check_factorization(&split);
    }
    unsafe { *out_pass = pass };
    NrslabStatus::Ok
}

/// Builds the elimination polynomial g(x0) whose roots are the pairwise root
/// sums, returned as JSON `{"degree": D, "coeffs": ["p/q", ...]}` with
/// coefficients in ascending order.
#[no_mangle]
pub extern "C" fn nrslab_g_poly_json(
    poly: *const NrslabPoly,
    out: *mut *mut c_char,
) -> NrslabStatus {
    if poly.is_null() || out.is_null() {
        return NrslabStatus::NullArgument;
    }
    let spec = &unsafe { &*poly }.spec;
    let ctx = CoeffCtx::new(spec.coeffs().to_vec());
    let g = match build_g(&ctx) {
        Ok(g) => g,
        Err(_) => return NrslabStatus::DomainError,
    };
    let degree = g.degree().unwrap_or(0);
    let coeffs: Vec<String> = (0..=degree).map(|i| g.coeff(i).to_string()).collect();
    let doc = serde_json::json!({"degree": degree, "coeffs": coeffs});
    write_string(out, doc.to_string())
}

/// Runs NRS(2) from a complex start point until the step norm drops below
/// `tol` or `maxiter` steps elapse, then classifies the limit against the
/// pairwise root sums.
#[no_mangle]
pub extern "C" fn nrslab_nrs2_iterate(
    poly: *const NrslabPoly,
    start_re0: f64,
    start_im0: f64,
    start_re1: f64,
    start_im1: f64,
    tol: f64,
    maxiter: u64,
    out: *mut NrslabIterResult,
) -> NrslabStatus {
    if poly.is_null() || out.is_null() {
        return NrslabStatus::NullArgument;
    }
    let spec = &unsafe { &*poly }.spec;
    let sys = match Nrs2System::new(spec.clone()) {
        Ok(s) => s,
        Err(_) => return NrslabStatus::DomainError,
    };
    let start = (
        Complex64::new(start_re0, start_im0),
        Complex64::new(start_re1, start_im1),
    );
    let trace = iterate(&sys, start, tol, maxiter as usize);
    let status = match trace.status {
        IterStatus::Converged => 0,
        IterStatus::Diverged => 1,
        IterStatus::MaxIter => 2,
        IterStatus::Singular => 3,
    };
    let (l0, l1) = trace.limit.unwrap_or((
        Complex64::new(f64::NAN, f64::NAN),
        Complex64::new(f64::NAN, f64::NAN),
    ));
    let (mi, mj) = if trace.status == IterStatus::Converged {
        classify_limit(spec, l0, 1e-6)
            .first()
            .map_or((-1, -1), |&(i, j)| (i as i64, j as i64))
    } else {
        (-1, -1)
    };
    unsafe {
        *out = NrslabIterResult {
            status,
            steps: trace.steps as u64,
            limit_re0: l0.re,
            limit_im0: l0.im,
            limit_re1: l1.re,
            limit_im1: l1.im,
            matched_i: mi,
            matched_j: mj,
        };
    }
    NrslabStatus::Ok
}

/// Runs a named verification suite with the given seed and returns the full
/// JSON report. Suites: identities, attractors, jacobian, gpoly, graphs,
/// newton-series, nrs2, all.
#[no_mangle]
pub extern "C" fn nrslab_run_suite(
    suite: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> NrslabStatus {
    if out.is_null() {
        return NrslabStatus::NullArgument;
    }
    let name = match read_str(suite) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let cfg = RunConfig {
        seed,
        ..RunConfig::default()
    };
    match run_suite(name, &cfg) {
        Ok(report) => write_string(out, report.to_json()),
        Err(_) => NrslabStatus::DomainError,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn make_poly(json: &str) -> *mut NrslabPoly {
        let c = CString::new(json).unwrap();
        let mut handle: *mut NrslabPoly = ptr::null_mut();
        assert_eq!(
            nrslab_poly_from_json(c.as_ptr(), &mut handle),
            NrslabStatus::Ok
        );
        handle
    }

    fn take_string(ptr: *mut c_char) -> String {
        let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
        nrslab_string_free(ptr);
        s
    }

    #[test]
    fn poly_roundtrip_and_degree() {
        let p = make_poly(r#"{"a0": "-6", "roots": ["1", "2", "3"]}"#);
        assert_eq!(nrslab_poly_degree(p), 3);
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(nrslab_poly_to_json(p, &mut s), NrslabStatus::Ok);
        let back = take_string(s);
        assert!(back.contains("-6"));
        nrslab_poly_free(p);
    }

    #[test]
    fn bad_json_is_parse_error() {
        let c = CString::new("not json").unwrap();
        let mut handle: *mut NrslabPoly = ptr::null_mut();
        assert_eq!(
            nrslab_poly_from_json(c.as_ptr(), &mut handle),
            NrslabStatus::ParseError
        );
        assert!(handle.is_null());
    }

    #[test]
    fn null_arguments_are_rejected() {
        assert_eq!(
            nrslab_poly_from_json(ptr::null(), ptr::null_mut()),
            NrslabStatus::NullArgument
        );
        assert_eq!(nrslab_poly_degree(ptr::null()), -1);
        let mut pass = false;
        assert_eq!(
            nrslab_certify_attractors(ptr::null(), 2, &mut pass),
            NrslabStatus::NullArgument
        );
        nrslab_poly_free(ptr::null_mut());
        nrslab_string_free(ptr::null_mut());
    }

    #[test]
    fn certify_and_jacobian_pass() {
        let p = make_poly(r#"{"a0": "-6", "roots": ["1", "2", "3"]}"#);
        for m in 1..=2 {
            let mut pass = false;
            assert_eq!(nrslab_certify_attractors(p, m, &mut pass), NrslabStatus::Ok);
            assert!(pass);
            assert_eq!(nrslab_check_jacobian(p, m, &mut pass), NrslabStatus::Ok);
            assert!(pass);
        }
        let mut pass = false;
        assert_eq!(
            nrslab_certify_attractors(p, 3, &mut pass),
            NrslabStatus::DomainError
        );
        nrslab_poly_free(p);
    }

    #[test]
    fn g_poly_json_has_expected_degree() {
        let p = make_poly(r#"{"a0": "-6", "roots": ["1", "2", "3"]}"#);
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(nrslab_g_poly_json(p, &mut s), NrslabStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["degree"], 3);
        assert_eq!(v["coeffs"].as_array().unwrap().len(), 4);
        nrslab_poly_free(p);
    }

    #[test]
    fn iterate_converges_to_pairwise_sum() {
        let p = make_poly(r#"{"a0": "-6", "roots": ["1", "2", "3"]}"#);
        let mut res = NrslabIterResult {
            status: -1,
            steps: 0,
            limit_re0: 0.0,
            limit_im0: 0.0,
            limit_re1: 0.0,
            limit_im1: 0.0,
            matched_i: -1,
            matched_j: -1,
        };
        let st = nrslab_nrs2_iterate(p, 3.1, 0.0, -0.9, 0.0, 1e-12, 200, &mut res);
        assert_eq!(st, NrslabStatus::Ok);
        assert_eq!(res.status, 0);
        assert!(res.matched_i >= 0 && res.matched_j > res.matched_i);
        nrslab_poly_free(p);
    }

    #[test]
    fn run_suite_reports_json() {
        let name = CString::new("newton-series").unwrap();
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(nrslab_run_suite(name.as_ptr(), 42, &mut s), NrslabStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
        assert_eq!(v["failed"], 0);
        let bad = CString::new("nope").unwrap();
        assert_eq!(
            nrslab_run_suite(bad.as_ptr(), 42, &mut s),
            NrslabStatus::DomainError
        );
    }
}

//! Scalar special functions: Pochhammer symbols, log-gamma, the Gauss 2F1
//! and Clausen 3F2 series, an Euler-integral route for 2F1, and the
//! corrected reduction-table closed forms.

mod tables;

pub use tables::{table1_closed_form, table2_closed_form, Table1Row};

use crate::error::{MathError, MathResult};
use crate::quad;

/// Distance-to-integer tolerance used by every pole check.
pub const POLE_TOL: f64 = 1e-12;

/// Hard cap on series terms; hitting it reports `converged = false`.
pub const MAX_TERMS: usize = 100_000;

/// True when `v` lies within [`POLE_TOL`] of a non-positive integer.
pub fn is_nonpositive_integer(v: f64) -> bool {
    v < 0.5 && (v - v.round()).abs() <= POLE_TOL
}

/// For a numerator parameter `v` that terminates a hypergeometric series,
/// returns the index of the last non-zero term: `Some(m)` when `v` is within
/// tolerance of `-m`.
fn termination_index(v: f64) -> Option<usize> {
    if is_nonpositive_integer(v) {
        Some((-v.round()) as usize)
    } else {
        None
    }
}

/// Parameters of the Gauss hypergeometric function 2F1(a, b; c; z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams2F1 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypParams2F1 {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }

    /// The lower parameter must stay away from the non-positive integers
    /// unless an upper parameter terminates the series first.
    pub fn c_is_valid(&self) -> bool {
        if !is_nonpositive_integer(self.c) {
            return true;
        }
        let pole = (-self.c.round()) as usize;
        match (termination_index(self.a), termination_index(self.b)) {
            (Some(m), Some(k)) => m.min(k) <= pole,
            (Some(m), None) | (None, Some(m)) => m <= pole,
            (None, None) => false,
        }
    }
}

/// Parameters of the Clausen hypergeometric function 3F2(a1, a2, a3; b1, b2; z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams3F2 {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub b1: f64,
    pub b2: f64,
}

impl HypParams3F2 {
    pub fn new(a1: f64, a2: f64, a3: f64, b1: f64, b2: f64) -> Self {
        Self { a1, a2, a3, b1, b2 }
    }

    pub fn denominators_valid(&self) -> bool {
        let cap = [self.a1, self.a2, self.a3]
            .iter()
            .filter_map(|&v| termination_index(v))
            .min();
        for b in [self.b1, self.b2] {
            if is_nonpositive_integer(b) {
                let pole = (-b.round()) as usize;
                if cap.is_none_or(|m| m > pole) {
                    return false;
                }
            }
        }
        true
    }
}

/// Outcome of a truncated series summation.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    /// Error estimate relative to max(1, |value|); non-negative, and at most
    /// the requested tolerance whenever `converged` is true.
    pub est_error: f64,
    pub converged: bool,
}

/// Rising factorial (lambda)_k = lambda (lambda+1) ... (lambda+k-1).
///
/// (lambda)_0 = 1 for every lambda; the product is exactly zero when a
/// factor is zero, i.e. when lambda is a non-positive integer with
/// |lambda| < k. Overflow yields infinity.
pub fn pochhammer(lambda: f64, k: usize) -> f64 {
    let mut acc = 1.0;
    for j in 0..k {
        acc *= lambda + j as f64;
    }
    acc
}

/// ln |(lambda)_k| together with the sign of the product (+1, -1, or 0 is
/// never returned: a zero factor is a domain error).
pub fn ln_pochhammer(lambda: f64, k: usize) -> MathResult<(f64, i8)> {
    let mut ln_abs = 0.0;
    let mut sign: i8 = 1;
    for j in 0..k {
        let factor = lambda + j as f64;
        if factor == 0.0 {
            return Err(MathError::Domain(format!(
                "pochhammer factor ({lambda} + {j}) is zero"
            )));
        }
        if factor < 0.0 {
            sign = -sign;
        }
        ln_abs += factor.abs().ln();
    }
    Ok((ln_abs, sign))
}

/// Lanczos log-gamma for x > 0 (g = 7, 9 coefficients).
pub fn ln_gamma(x: f64) -> f64 {
    const COEF: [f64; 8] = [
        676.5203681218851,
        -1259.1392167224028,
        771.3234287776531,
        -176.6150291621406,
        12.507343278686905,
        -0.13857109526572012,
        9.984369578019572e-6,
        1.5056327351493116e-7,
    ];
    debug_assert!(x > 0.0);
    let mut acc = 0.9999999999998099;
    for (i, c) in COEF.iter().enumerate() {
        acc += c / (x + i as f64);
    }
    let t = x + 6.5; // g + 1/2
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x - 0.5) * t.ln() - t + acc.ln()
}

/// Beta function B(p, q) for p, q > 0.
pub fn beta(p: f64, q: f64) -> f64 {
    (ln_gamma(p) + ln_gamma(q) - ln_gamma(p + q)).exp()
}

/// Shared summation driver: `next` maps the current term at index n to the
/// term at n+1. Stops after three consecutive terms fall below
/// tol * max(1, |partial|), or immediately once a term is exactly zero
/// (a terminated series stays zero).
fn sum_with_recurrence<F: Fn(f64, usize) -> f64>(tol: f64, next: F) -> SeriesResult {
    let mut term = 1.0f64;
    let mut sum = 0.0f64;
    let mut recent = [f64::INFINITY; 3];
    for n in 0..MAX_TERMS {
        sum += term;
        recent[n % 3] = term.abs();
        let scale = sum.abs().max(1.0);
        if recent.iter().all(|&t| t < tol * scale) {
            return SeriesResult {
                value: sum,
                terms_used: n + 1,
                est_error: recent.iter().cloned().fold(0.0, f64::max) / scale,
                converged: true,
            };
        }
        term = next(term, n);
        if term == 0.0 {
            return SeriesResult {
                value: sum,
                terms_used: n + 1,
                est_error: 0.0,
                converged: true,
            };
        }
    }
    SeriesResult {
        value: sum,
        terms_used: MAX_TERMS,
        est_error: recent.iter().cloned().fold(0.0, f64::max) / sum.abs().max(1.0),
        converged: false,
    }
}

/// Gauss series: sums 2F1(a, b; c; z) for |z| < 1 by the term recurrence
/// t(n+1) = t(n) (a+n)(b+n) z / ((c+n)(n+1)).
pub fn gauss2f1_series(p: HypParams2F1, z: f64, tol: f64) -> MathResult<SeriesResult> {
    if !(tol > 0.0) {
        return Err(MathError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if !(z.abs() < 1.0) {
        return Err(MathError::Domain(format!("2F1 series needs |z| < 1, got z = {z}")));
    }
    if !p.c_is_valid() {
        return Err(MathError::Pole(format!(
            "2F1 lower parameter c = {} is a non-positive integer",
            p.c
        )));
    }
    // Snap near-integer upper parameters so a terminating series stops with
    // an exact zero term instead of coasting past a denominator pole.
    let cap = [p.a, p.b].iter().filter_map(|&v| termination_index(v)).min();
    Ok(sum_with_recurrence(tol, |t, n| {
        if cap == Some(n) {
            return 0.0;
        }
        let nf = n as f64;
        // The upper-parameter product is grouped on its own so the result
        // is bit-identical under swapping a and b.
        t * ((p.a + nf) * (p.b + nf)) * z / ((p.c + nf) * (nf + 1.0))
    }))
}

/// Clausen series: sums 3F2(a1, a2, a3; b1, b2; z) for |z| < 1, with the
/// same recurrence structure and stopping rule as [`gauss2f1_series`].
pub fn clausen3f2_series(p: HypParams3F2, z: f64, tol: f64) -> MathResult<SeriesResult> {
    if !(tol > 0.0) {
        return Err(MathError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if !(z.abs() < 1.0) {
        return Err(MathError::Domain(format!("3F2 series needs |z| < 1, got z = {z}")));
    }
    if !p.denominators_valid() {
        return Err(MathError::Pole(format!(
            "3F2 lower parameters ({}, {}) hit a non-positive integer",
            p.b1, p.b2
        )));
    }
    let cap = [p.a1, p.a2, p.a3]
        .iter()
        .filter_map(|&v| termination_index(v))
        .min();
    Ok(sum_with_recurrence(tol, |t, n| {
        if cap == Some(n) {
            return 0.0;
        }
        let nf = n as f64;
        t * (p.a1 + nf) * (p.a2 + nf) * (p.a3 + nf) * z
            / ((p.b1 + nf) * (p.b2 + nf) * (nf + 1.0))
    }))
}

/// Euler-integral route for 2F1: the weight-(b, c-b) Beta average of
/// (1 - z u)^(-a), valid for c > b > 0 and z < 1. Endpoint substitutions in
/// the quadrature handle fractional b or c-b.
pub fn gauss2f1_euler(p: HypParams2F1, z: f64, tol: f64) -> MathResult<f64> {
    if !(p.c > p.b && p.b > 0.0) {
        return Err(MathError::Domain(format!(
            "Euler route needs c > b > 0, got b = {}, c = {}",
            p.b, p.c
        )));
    }
    if !(z < 1.0) {
        return Err(MathError::Domain(format!("Euler route needs z < 1, got z = {z}")));
    }
    if !(tol > 0.0) {
        return Err(MathError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let a = p.a;
    let r = quad::beta_weighted(p.b, p.c - p.b, |u| (1.0 - z * u).powf(-a), 0.1 * tol);
    let prefactor = (ln_gamma(p.c) - ln_gamma(p.b) - ln_gamma(p.c - p.b)).exp();
    Ok(prefactor * r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.0, 4), 360.0);
        assert_eq!(pochhammer(-0.5, 0), 1.0);
        assert_eq!(pochhammer(-2.0, 3), 0.0);
    }

    #[test]
    fn pochhammer_recurrence() {
        for &lambda in &[-3.25, -1.0, 0.5, 2.0, 7.75] {
            for k in 0..50usize {
                let lhs = pochhammer(lambda, k + 1);
                let rhs = pochhammer(lambda, k) * (lambda + k as f64);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn ln_pochhammer_examples() {
        let (v, s) = ln_pochhammer(3.0, 4).unwrap();
        assert_relative_eq!(v, 360.0f64.ln(), max_relative = 1e-15);
        assert_eq!(s, 1);

        let (v, s) = ln_pochhammer(1.0, 0).unwrap();
        assert_eq!(v, 0.0);
        assert_eq!(s, 1);

        // (-1.5)(-0.5) = 0.75
        let (v, s) = ln_pochhammer(-1.5, 2).unwrap();
        assert_relative_eq!(v, 0.75f64.ln(), max_relative = 1e-15);
        assert_eq!(s, 1);

        assert!(ln_pochhammer(-2.0, 3).is_err());
    }

    #[test]
    fn ln_gamma_against_factorials() {
        for n in 1..15u32 {
            let exact: f64 = (1..n).map(|k| k as f64).product::<f64>().ln();
            assert_relative_eq!(ln_gamma(n as f64), exact, epsilon = 1e-12, max_relative = 1e-13);
        }
        // Gamma(1/2) = sqrt(pi)
        assert_relative_eq!(
            ln_gamma(0.5),
            0.5 * std::f64::consts::PI.ln(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn gauss_series_binomial_case() {
        // 2F1(a, b; b; z) = (1 - z)^(-a)
        let r = gauss2f1_series(HypParams2F1::new(2.0, 3.0, 3.0), 0.5, 1e-12).unwrap();
        assert!(r.converged);
        assert_relative_eq!(r.value, 4.0, max_relative = 1e-11);
    }

    #[test]
    fn gauss_series_log_case() {
        // 2F1(1, 1; 2; z) = -ln(1 - z)/z
        let r = gauss2f1_series(HypParams2F1::new(1.0, 1.0, 2.0), 0.5, 1e-13).unwrap();
        assert_relative_eq!(r.value, 1.3862943611198906, max_relative = 1e-12);
    }

    #[test]
    fn gauss_series_at_zero() {
        let r = gauss2f1_series(HypParams2F1::new(1.0, 1.0, 2.0), 0.0, 1e-12).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.converged);
    }

    #[test]
    fn gauss_series_domain_and_pole() {
        assert!(matches!(
            gauss2f1_series(HypParams2F1::new(1.0, 1.0, 2.0), 1.0, 1e-12),
            Err(MathError::Domain(_))
        ));
        assert!(matches!(
            gauss2f1_series(HypParams2F1::new(1.0, 1.0, -2.0), 0.3, 1e-12),
            Err(MathError::Pole(_))
        ));
    }

    #[test]
    fn gauss_series_terminating_with_integer_c() {
        // a = -2 terminates before the pole of c = -3; finite polynomial sum.
        let r = gauss2f1_series(HypParams2F1::new(-2.0, -1.5, -3.0), 0.5, 1e-12).unwrap();
        assert!(r.converged);
        // 1 - z + z^2/8 at z = 1/2 -> 17/32
        assert_relative_eq!(r.value, 17.0 / 32.0, max_relative = 1e-15);
    }

    #[test]
    fn gauss_series_symmetric_in_upper_parameters() {
        for &(a, b, c, z) in &[(0.3, 1.7, 2.2, 0.41), (-1.2, 2.5, 0.7, -0.8), (4.0, 0.1, 5.5, 0.9)] {
            let lhs = gauss2f1_series(HypParams2F1::new(a, b, c), z, 1e-12).unwrap();
            let rhs = gauss2f1_series(HypParams2F1::new(b, a, c), z, 1e-12).unwrap();
            assert_eq!(lhs.value.to_bits(), rhs.value.to_bits());
        }
    }

    #[test]
    fn euler_route_matches_series() {
        let tol = 1e-10;
        // Spec'd spot: 2F1(1,1;2;1/2) = 2 ln 2
        let v = gauss2f1_euler(HypParams2F1::new(1.0, 1.0, 2.0), 0.5, tol).unwrap();
        assert_relative_eq!(v, 1.3862943611198906, max_relative = 10.0 * tol);

        // a = 0 makes the integrand the plain Beta density.
        let v = gauss2f1_euler(HypParams2F1::new(0.0, 1.0, 2.0), 0.7, tol).unwrap();
        assert_relative_eq!(v, 1.0, max_relative = 10.0 * tol);

        let v = gauss2f1_euler(HypParams2F1::new(1.0, 2.0, 4.0), -0.3, tol).unwrap();
        let s = gauss2f1_series(HypParams2F1::new(1.0, 2.0, 4.0), -0.3, tol).unwrap();
        assert_relative_eq!(v, s.value, max_relative = 10.0 * tol);
    }

    #[test]
    fn euler_route_fractional_parameters() {
        let tol = 1e-10;
        for &(a, b, c) in &[(0.5, 0.25, 0.75), (1.5, 0.4, 1.2), (-0.7, 2.3, 2.9)] {
            for &z in &[-0.9, -0.4, 0.1, 0.6, 0.9] {
                let p = HypParams2F1::new(a, b, c);
                let v = gauss2f1_euler(p, z, tol).unwrap();
                let s = gauss2f1_series(p, z, tol).unwrap();
                assert_relative_eq!(v, s.value, max_relative = 10.0 * tol, epsilon = 10.0 * tol);
            }
        }
    }

    #[test]
    fn euler_route_preconditions() {
        assert!(gauss2f1_euler(HypParams2F1::new(1.0, 2.0, 1.5), 0.3, 1e-10).is_err());
        assert!(gauss2f1_euler(HypParams2F1::new(1.0, 1.0, 2.0), 1.0, 1e-10).is_err());
    }

    #[test]
    fn clausen_series_examples() {
        let r = clausen3f2_series(HypParams3F2::new(1.0, 1.0, 1.0, 2.0, 2.0), 0.0, 1e-12).unwrap();
        assert_eq!(r.value, 1.0);

        // Upper/lower cancellation: 3F2(1,1,3;3,2;z) = 2F1(1,1;2;z)
        let r = clausen3f2_series(HypParams3F2::new(1.0, 1.0, 3.0, 3.0, 2.0), 0.4, 1e-13).unwrap();
        let s = gauss2f1_series(HypParams2F1::new(1.0, 1.0, 2.0), 0.4, 1e-13).unwrap();
        assert_relative_eq!(r.value, s.value, max_relative = 1e-12);

        // Frozen reference for 3F2(1/4,1,1;5/4,2;1/2).
        let r = clausen3f2_series(HypParams3F2::new(0.25, 1.0, 1.0, 1.25, 2.0), 0.5, 1e-14).unwrap();
        assert_relative_eq!(r.value, 1.0627915517192574, max_relative = 1e-12);
    }

    #[test]
    fn series_respects_term_cap() {
        // Extremely slow convergence forces the cap.
        let r = gauss2f1_series(HypParams2F1::new(0.5, 0.5, 1.0), 0.999999999, 1e-15).unwrap();
        assert!(!r.converged);
        assert_eq!(r.terms_used, MAX_TERMS);
    }
}

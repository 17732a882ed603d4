//! Two-term closed forms for the shifted family F2(a+1; alpha1, 1; beta1, 2)
//! and its a = 0 limit F2(1; alpha1, 1; beta1, 2).

use super::{f2_series, EvalPoint, F2Params};
use crate::error::{MathError, MathResult};
use crate::special::{clausen3f2_series, gauss2f1_series, is_nonpositive_integer, HypParams2F1, HypParams3F2};

/// Below this |y| the 1/y-prefactored combinations cancel catastrophically
/// and evaluation falls back to the series.
pub const SMALL_Y_THRESHOLD: f64 = 1e-4;

fn check_point(pt: EvalPoint) -> MathResult<()> {
    if !pt.is_series_convergent() {
        return Err(MathError::Domain(format!(
            "needs |x| + |y| < 1, got {} at ({}, {})",
            pt.norm1(),
            pt.x,
            pt.y
        )));
    }
    Ok(())
}

/// F2(a + 1; alpha1, 1; beta1, 2; x, y) as a two-term 2F1 combination:
/// (1/(a y)) [ (1-y)^(-a) 2F1(a, alpha1; beta1; x/(1-y)) - 2F1(a, alpha1; beta1; x) ].
/// Requires a != 0; |y| below [`SMALL_Y_THRESHOLD`] delegates to the series.
pub fn f2_theorem1_shift(
    a: f64,
    alpha1: f64,
    beta1: f64,
    pt: EvalPoint,
    tol: f64,
) -> MathResult<f64> {
    if a.abs() <= 1e-12 {
        return Err(MathError::Param("a = 0 is excluded; use the log form".into()));
    }
    if is_nonpositive_integer(beta1) {
        return Err(MathError::Pole(format!("beta1 = {beta1} is a non-positive integer")));
    }
    check_point(pt)?;

    let params = F2Params::new(a + 1.0, alpha1, 1.0, beta1, 2.0);
    if pt.y.abs() < SMALL_Y_THRESHOLD {
        return Ok(f2_series(&params, pt, tol)?.value);
    }

    let inner_tol = (0.01 * tol).max(1e-15);
    let hp = HypParams2F1::new(a, alpha1, beta1);
    let near = gauss2f1_series(hp, pt.x, inner_tol)?.value;
    let far = gauss2f1_series(hp, pt.x / (1.0 - pt.y), inner_tol)?.value;
    Ok(-near / (a * pt.y) + far / (a * pt.y * (1.0 - pt.y).powf(a)))
}

/// F2(1; alpha1, 1; beta1, 2; x, y) via a 3F2 bracket plus -ln(1-y)/y.
/// |y| below [`SMALL_Y_THRESHOLD`] delegates to the series.
pub fn f2_theorem1_log(
    alpha1: f64,
    beta1: f64,
    pt: EvalPoint,
    tol: f64,
) -> MathResult<f64> {
    if is_nonpositive_integer(beta1) {
        return Err(MathError::Pole(format!("beta1 = {beta1} is a non-positive integer")));
    }
    check_point(pt)?;

    let params = F2Params::new(1.0, alpha1, 1.0, beta1, 2.0);
    if pt.y.abs() < SMALL_Y_THRESHOLD {
        return Ok(f2_series(&params, pt, tol)?.value);
    }

    let (x, y) = (pt.x, pt.y);
    let log_part = -(1.0 - y).ln() / y;
    let prefactor = alpha1 / (beta1 * y);
    if prefactor == 0.0 {
        // alpha1 = 0 collapses the bracket entirely.
        return Ok(log_part);
    }
    let inner_tol = (0.01 * tol).max(1e-15);
    let hp = HypParams3F2::new(alpha1 + 1.0, 1.0, 1.0, beta1 + 1.0, 2.0);
    let t = x / (1.0 - y);
    let far = clausen3f2_series(hp, t, inner_tol)?.value;
    let near = clausen3f2_series(hp, x, inner_tol)?.value;
    Ok(prefactor * (t * far - x * near) + log_part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn shift_reference_values() {
        let tol = 1e-12;
        // Equals the ln-table row F2(2; 1, 1; 2, 2; 0.2, 0.3).
        let v = f2_theorem1_shift(1.0, 1.0, 2.0, EvalPoint::new(0.2, 0.3), tol).unwrap();
        assert_relative_eq!(v, 1.8888114217833862, max_relative = 1e-10);

        // Equals the arcsin row F2(3/2; 1/2, 1; 3/2, 2; 0.25, 0.25).
        let v = f2_theorem1_shift(0.5, 0.5, 1.5, EvalPoint::new(0.25, 0.25), tol).unwrap();
        assert_relative_eq!(v, 1.4700949291534155, max_relative = 1e-10);

        // Series oracle for a generic case.
        let pt = EvalPoint::new(0.1, 0.1);
        let v = f2_theorem1_shift(2.0, 1.0, 3.0, pt, tol).unwrap();
        let s = f2_series(&F2Params::new(3.0, 1.0, 1.0, 3.0, 2.0), pt, tol).unwrap();
        assert_relative_eq!(v, s.value, max_relative = 10.0 * tol);
    }

    #[test]
    fn shift_excludes_a_zero() {
        assert!(matches!(
            f2_theorem1_shift(0.0, 1.0, 2.0, EvalPoint::new(0.1, 0.1), 1e-10),
            Err(MathError::Param(_))
        ));
    }

    #[test]
    fn log_reference_values() {
        let tol = 1e-12;
        // alpha1 = beta1 reduces to (1/y) ln((1-x)/(1-x-y)).
        let v = f2_theorem1_log(1.7, 1.7, EvalPoint::new(0.2, 0.3), tol).unwrap();
        assert_relative_eq!(v, 1.5666787641524518, max_relative = 1e-10);

        // alpha1 = 0 leaves only -ln(1-y)/y.
        let v = f2_theorem1_log(0.0, 2.3, EvalPoint::new(0.4, 0.4), tol).unwrap();
        assert_relative_eq!(v, -(0.6f64).ln() / 0.4, max_relative = 1e-14);

        let pt = EvalPoint::new(0.3, 0.2);
        let v = f2_theorem1_log(1.0, 2.0, pt, tol).unwrap();
        let s = f2_series(&F2Params::new(1.0, 1.0, 1.0, 2.0, 2.0), pt, tol).unwrap();
        assert_relative_eq!(v, s.value, max_relative = 10.0 * tol);
        assert_relative_eq!(v, 1.3602285254751303, max_relative = 1e-10);
    }

    #[test]
    fn continuous_across_small_y_fallback() {
        // The exact function itself moves by ~2.4e-6 between the two probe
        // points, so continuity is measured as the switch-induced jump: the
        // two-route difference minus the series' own smooth variation.
        let tol = 1e-12;
        for &(a, a1, b1, x) in &[(1.0, 1.0, 2.0, 0.3), (0.5, 0.5, 1.5, 0.2), (-0.5, 2.0, 3.0, 0.4)] {
            let below = EvalPoint::new(x, SMALL_Y_THRESHOLD * 0.99);
            let above = EvalPoint::new(x, SMALL_Y_THRESHOLD * 1.01);
            let lo = f2_theorem1_shift(a, a1, b1, below, tol).unwrap();
            let hi = f2_theorem1_shift(a, a1, b1, above, tol).unwrap();
            let params = F2Params::new(a + 1.0, a1, 1.0, b1, 2.0);
            let smooth_lo = f2_series(&params, below, tol).unwrap().value;
            let smooth_hi = f2_series(&params, above, tol).unwrap().value;
            let jump = ((hi - lo) - (smooth_hi - smooth_lo)).abs() / lo.abs();
            assert!(jump < 1e-6, "switch-induced jump {jump:e} at a={a}, x={x}");
        }
        let below = EvalPoint::new(0.3, SMALL_Y_THRESHOLD * 0.99);
        let above = EvalPoint::new(0.3, SMALL_Y_THRESHOLD * 1.01);
        let lo = f2_theorem1_log(1.0, 2.0, below, tol).unwrap();
        let hi = f2_theorem1_log(1.0, 2.0, above, tol).unwrap();
        let params = F2Params::new(1.0, 1.0, 1.0, 2.0, 2.0);
        let smooth_lo = f2_series(&params, below, tol).unwrap().value;
        let smooth_hi = f2_series(&params, above, tol).unwrap().value;
        assert!(((hi - lo) - (smooth_hi - smooth_lo)).abs() / lo.abs() < 1e-6);
    }
}

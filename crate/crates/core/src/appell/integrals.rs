//! Integral routes for F2: the single-integral reduction with a 2F1 kernel
//! and the tensor-product double integral used as a third, lower-precision
//! cross-check.

use super::{Diagnostics, EvalPoint, F2Method, F2Params, F2Result};
use crate::error::{MathError, MathResult};
use crate::quad;
use crate::special::{gauss2f1_series, ln_gamma, HypParams2F1};
use std::cell::Cell;

/// Nominal accuracy target of the double-integral route.
pub const DOUBLE_INTEGRAL_TARGET: f64 = 1e-6;

/// Single-integral route: a weight-(alpha1, beta1-alpha1) Beta average of
/// (1 - x u)^(-sigma) 2F1(sigma, alpha2; beta2; y / (1 - x u)).
///
/// Needs beta1 > alpha1 > 0. Under |x| + |y| < 1 the kernel argument
/// y / (1 - x u) stays inside (-1, 1) for u in [0, 1], so the inner series
/// always converges.
pub fn f2_single_integral(p: &F2Params, pt: EvalPoint, tol: f64) -> MathResult<F2Result> {
    if !(p.beta1 > p.alpha1 && p.alpha1 > 0.0) {
        return Err(MathError::Domain(format!(
            "single-integral route needs beta1 > alpha1 > 0, got alpha1 = {}, beta1 = {}",
            p.alpha1, p.beta1
        )));
    }
    if !pt.is_series_convergent() {
        return Err(MathError::Domain(format!(
            "single-integral route needs |x| + |y| < 1, got {}",
            pt.norm1()
        )));
    }
    if !(tol > 0.0) {
        return Err(MathError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    p.validate()?;

    let (x, y) = (pt.x, pt.y);
    let sigma = p.sigma;
    let kernel = HypParams2F1::new(sigma, p.alpha2, p.beta2);
    let inner_tol = (0.01 * tol).max(1e-15);
    let terms = Cell::new(0usize);

    let integrand = |u: f64| {
        let denom = 1.0 - x * u;
        // Real analysis keeps y/(1 - x u) inside (-1, 1); the clamp only
        // guards the last-ulp rounding case as |x| + |y| approaches 1.
        let z = (y / denom).clamp(-1.0 + 1e-15, 1.0 - 1e-15);
        let f = gauss2f1_series(kernel, z, inner_tol)
            .expect("kernel argument stays inside (-1, 1)");
        terms.set(terms.get() + f.terms_used);
        denom.powf(-sigma) * f.value
    };

    let r = quad::beta_weighted(p.alpha1, p.beta1 - p.alpha1, integrand, 0.1 * tol);
    let prefactor =
        (ln_gamma(p.beta1) - ln_gamma(p.alpha1) - ln_gamma(p.beta1 - p.alpha1)).exp();
    let value = prefactor * r.value;
    Ok(F2Result {
        value,
        method: F2Method::SingleIntegral,
        est_error: (prefactor * r.est_error).abs() / value.abs().max(1.0),
        diagnostics: Diagnostics { terms: terms.get(), panels: r.panels, converged: true },
    })
}

/// Double-integral route: tensor-product quadrature over the unit square
/// with Beta weights on both axes, evaluated at a fixed modest precision.
/// Exists purely as an independent cross-check of the other routes.
pub fn f2_double_integral(p: &F2Params, pt: EvalPoint) -> MathResult<F2Result> {
    for (who, alpha, beta) in [("1", p.alpha1, p.beta1), ("2", p.alpha2, p.beta2)] {
        if !(beta > alpha && alpha > 0.0) {
            return Err(MathError::Domain(format!(
                "double-integral route needs beta{who} > alpha{who} > 0, got ({alpha}, {beta})"
            )));
        }
    }
    if !pt.is_series_convergent() {
        return Err(MathError::Domain(format!(
            "double-integral route needs |x| + |y| < 1, got {}",
            pt.norm1()
        )));
    }

    let (x, y) = (pt.x, pt.y);
    let sigma = p.sigma;
    let panels = Cell::new(0usize);

    let outer = |u: f64| {
        let inner = quad::beta_weighted(
            p.alpha2,
            p.beta2 - p.alpha2,
            |t| (1.0 - x * u - y * t).powf(-sigma),
            0.1 * DOUBLE_INTEGRAL_TARGET,
        );
        panels.set(panels.get() + inner.panels);
        inner.value
    };
    let r = quad::beta_weighted(p.alpha1, p.beta1 - p.alpha1, outer, 0.1 * DOUBLE_INTEGRAL_TARGET);

    let prefactor = (ln_gamma(p.beta1) + ln_gamma(p.beta2)
        - ln_gamma(p.alpha1)
        - ln_gamma(p.alpha2)
        - ln_gamma(p.beta1 - p.alpha1)
        - ln_gamma(p.beta2 - p.alpha2))
    .exp();
    let value = prefactor * r.value;
    Ok(F2Result {
        value,
        method: F2Method::DoubleIntegral,
        est_error: DOUBLE_INTEGRAL_TARGET,
        diagnostics: Diagnostics {
            terms: 0,
            panels: panels.get() + r.panels,
            converged: true,
        },
    })
}

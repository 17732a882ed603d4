//! Appell F2 evaluation routes: the defining double series summed by
//! anti-diagonals, a single-integral reduction with a 2F1 kernel, a
//! tensor-product double integral, two-term closed forms for the shifted
//! parameter family, argument transformations, and the F1 relation.

mod f1;
mod families;
mod integrals;
mod theorem1;
mod transforms;

pub use f1::{f1_series, f1_via_f2};
pub use families::{f2_family_closed, match_family, F2Family};
pub use integrals::{f2_double_integral, f2_single_integral};
pub use theorem1::{f2_theorem1_log, f2_theorem1_shift, SMALL_Y_THRESHOLD};
pub use transforms::{swap_args, transform_x, transform_xy};

use crate::error::{MathError, MathResult};
use crate::special::{is_nonpositive_integer, MAX_TERMS};
use serde::Serialize;

/// The five real parameters of F2(sigma; alpha1, alpha2; beta1, beta2; x, y).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct F2Params {
    pub sigma: f64,
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub beta2: f64,
}

impl F2Params {
    pub fn new(sigma: f64, alpha1: f64, alpha2: f64, beta1: f64, beta2: f64) -> Self {
        Self { sigma, alpha1, alpha2, beta1, beta2 }
    }

    /// Both lower parameters must stay away from the non-positive integers.
    pub fn validate(&self) -> MathResult<()> {
        for (name, b) in [("beta1", self.beta1), ("beta2", self.beta2)] {
            if is_nonpositive_integer(b) {
                return Err(MathError::Pole(format!("{name} = {b} is a non-positive integer")));
            }
        }
        Ok(())
    }
}

/// A real argument pair (x, y).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalPoint {
    pub x: f64,
    pub y: f64,
}

impl EvalPoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn norm1(&self) -> f64 {
        self.x.abs() + self.y.abs()
    }

    /// The double series converges on |x| + |y| < 1.
    pub fn is_series_convergent(&self) -> bool {
        self.norm1() < 1.0
    }
}

/// Which route produced an F2 value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum F2Method {
    Series,
    SingleIntegral,
    DoubleIntegral,
    ClosedForm,
}

/// Term / panel counters carried alongside a value, plus whether the
/// producing route met its tolerance (a capped series reports false here
/// instead of erroring, so callers can tell "no oracle" from "mismatch").
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Diagnostics {
    pub terms: usize,
    pub panels: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct F2Result {
    pub value: f64,
    pub method: F2Method,
    /// Error estimate relative to max(1, |value|); >= 0.
    pub est_error: f64,
    pub diagnostics: Diagnostics,
}

/// Real power with the domain rule used throughout: a non-integer exponent
/// requires a strictly positive base.
pub(crate) fn real_pow(base: f64, expo: f64) -> MathResult<f64> {
    if expo == expo.trunc() && expo.abs() <= i32::MAX as f64 {
        return Ok(base.powi(expo as i32));
    }
    if base <= 0.0 {
        return Err(MathError::Domain(format!(
            "non-integer power {expo} of non-positive base {base}"
        )));
    }
    Ok(base.powf(expo))
}

/// Sums the F2 double series by anti-diagonals m + n = N.
///
/// The diagonal is carried as the full term array
/// `g[m] = (sigma)_N (alpha1)_m (alpha2)_(N-m) x^m y^(N-m)
///         / ((beta1)_m (beta2)_(N-m) m! (N-m)!)`,
/// updated in place from one diagonal to the next so the shared factor
/// (sigma)_N costs one multiplication per element and nothing ever forms
/// (sigma)_N on its own (which would overflow long before the terms do).
/// Summation stops once three consecutive diagonal sums fall below
/// tol * max(1, |partial|). Pochhammer zeros from non-positive-integer
/// numerator parameters propagate as exact zeros and truncate rows
/// naturally. This is the oracle every other route is checked against.
pub fn f2_series(p: &F2Params, pt: EvalPoint, tol: f64) -> MathResult<F2Result> {
    if !(tol > 0.0) {
        return Err(MathError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if !pt.is_series_convergent() {
        return Err(MathError::Domain(format!(
            "series needs |x| + |y| < 1, got {} at ({}, {})",
            pt.norm1(),
            pt.x,
            pt.y
        )));
    }
    p.validate()?;

    let (x, y) = (pt.x, pt.y);
    let mut g: Vec<f64> = vec![1.0];
    let mut sum = 0.0f64;
    let mut terms = 0usize;
    let mut recent = [f64::INFINITY; 3];

    for diag in 0..MAX_TERMS {
        let n_f = diag as f64;
        let diag_sum: f64 = g.iter().sum();
        sum += diag_sum;
        terms += g.len();
        recent[diag % 3] = diag_sum.abs();

        let scale = sum.abs().max(1.0);
        if recent.iter().all(|&d| d < tol * scale) {
            return Ok(F2Result {
                value: sum,
                method: F2Method::Series,
                est_error: recent.iter().cloned().fold(0.0, f64::max) / scale,
                diagnostics: Diagnostics { terms, panels: 0, converged: true },
            });
        }
        if terms > MAX_TERMS || diag + 1 == MAX_TERMS {
            return Ok(F2Result {
                value: sum,
                method: F2Method::Series,
                est_error: recent
                    .iter()
                    .cloned()
                    .filter(|d| d.is_finite())
                    .fold(0.0, f64::max)
                    / scale,
                diagnostics: Diagnostics { terms, panels: 0, converged: false },
            });
        }

        // Advance every element along its column (n -> n+1), then grow the
        // new row head (m = N+1) from the old row end; the head must be
        // computed before the in-place pass clobbers g[N].
        let sigma_factor = p.sigma + n_f;
        let head = g[diag] * sigma_factor * (p.alpha1 + n_f) * x
            / ((p.beta1 + n_f) * (n_f + 1.0));
        for (m, gm) in g.iter_mut().enumerate() {
            let k = n_f - m as f64; // current n-index of this element
            *gm *= sigma_factor * (p.alpha2 + k) * y / ((p.beta2 + k) * (k + 1.0));
        }
        g.push(head);

        if g.iter().all(|&v| v == 0.0) {
            // Terminated (sigma or both numerators hit non-positive integers).
            return Ok(F2Result {
                value: sum,
                method: F2Method::Series,
                est_error: 0.0,
                diagnostics: Diagnostics { terms, panels: 0, converged: true },
            });
        }
    }

    unreachable!("diagonal loop always returns before exhausting the cap")
}

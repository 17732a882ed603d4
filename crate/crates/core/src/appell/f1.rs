//! The Appell F1 double series and its expression through F2. The series is
//! deliberately independent plumbing: it is the oracle for the F1/F2
//! relation, so it must not route through F2 itself.

use super::{f2_series, real_pow, EvalPoint, F2Params};
use crate::error::{MathError, MathResult};
use crate::special::{is_nonpositive_integer, MAX_TERMS};

/// Sums F1(alpha; beta, beta'; gamma; x, y)
///   = sum (alpha)_(m+n) (beta)_m (beta')_n / ((gamma)_(m+n) m! n!) x^m y^n
/// by anti-diagonals, valid for |x| < 1 and |y| < 1.
pub fn f1_series(
    alpha: f64,
    beta: f64,
    beta_prime: f64,
    gamma: f64,
    pt: EvalPoint,
    tol: f64,
) -> MathResult<f64> {
    if !(tol > 0.0) {
        return Err(MathError::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if !(pt.x.abs() < 1.0 && pt.y.abs() < 1.0) {
        return Err(MathError::Domain(format!(
            "F1 series needs |x| < 1 and |y| < 1, got ({}, {})",
            pt.x, pt.y
        )));
    }
    if is_nonpositive_integer(gamma) {
        return Err(MathError::Pole(format!("gamma = {gamma} is a non-positive integer")));
    }

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
            return Ok(sum);
        }
        if terms > MAX_TERMS {
            return Err(MathError::Domain(format!(
                "F1 series did not converge within {MAX_TERMS} terms at ({x}, {y})"
            )));
        }

        let shared = (alpha + n_f) / (gamma + n_f);
        let head = g[diag] * shared * (beta + n_f) * x / (n_f + 1.0);
        for (m, gm) in g.iter_mut().enumerate() {
            let k = n_f - m as f64;
            *gm *= shared * (beta_prime + k) * y / (k + 1.0);
        }
        g.push(head);

        if g.iter().all(|&v| v == 0.0) {
            return Ok(sum);
        }
    }
    unreachable!("diagonal loop always returns before exhausting the cap")
}

/// F1 through F2:
///   F1(alpha; beta, beta'; gamma; x, y)
///     = (x/y)^beta' F2(beta+beta'; alpha, beta'; gamma, beta+beta'; x, 1 - x/y)
///     = (y/x)^beta  F2(beta+beta'; alpha, beta;  gamma, beta+beta'; y, 1 - y/x).
/// Picks whichever printed form hands the F2 series the better-conditioned
/// argument pair (smaller |.|+|.| norm).
pub fn f1_via_f2(
    alpha: f64,
    beta: f64,
    beta_prime: f64,
    gamma: f64,
    pt: EvalPoint,
    tol: f64,
) -> MathResult<f64> {
    let (x, y) = (pt.x, pt.y);
    if !(x * y > 0.0) {
        return Err(MathError::Domain(format!(
            "the power (x/y)^beta' needs x y > 0, got ({x}, {y})"
        )));
    }
    let first = EvalPoint::new(x, 1.0 - x / y);
    let second = EvalPoint::new(y, 1.0 - y / x);
    let use_first = match (first.is_series_convergent(), second.is_series_convergent()) {
        (true, true) => first.norm1() <= second.norm1(),
        (true, false) => true,
        (false, true) => false,
        (false, false) => {
            return Err(MathError::Domain(format!(
                "neither F2 argument pair converges: |{}| and |{}|",
                first.norm1(),
                second.norm1()
            )))
        }
    };

    let (scale, params, point) = if use_first {
        (
            real_pow(x / y, beta_prime)?,
            F2Params::new(beta + beta_prime, alpha, beta_prime, gamma, beta + beta_prime),
            first,
        )
    } else {
        (
            real_pow(y / x, beta)?,
            F2Params::new(beta + beta_prime, alpha, beta, gamma, beta + beta_prime),
            second,
        )
    };
    Ok(scale * f2_series(&params, point, tol)?.value)
}

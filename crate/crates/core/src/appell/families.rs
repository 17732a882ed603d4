//! Native parameterized closed-form families for F2 with (alpha2, beta2) =
//! (1, 2). Each family knows the F2 parameters it represents, so the
//! verifier can replay it against the series oracle and the CLI can match
//! user-supplied parameters onto a family.

use super::{f2_series, real_pow, EvalPoint, F2Params, SMALL_Y_THRESHOLD};
use crate::error::{MathError, MathResult};

const EPS: f64 = 1e-12;

/// The six closed-form families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum F2Family {
    /// F2(a+1; alpha, 1; alpha, 2) = (1/(a y)) [(1-x-y)^(-a) - (1-x)^(-a)], a != 0
    PowDiff { a: f64, alpha: f64 },
    /// F2(a+1; alpha, 1; a, 2) = (1/(a y)) [(1-y)^(alpha-a) (1-x-y)^(-alpha) - (1-x)^(-alpha)], a != 0
    PowBeta { a: f64, alpha: f64 },
    /// F2(a+1; 1, 1; 2, 2) = [(1-x-y)^(1-a) - (1-y)^(1-a) - (1-x)^(1-a) + 1] / (a(a-1) x y), a != 0, 1
    PowSym { a: f64 },
    /// F2(1; alpha1, 1; alpha1, 2) = (1/y) ln((1-x)/(1-x-y))
    LogRatio { alpha1: f64 },
    /// F2(1; 0, 1; beta, 2) = -ln(1-y)/y
    LogY { beta: f64 },
    /// F2(2; b, 1; 2, 2) = (1/((b-1) x y)) [((1-x-y)/(1-y))^(1-b) - (1-x)^(1-b)], b != 1
    PowSplit { b: f64 },
}

impl F2Family {
    /// The F2 parameter tuple this family reduces.
    pub fn params(&self) -> F2Params {
        match *self {
            F2Family::PowDiff { a, alpha } => F2Params::new(a + 1.0, alpha, 1.0, alpha, 2.0),
            F2Family::PowBeta { a, alpha } => F2Params::new(a + 1.0, alpha, 1.0, a, 2.0),
            F2Family::PowSym { a } => F2Params::new(a + 1.0, 1.0, 1.0, 2.0, 2.0),
            F2Family::LogRatio { alpha1 } => F2Params::new(1.0, alpha1, 1.0, alpha1, 2.0),
            F2Family::LogY { beta } => F2Params::new(1.0, 0.0, 1.0, beta, 2.0),
            F2Family::PowSplit { b } => F2Params::new(2.0, b, 1.0, 2.0, 2.0),
        }
    }

    fn check_params(&self) -> MathResult<()> {
        match *self {
            F2Family::PowDiff { a, .. } | F2Family::PowBeta { a, .. } if a.abs() <= EPS => {
                Err(MathError::Param("family excludes a = 0".into()))
            }
            F2Family::PowSym { a } if a.abs() <= EPS || (a - 1.0).abs() <= EPS => {
                Err(MathError::Param("family excludes a in {0, 1}".into()))
            }
            F2Family::PowSplit { b } if (b - 1.0).abs() <= EPS => {
                Err(MathError::Param("family excludes b = 1".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Evaluates a family at a point of its validity domain
/// (0 < x, 0 < y, x + y < 1). Small y delegates to the series, as every
/// family carries a 1/y prefactor with a removable singularity.
pub fn f2_family_closed(family: F2Family, pt: EvalPoint) -> MathResult<f64> {
    family.check_params()?;
    let (x, y) = (pt.x, pt.y);
    if !(x > 0.0 && y > 0.0 && x + y < 1.0) {
        return Err(MathError::Domain(format!(
            "family domain is 0 < x, 0 < y, x + y < 1; got ({x}, {y})"
        )));
    }
    let params = family.params();
    params.validate()?;
    if y < SMALL_Y_THRESHOLD {
        return Ok(f2_series(&params, pt, 1e-12)?.value);
    }
    Ok(match family {
        F2Family::PowDiff { a, .. } => {
            (real_pow(1.0 - x - y, -a)? - real_pow(1.0 - x, -a)?) / (a * y)
        }
        F2Family::PowBeta { a, alpha } => {
            (real_pow(1.0 - y, alpha - a)? * real_pow(1.0 - x - y, -alpha)?
                - real_pow(1.0 - x, -alpha)?)
                / (a * y)
        }
        F2Family::PowSym { a } => {
            (real_pow(1.0 - x - y, 1.0 - a)? - real_pow(1.0 - y, 1.0 - a)?
                - real_pow(1.0 - x, 1.0 - a)?
                + 1.0)
                / (a * (a - 1.0) * x * y)
        }
        F2Family::LogRatio { .. } => ((1.0 - x) / (1.0 - x - y)).ln() / y,
        F2Family::LogY { .. } => -(1.0 - y).ln() / y,
        F2Family::PowSplit { b } => {
            (real_pow((1.0 - x - y) / (1.0 - y), 1.0 - b)? - real_pow(1.0 - x, 1.0 - b)?)
                / ((b - 1.0) * x * y)
        }
    })
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= EPS
}

/// Maps a generic parameter tuple onto a family when one applies (used by
/// the CLI's `auto` method). Families with excluded parameter values are
/// skipped so the caller can fall through to another route.
pub fn match_family(p: &F2Params) -> Option<F2Family> {
    if !close(p.alpha2, 1.0) || !close(p.beta2, 2.0) {
        return None;
    }
    let candidates = [
        (close(p.sigma, 1.0) && close(p.alpha1, 0.0))
            .then_some(F2Family::LogY { beta: p.beta1 }),
        (close(p.sigma, 1.0) && close(p.beta1, p.alpha1))
            .then_some(F2Family::LogRatio { alpha1: p.alpha1 }),
        (close(p.sigma, 2.0) && close(p.beta1, 2.0))
            .then_some(F2Family::PowSplit { b: p.alpha1 }),
        close(p.beta1, p.alpha1)
            .then_some(F2Family::PowDiff { a: p.sigma - 1.0, alpha: p.alpha1 }),
        close(p.beta1, p.sigma - 1.0)
            .then_some(F2Family::PowBeta { a: p.sigma - 1.0, alpha: p.alpha1 }),
        (close(p.alpha1, 1.0) && close(p.beta1, 2.0))
            .then_some(F2Family::PowSym { a: p.sigma - 1.0 }),
    ];
    candidates
        .into_iter()
        .flatten()
        .find(|f| f.check_params().is_ok())
}

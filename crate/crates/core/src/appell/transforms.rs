//! Argument/parameter transformations of F2: the symmetry swap, the two
//! Euler-type argument transforms, and the F1-via-F2 relation they support.

use super::{real_pow, EvalPoint, F2Params};
use crate::error::{MathError, MathResult};

/// F2 is invariant under swapping the two parameter/argument slots:
/// (sigma, a1, a2; b1, b2; x, y) -> (sigma, a2, a1; b2, b1; y, x).
pub fn swap_args(p: &F2Params, pt: EvalPoint) -> (F2Params, EvalPoint) {
    (
        F2Params::new(p.sigma, p.alpha2, p.alpha1, p.beta2, p.beta1),
        EvalPoint::new(pt.y, pt.x),
    )
}

/// First argument transform:
/// F2(sigma, a1, a2; b1, b2; x, y)
///   = (1-x)^(-sigma) F2(sigma, b1-a1, a2; b1, b2; x/(x-1), y/(1-x)).
/// Returns (scale, transformed parameters, transformed point).
pub fn transform_x(p: &F2Params, pt: EvalPoint) -> MathResult<(f64, F2Params, EvalPoint)> {
    if pt.x == 1.0 {
        return Err(MathError::Domain("transform undefined at x = 1".into()));
    }
    let scale = real_pow(1.0 - pt.x, -p.sigma)?;
    let params = F2Params::new(p.sigma, p.beta1 - p.alpha1, p.alpha2, p.beta1, p.beta2);
    let point = EvalPoint::new(pt.x / (pt.x - 1.0), pt.y / (1.0 - pt.x));
    Ok((scale, params, point))
}

/// Second argument transform:
/// F2(sigma, a1, a2; b1, b2; x, y)
///   = (1-x-y)^(-sigma) F2(sigma, b1-a1, b2-a2; b1, b2; x/(x+y-1), y/(x+y-1)).
pub fn transform_xy(p: &F2Params, pt: EvalPoint) -> MathResult<(f64, F2Params, EvalPoint)> {
    if pt.x + pt.y == 1.0 {
        return Err(MathError::Domain("transform undefined on x + y = 1".into()));
    }
    let scale = real_pow(1.0 - pt.x - pt.y, -p.sigma)?;
    let params = F2Params::new(
        p.sigma,
        p.beta1 - p.alpha1,
        p.beta2 - p.alpha2,
        p.beta1,
        p.beta2,
    );
    let s = pt.x + pt.y - 1.0;
    let point = EvalPoint::new(pt.x / s, pt.y / s);
    Ok((scale, params, point))
}

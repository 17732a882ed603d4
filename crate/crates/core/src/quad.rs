//! Adaptive Gauss-Legendre quadrature for the Euler-type integrals.
//!
//! The integrals here all have the shape
//! `int_0^1 u^(p-1) (1-u)^(q-1) g(u) du` with a smooth `g`. For p < 1 or
//! q < 1 the weight has an integrable algebraic singularity at an endpoint;
//! substituting u = t^(1/p) (left) or 1-u = s^(1/q) (right) absorbs the
//! weight into the measure and leaves a smooth integrand, which a 15-point
//! Gauss-Legendre panel with adaptive bisection then handles.

/// 15-point Gauss-Legendre nodes and weights on [-1, 1].
const GL15: [(f64, f64); 15] = [
    (-0.9879925180204854, 0.030753241996118647),
    (-0.937273392400706, 0.07036604748810807),
    (-0.8482065834104272, 0.10715922046717177),
    (-0.7244177313601701, 0.1395706779261539),
    (-0.5709721726085388, 0.16626920581699378),
    (-0.3941513470775634, 0.18616100001556188),
    (-0.20119409399743451, 0.19843148532711125),
    (0.0, 0.2025782419255609),
    (0.20119409399743451, 0.19843148532711125),
    (0.3941513470775634, 0.18616100001556188),
    (0.5709721726085388, 0.16626920581699378),
    (0.7244177313601701, 0.1395706779261539),
    (0.8482065834104272, 0.10715922046717177),
    (0.937273392400706, 0.07036604748810807),
    (0.9879925180204854, 0.030753241996118647),
];

const MAX_DEPTH: usize = 40;

/// Result of an adaptive integration: value, error estimate, panel count.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub est_error: f64,
    pub panels: usize,
}

fn gl15_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = 0.0;
    for &(x, w) in GL15.iter() {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Adaptive bisection: a panel is accepted when its value agrees with the
/// sum of its two halves to the local tolerance share.
pub fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> QuadResult {
    #[allow(clippy::too_many_arguments)]
    fn recurse<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        whole: f64,
        tol: f64,
        depth: usize,
        panels: &mut usize,
        err: &mut f64,
    ) -> f64 {
        let mid = 0.5 * (a + b);
        let left = gl15_panel(f, a, mid);
        let right = gl15_panel(f, mid, b);
        let diff = (left + right - whole).abs();
        *panels += 2;
        if diff <= tol || depth >= MAX_DEPTH {
            *err += diff;
            return left + right;
        }
        recurse(f, a, mid, left, 0.5 * tol, depth + 1, panels, err)
            + recurse(f, mid, b, right, 0.5 * tol, depth + 1, panels, err)
    }

    let whole = gl15_panel(f, a, b);
    let mut panels = 1;
    let mut err = 0.0;
    let value = recurse(f, a, b, whole, tol.max(1e-15), 0, &mut panels, &mut err);
    QuadResult {
        value,
        est_error: err,
        panels,
    }
}

/// Computes `int_0^1 u^(p-1) (1-u)^(q-1) g(u) du` for p, q > 0 and smooth g.
///
/// The interval is split at 1/2; on each half an endpoint substitution is
/// applied when the adjacent exponent is below 1, so every panel the
/// adaptive rule sees is free of algebraic singularities.
pub fn beta_weighted<G: Fn(f64) -> f64>(p: f64, q: f64, g: G, tol: f64) -> QuadResult {
    debug_assert!(p > 0.0 && q > 0.0);
    let half_tol = 0.5 * tol;

    // Left half: u in (0, 1/2], weight u^(p-1) singular for p < 1.
    let left = if p < 1.0 {
        // u = t^(1/p), u^(p-1) du = dt / p, t in (0, (1/2)^p]
        let upper = 0.5f64.powf(p);
        adaptive(
            &|t: f64| {
                let u = t.powf(1.0 / p);
                (1.0 - u).powf(q - 1.0) * g(u) / p
            },
            0.0,
            upper,
            half_tol,
        )
    } else {
        adaptive(
            &|u: f64| u.powf(p - 1.0) * (1.0 - u).powf(q - 1.0) * g(u),
            0.0,
            0.5,
            half_tol,
        )
    };

    // Right half: u in [1/2, 1), weight (1-u)^(q-1) singular for q < 1.
    let right = if q < 1.0 {
        // 1-u = s^(1/q), (1-u)^(q-1) du = ds / q, s in (0, (1/2)^q]
        let upper = 0.5f64.powf(q);
        adaptive(
            &|s: f64| {
                let u = 1.0 - s.powf(1.0 / q);
                u.powf(p - 1.0) * g(u) / q
            },
            0.0,
            upper,
            half_tol,
        )
    } else {
        adaptive(
            &|u: f64| u.powf(p - 1.0) * (1.0 - u).powf(q - 1.0) * g(u),
            0.5,
            1.0,
            half_tol,
        )
    };

    QuadResult {
        value: left.value + right.value,
        est_error: left.est_error + right.est_error,
        panels: left.panels + right.panels,
    }
}

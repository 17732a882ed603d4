//! Built-in verification suite: replays the closed forms and identities the
//! library itself ships (reduction-table rows, the shifted-family forms,
//! argument transforms, the F1 relation, families, the axis collapse)
//! against their independent series oracles.

use super::{sample_grid, Check, EntryReport, GridSpec, VerificationReport, VerifySettings};
use crate::appell::{
    f1_series, f1_via_f2, f2_family_closed, f2_series, f2_theorem1_log, f2_theorem1_shift,
    swap_args, transform_x, transform_xy, EvalPoint, F2Family, F2Params,
};
use crate::special::{
    clausen3f2_series, gauss2f1_series, table1_closed_form, table2_closed_form, HypParams3F2,
    Table1Row,
};

fn z_points(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n)
        .map(|k| lo + (k as f64 + 0.5) * (hi - lo) / n as f64)
        .collect()
}

fn check_table1_row(
    locator: &str,
    note: Option<&str>,
    row: Table1Row,
    settings: &VerifySettings,
) -> EntryReport {
    let mut check = Check::new(settings.pass_tol, settings.verbose);
    let params = row.oracle_params();
    for z in z_points(20, 0.05, 0.9) {
        let closed = match table1_closed_form(row, z) {
            Ok(v) => v,
            Err(_) => {
                check.eval_error();
                continue;
            }
        };
        match gauss2f1_series(params, z, settings.oracle_tol) {
            Ok(r) if r.converged => check.compare(z, 0.0, closed, r.value),
            _ => check.oracle_failure(),
        }
    }
    check.finish(locator.to_string(), note.map(str::to_string))
}

fn check_f2_identity<C, O>(
    locator: &str,
    points: &[EvalPoint],
    settings: &VerifySettings,
    closed: C,
    oracle: O,
) -> EntryReport
where
    C: Fn(EvalPoint) -> Option<f64>,
    O: Fn(EvalPoint) -> Option<f64>,
{
    let mut check = Check::new(settings.pass_tol, settings.verbose);
    for &pt in points {
        let Some(c) = closed(pt) else {
            check.eval_error();
            continue;
        };
        match oracle(pt) {
            Some(o) => check.compare(pt.x, pt.y, c, o),
            None => check.oracle_failure(),
        }
    }
    check.finish(locator.to_string(), None)
}

fn series_value(p: &F2Params, pt: EvalPoint, tol: f64) -> Option<f64> {
    match f2_series(p, pt, tol) {
        Ok(r) if r.diagnostics.converged => Some(r.value),
        _ => None,
    }
}

/// Runs the built-in identity suite on the given grid and returns it as an
/// ordinary verification report.
pub fn verify_builtins(
    grid: &GridSpec,
    settings: &VerifySettings,
    timestamp: Option<u64>,
) -> VerificationReport {
    let mut entries: Vec<EntryReport> = Vec::new();
    let grid_points = sample_grid(grid);
    let tol = settings.oracle_tol;

    // Corrected 2F1 reduction rows against the Gauss series.
    entries.push(check_table1_row("table1:r1(5/2,4;1)", None, Table1Row::R1, settings));
    entries.push(check_table1_row("table1:r2(4/5,1;14/5)", None, Table1Row::R2, settings));
    entries.push(check_table1_row(
        "table1:r3(5/6,1;17/5)",
        Some(
            "label mismatch: the balanced-bracket formula reproduces (5/6,1;17/6), \
             not the (5/6,1;17/5) it is labeled with",
        ),
        Table1Row::R3,
        settings,
    ));
    entries.push(check_table1_row("table1:r4(1,7/2;9/2)", None, Table1Row::R4, settings));
    for (b, m) in [(3.5, 1u32), (4.5, 2), (5.75, 3)] {
        entries.push(check_table1_row(
            &format!("table1:r5(1,b;b-m)[b={b},m={m}]"),
            None,
            Table1Row::R5 { b, m },
            settings,
        ));
    }
    for n in [3u32, 4, 5] {
        entries.push(check_table1_row(
            &format!("table1:r6(-n/2,(1-n)/2;1-n)[n={n}]"),
            None,
            Table1Row::R6 { n },
            settings,
        ));
    }

    // Corrected 3F2 row against the Clausen series.
    {
        let mut check = Check::new(settings.pass_tol, settings.verbose);
        let p = HypParams3F2::new(0.25, 1.0, 1.0, 1.25, 2.0);
        for z in z_points(20, 0.05, 0.9) {
            let closed = match table2_closed_form(z) {
                Ok(v) => v,
                Err(_) => {
                    check.eval_error();
                    continue;
                }
            };
            match clausen3f2_series(p, z, tol) {
                Ok(r) if r.converged => check.compare(z, 0.0, closed, r.value),
                _ => check.oracle_failure(),
            }
        }
        entries.push(check.finish("table2:(1/4,1,1;5/4,2)".to_string(), None));
    }

    // Shifted-family closed forms against the double series.
    let shift_pairs = [(1.0, 2.0), (0.5, 1.5), (2.0, 3.0)];
    for &a in &[-0.5, 0.5, 1.0, 1.5, 2.0] {
        for &(alpha1, beta1) in &shift_pairs {
            let params = F2Params::new(a + 1.0, alpha1, 1.0, beta1, 2.0);
            entries.push(check_f2_identity(
                &format!("theorem1:shift[a={a},alpha1={alpha1},beta1={beta1}]"),
                &grid_points,
                settings,
                |pt| f2_theorem1_shift(a, alpha1, beta1, pt, tol).ok(),
                |pt| series_value(&params, pt, tol),
            ));
        }
    }
    for &(alpha1, beta1) in &shift_pairs {
        let params = F2Params::new(1.0, alpha1, 1.0, beta1, 2.0);
        entries.push(check_f2_identity(
            &format!("theorem1:log[alpha1={alpha1},beta1={beta1}]"),
            &grid_points,
            settings,
            |pt| f2_theorem1_log(alpha1, beta1, pt, tol).ok(),
            |pt| series_value(&params, pt, tol),
        ));
    }

    // Symmetry under slot swap.
    for (i, p) in [
        F2Params::new(2.0, 1.0, 3.0, 2.0, 4.0),
        F2Params::new(0.5, 0.5, 1.0, 1.5, 2.0),
    ]
    .iter()
    .enumerate()
    {
        entries.push(check_f2_identity(
            &format!("property1:swap[{i}]"),
            &grid_points,
            settings,
            |pt| series_value(p, pt, tol),
            |pt| {
                let (q, qt) = swap_args(p, pt);
                series_value(&q, qt, tol)
            },
        ));
    }

    // Argument transforms, checked wherever the transformed point converges.
    for (i, p) in [
        F2Params::new(1.0, 1.0, 1.0, 2.0, 2.0),
        F2Params::new(0.5, 0.5, 1.0, 1.5, 2.0),
    ]
    .iter()
    .enumerate()
    {
        entries.push(check_f2_identity(
            &format!("property2:transform-x[{i}]"),
            &grid_points,
            settings,
            |pt| series_value(p, pt, tol),
            |pt| {
                let (scale, q, qt) = transform_x(p, pt).ok()?;
                if !qt.is_series_convergent() {
                    return None;
                }
                Some(scale * series_value(&q, qt, tol)?)
            },
        ));
        entries.push(check_f2_identity(
            &format!("property2:transform-xy[{i}]"),
            &grid_points,
            settings,
            |pt| series_value(p, pt, tol),
            |pt| {
                let (scale, q, qt) = transform_xy(p, pt).ok()?;
                if !qt.is_series_convergent() {
                    return None;
                }
                Some(scale * series_value(&q, qt, tol)?)
            },
        ));
    }

    // F1 through F2 against the independent F1 series.
    {
        let (alpha, beta, beta_prime, gamma) = (1.0, 1.0, 1.0, 3.0);
        entries.push(check_f2_identity(
            "property3:f1-via-f2",
            &grid_points,
            settings,
            |pt| f1_via_f2(alpha, beta, beta_prime, gamma, pt, tol).ok(),
            |pt| f1_series(alpha, beta, beta_prime, gamma, pt, tol).ok(),
        ));
    }

    // Collapse onto the x-axis: F2(.., (x, 0)) = 2F1(sigma, alpha1; beta1; x).
    {
        let mut check = Check::new(settings.pass_tol, settings.verbose);
        let params = [
            F2Params::new(0.9, -1.3, 3.0, 2.2, 1.4),
            F2Params::new(2.5, 0.4, 0.9, 0.6, 3.1),
            F2Params::new(1.0, 1.0, 7.0, 2.0, 5.0),
        ];
        for p in &params {
            for &x in &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6] {
                let f2 = series_value(p, EvalPoint::new(x, 0.0), tol);
                let g = gauss2f1_series(
                    crate::special::HypParams2F1::new(p.sigma, p.alpha1, p.beta1),
                    x,
                    tol,
                )
                .ok()
                .filter(|r| r.converged)
                .map(|r| r.value);
                match (f2, g) {
                    (Some(a), Some(b)) => check.compare(x, 0.0, a, b),
                    _ => check.oracle_failure(),
                }
            }
        }
        entries.push(check.finish("collapse:y=0".to_string(), None));
    }

    // The six closed-form families.
    let families: [(&str, F2Family); 6] = [
        ("family:pow-diff", F2Family::PowDiff { a: 1.3, alpha: 0.8 }),
        ("family:pow-beta", F2Family::PowBeta { a: 1.3, alpha: 0.8 }),
        ("family:pow-sym", F2Family::PowSym { a: 2.2 }),
        ("family:log-ratio", F2Family::LogRatio { alpha1: 1.7 }),
        ("family:log-y", F2Family::LogY { beta: 2.6 }),
        ("family:pow-split", F2Family::PowSplit { b: 2.7 }),
    ];
    for (locator, family) in families {
        let params = family.params();
        entries.push(check_f2_identity(
            locator,
            &grid_points,
            settings,
            |pt| f2_family_closed(family, pt).ok(),
            |pt| series_value(&params, pt, tol),
        ));
    }

    VerificationReport::assemble(entries, *settings, *grid, timestamp)
}

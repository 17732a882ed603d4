//! Corrected closed forms for a handful of classical 2F1 / 3F2 reduction
//! formulas whose published versions carry misprints. Each row pairs a
//! closed form with the hypergeometric parameters it claims to reduce, so
//! the verifier can replay it against the series oracle.

use super::{clausen3f2_series, is_nonpositive_integer, pochhammer, HypParams2F1, HypParams3F2, POLE_TOL};
use crate::error::{MathError, MathResult};

/// Row selector for the corrected 2F1 table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Table1Row {
    /// 2F1(5/2, 4; 1; z)
    R1,
    /// 2F1(4/5, 1; 14/5; z), written in x = z^(1/5)
    R2,
    /// The row labeled 2F1(5/6, 1; 17/5; z), written in x = z^(1/6).
    /// The printed formula has unbalanced brackets; it is implemented here
    /// with balanced brackets exactly as printed otherwise, and the verifier
    /// decides whether it matches its label.
    R3,
    /// 2F1(1, 7/2; 9/2; z)
    R4,
    /// 2F1(1, b; b - m; z), finite sum over k < m
    R5 { b: f64, m: u32 },
    /// 2F1(-n/2, (1-n)/2; 1-n; z), n != 1, 2
    R6 { n: u32 },
}

impl Table1Row {
    /// The 2F1 parameters the row claims to reduce (used as the oracle).
    pub fn oracle_params(&self) -> HypParams2F1 {
        match *self {
            Table1Row::R1 => HypParams2F1::new(2.5, 4.0, 1.0),
            Table1Row::R2 => HypParams2F1::new(0.8, 1.0, 14.0 / 5.0),
            Table1Row::R3 => HypParams2F1::new(5.0 / 6.0, 1.0, 17.0 / 5.0),
            Table1Row::R4 => HypParams2F1::new(1.0, 3.5, 4.5),
            Table1Row::R5 { b, m } => HypParams2F1::new(1.0, b, b - m as f64),
            Table1Row::R6 { n } => {
                let nf = n as f64;
                HypParams2F1::new(-0.5 * nf, 0.5 * (1.0 - nf), 1.0 - nf)
            }
        }
    }

    fn allows_zero(&self) -> bool {
        matches!(self, Table1Row::R1 | Table1Row::R5 { .. } | Table1Row::R6 { .. })
    }
}

/// Evaluates one corrected 2F1 row at z.
pub fn table1_closed_form(row: Table1Row, z: f64) -> MathResult<f64> {
    let lo_ok = if row.allows_zero() { z >= 0.0 } else { z > 0.0 };
    if !(lo_ok && z < 1.0) {
        return Err(MathError::Domain(format!("z = {z} outside the row's validity domain")));
    }
    match row {
        Table1Row::R1 => {
            Ok((16.0 + 72.0 * z + 18.0 * z * z - z * z * z) / 16.0 * (1.0 - z).powf(-5.5))
        }
        Table1Row::R2 => {
            let x = z.powf(0.2);
            let s5 = 5.0f64.sqrt();
            let q_plus = 10.0 + 2.0 * s5;
            let q_minus = 10.0 - 2.0 * s5;
            let bracket = (1.0 - x.powi(5)).ln() - 5.0 * (1.0 - x).ln()
                - s5 * ((1.0 - 0.5 * (s5 - 1.0) * x + x * x) / (1.0 + 0.5 * (s5 + 1.0) * x + x * x)).ln()
                - 2.0 * q_plus.sqrt() * (q_plus.sqrt() * x / (4.0 - (s5 - 1.0) * x)).atan()
                - 2.0 * q_minus.sqrt() * (q_minus.sqrt() * x / (4.0 + (s5 + 1.0) * x)).atan();
            Ok(9.0 / (5.0 * x.powi(5)) - 9.0 / (25.0 * x.powi(9)) * (1.0 - x.powi(5)) * bracket)
        }
        Table1Row::R3 => {
            let x = z.powf(1.0 / 6.0);
            let s3 = 3.0f64.sqrt();
            let bracket = ((1.0 - x) / (1.0 + x)).ln()
                + 0.5 * ((1.0 - x + x * x) / (1.0 + x + x * x)).ln()
                + s3 * (s3 * x / (1.0 - x * x)).atan();
            Ok(11.0 / (6.0 * x.powi(6)) + 55.0 / (36.0 * x.powi(11)) * (1.0 - x.powi(6)) * bracket)
        }
        Table1Row::R4 => {
            // The published correction prints 15z in the bracket; the series
            // pins the coefficient to 5z.
            let t = z.sqrt().atanh() / z.sqrt();
            Ok(-(7.0 / (15.0 * z.powi(3))) * (15.0 + 5.0 * z + 3.0 * z * z - 15.0 * t))
        }
        Table1Row::R5 { b, m } => {
            if m == 0 {
                return Err(MathError::Param("row needs m >= 1".into()));
            }
            let bad_b = (1..=m).any(|j| (b - j as f64).abs() <= POLE_TOL);
            if bad_b || is_nonpositive_integer(b - m as f64) {
                return Err(MathError::Param(format!(
                    "b = {b} collides with an integer in [1, {m}] or puts b - m on a pole"
                )));
            }
            let mf = m as f64;
            let mut sum = 0.0;
            for k in 0..m {
                sum += pochhammer(-mf, k as usize) / pochhammer(2.0 - b, k as usize)
                    * (1.0 - z).powi(-(k as i32) - 1);
            }
            let m_fact: f64 = (1..=m).map(|j| j as f64).product();
            Ok((b - mf - 1.0) / (b - 1.0) * sum
                - m_fact / pochhammer(1.0 - b, m as usize) * (z - 1.0).powi(-(m as i32) - 1))
        }
        Table1Row::R6 { n } => {
            if n == 1 || n == 2 {
                return Err(MathError::Param(format!("row excludes n = {n}")));
            }
            let w = (1.0 - z).sqrt();
            // Mirror term (1-w)^n included: the terminating series equals the
            // symmetric combination, not (1+w)^n alone.
            Ok(0.5f64.powi(n as i32) * ((1.0 + w).powi(n as i32) + (1.0 - w).powi(n as i32)))
        }
    }
}

/// Corrected 3F2(1/4, 1, 1; 5/4, 2; z) closed form on 0 < z < 1.
///
/// Below z = 1e-3 the printed form loses all digits to cancellation and the
/// series takes over.
pub fn table2_closed_form(z: f64) -> MathResult<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(MathError::Domain(format!("z = {z} outside (0, 1)")));
    }
    if z < 1e-3 {
        let p = HypParams3F2::new(0.25, 1.0, 1.0, 1.25, 2.0);
        return Ok(clausen3f2_series(p, z, 1e-14)?.value);
    }
    let q = z.powf(0.25);
    Ok(((1.0 - z).ln() + z.powf(0.75) * (((1.0 + q) / (1.0 - q)).ln() + 2.0 * q.atan()))
        / (3.0 * z))
}

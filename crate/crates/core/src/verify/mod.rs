//! Cross-checking harness: replay every corpus entry and every built-in
//! closed form on a point grid against the series oracle, and classify the
//! outcome as pass, fail, or suspected misprint.

mod builtins;

pub use builtins::verify_builtins;

use crate::appell::{f2_series, EvalPoint};
use crate::dsl::{eval_expr, CorpusEntry};
use rayon::prelude::*;
use serde::Serialize;

/// Relative error above which a smooth-but-wrong closed form is classified
/// as a suspected misprint rather than a numerical failure.
pub const MISPRINT_THRESHOLD: f64 = 1e-3;

/// Default pass tolerance (relative).
pub const DEFAULT_PASS_TOL: f64 = 1e-8;

/// Default oracle tolerance, two orders below the pass line.
pub const DEFAULT_ORACLE_TOL: f64 = 1e-12;

/// Deterministic tensor grid intersected with x + y <= s_max.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub nx: usize,
    pub ny: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub s_max: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            nx: 8,
            ny: 8,
            x_min: 0.05,
            x_max: 0.65,
            y_min: 0.05,
            y_max: 0.65,
            s_max: 0.7,
        }
    }
}

impl GridSpec {
    /// Cell-center nodes along one axis: lo + (i + 1/2) (hi - lo) / n.
    fn nodes(n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (i as f64 + 0.5) * (hi - lo) / n as f64)
            .collect()
    }
}

/// Grid points in row-major order (x outer, y inner). The sum constraint is
/// applied with a 1e-12 slack so exact-boundary nodes survive rounding.
pub fn sample_grid(g: &GridSpec) -> Vec<EvalPoint> {
    let xs = GridSpec::nodes(g.nx, g.x_min, g.x_max);
    let ys = GridSpec::nodes(g.ny, g.y_min, g.y_max);
    let mut points = Vec::new();
    for &x in &xs {
        for &y in &ys {
            if x + y <= g.s_max + 1e-12 {
                points.push(EvalPoint::new(x, y));
            }
        }
    }
    points
}

/// Verdict for one entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EntryStatus {
    Pass,
    Fail,
    SuspectedMisprint,
    OracleUnavailable,
    DomainEmpty,
}

impl std::fmt::Display for EntryStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EntryStatus::Pass => "Pass",
            EntryStatus::Fail => "Fail",
            EntryStatus::SuspectedMisprint => "SuspectedMisprint",
            EntryStatus::OracleUnavailable => "OracleUnavailable",
            EntryStatus::DomainEmpty => "DomainEmpty",
        };
        f.write_str(s)
    }
}

/// Error record for a single grid point (verbose reports only).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PointRecord {
    pub x: f64,
    pub y: f64,
    pub closed: f64,
    pub oracle: f64,
    pub rel_error: f64,
}

/// Per-entry verification outcome.
#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub locator: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub status: EntryStatus,
    pub points_tested: usize,
    pub max_rel_error: f64,
    pub max_abs_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub worst_point: Option<(f64, f64)>,
    pub eval_errors: usize,
    pub oracle_failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_point: Option<Vec<PointRecord>>,
}

/// Accumulates point-wise comparisons into an [`EntryReport`].
pub(crate) struct Check {
    pass_tol: f64,
    points_tested: usize,
    max_rel: f64,
    max_abs: f64,
    worst: Option<(f64, f64)>,
    eval_errors: usize,
    oracle_failures: usize,
    records: Option<Vec<PointRecord>>,
    had_candidates: bool,
}

impl Check {
    pub fn new(pass_tol: f64, verbose: bool) -> Self {
        Check {
            pass_tol,
            points_tested: 0,
            max_rel: 0.0,
            max_abs: 0.0,
            worst: None,
            eval_errors: 0,
            oracle_failures: 0,
            records: verbose.then(Vec::new),
            had_candidates: false,
        }
    }

    pub fn compare(&mut self, x: f64, y: f64, closed: f64, oracle: f64) {
        self.had_candidates = true;
        self.points_tested += 1;
        let abs = (closed - oracle).abs();
        let rel = abs / oracle.abs().max(1.0);
        if rel >= self.max_rel {
            self.max_rel = rel;
            self.worst = Some((x, y));
        }
        self.max_abs = self.max_abs.max(abs);
        if let Some(records) = &mut self.records {
            records.push(PointRecord { x, y, closed, oracle, rel_error: rel });
        }
    }

    pub fn eval_error(&mut self) {
        self.had_candidates = true;
        self.eval_errors += 1;
    }

    pub fn oracle_failure(&mut self) {
        self.had_candidates = true;
        self.oracle_failures += 1;
    }

    pub fn finish(self, locator: String, note: Option<String>) -> EntryReport {
        let status = if !self.had_candidates {
            EntryStatus::DomainEmpty
        } else if self.points_tested == 0 {
            if self.oracle_failures > 0 {
                EntryStatus::OracleUnavailable
            } else {
                EntryStatus::Fail
            }
        } else if self.max_rel <= self.pass_tol {
            EntryStatus::Pass
        } else if self.max_rel > MISPRINT_THRESHOLD && self.eval_errors == 0 {
            EntryStatus::SuspectedMisprint
        } else {
            EntryStatus::Fail
        };
        EntryReport {
            locator,
            note,
            status,
            points_tested: self.points_tested,
            max_rel_error: self.max_rel,
            max_abs_error: self.max_abs,
            worst_point: self.worst,
            eval_errors: self.eval_errors,
            oracle_failures: self.oracle_failures,
            per_point: self.records,
        }
    }
}

/// Tolerances and switches for a verification run.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifySettings {
    pub pass_tol: f64,
    pub oracle_tol: f64,
    pub max_terms: usize,
    pub verbose: bool,
}

impl Default for VerifySettings {
    fn default() -> Self {
        VerifySettings {
            pass_tol: DEFAULT_PASS_TOL,
            oracle_tol: DEFAULT_ORACLE_TOL,
            max_terms: crate::special::MAX_TERMS,
            verbose: false,
        }
    }
}

/// Status tallies; always equal to the entry-status counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub suspected_misprint: usize,
    pub oracle_unavailable: usize,
    pub domain_empty: usize,
}

impl Summary {
    fn tally(entries: &[EntryReport]) -> Summary {
        let mut s = Summary::default();
        for e in entries {
            match e.status {
                EntryStatus::Pass => s.pass += 1,
                EntryStatus::Fail => s.fail += 1,
                EntryStatus::SuspectedMisprint => s.suspected_misprint += 1,
                EntryStatus::OracleUnavailable => s.oracle_unavailable += 1,
                EntryStatus::DomainEmpty => s.domain_empty += 1,
            }
        }
        s
    }
}

/// A full verification run.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub entries: Vec<EntryReport>,
    pub summary: Summary,
    pub settings: VerifySettings,
    pub grid: GridSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl VerificationReport {
    pub fn assemble(
        entries: Vec<EntryReport>,
        settings: VerifySettings,
        grid: GridSpec,
        timestamp: Option<u64>,
    ) -> Self {
        let summary = Summary::tally(&entries);
        VerificationReport { entries, summary, settings, grid, timestamp }
    }

    /// CLI exit code: 0 all pass, 1 any fail (or untestable entry), 2 any
    /// suspected misprint (takes precedence over 1).
    pub fn exit_code(&self) -> i32 {
        if self.summary.suspected_misprint > 0 {
            2
        } else if self.summary.fail + self.summary.oracle_unavailable + self.summary.domain_empty
            > 0
        {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// CSV summary: one line per entry. Locators are quoted, as they may
    /// contain commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("locator,status,max_rel_error,points_tested\n");
        for e in &self.entries {
            out.push_str(&format!(
                "\"{}\",{},{:e},{}\n",
                e.locator.replace('"', "\"\""),
                e.status,
                e.max_rel_error,
                e.points_tested
            ));
        }
        out
    }
}

/// Verifies one corpus entry on the grid points inside its domain.
///
/// Evaluation errors at individual points shrink the tested set and are
/// recorded; they only force a Fail when nothing at all could be tested or
/// when the surviving errors stay below the misprint threshold.
pub fn verify_entry(
    entry: &CorpusEntry,
    grid: &GridSpec,
    settings: &VerifySettings,
) -> EntryReport {
    let mut check = Check::new(settings.pass_tol, settings.verbose);
    for pt in sample_grid(grid) {
        if !entry.domain.contains(pt) {
            continue;
        }
        let closed = match eval_expr(&entry.expr, pt.x, pt.y) {
            Ok(v) => v,
            Err(_) => {
                check.eval_error();
                continue;
            }
        };
        match f2_series(&entry.params, pt, settings.oracle_tol) {
            Ok(r) if r.diagnostics.converged => check.compare(pt.x, pt.y, closed, r.value),
            _ => check.oracle_failure(),
        }
    }
    let locator = format!("corpus:{} ({})", entry.line, entry.source_note);
    check.finish(locator, None)
}

/// Verifies a whole corpus. Entries are independent and evaluated in
/// parallel; the report preserves input order regardless of scheduling.
pub fn verify_corpus(
    entries: &[CorpusEntry],
    grid: &GridSpec,
    settings: &VerifySettings,
    timestamp: Option<u64>,
) -> VerificationReport {
    let reports: Vec<EntryReport> = entries
        .par_iter()
        .map(|e| verify_entry(e, grid, settings))
        .collect();
    VerificationReport::assemble(reports, *settings, *grid, timestamp)
}

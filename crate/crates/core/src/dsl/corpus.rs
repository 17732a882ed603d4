//! Line-oriented corpus file format: each record carries F2 parameters, a
//! validity domain, the closed-form expression text, and a source note.
//!
//! ```text
//! sigma | alpha1 | alpha2 | beta1 | beta2 | x_min,x_max | y_min,y_max | expr_text | source_note
//! ```
//!
//! Comment lines start with `#`. Numeric fields accept integers, decimals,
//! and rational literals `p/q`. A `-` in both domain fields selects the
//! default domain x, y in (0.05, 0.65); points are additionally constrained
//! by the verification grid's x + y cap (0.7 by default) and by series
//! convergence.

use super::{parse_expr, Expr};
use crate::appell::{EvalPoint, F2Params};
use std::io::BufRead;

/// Rectangular validity domain of one corpus entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    /// Restrict evaluation to the series-convergence region |x| + |y| < 1.
    pub require_sum_lt_1: bool,
}

impl Domain {
    pub const DEFAULT: Domain = Domain {
        x_min: 0.05,
        x_max: 0.65,
        y_min: 0.05,
        y_max: 0.65,
        require_sum_lt_1: true,
    };

    pub fn contains(&self, pt: EvalPoint) -> bool {
        pt.x >= self.x_min
            && pt.x <= self.x_max
            && pt.y >= self.y_min
            && pt.y <= self.y_max
            && (!self.require_sum_lt_1 || pt.is_series_convergent())
    }
}

/// One table row: parameters, expression (text and parsed), domain, note.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub params: F2Params,
    pub expr_text: String,
    pub expr: Expr,
    pub domain: Domain,
    pub source_note: String,
    /// 1-based line number in the source file.
    pub line: usize,
}

/// A per-line problem recorded while loading; loading never fails fast.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusIssue {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for CorpusIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

/// Result of loading a corpus: entries in file order plus recorded issues.
#[derive(Debug, Default)]
pub struct CorpusLoad {
    pub entries: Vec<CorpusEntry>,
    pub issues: Vec<CorpusIssue>,
}

/// Parses a numeric field: integer, decimal, or rational `p/q`.
pub fn parse_real(text: &str) -> Result<f64, String> {
    let t = text.trim();
    if let Some((num, den)) = t.split_once('/') {
        let n: f64 = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in rational `{t}`"))?;
        let d: f64 = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in rational `{t}`"))?;
        if d == 0.0 {
            return Err(format!("zero denominator in rational `{t}`"));
        }
        return Ok(n / d);
    }
    t.parse().map_err(|_| format!("bad number `{t}`"))
}

fn parse_range(text: &str) -> Result<Option<(f64, f64)>, String> {
    let t = text.trim();
    if t == "-" {
        return Ok(None);
    }
    let (lo, hi) = t
        .split_once(',')
        .ok_or_else(|| format!("domain field `{t}` is not `lo,hi` or `-`"))?;
    let lo = parse_real(lo)?;
    let hi = parse_real(hi)?;
    if !(lo <= hi) {
        return Err(format!("empty domain range `{t}`"));
    }
    Ok(Some((lo, hi)))
}

fn parse_record(line: &str, line_no: usize) -> Result<CorpusEntry, String> {
    let fields: Vec<&str> = line.split('|').collect();
    if fields.len() != 9 {
        return Err(format!("expected 9 `|`-separated fields, found {}", fields.len()));
    }
    let sigma = parse_real(fields[0])?;
    let alpha1 = parse_real(fields[1])?;
    let alpha2 = parse_real(fields[2])?;
    let beta1 = parse_real(fields[3])?;
    let beta2 = parse_real(fields[4])?;
    let x_range = parse_range(fields[5])?;
    let y_range = parse_range(fields[6])?;
    let domain = match (x_range, y_range) {
        (None, None) => Domain::DEFAULT,
        (x, y) => {
            let (x_min, x_max) = x.unwrap_or((Domain::DEFAULT.x_min, Domain::DEFAULT.x_max));
            let (y_min, y_max) = y.unwrap_or((Domain::DEFAULT.y_min, Domain::DEFAULT.y_max));
            Domain { x_min, x_max, y_min, y_max, require_sum_lt_1: true }
        }
    };
    let expr_text = fields[7].trim().to_string();
    let expr = parse_expr(&expr_text).map_err(|e| format!("expression: {e}"))?;
    let source_note = fields[8].trim().to_string();
    Ok(CorpusEntry {
        params: F2Params::new(sigma, alpha1, alpha2, beta1, beta2),
        expr_text,
        expr,
        domain,
        source_note,
        line: line_no,
    })
}

/// Loads a corpus from any buffered reader. Entries come back in file
/// order; malformed records and unparseable expressions are collected as
/// per-line issues instead of aborting the load.
pub fn load_corpus<R: BufRead>(reader: R) -> std::io::Result<CorpusLoad> {
    let mut load = CorpusLoad::default();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match parse_record(trimmed, line_no) {
            Ok(entry) => load.entries.push(entry),
            Err(message) => load.issues.push(CorpusIssue { line: line_no, message }),
        }
    }
    Ok(load)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn empty_file_is_empty_corpus() {
        let load = load_corpus(Cursor::new("")).unwrap();
        assert!(load.entries.is_empty());
        assert!(load.issues.is_empty());
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# heading\n\n   \n# another\n";
        let load = load_corpus(Cursor::new(text)).unwrap();
        assert!(load.entries.is_empty());
    }

    #[test]
    fn malformed_rows_are_collected_not_fatal() {
        let text = "\
2 | 1 | 1 | 1 | 2 | - | - | 1/y * ((1-x-y)^(-1) - (1-x)^(-1)) | a
2 | 1 | 1 | 2 | 2 | - | - | ln((1-x)*(1-y)/(1-x-y) / (x*y) | broken parens
1/2 | 1/2 | 1 | 3/2 | 2 | 0.1,0.5 | 0.1,0.4 | 2/(sqrt(x)*y) * (arcsin(sqrt(x/(1-y))) - arcsin(sqrt(x))) | c
";
        let load = load_corpus(Cursor::new(text)).unwrap();
        assert_eq!(load.entries.len(), 2);
        assert_eq!(load.issues.len(), 1);
        assert_eq!(load.issues[0].line, 2);
        assert!(load.issues[0].message.contains("expression"));

        let third = &load.entries[1];
        assert_eq!(third.params.sigma, 0.5);
        assert_eq!(third.params.beta1, 1.5);
        assert_eq!(third.domain.x_max, 0.5);
        assert!(third.domain.require_sum_lt_1);
    }

    #[test]
    fn rational_fields() {
        assert_eq!(parse_real("3/2").unwrap(), 1.5);
        assert_eq!(parse_real(" 7 / 4 ").unwrap(), 1.75);
        assert_eq!(parse_real("0.25").unwrap(), 0.25);
        assert!(parse_real("1/0").is_err());
        assert!(parse_real("abc").is_err());
    }

    #[test]
    fn default_domain_reparse_round_trip() {
        let text = "2 | 1 | 1 | 2 | 2 | - | - | ln((1-x)*(1-y)/(1-x-y)) / (x*y) | note";
        let load = load_corpus(Cursor::new(text)).unwrap();
        let e = &load.entries[0];
        assert_eq!(e.domain, Domain::DEFAULT);
        // expr_text reparses to a structurally equal AST
        assert_eq!(parse_expr(&e.expr_text).unwrap(), e.expr);
    }
}

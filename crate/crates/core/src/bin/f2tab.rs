//! Command-line front end: evaluate F2 / 2F1 / 3F2 / F1 by any route, run
//! the verification harness, or lint a corpus file.
//!
//! Exit codes: 0 success (verify: all pass), 1 verification failures,
//! 2 suspected misprints (takes precedence over 1), 3 usage or domain error.

use appell2::appell::{
    f1_series, f1_via_f2, f2_double_integral, f2_family_closed, f2_series, f2_single_integral,
    f2_theorem1_log, f2_theorem1_shift, match_family, Diagnostics, EvalPoint, F2Method, F2Params,
    F2Result,
};
use appell2::dsl::{load_corpus, parse_real, CorpusLoad};
use appell2::special::{clausen3f2_series, gauss2f1_euler, gauss2f1_series, HypParams2F1, HypParams3F2};
use appell2::verify::{
    sample_grid, verify_builtins, verify_corpus, GridSpec, VerificationReport, VerifySettings,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "f2tab", version, about = "Appell F2 evaluation and reduction-table verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a hypergeometric function at a point.
    Eval(EvalArgs),
    /// Verify the shipped closed forms and/or a corpus file against the
    /// series oracle.
    Verify(VerifyArgs),
    /// Parse-check a corpus file without any numeric work.
    CorpusLint(LintArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Series,
    SingleIntegral,
    DoubleIntegral,
    Closed,
    Auto,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct EvalArgs {
    #[command(subcommand)]
    function: EvalFunction,
}

fn real(s: &str) -> Result<f64, String> {
    parse_real(s)
}

#[derive(Subcommand)]
enum EvalFunction {
    /// Appell F2(sigma; a1, a2; b1, b2; x, y).
    F2 {
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        sigma: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        a1: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        a2: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        b1: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        b2: f64,
        #[arg(short, value_parser = real, allow_hyphen_values = true)]
        x: f64,
        #[arg(short, value_parser = real, allow_hyphen_values = true)]
        y: f64,
        #[arg(long, value_enum, default_value = "series")]
        method: Method,
        #[arg(long, value_parser = real, default_value = "1e-10", allow_hyphen_values = true)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: EvalFormat,
    },
    /// Gauss 2F1(a, b; c; z).
    #[command(name = "2f1")]
    Gauss2F1 {
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        c: f64,
        #[arg(short, value_parser = real, allow_hyphen_values = true)]
        z: f64,
        /// series (default) or single-integral for the Euler route.
        #[arg(long, value_enum, default_value = "series")]
        method: Method,
        #[arg(long, value_parser = real, default_value = "1e-10", allow_hyphen_values = true)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: EvalFormat,
    },
    /// Clausen 3F2(a1, a2, a3; b1, b2; z).
    #[command(name = "3f2")]
    Clausen3F2 {
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        a1: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        a2: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        a3: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        b1: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        b2: f64,
        #[arg(short, value_parser = real, allow_hyphen_values = true)]
        z: f64,
        #[arg(long, value_parser = real, default_value = "1e-10", allow_hyphen_values = true)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: EvalFormat,
    },
    /// Appell F1(alpha; beta, beta'; gamma; x, y).
    F1 {
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long = "beta-prime", value_parser = real, allow_hyphen_values = true)]
        beta_prime: f64,
        #[arg(long, value_parser = real, allow_hyphen_values = true)]
        gamma: f64,
        #[arg(short, value_parser = real, allow_hyphen_values = true)]
        x: f64,
        #[arg(short, value_parser = real, allow_hyphen_values = true)]
        y: f64,
        /// series (default) or closed for the route through F2.
        #[arg(long, value_enum, default_value = "series")]
        method: Method,
        #[arg(long, value_parser = real, default_value = "1e-10", allow_hyphen_values = true)]
        tol: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: EvalFormat,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Corpus file to verify; without it, the built-in suite runs.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Run the built-in identity suite (implied when no corpus is given).
    #[arg(long)]
    builtins: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Omit the timestamp field (for byte-identical golden runs).
    #[arg(long)]
    no_timestamp: bool,
    #[arg(long, value_parser = real, default_value = "1e-8", allow_hyphen_values = true)]
    pass_tol: f64,
    #[arg(long, value_parser = real, default_value = "1e-12", allow_hyphen_values = true)]
    oracle_tol: f64,
    /// Record per-point errors in the report.
    #[arg(long)]
    verbose: bool,
    #[arg(long, default_value_t = 8)]
    nx: usize,
    #[arg(long, default_value_t = 8)]
    ny: usize,
    #[arg(long, value_parser = real, default_value = "0.05", allow_hyphen_values = true)]
    x_min: f64,
    #[arg(long, value_parser = real, default_value = "0.65", allow_hyphen_values = true)]
    x_max: f64,
    #[arg(long, value_parser = real, default_value = "0.05", allow_hyphen_values = true)]
    y_min: f64,
    #[arg(long, value_parser = real, default_value = "0.65", allow_hyphen_values = true)]
    y_max: f64,
    #[arg(long, value_parser = real, default_value = "0.7", allow_hyphen_values = true)]
    s_max: f64,
}

#[derive(Args)]
struct LintArgs {
    /// Corpus file to check.
    path: PathBuf,
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(3)
}

fn print_scalar(format: EvalFormat, value: f64, method: &str, est_error: f64, terms: usize) {
    match format {
        EvalFormat::Text => {
            println!("value     = {value:.17e}");
            println!("method    = {method}");
            println!("est_error = {est_error:.17e}");
            println!("terms     = {terms}");
        }
        EvalFormat::Json => {
            println!(
                "{}",
                serde_json::json!({
                    "value": value,
                    "method": method,
                    "est_error": est_error,
                    "diagnostics": { "terms": terms, "panels": 0 },
                })
            );
        }
    }
}

fn print_f2_result(format: EvalFormat, r: &F2Result) {
    match format {
        EvalFormat::Text => {
            let method = match r.method {
                F2Method::Series => "series",
                F2Method::SingleIntegral => "single-integral",
                F2Method::DoubleIntegral => "double-integral",
                F2Method::ClosedForm => "closed",
            };
            println!("value     = {:.17e}", r.value);
            println!("method    = {method}");
            println!("est_error = {:.17e}", r.est_error);
            println!("terms     = {}", r.diagnostics.terms);
            println!("panels    = {}", r.diagnostics.panels);
        }
        EvalFormat::Json => println!("{}", serde_json::to_string(r).unwrap()),
    }
}

fn eval_f2(
    params: F2Params,
    pt: EvalPoint,
    method: Method,
    tol: f64,
    format: EvalFormat,
) -> Result<(), String> {
    let closed_route = |params: &F2Params, pt: EvalPoint| -> Option<Result<F2Result, String>> {
        if let Some(family) = match_family(params) {
            return Some(
                f2_family_closed(family, pt)
                    .map(|value| F2Result {
                        value,
                        method: F2Method::ClosedForm,
                        est_error: 0.0,
                        diagnostics: Diagnostics { terms: 0, panels: 0, converged: true },
                    })
                    .map_err(|e| e.to_string()),
            );
        }
        if (params.alpha2 - 1.0).abs() <= 1e-12 && (params.beta2 - 2.0).abs() <= 1e-12 {
            let result = if (params.sigma - 1.0).abs() <= 1e-12 {
                f2_theorem1_log(params.alpha1, params.beta1, pt, tol)
            } else {
                f2_theorem1_shift(params.sigma - 1.0, params.alpha1, params.beta1, pt, tol)
            };
            return Some(
                result
                    .map(|value| F2Result {
                        value,
                        method: F2Method::ClosedForm,
                        est_error: tol,
                        diagnostics: Diagnostics { terms: 0, panels: 0, converged: true },
                    })
                    .map_err(|e| e.to_string()),
            );
        }
        None
    };

    let result: F2Result = match method {
        Method::Series => f2_series(&params, pt, tol).map_err(|e| e.to_string())?,
        Method::SingleIntegral => f2_single_integral(&params, pt, tol).map_err(|e| e.to_string())?,
        Method::DoubleIntegral => f2_double_integral(&params, pt).map_err(|e| e.to_string())?,
        Method::Closed => closed_route(&params, pt)
            .ok_or_else(|| "no closed form matches these parameters".to_string())??,
        Method::Auto => match closed_route(&params, pt) {
            Some(Ok(r)) => r,
            _ => f2_series(&params, pt, tol).map_err(|e| e.to_string())?,
        },
    };
    print_f2_result(format, &result);
    Ok(())
}

fn run_eval(args: EvalArgs) -> Result<(), String> {
    match args.function {
        EvalFunction::F2 { sigma, a1, a2, b1, b2, x, y, method, tol, format } => {
            eval_f2(F2Params::new(sigma, a1, a2, b1, b2), EvalPoint::new(x, y), method, tol, format)
        }
        EvalFunction::Gauss2F1 { a, b, c, z, method, tol, format } => {
            let p = HypParams2F1::new(a, b, c);
            match method {
                Method::SingleIntegral => {
                    let v = gauss2f1_euler(p, z, tol).map_err(|e| e.to_string())?;
                    print_scalar(format, v, "single-integral", tol, 0);
                    Ok(())
                }
                Method::Series | Method::Auto => {
                    let r = gauss2f1_series(p, z, tol).map_err(|e| e.to_string())?;
                    if !r.converged {
                        return Err("series did not converge within the term cap".into());
                    }
                    print_scalar(format, r.value, "series", r.est_error, r.terms_used);
                    Ok(())
                }
                _ => Err("2f1 supports methods: series, single-integral, auto".into()),
            }
        }
        EvalFunction::Clausen3F2 { a1, a2, a3, b1, b2, z, tol, format } => {
            let p = HypParams3F2::new(a1, a2, a3, b1, b2);
            let r = clausen3f2_series(p, z, tol).map_err(|e| e.to_string())?;
            if !r.converged {
                return Err("series did not converge within the term cap".into());
            }
            print_scalar(format, r.value, "series", r.est_error, r.terms_used);
            Ok(())
        }
        EvalFunction::F1 { alpha, beta, beta_prime, gamma, x, y, method, tol, format } => {
            let pt = EvalPoint::new(x, y);
            match method {
                Method::Closed => {
                    let v =
                        f1_via_f2(alpha, beta, beta_prime, gamma, pt, tol).map_err(|e| e.to_string())?;
                    print_scalar(format, v, "closed", tol, 0);
                    Ok(())
                }
                Method::Series | Method::Auto => {
                    let v =
                        f1_series(alpha, beta, beta_prime, gamma, pt, tol).map_err(|e| e.to_string())?;
                    print_scalar(format, v, "series", tol, 0);
                    Ok(())
                }
                _ => Err("f1 supports methods: series, closed, auto".into()),
            }
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<i32, String> {
    let grid = GridSpec {
        nx: args.nx,
        ny: args.ny,
        x_min: args.x_min,
        x_max: args.x_max,
        y_min: args.y_min,
        y_max: args.y_max,
        s_max: args.s_max,
    };
    if sample_grid(&grid).is_empty() {
        return Err("grid admits no points under the x + y constraint".into());
    }
    let settings = VerifySettings {
        pass_tol: args.pass_tol,
        oracle_tol: args.oracle_tol,
        max_terms: appell2::special::MAX_TERMS,
        verbose: args.verbose,
    };
    let timestamp = if args.no_timestamp {
        None
    } else {
        Some(
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        )
    };

    let run_builtin = args.builtins || args.corpus.is_none();
    let mut entries = Vec::new();
    if run_builtin {
        entries.extend(verify_builtins(&grid, &settings, None).entries);
    }
    if let Some(path) = &args.corpus {
        let file = File::open(path).map_err(|e| format!("cannot open {}: {e}", path.display()))?;
        let load: CorpusLoad = load_corpus(BufReader::new(file)).map_err(|e| e.to_string())?;
        if !load.issues.is_empty() {
            for issue in &load.issues {
                eprintln!("corpus {}: {}", path.display(), issue);
            }
            return Err(format!("{} corpus record(s) failed to parse", load.issues.len()));
        }
        entries.extend(verify_corpus(&load.entries, &grid, &settings, None).entries);
    }
    let report = VerificationReport::assemble(entries, settings, grid, timestamp);

    let rendered = match args.format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Text => {
            let mut out = String::new();
            for e in &report.entries {
                out.push_str(&format!(
                    "{:<18} {} points={} max_rel={:.17e}\n",
                    e.status.to_string(),
                    e.locator,
                    e.points_tested,
                    e.max_rel_error
                ));
                if let Some(note) = &e.note {
                    out.push_str(&format!("                   note: {note}\n"));
                }
            }
            out.push_str(&format!(
                "summary: pass={} fail={} suspected_misprint={} oracle_unavailable={} domain_empty={}\n",
                report.summary.pass,
                report.summary.fail,
                report.summary.suspected_misprint,
                report.summary.oracle_unavailable,
                report.summary.domain_empty,
            ));
            out.push_str(&format!(
                "tolerances: pass_tol={:.17e} oracle_tol={:.17e}\n",
                report.settings.pass_tol, report.settings.oracle_tol
            ));
            out
        }
    };
    match &args.out {
        Some(path) => {
            let mut f = File::create(path).map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            f.write_all(rendered.as_bytes()).map_err(|e| e.to_string())?;
        }
        None => print!("{rendered}"),
    }
    Ok(report.exit_code())
}

fn run_lint(args: LintArgs) -> Result<i32, String> {
    let file = File::open(&args.path)
        .map_err(|e| format!("cannot open {}: {e}", args.path.display()))?;
    let load = load_corpus(BufReader::new(file)).map_err(|e| e.to_string())?;
    for issue in &load.issues {
        println!("{}: {}", args.path.display(), issue);
    }
    println!("{} entries, {} errors", load.entries.len(), load.issues.len());
    Ok(if load.issues.is_empty() { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval(args) => match run_eval(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(e),
        },
        Command::Verify(args) => match run_verify(args) {
            Ok(code) => ExitCode::from(code as u8),
            Err(e) => fail(e),
        },
        Command::CorpusLint(args) => match run_lint(args) {
            Ok(code) => ExitCode::from(code as u8),
            Err(e) => fail(e),
        },
    }
}

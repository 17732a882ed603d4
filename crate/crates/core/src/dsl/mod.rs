//! A small expression language over the variables x and y, covering exactly
//! the function inventory of the reduction tables: sqrt, ln, arcsin, arctan,
//! arctanh, the four arithmetic operators, powers, and unary minus.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr  := '-' expr | sum
//! sum   := prod (('+' | '-') prod)*
//! prod  := power (('*' | '/') power)*
//! power := atom ('^' power)?            -- right-associative
//! atom  := number | 'x' | 'y' | func '(' expr ')' | '(' expr ')'
//! ```
//!
//! Unary minus binds loosest, so a leading '-' negates the entire formula,
//! which is how the table rows are printed. "1-x-y" associates as (1-x)-y,
//! and an exponent may not start with '-' without parentheses ("2^-1/2" is
//! rejected, "2^(-1/2)" is fine). Rational constants like 3/8 are ordinary
//! divisions of integer constants; nothing is pre-folded, so an expression
//! computes exactly what its text says, cancellation included.

mod corpus;
mod parser;

pub use corpus::{load_corpus, parse_real, CorpusEntry, CorpusIssue, CorpusLoad, Domain};
pub use parser::{parse_expr, ParseError};

use std::fmt;

/// Variable of an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Unary function names admitted by the grammar; the set is closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Func {
    Sqrt,
    Ln,
    Arcsin,
    Arctan,
    Arctanh,
}

impl Func {
    pub fn name(&self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Ln => "ln",
            Func::Arcsin => "arcsin",
            Func::Arctan => "arctan",
            Func::Arctanh => "arctanh",
        }
    }
}

/// Expression AST. Finite and acyclic by construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Constant(f64),
    Var(Var),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
    Call(Func, Box<Expr>),
}

/// Evaluation failure, naming the offending operation and its argument.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalError {
    /// The operation that failed ("ln", "sqrt", "^", "/", ...).
    pub node: String,
    pub reason: String,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot evaluate `{}`: {}", self.node, self.reason)
    }
}

impl std::error::Error for EvalError {}

fn eval_err(node: &str, reason: String) -> EvalError {
    EvalError { node: node.to_string(), reason }
}

/// Recursive evaluation at (x, y). Pure and deterministic: identical inputs
/// give bit-identical outputs.
pub fn eval_expr(e: &Expr, x: f64, y: f64) -> Result<f64, EvalError> {
    Ok(match e {
        Expr::Constant(c) => *c,
        Expr::Var(Var::X) => x,
        Expr::Var(Var::Y) => y,
        Expr::Neg(inner) => -eval_expr(inner, x, y)?,
        Expr::Add(a, b) => eval_expr(a, x, y)? + eval_expr(b, x, y)?,
        Expr::Sub(a, b) => eval_expr(a, x, y)? - eval_expr(b, x, y)?,
        Expr::Mul(a, b) => eval_expr(a, x, y)? * eval_expr(b, x, y)?,
        Expr::Div(a, b) => {
            let denom = eval_expr(b, x, y)?;
            if denom == 0.0 {
                return Err(eval_err("/", "division by zero".into()));
            }
            eval_expr(a, x, y)? / denom
        }
        Expr::Pow(base, exp) => {
            let b = eval_expr(base, x, y)?;
            let p = eval_expr(exp, x, y)?;
            if p == p.trunc() && p.abs() <= i32::MAX as f64 {
                if b == 0.0 && p < 0.0 {
                    return Err(eval_err("^", "zero base with negative exponent".into()));
                }
                b.powi(p as i32)
            } else if b <= 0.0 {
                return Err(eval_err(
                    "^",
                    format!("non-integer exponent {p} of non-positive base {b}"),
                ));
            } else {
                b.powf(p)
            }
        }
        Expr::Call(f, arg) => {
            let t = eval_expr(arg, x, y)?;
            match f {
                Func::Sqrt => {
                    if t <= 0.0 {
                        return Err(eval_err("sqrt", format!("non-positive argument {t}")));
                    }
                    t.sqrt()
                }
                Func::Ln => {
                    if t <= 0.0 {
                        return Err(eval_err("ln", format!("non-positive argument {t}")));
                    }
                    t.ln()
                }
                Func::Arcsin => {
                    if !(-1.0..=1.0).contains(&t) {
                        return Err(eval_err("arcsin", format!("argument {t} outside [-1, 1]")));
                    }
                    t.asin()
                }
                Func::Arctan => t.atan(),
                Func::Arctanh => {
                    if !(t > -1.0 && t < 1.0) {
                        return Err(eval_err("arctanh", format!("argument {t} outside (-1, 1)")));
                    }
                    // arctanh(t) = ln((1+t)/(1-t)) / 2
                    0.5 * ((1.0 + t) / (1.0 - t)).ln()
                }
            }
        }
    })
}

/// Precedence levels used by [`render`]; larger binds tighter.
fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Neg(_) => 0,
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Pow(..) => 3,
        Expr::Constant(_) | Expr::Var(_) | Expr::Call(..) => 4,
    }
}

fn render_into(e: &Expr, min_prec: u8, out: &mut String) {
    let mine = prec(e);
    let parens = mine < min_prec;
    if parens {
        out.push('(');
    }
    match e {
        Expr::Constant(c) => {
            out.push_str(&format_constant(*c));
        }
        Expr::Var(Var::X) => out.push('x'),
        Expr::Var(Var::Y) => out.push('y'),
        Expr::Neg(inner) => {
            out.push('-');
            render_into(inner, 1, out);
        }
        Expr::Add(a, b) => {
            render_into(a, 1, out);
            out.push_str(" + ");
            render_into(b, 2, out);
        }
        Expr::Sub(a, b) => {
            render_into(a, 1, out);
            out.push_str(" - ");
            render_into(b, 2, out);
        }
        Expr::Mul(a, b) => {
            render_into(a, 2, out);
            out.push('*');
            render_into(b, 3, out);
        }
        Expr::Div(a, b) => {
            render_into(a, 2, out);
            out.push('/');
            render_into(b, 3, out);
        }
        Expr::Pow(a, b) => {
            if matches!(**a, Expr::Constant(c) if c < 0.0) {
                out.push('(');
                render_into(a, 0, out);
                out.push(')');
            } else {
                render_into(a, 4, out);
            }
            out.push('^');
            // The grammar only admits an atom or a parenthesized expression
            // on the right of '^'.
            if prec(b) == 4 && !matches!(**b, Expr::Constant(c) if c < 0.0) {
                render_into(b, 4, out);
            } else {
                out.push('(');
                render_into(b, 0, out);
                out.push(')');
            }
        }
        Expr::Call(f, arg) => {
            out.push_str(f.name());
            out.push('(');
            render_into(arg, 0, out);
            out.push(')');
        }
    }
    if parens {
        out.push(')');
    }
}

fn format_constant(c: f64) -> String {
    if c == c.trunc() && c.abs() < 1e15 {
        format!("{}", c as i64)
    } else {
        format!("{c}")
    }
}

/// Renders an expression to text that reparses to a structurally identical
/// AST.
pub fn render(e: &Expr) -> String {
    let mut out = String::new();
    render_into(e, 0, &mut out);
    out
}

//! Recursive-descent parser for the expression grammar. Errors carry the
//! byte offset of the offending token and the set of tokens that would have
//! been accepted there.

use super::{Expr, Func, Var};
use std::fmt;

/// Parse failure at a byte offset, with the tokens expected there.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: found {}, expected {}",
            self.offset,
            self.found,
            self.expected.join(" or ")
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(v) => format!("number `{v}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next_token(&mut self) -> Result<(usize, Tok), ParseError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::Eof));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                let mut end = self.pos;
                let mut seen_dot = false;
                while end < self.src.len() {
                    match self.src[end] {
                        b'0'..=b'9' => end += 1,
                        b'.' if !seen_dot => {
                            seen_dot = true;
                            end += 1;
                        }
                        _ => break,
                    }
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                let value: f64 = text.parse().map_err(|_| ParseError {
                    offset: start,
                    expected: vec!["number"],
                    found: format!("`{text}`"),
                })?;
                self.pos = end;
                return Ok((start, Tok::Num(value)));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                return Ok((start, Tok::Ident(text.to_string())));
            }
            other => {
                return Err(ParseError {
                    offset: start,
                    expected: vec!["number", "identifier", "operator", "`(`", "`)`"],
                    found: format!("byte 0x{other:02x}"),
                })
            }
        };
        self.pos += 1;
        Ok((start, tok))
    }
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    index: usize,
}

impl Parser {
    fn peek(&self) -> &(usize, Tok) {
        &self.tokens[self.index]
    }

    fn advance(&mut self) -> (usize, Tok) {
        let t = self.tokens[self.index].clone();
        if self.index + 1 < self.tokens.len() {
            self.index += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (offset, tok) = self.peek();
        ParseError { offset: *offset, expected, found: tok.describe() }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek().1, Tok::Minus) {
            self.advance();
            return Ok(Expr::Neg(Box::new(self.expr()?)));
        }
        self.sum()
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.prod()?;
        loop {
            match self.peek().1 {
                Tok::Plus => {
                    self.advance();
                    acc = Expr::Add(Box::new(acc), Box::new(self.prod()?));
                }
                Tok::Minus => {
                    self.advance();
                    acc = Expr::Sub(Box::new(acc), Box::new(self.prod()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn prod(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek().1 {
                Tok::Star => {
                    self.advance();
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                Tok::Slash => {
                    self.advance();
                    acc = Expr::Div(Box::new(acc), Box::new(self.power()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().1, Tok::Caret) {
            self.advance();
            // Right-associative; the exponent must be an atom or a power
            // chain, never a bare unary minus.
            let exp = self.power()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (_, tok) = self.peek().clone();
        match tok {
            Tok::Num(v) => {
                self.advance();
                Ok(Expr::Constant(v))
            }
            Tok::Ident(name) => {
                self.advance();
                match name.as_str() {
                    "x" => Ok(Expr::Var(Var::X)),
                    "y" => Ok(Expr::Var(Var::Y)),
                    other => {
                        let func = match other {
                            "sqrt" => Func::Sqrt,
                            "ln" => Func::Ln,
                            "arcsin" => Func::Arcsin,
                            "arctan" => Func::Arctan,
                            "arctanh" => Func::Arctanh,
                            _ => {
                                // Point at the identifier itself.
                                let offset = self.tokens[self.index - 1].0;
                                return Err(ParseError {
                                    offset,
                                    expected: vec![
                                        "x", "y", "sqrt", "ln", "arcsin", "arctan", "arctanh",
                                    ],
                                    found: format!("identifier `{other}`"),
                                });
                            }
                        };
                        if !matches!(self.peek().1, Tok::LParen) {
                            return Err(self.error(vec!["`(`"]));
                        }
                        self.advance();
                        let arg = self.expr()?;
                        if !matches!(self.peek().1, Tok::RParen) {
                            return Err(self.error(vec!["`)`"]));
                        }
                        self.advance();
                        Ok(Expr::Call(func, Box::new(arg)))
                    }
                }
            }
            Tok::LParen => {
                self.advance();
                let inner = self.expr()?;
                if !matches!(self.peek().1, Tok::RParen) {
                    return Err(self.error(vec!["`)`"]));
                }
                self.advance();
                Ok(inner)
            }
            _ => Err(self.error(vec!["number", "`x`", "`y`", "function name", "`(`"])),
        }
    }
}

/// Parses one expression; the whole input must be consumed.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut lexer = Lexer { src: text.as_bytes(), pos: 0 };
    let mut tokens = Vec::new();
    loop {
        let (offset, tok) = lexer.next_token()?;
        let done = tok == Tok::Eof;
        tokens.push((offset, tok));
        if done {
            break;
        }
    }
    let mut parser = Parser { tokens, index: 0 };
    let expr = parser.expr()?;
    if !matches!(parser.peek().1, Tok::Eof) {
        return Err(parser.error(vec!["end of input", "operator"]));
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unknown_function() {
        let err = parse_expr("2 * frob(x)").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(err.expected.contains(&"arctanh"));
    }

    #[test]
    fn offsets_are_in_range() {
        for bad in ["", "1 +", "(1", "sin(", "1 ) 2", "2 ** 3", "@", "x y"] {
            let err = parse_expr(bad).unwrap_err();
            assert!(err.offset <= bad.len(), "offset {} > len {}", err.offset, bad.len());
            assert!(!err.expected.is_empty());
        }
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_expr("1-x-y").unwrap();
        let b = parse_expr("  1 -\tx   - y ").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rational_literals_stay_divisions() {
        let e = parse_expr("3/8").unwrap();
        assert_eq!(
            e,
            Expr::Div(Box::new(Expr::Constant(3.0)), Box::new(Expr::Constant(8.0)))
        );
    }
}

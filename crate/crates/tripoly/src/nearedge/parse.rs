//! Expression grammar:
//!
//! ```text
//! expr := E | pts(FILE) | pts[x y; x y; ...]
//!       | vee(expr,expr) | wedge(expr,expr) | flip(expr)
//!       | ccvx(N) | cccv(N) | koch(expr,N) | poly(expr,N) | twin(expr,N)
//! ```
//!
//! Names are case-insensitive and whitespace between tokens is ignored.
//! Error offsets are 1-based byte positions; end of input is `len + 1`.

use std::path::Path;

use super::NearEdgeExpr;
use crate::error::{Error, Result};
use crate::geom::{parse_points, read_points};

/// Parses an expression; `pts(FILE)` paths are relative to the working
/// directory.
pub fn parse_expr(text: &str) -> Result<NearEdgeExpr> {
    parse_expr_in(text, Path::new("."))
}

/// Parses an expression, resolving `pts(FILE)` against `base`.
pub fn parse_expr_in(text: &str, base: &Path) -> Result<NearEdgeExpr> {
    let mut p = Parser {
        src: text,
        pos: 0,
        base,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    base: &'a Path,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected '{c}', found '{d}'"))),
            None => Err(self.error(format!("expected '{c}', found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error(match self.src[start..].chars().next() {
                Some(c) => format!("expected an expression, found '{c}'"),
                None => "expected an expression, found end of input".to_string(),
            }));
        }
        self.pos += len;
        Ok((start, self.src[start..start + len].to_ascii_lowercase()))
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.error("expected a non-negative integer"));
        }
        let n = self.src[start..start + len]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += len;
        Ok(n)
    }

    /// Text up to `close`, which is consumed.
    fn raw_until(&mut self, close: char) -> Result<(usize, &'a str)> {
        let start = self.pos;
        match self.src[start..].find(close) {
            Some(k) => {
                self.pos = start + k + 1;
                Ok((start, &self.src[start..start + k]))
            }
            None => {
                self.pos = self.src.len();
                Err(self.error(format!("expected '{close}', found end of input")))
            }
        }
    }

    fn at(offset: usize, e: Error) -> Error {
        match e {
            Error::Io(_) | Error::Parse { .. } => e,
            other => Error::parse(offset + 1, other.to_string()),
        }
    }

    fn expr(&mut self) -> Result<NearEdgeExpr> {
        let (start, name) = self.ident()?;
        match name.as_str() {
            "e" => Ok(NearEdgeExpr::E),
            "pts" => self.points(start),
            "vee" | "wedge" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(if name == "vee" {
                    NearEdgeExpr::vee(a, b)
                } else {
                    NearEdgeExpr::wedge(a, b)
                })
            }
            "flip" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(')')?;
                Ok(NearEdgeExpr::flip(a))
            }
            "ccvx" | "cccv" => {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(')')?;
                let e = if name == "ccvx" {
                    NearEdgeExpr::ccvx(n)
                } else {
                    NearEdgeExpr::cccv(n)
                };
                e.map_err(|e| Self::at(start, e))
            }
            "koch" | "poly" | "twin" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let n = self.number()?;
                self.expect(')')?;
                match name.as_str() {
                    "koch" => Ok(NearEdgeExpr::koch(a, n)),
                    "poly" => NearEdgeExpr::poly_chain(a, n),
                    _ => NearEdgeExpr::twin_chain(a, n),
                }
                .map_err(|e| Self::at(start, e))
            }
            _ => Err(Error::parse(start + 1, format!("unknown constructor '{name}'"))),
        }
    }

    fn points(&mut self, start: usize) -> Result<NearEdgeExpr> {
        let points = match self.peek() {
            Some('[') => {
                self.pos += 1;
                let (at, body) = self.raw_until(']')?;
                parse_points(&body.replace(';', "\n")).map_err(|e| Self::at(at, e))?
            }
            Some('(') => {
                self.pos += 1;
                let (at, file) = self.raw_until(')')?;
                let file = file.trim();
                if file.is_empty() {
                    return Err(Error::parse(at + 1, "empty file name"));
                }
                read_points(self.base.join(file)).map_err(|e| match e {
                    Error::Io(io) => Error::Io(std::io::Error::new(io.kind(), format!("{file}: {io}"))),
                    other => Self::at(at, other),
                })?
            }
            _ => return Err(self.error("expected '(' or '[' after pts")),
        };
        NearEdgeExpr::leaf(points).map_err(|e| Self::at(start, e))
    }
}

//! Text form of polynomials: `y^4+2*y^3+5*y^2`, `x^2-x`, `3/2*y*u^2`.
//!
//! Output lists terms by descending exponent and prints `0` for the zero
//! polynomial. Input additionally accepts omitted `*` and `^1`, spaces, and the
//! unicode minus sign.

use std::fmt::{self, Write as _};

use malachite_base::num::basic::traits::{One, Zero};
use malachite_q::Rational;

use super::{BasisTag, JointPoly, LaurentSeries, TaggedPoly};
use crate::error::{Error, Result};

fn power(tag: BasisTag, e: i64) -> String {
    match e {
        1 => tag.symbol().to_string(),
        _ => format!("{}^{}", tag.symbol(), e),
    }
}

/// Writes `sum c * monomial`, where an empty monomial means a constant.
fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Rational, String)>,
) -> Result<bool, fmt::Error> {
    let mut first = true;
    for (c, mono) in terms {
        let mut s = String::new();
        if mono.is_empty() {
            write!(s, "{c}")?;
        } else if *c == 1u32 {
            s.push_str(&mono);
        } else if *c == -1i32 {
            write!(s, "-{mono}")?;
        } else {
            write!(s, "{c}*{mono}")?;
        }
        if !first && !s.starts_with('-') {
            f.write_char('+')?;
        }
        f.write_str(&s)?;
        first = false;
    }
    Ok(!first)
}

impl fmt::Display for TaggedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag();
        let terms = self
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| **c != 0u32)
            .map(|(k, c)| (c, if k == 0 { String::new() } else { power(tag, k as i64) }));
        if !write_terms(f, terms)? {
            f.write_char('0')?;
        }
        Ok(())
    }
}

impl fmt::Display for JointPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (up, lo) = self.tags();
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&(i, j, _)| std::cmp::Reverse((i, j)));
        let terms = terms.into_iter().map(|(i, j, c)| {
            let mono = match (i, j) {
                (0, 0) => String::new(),
                (i, 0) => power(up, i as i64),
                (0, j) => power(lo, j as i64),
                (i, j) => format!("{}*{}", power(up, i as i64), power(lo, j as i64)),
            };
            (c, mono)
        });
        if !write_terms(f, terms)? {
            f.write_char('0')?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = self.tag();
        let terms = self
            .terms()
            .map(|(e, c)| (c, if e == 0 { String::new() } else { power(tag, e) }));
        if write_terms(f, terms)? {
            f.write_char('+')?;
        }
        write!(f, "O({})", power(tag, -self.order() - 1))
    }
}

/// One parsed term: coefficient and `(variable, exponent)` factors.
type Term = (Rational, Vec<(BasisTag, i64)>);

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos + 1, msg)
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn coefficient(&mut self) -> Result<Option<Rational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        let mut value: Rational = num.parse().map_err(|_| self.err("bad number"))?;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let den = self.digits().ok_or_else(|| self.err("expected a denominator"))?;
            let den: Rational = den.parse().map_err(|_| self.err("bad number"))?;
            if den == 0u32 {
                return Err(self.err("zero denominator"));
            }
            value /= den;
        }
        Ok(Some(value))
    }

    fn factor(&mut self) -> Result<Option<(BasisTag, i64)>> {
        let Some(tag) = self.peek().and_then(BasisTag::from_symbol) else {
            return Ok(None);
        };
        self.bump();
        self.skip_ws();
        let mut exp = 1;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let neg = self.sign() == Some(true);
            let d = self.digits().ok_or_else(|| self.err("expected an exponent"))?;
            exp = d.parse::<i64>().map_err(|_| self.err("exponent too large"))?;
            if neg {
                exp = -exp;
            }
        }
        Ok(Some((tag, exp)))
    }

    fn term(&mut self) -> Result<Term> {
        self.skip_ws();
        let coeff = self.coefficient()?;
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            let had_star = self.peek() == Some('*');
            if had_star {
                if coeff.is_none() && factors.is_empty() {
                    return Err(self.err("unexpected '*'"));
                }
                self.bump();
                self.skip_ws();
            }
            match self.factor()? {
                Some(fac) => factors.push(fac),
                None if had_star => return Err(self.err("expected a variable after '*'")),
                None => break,
            }
        }
        if coeff.is_none() && factors.is_empty() {
            return Err(self.err("expected a term"));
        }
        Ok((coeff.unwrap_or(Rational::ONE), factors))
    }

    fn terms(mut self) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        self.skip_ws();
        let mut neg = self.sign() == Some(true);
        loop {
            let (c, f) = self.term()?;
            out.push((if neg { -c } else { c }, f));
            self.skip_ws();
            match self.sign() {
                Some(s) => neg = s,
                None if self.peek().is_none() => return Ok(out),
                None => return Err(self.err("expected '+' or '-'")),
            }
        }
    }
}

fn lex(text: &str) -> Result<Vec<Term>> {
    Lexer { src: text, pos: 0 }.terms()
}

impl TaggedPoly {
    /// Parses the text form; `default_tag` names the variable when the text
    /// is a bare constant.
    pub fn parse(text: &str, default_tag: BasisTag) -> Result<TaggedPoly> {
        let terms = lex(text)?;
        let mut tag = None;
        let mut coeffs: Vec<Rational> = Vec::new();
        for (c, factors) in terms {
            let mut exp = 0i64;
            for (t, e) in factors {
                if *tag.get_or_insert(t) != t {
                    return Err(Error::parse(1, format!("mixed variables {} and {t}", tag.unwrap())));
                }
                exp += e;
            }
            if exp < 0 {
                return Err(Error::parse(1, "negative exponent in a polynomial"));
            }
            let k = exp as usize;
            if k >= coeffs.len() {
                coeffs.resize(k + 1, Rational::ZERO);
            }
            coeffs[k] += c;
        }
        Ok(TaggedPoly::new(tag.unwrap_or(default_tag), coeffs))
    }
}

impl JointPoly {
    /// Parses `c*y^i*u^j` sums; the defaults name variables absent from the text.
    pub fn parse(text: &str, upper: BasisTag, lower: BasisTag) -> Result<JointPoly> {
        let mut up = None;
        let mut lo = None;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (c, factors) in lex(text)? {
            let (mut i, mut j) = (0i64, 0i64);
            for (t, e) in factors {
                let (slot, exp) = if t.is_upper() {
                    (&mut up, &mut i)
                } else {
                    (&mut lo, &mut j)
                };
                if *slot.get_or_insert(t) != t {
                    return Err(Error::parse(1, format!("mixed variables {} and {t}", slot.unwrap())));
                }
                *exp += e;
            }
            if i < 0 || j < 0 {
                return Err(Error::parse(1, "negative exponent in a polynomial"));
            }
            let (i, j) = (i as usize, j as usize);
            if i >= rows.len() {
                rows.resize(i + 1, Vec::new());
            }
            if j >= rows[i].len() {
                rows[i].resize(j + 1, Rational::ZERO);
            }
            rows[i][j] += c;
        }
        JointPoly::new(up.unwrap_or(upper), lo.unwrap_or(lower), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;
    use BasisTag::*;

    #[test]
    fn display_matches_the_text_format() {
        assert_eq!(
            TaggedPoly::from_ints(Y, &[0, 0, 5, 2, 1]).to_string(),
            "y^4+2*y^3+5*y^2"
        );
        assert_eq!(TaggedPoly::from_ints(X, &[0, -1, 1]).to_string(), "x^2-x");
        assert_eq!(TaggedPoly::zero(Y).to_string(), "0");
        assert_eq!(TaggedPoly::from_ints(U, &[-3]).to_string(), "-3");
        let half = TaggedPoly::new(V, vec![Rational::ZERO, ratio(-1, 2)]);
        assert_eq!(half.to_string(), "-1/2*v");
    }

    #[test]
    fn parser_accepts_loose_forms() {
        let want = TaggedPoly::from_ints(Y, &[0, 0, 5, 2, 1]);
        for s in [
            "y^4+2*y^3+5*y^2",
            "y^4 + 2y^3 + 5 y^2",
            "5y^2+2*y^3+y^4",
            "y^4+2y^3+5y^2+0",
        ] {
            assert_eq!(TaggedPoly::parse(s, X).unwrap(), want, "{s}");
        }
        assert_eq!(
            TaggedPoly::parse("x^2−x^1", Y).unwrap(),
            TaggedPoly::from_ints(X, &[0, -1, 1])
        );
        assert_eq!(
            TaggedPoly::parse("-7/2", U).unwrap(),
            TaggedPoly::constant(U, ratio(-7, 2))
        );
        assert_eq!(TaggedPoly::parse("0", Y).unwrap(), TaggedPoly::zero(Y));
    }

    #[test]
    fn parser_reports_offsets() {
        match TaggedPoly::parse("y^2 + * y", Y) {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 7),
            other => panic!("{other:?}"),
        }
        assert!(TaggedPoly::parse("x + y", Y).is_err());
        assert!(TaggedPoly::parse("y^-1", Y).is_err());
        assert!(TaggedPoly::parse("", Y).is_err());
    }

    #[test]
    fn joint_round_trip() {
        let p = JointPoly::from_ints(Y, U, &[&[], &[0, 0, 1], &[0, 0, 1]]).unwrap();
        assert_eq!(p.to_string(), "y^2*u^2+y*u^2");
        assert_eq!(JointPoly::parse(&p.to_string(), Y, U).unwrap(), p);
        let q = JointPoly::from_ints(X, V, &[&[1, -2], &[0, 3]]).unwrap();
        assert_eq!(JointPoly::parse(&q.to_string(), Y, U).unwrap(), q);
    }

    #[test]
    fn laurent_display() {
        let s = LaurentSeries::from_terms(Y, 2, [(1, Rational::from(2)), (-1, Rational::from(-8))]);
        assert_eq!(s.to_string(), "2*y-8*y^-1+O(y^-3)");
    }
}

//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | var | var '^' nat | '(' expr ')' ['^' nat] | '-' factor
//! ```
//!
//! Rationals are `a` or `a/b` in base 10. Whitespace between tokens is
//! ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ExponentVector, Polynomial, Rational, Vars};
use crate::error::{Error, Result};

/// Parses `text` as a polynomial over `vars`.
pub fn parse_polynomial(text: &str, vars: &Vars) -> Result<Polynomial> {
    parse_polynomial_at(text, vars, 1, 1)
}

/// Like [`parse_polynomial`], but reports positions relative to `line` and
/// `column` of an enclosing document.
pub fn parse_polynomial_at(text: &str, vars: &Vars, line: usize, column: usize) -> Result<Polynomial> {
    let mut parser = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        vars,
        line,
        column,
    };
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty expression"));
    }
    let p = parser.expr()?;
    parser.skip_ws();
    if !parser.at_end() {
        let c = parser.peek().unwrap_or(' ');
        return Err(parser.error(format!("unexpected {c:?}")));
    }
    Ok(p)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: &'a Vars,
    line: usize,
    column: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column + self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error("unexpected end of expression")),
            Some('-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                match self.exponent()? {
                    Some(k) => Ok(inner.pow(k)),
                    None => Ok(inner),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let value = self.rational()?;
                Ok(Polynomial::constant(self.vars, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                let name = self.identifier();
                let index = self.vars.index_of(&name).ok_or_else(|| Error::Syntax {
                    line: self.line,
                    column: self.column + start,
                    message: format!("unknown variable {name:?}"),
                })?;
                let k = self.exponent()?.unwrap_or(1);
                Ok(Polynomial::monomial(
                    self.vars,
                    ExponentVector::unit(self.vars.len(), index, k),
                    Rational::from_integer(1.into()),
                ))
            }
            Some(c) => Err(self.error(format!("unexpected {c:?}"))),
        }
    }

    /// Optional `'^' nat` suffix.
    fn exponent(&mut self) -> Result<Option<u32>> {
        let save = self.pos;
        self.skip_ws();
        if self.peek() != Some('^') {
            self.pos = save;
            return Ok(None);
        }
        self.pos += 1;
        self.skip_ws();
        if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Err(self.error("expected a natural number after '^'"));
        }
        let digits = self.digits();
        digits
            .parse::<u32>()
            .map(Some)
            .map_err(|_| self.error(format!("exponent {digits} out of range")))
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn identifier(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn rational(&mut self) -> Result<Rational> {
        let num: BigInt = self.digits().parse().expect("digits");
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            if !matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                return Err(self.error("expected a denominator after '/'"));
            }
            let den: BigInt = self.digits().parse().expect("digits");
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        self.pos = save;
        Ok(Rational::from_integer(num))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Vars {
        Vars::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn parses_basic_expressions() {
        let v = xyz();
        let p = parse_polynomial("x^5+y^3+z^2", &v).unwrap();
        assert_eq!(p.num_terms(), 3);
        let q = parse_polynomial("(x+y)^2 - x^2 - 2*x*y", &v).unwrap();
        assert_eq!(q, parse_polynomial("y^2", &v).unwrap());
        let r = parse_polynomial("-3/6*x - -x", &v).unwrap();
        assert_eq!(r, parse_polynomial("1/2*x", &v).unwrap());
        assert!(parse_polynomial("0", &v).unwrap().is_zero());
    }

    #[test]
    fn reports_doubled_caret() {
        let v = Vars::new(&["x"]).unwrap();
        match parse_polynomial("x^^2", &v) {
            Err(Error::Syntax { line, column, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(column, 3);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        let v = xyz();
        for bad in ["", "x+", "2x", "x*(y", "w", "1/0", "x^-1", "1.5", "+x"] {
            assert!(
                matches!(parse_polynomial(bad, &v), Err(Error::Syntax { .. })),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn display_round_trips() {
        let v = xyz();
        for s in ["x^5+y^3+z^2", "-2*x*z - 3/7*y^2 + 1", "0", "-x", "5"] {
            let p = parse_polynomial(s, &v).unwrap();
            let again = parse_polynomial(&p.to_string(), &v).unwrap();
            assert_eq!(p, again, "{s}");
        }
    }
}

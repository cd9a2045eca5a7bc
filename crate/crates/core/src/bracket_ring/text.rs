use thiserror::Error;

use super::{BracketPolynomial, FormalPoint, PointSet};
use crate::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("bracket polynomial parse error at offset {offset}: {message}")]
pub struct PolynomialParseError {
    pub offset: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> PolynomialParseError {
        PolynomialParseError {
            offset: self.pos,
            message: message.into(),
        }
    }
}

/// Parses the text rendering of a bracket polynomial, e.g.
/// `"[aa'b'][bb'c'] + [a'bb'][ab'c'] - 2/3[abc]"`.
///
/// Brackets may list their points in any order; they are canonicalized.
/// Every point must be declared in `points`.
pub fn parse_polynomial<S: Scalar>(
    text: &str,
    points: &PointSet,
) -> Result<BracketPolynomial<S>, PolynomialParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut out = BracketPolynomial::zero();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error("empty input"));
    }
    let mut first = true;
    while cur.peek().is_some() {
        let negative = match cur.peek() {
            Some('+') => {
                cur.bump();
                false
            }
            Some('-') => {
                cur.bump();
                true
            }
            _ if first => false,
            _ => return Err(cur.error("expected `+` or `-`")),
        };
        first = false;
        cur.skip_ws();

        let start = cur.pos;
        while cur.peek().is_some_and(|c| c.is_ascii_digit() || c == '/') {
            cur.bump();
        }
        let coefficient = if cur.pos > start {
            let digits = &text[start..cur.pos];
            S::from_str_radix(digits, 10)
                .or_else(|_| S::from_str_radix(&format!("{digits}/1"), 10))
                .map_err(|_| PolynomialParseError {
                    offset: start,
                    message: format!("bad coefficient `{}`", &text[start..cur.pos]),
                })?
        } else {
            S::one()
        };
        cur.skip_ws();

        let mut term = BracketPolynomial::constant(if negative { -coefficient } else { coefficient });
        let mut factors = 0;
        while cur.peek() == Some('[') {
            cur.bump();
            let mut args: Vec<FormalPoint> = Vec::with_capacity(3);
            loop {
                cur.skip_ws();
                match cur.peek() {
                    Some(']') => {
                        cur.bump();
                        break;
                    }
                    Some(c) if c.is_alphabetic() => {
                        let name_start = cur.pos;
                        cur.bump();
                        while matches!(cur.peek(), Some('\'') | Some('′')) {
                            cur.bump();
                        }
                        let name = text[name_start..cur.pos].replace('′', "'");
                        let point = points.get(&name).ok_or_else(|| PolynomialParseError {
                            offset: name_start,
                            message: format!("unknown point `{name}`"),
                        })?;
                        args.push(point.clone());
                    }
                    _ => return Err(cur.error("expected a point name or `]`")),
                }
            }
            let [x, y, z] =
                <[FormalPoint; 3]>::try_from(args).map_err(|_| cur.error("a bracket takes exactly three points"))?;
            term = &term * &BracketPolynomial::bracket(&x, &y, &z);
            factors += 1;
            cur.skip_ws();
        }
        if factors == 0 && cur.pos == start {
            return Err(cur.error("expected a coefficient or a bracket"));
        }
        out = out + term;
    }
    Ok(out)
}

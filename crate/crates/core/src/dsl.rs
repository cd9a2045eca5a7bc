//! Text syntax for Cayley expressions.
//!
//! ```text
//! expr      := meetChain
//! meetChain := joinChain { MEET joinChain }        left-associative
//! joinChain := primary { [JOIN] primary }          n-ary; JOIN optional
//! primary   := POINT | "(" expr ")"
//! ```
//!
//! `MEET` is `^` or `∧`, `JOIN` is `v`, `∨` or `*`. A point is one letter
//! followed by any number of primes, so `bc'` is the join of `b` and `c'`;
//! the letter `v` is reserved for the join operator. Whitespace is ignored.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::cayley::CayleyExpr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TokenKind {
    Point,
    LParen,
    RParen,
    Join,
    Meet,
    /// End of input; only ever appears in expected-token sets.
    End,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TokenKind::Point => "POINT",
            TokenKind::LParen => "\"(\"",
            TokenKind::RParen => "\")\"",
            TokenKind::Join => "JOIN",
            TokenKind::Meet => "MEET",
            TokenKind::End => "end of input",
        })
    }
}

/// Byte range `start..end` of the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub span: SourceSpan,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct SyntaxError {
    pub span: SourceSpan,
    pub expected: Vec<TokenKind>,
    /// Offending text; `None` at end of input.
    pub found: Option<String>,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at offset {}: expected {}, found {}",
            self.span.start,
            self.expected.iter().join(" or "),
            match &self.found {
                Some(text) => format!("`{text}`"),
                None => "end of input".to_string(),
            }
        )
    }
}

pub fn tokenize(input: &str) -> Result<Vec<Token>, SyntaxError> {
    let mut tokens = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some((start, c)) = chars.next() {
        let kind = match c {
            c if c.is_whitespace() => continue,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            '^' | '∧' => TokenKind::Meet,
            'v' | '∨' | '*' => TokenKind::Join,
            c if c.is_alphabetic() => {
                while let Some((_, '\'' | '′')) = chars.peek() {
                    chars.next();
                }
                TokenKind::Point
            }
            other => {
                return Err(SyntaxError {
                    span: SourceSpan {
                        start,
                        end: start + other.len_utf8(),
                    },
                    expected: vec![
                        TokenKind::Point,
                        TokenKind::LParen,
                        TokenKind::RParen,
                        TokenKind::Join,
                        TokenKind::Meet,
                    ],
                    found: Some(other.to_string()),
                })
            }
        };
        let end = chars.peek().map_or(input.len(), |(i, _)| *i);
        tokens.push(Token {
            kind,
            lexeme: input[start..end].to_string(),
            span: SourceSpan { start, end },
        });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> TokenKind {
        self.peek().map_or(TokenKind::End, |t| t.kind)
    }

    fn error(&self, mut expected: Vec<TokenKind>) -> SyntaxError {
        expected.sort();
        expected.dedup();
        match self.peek() {
            Some(t) => SyntaxError {
                span: t.span,
                expected,
                found: Some(t.lexeme.clone()),
            },
            None => SyntaxError {
                span: SourceSpan {
                    start: self.input_len,
                    end: self.input_len,
                },
                expected,
                found: None,
            },
        }
    }

    fn meet_chain(&mut self) -> Result<CayleyExpr, SyntaxError> {
        let mut left = self.join_chain()?;
        while self.peek_kind() == TokenKind::Meet {
            self.pos += 1;
            let right = self.join_chain()?;
            left = CayleyExpr::meet(left, right);
        }
        Ok(left)
    }

    fn join_chain(&mut self) -> Result<CayleyExpr, SyntaxError> {
        let mut items = vec![self.primary()?];
        loop {
            match self.peek_kind() {
                TokenKind::Join => {
                    self.pos += 1;
                    items.push(self.primary()?);
                }
                TokenKind::Point | TokenKind::LParen => items.push(self.primary()?),
                _ => break,
            }
        }
        Ok(if items.len() == 1 {
            items.pop().expect("one item")
        } else {
            CayleyExpr::Join(items)
        })
    }

    fn primary(&mut self) -> Result<CayleyExpr, SyntaxError> {
        match self.peek_kind() {
            TokenKind::Point => {
                let name = self.tokens[self.pos].lexeme.replace('′', "'");
                self.pos += 1;
                Ok(CayleyExpr::Atom(name))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let inner = self.meet_chain()?;
                if self.peek_kind() != TokenKind::RParen {
                    return Err(self.error(vec![
                        TokenKind::Point,
                        TokenKind::LParen,
                        TokenKind::Join,
                        TokenKind::Meet,
                        TokenKind::RParen,
                    ]));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error(vec![TokenKind::Point, TokenKind::LParen])),
        }
    }
}

pub fn parse(input: &str) -> Result<CayleyExpr, SyntaxError> {
    let mut parser = Parser {
        tokens: tokenize(input)?,
        pos: 0,
        input_len: input.len(),
    };
    let expr = parser.meet_chain()?;
    if parser.peek().is_some() {
        return Err(parser.error(vec![
            TokenKind::Point,
            TokenKind::LParen,
            TokenKind::Join,
            TokenKind::Meet,
            TokenKind::End,
        ]));
    }
    Ok(expr)
}

/// Canonical ASCII rendering; `parse(&print(e)) == e`.
pub fn print(expr: &CayleyExpr) -> String {
    match expr {
        CayleyExpr::Atom(name) => name.clone(),
        CayleyExpr::Join(children) => {
            let mut out = String::new();
            for (i, child) in children.iter().enumerate() {
                if i > 0 && !(child.is_atom() && children[i - 1].is_atom()) {
                    out.push_str(" v ");
                }
                match child {
                    CayleyExpr::Atom(_) => out.push_str(&print(child)),
                    _ => {
                        out.push('(');
                        out.push_str(&print(child));
                        out.push(')');
                    }
                }
            }
            out
        }
        CayleyExpr::Meet(left, right) => {
            let right = match **right {
                CayleyExpr::Meet(..) => format!("({})", print(right)),
                _ => print(right),
            };
            format!("{} ^ {}", print(left), right)
        }
    }
}

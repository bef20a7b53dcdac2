//! Infix expression parser.
//!
//! Grammar: `+ - * / ^` with usual precedence, integer literals, function
//! application `name(arg, ...)`, and parentheses. Identifiers may carry a
//! tight superscript/subscript suffix: `p^1_2` and `v^i_mu` lex as the
//! single identifiers `p1_2` and `vi_mu`, while `x^2` (no subscript part)
//! is a power. Powers take integer exponents only.

use num::BigRational;

use crate::expr::Expr;

#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum ParseError {
    #[error("unexpected character `{0}` at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected} at token {at}")]
    Expected { expected: &'static str, at: usize },
    #[error("exponent must be an integer literal (token {0})")]
    NonIntegerExponent(usize),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(input: &str) -> Result<Vec<Tok>, ParseError> {
    let b: Vec<char> = input.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            ',' => {
                out.push(Tok::Comma);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = b[start..i].iter().collect();
                out.push(Tok::Int(s.parse::<num::BigInt>().expect("digits").into()));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == '_') {
                    i += 1;
                }
                let mut name: String = b[start..i].iter().collect();
                // Tight superscript/subscript suffix: ^run_run with no
                // spaces. Without the `_run` part the caret is a power.
                if i < b.len() && b[i] == '^' {
                    let mut j = i + 1;
                    while j < b.len() && b[j].is_ascii_alphanumeric() {
                        j += 1;
                    }
                    if j > i + 1 && j < b.len() && b[j] == '_' {
                        let sup: String = b[i + 1..j].iter().collect();
                        let mut k = j + 1;
                        while k < b.len() && b[k].is_ascii_alphanumeric() {
                            k += 1;
                        }
                        if k > j + 1 {
                            let sub: String = b[j + 1..k].iter().collect();
                            name = format!("{name}{sup}_{sub}");
                            i = k;
                        }
                    }
                }
                out.push(Tok::Ident(name));
            }
            other => return Err(ParseError::UnexpectedChar(other, i)),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok, what: &'static str) -> Result<(), ParseError> {
        match self.next() {
            Some(ref got) if got == t => Ok(()),
            Some(_) => Err(ParseError::Expected {
                expected: what,
                at: self.pos - 1,
            }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn parse_sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc + self.parse_product()?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc - self.parse_product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.parse_unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc * self.parse_unary()?;
                }
                Some(Tok::Slash) => {
                    self.next();
                    acc = acc / self.parse_unary()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Expr, ParseError> {
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            return Ok(-self.parse_unary()?);
        }
        self.parse_power()
    }

    fn parse_power(&mut self) -> Result<Expr, ParseError> {
        let base = self.parse_atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.next();
            let neg = if matches!(self.peek(), Some(Tok::Minus)) {
                self.next();
                true
            } else {
                false
            };
            match self.next() {
                Some(Tok::Int(n)) => {
                    use num::ToPrimitive;
                    let e = n
                        .to_integer()
                        .to_i64()
                        .ok_or(ParseError::NonIntegerExponent(self.pos - 1))?;
                    Ok(base.pow_i(if neg { -e } else { e }))
                }
                Some(_) => Err(ParseError::NonIntegerExponent(self.pos - 1)),
                None => Err(ParseError::UnexpectedEnd),
            }
        } else {
            Ok(base)
        }
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(Expr::from_big(n)),
            Some(Tok::Ident(name)) => {
                if matches!(self.peek(), Some(Tok::LParen)) {
                    self.next();
                    let mut args = Vec::new();
                    if matches!(self.peek(), Some(Tok::RParen)) {
                        self.next();
                    } else {
                        loop {
                            args.push(self.parse_sum()?);
                            match self.next() {
                                Some(Tok::Comma) => continue,
                                Some(Tok::RParen) => break,
                                Some(_) => {
                                    return Err(ParseError::Expected {
                                        expected: "`,` or `)`",
                                        at: self.pos - 1,
                                    })
                                }
                                None => return Err(ParseError::UnexpectedEnd),
                            }
                        }
                    }
                    Ok(Expr::app(name, args))
                } else {
                    Ok(Expr::var(name))
                }
            }
            Some(Tok::LParen) => {
                let e = self.parse_sum()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(_) => Err(ParseError::Expected {
                expected: "number, identifier or `(`",
                at: self.pos - 1,
            }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parse an infix expression into canonical form.
pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.parse_sum()?;
    if p.pos != p.toks.len() {
        return Err(ParseError::Expected {
            expected: "end of input",
            at: p.pos,
        });
    }
    Ok(e)
}

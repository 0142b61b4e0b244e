use thiserror::Error;

use super::{ArgKind, Call, Expr, Func, Span};
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("{func} expects {expected} arguments, got {got} (at {pos})")]
    Arity { func: &'static str, expected: String, got: usize, pos: usize },
    #[error("argument {index} of {func} must be a signed power of q (at {pos})")]
    NonMonomialArgument { func: &'static str, index: usize, pos: usize },
    #[error("argument {index} of {func} must be an integer constant (at {pos})")]
    NonIntegerArgument { func: &'static str, index: usize, pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. }
            | ParseError::Arity { pos, .. }
            | ParseError::NonMonomialArgument { pos, .. }
            | ParseError::NonIntegerArgument { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Equals,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b',' => Tok::Comma,
            b'=' => Tok::Equals,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n = text[start..i].parse().map_err(|_| ParseError::Syntax {
                    pos: start,
                    message: "integer literal out of range".into(),
                })?;
                out.push((Tok::Int(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(ParseError::Syntax { pos: start, message: format!("unexpected character '{ch}'") });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), message: message.into() })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::add(lhs, self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::sub(lhs, self.term()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::mul(lhs, self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::div(lhs, self.factor()?);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let negated = *self.peek() == Tok::Minus;
        if negated {
            self.bump();
        }
        let (mut e, mut bare) = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            e = Expr::Pow(Box::new(e), self.signed_int()?);
            bare = false;
        }
        if !negated {
            return Ok(e);
        }
        Ok(match e {
            Expr::Int(n) if bare => Expr::Int(-n),
            Expr::Mono(m) if bare => Expr::Mono(-m),
            e => Expr::Neg(Box::new(e)),
        })
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = *self.peek() == Tok::Minus;
        if neg {
            self.bump();
        }
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => self.error("expected integer exponent"),
        }
    }

    /// Returns the atom and whether it was a bare literal token.
    fn atom(&mut self) -> Result<(Expr, bool), ParseError> {
        let start = self.pos();
        match self.bump() {
            Tok::Int(n) => Ok((Expr::Int(n), true)),
            Tok::Ident(name) if name == "q" && *self.peek() != Tok::LParen => {
                if *self.peek() == Tok::Caret {
                    self.bump();
                    let e = self.signed_int()?;
                    Ok((Expr::Mono(Monomial::q(e)), true))
                } else {
                    Ok((Expr::Mono(Monomial::q(1)), true))
                }
            }
            Tok::Ident(name) => {
                let Some(func) = Func::from_name(&name) else {
                    return Err(ParseError::Syntax { pos: start, message: format!("unknown function '{name}'") });
                };
                self.expect(Tok::LParen, "'('")?;
                let mut args = Vec::new();
                if *self.peek() != Tok::RParen {
                    loop {
                        let arg_start = self.pos();
                        args.push((self.expr()?, arg_start));
                        if *self.peek() == Tok::Comma {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                let end = self.pos();
                self.expect(Tok::RParen, "')' or ','")?;
                check_call(func, &args, start)?;
                let span = Span { start, end: end + 1 };
                Ok((Expr::Call(Call { func, args: args.into_iter().map(|(e, _)| e).collect(), span }), false))
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok((e, false))
            }
            Tok::End => Err(ParseError::Syntax { pos: start, message: "unexpected end of input".into() }),
            t => Err(ParseError::Syntax { pos: start, message: format!("unexpected {}", describe(&t)) }),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::RParen => "')'",
        Tok::Comma => "','",
        Tok::Equals => "'='",
        _ => "token",
    }
}

fn check_call(func: Func, args: &[(Expr, usize)], pos: usize) -> Result<(), ParseError> {
    let (kinds, optional) = func.signature();
    let max = kinds.len();
    let min = max - optional;
    if args.len() < min || args.len() > max {
        let expected = if min == max { min.to_string() } else { format!("{min} to {max}") };
        return Err(ParseError::Arity { func: func.name(), expected, got: args.len(), pos });
    }
    for (index, ((arg, at), kind)) in args.iter().zip(kinds).enumerate() {
        let index = index + 1;
        match kind {
            ArgKind::Monomial if arg.as_monomial().is_none() => {
                return Err(ParseError::NonMonomialArgument { func: func.name(), index, pos: *at });
            }
            ArgKind::Integer if arg.as_integer().is_none() => {
                return Err(ParseError::NonIntegerArgument { func: func.name(), index, pos: *at });
            }
            ArgKind::Integer if func == Func::Poch && arg.as_integer().is_some_and(|n| n < 0) => {
                return Err(ParseError::NonIntegerArgument { func: func.name(), index, pos: *at });
            }
            _ => {}
        }
    }
    Ok(())
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser { toks: lex(text)?, at: 0 })
}

/// Parses a single expression.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = parser(text)?;
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

/// Parses `lhs = rhs`.
pub fn parse_identity(text: &str) -> Result<(Expr, Expr), ParseError> {
    let mut p = parser(text)?;
    let lhs = p.expr()?;
    p.expect(Tok::Equals, "'='")?;
    let rhs = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error("unexpected trailing input");
    }
    Ok((lhs, rhs))
}

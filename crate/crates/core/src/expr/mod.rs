//! A small text language for q-series expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-'? atom ('^' int)?
//! atom   := int | 'q' ('^' int)? | name '(' args ')' | '(' expr ')'
//! ```
//!
//! Exponents may carry a leading minus (`q^-4`, `(…)^-1`). A minus applied
//! directly to a literal folds into it, so `-q^4` is the monomial `-q^4`.

mod eval;
mod parse;
mod render;

use std::fmt;

use crate::monomial::Monomial;

pub use eval::{eval, EvalError};
pub(crate) use eval::apply_scaled;
pub use parse::{parse, parse_identity, ParseError};
pub use render::render;

/// Byte range in the source text. Spans never take part in equality, so
/// two trees with the same shape compare equal wherever they came from.
#[derive(Clone, Copy, Debug, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}

impl Eq for Span {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Mono(Monomial),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
    Call(Call),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Call {
    pub func: Func,
    pub args: Vec<Expr>,
    pub span: Span,
}

/// What an argument position accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArgKind {
    Monomial,
    Integer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    /// `j(x, B)`
    Theta,
    /// `J(a, m[, base])`
    J,
    /// `Jm(m[, base])`
    Jm,
    /// `poch(a, B, n)`
    Poch,
    /// `pochinf(a, B)`
    PochInf,
    /// `m(x, B, z)`
    M,
    /// `k(x, B)`
    K,
    /// `g2(x, B)`
    G2,
    /// `delta(x, B, z1, z0)`
    Delta,
    /// `lambda(x, B, z)`
    Lambda,
    /// `X(B)`
    X,
    /// `chi(B)`
    Chi,
}

use ArgKind::{Integer as I, Monomial as M};

impl Func {
    pub const ALL: [Func; 12] = [
        Func::Theta,
        Func::J,
        Func::Jm,
        Func::Poch,
        Func::PochInf,
        Func::M,
        Func::K,
        Func::G2,
        Func::Delta,
        Func::Lambda,
        Func::X,
        Func::Chi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Func::Theta => "j",
            Func::J => "J",
            Func::Jm => "Jm",
            Func::Poch => "poch",
            Func::PochInf => "pochinf",
            Func::M => "m",
            Func::K => "k",
            Func::G2 => "g2",
            Func::Delta => "delta",
            Func::Lambda => "lambda",
            Func::X => "X",
            Func::Chi => "chi",
        }
    }

    pub fn from_name(name: &str) -> Option<Func> {
        Func::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Argument kinds, followed by how many trailing ones are optional.
    pub fn signature(self) -> (&'static [ArgKind], usize) {
        match self {
            Func::Theta | Func::PochInf | Func::K | Func::G2 => (&[M, M], 0),
            Func::J => (&[I, I, M], 1),
            Func::Jm => (&[I, M], 1),
            Func::Poch => (&[M, M, I], 0),
            Func::M | Func::Lambda => (&[M, M, M], 0),
            Func::Delta => (&[M, M, M, M], 0),
            Func::X | Func::Chi => (&[M], 0),
        }
    }
}

impl fmt::Display for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[allow(clippy::should_implement_trait)]
impl Expr {
    /// Folds the expression to a single signed monomial if it is one:
    /// literals, negation, products, quotients and integer powers of those.
    pub fn as_monomial(&self) -> Option<Monomial> {
        match self {
            Expr::Int(1) => Some(Monomial::ONE),
            Expr::Int(-1) => Some(Monomial::neg_q(0)),
            Expr::Int(_) => None,
            Expr::Mono(m) => Some(*m),
            Expr::Neg(e) => e.as_monomial().map(|m| -m),
            Expr::Mul(a, b) => Some(a.as_monomial()? * b.as_monomial()?),
            Expr::Div(a, b) => Some(a.as_monomial()? / b.as_monomial()?),
            Expr::Pow(b, k) => b.as_monomial().map(|m| m.pow(*k)),
            Expr::Add(..) | Expr::Sub(..) | Expr::Call(_) => None,
        }
    }

    /// Integer constant, for the integer argument positions.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Expr::Int(n) => Some(*n),
            Expr::Neg(e) => e.as_integer().map(|n| -n),
            _ => None,
        }
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn call(func: Func, args: Vec<Expr>) -> Expr {
        Expr::Call(Call { func, args, span: Span::default() })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

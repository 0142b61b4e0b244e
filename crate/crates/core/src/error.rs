use thiserror::Error;

use crate::monomial::Monomial;

/// A parameter choice that would put a pole into an Appell-Lerch sum or a
/// vanishing theta function into a denominator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("non-generic parameters: {what}{}", index.map(|i| format!(" (index {i})")).unwrap_or_default())]
pub struct GenericityError {
    pub what: String,
    pub index: Option<i64>,
}

impl GenericityError {
    pub fn new(what: impl Into<String>) -> Self {
        Self { what: what.into(), index: None }
    }

    pub fn at(what: impl Into<String>, index: i64) -> Self {
        Self { what: what.into(), index: Some(index) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is zero throughout its window and cannot be inverted")]
    ZeroDivisor,
    #[error("insufficient precision: requested order {requested}, series only valid below {available}")]
    InsufficientPrecision { requested: i64, available: i64 },
    #[error("infinite product ({a};{base})_inf does not converge")]
    NonConvergent { a: Monomial, base: Monomial },
    #[error("base {0} must have a positive exponent")]
    BadBase(Monomial),
    #[error("working order must be at least 1, got {0}")]
    InvalidOrder(i64),
    #[error("identity {name} needs order at least {min_order}, got {order}")]
    BelowMinOrder { name: String, order: i64, min_order: i64 },
    #[error(transparent)]
    Genericity(#[from] GenericityError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

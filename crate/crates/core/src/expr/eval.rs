use num::BigRational;
use thiserror::Error;

use super::{Call, Expr, Func, Span};
use crate::appell::{appell_m, delta_term, g2, lambda_term, small_k};
use crate::error::Error;
use crate::mock::{mt_chi, mt_x};
use crate::monomial::Monomial;
use crate::series::{coefficient, EvalContext, LaurentSeries};
use crate::theta::{jtheta, pochhammer, PochLength, J};

/// An engine error, with the span of the call that raised it when known.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{source}{}", span.map(|s| format!(" (at {}..{})", s.start, s.end)).unwrap_or_default())]
pub struct EvalError {
    pub source: Error,
    pub span: Option<Span>,
}

impl From<Error> for EvalError {
    fn from(source: Error) -> Self {
        Self { source, span: None }
    }
}

/// Evaluates a parsed expression to a truncated series.
pub fn eval(e: &Expr, ctx: &EvalContext) -> Result<LaurentSeries, EvalError> {
    Ok(match e {
        Expr::Int(n) => LaurentSeries::monomial(coefficient(*n), 0, ctx),
        Expr::Mono(m) => LaurentSeries::from_monomial(*m, ctx),
        Expr::Add(a, b) => eval(a, ctx)?.add(&eval(b, ctx)?),
        Expr::Sub(a, b) => eval(a, ctx)?.sub(&eval(b, ctx)?),
        Expr::Mul(a, b) => mul_operands(a, b, ctx)?,
        Expr::Div(a, b) => match scaled_monomial(b) {
            Some((c, m)) if c != 0 => {
                let inv = BigRational::new(1.into(), c.into());
                eval(a, ctx)?.shift(m.inv()).scale(&inv)
            }
            _ => eval(a, ctx)?.mul(&eval(b, ctx)?.invert()?),
        },
        Expr::Neg(a) => eval(a, ctx)?.neg(),
        Expr::Pow(b, k) => eval(b, ctx)?.pow(*k, ctx)?,
        Expr::Call(call) => eval_call(call, ctx).map_err(|source| EvalError { source, span: Some(call.span) })?,
    })
}

/// `c * q^e` factors act as exact shifts instead of truncated multiplications,
/// so a constant prefactor costs no validity.
fn mul_operands(a: &Expr, b: &Expr, ctx: &EvalContext) -> Result<LaurentSeries, EvalError> {
    match (scaled_monomial(a), scaled_monomial(b)) {
        (Some((ca, ma)), Some((cb, mb))) => match ca.checked_mul(cb) {
            Some(c) => {
                let m = ma * mb;
                Ok(LaurentSeries::monomial(coefficient(c * m.sign()), m.exp(), ctx))
            }
            None => Ok(eval(a, ctx)?.mul(&eval(b, ctx)?)),
        },
        (Some((c, m)), None) => Ok(apply_scaled(&eval(b, ctx)?, c, m)),
        (None, Some((c, m))) => Ok(apply_scaled(&eval(a, ctx)?, c, m)),
        (None, None) => Ok(eval(a, ctx)?.mul(&eval(b, ctx)?)),
    }
}

pub(crate) fn apply_scaled(s: &LaurentSeries, c: i64, m: Monomial) -> LaurentSeries {
    let shifted = s.shift(m);
    if c == 1 {
        shifted
    } else {
        shifted.scale(&coefficient(c))
    }
}

/// Recognises `c * (±q^e)` with integer `c`.
pub(crate) fn scaled_monomial(e: &Expr) -> Option<(i64, Monomial)> {
    match e {
        Expr::Int(n) => Some((*n, Monomial::ONE)),
        Expr::Mono(m) => Some((1, *m)),
        Expr::Neg(x) => scaled_monomial(x).and_then(|(c, m)| Some((c.checked_neg()?, m))),
        Expr::Mul(a, b) => {
            let (ca, ma) = scaled_monomial(a)?;
            let (cb, mb) = scaled_monomial(b)?;
            Some((ca.checked_mul(cb)?, ma * mb))
        }
        Expr::Pow(x, k) => {
            let (c, m) = scaled_monomial(x)?;
            let c = match (c, *k) {
                (c, k) if k >= 0 => c.checked_pow(u32::try_from(k).ok()?)?,
                (1, _) => 1,
                (-1, k) => if k % 2 == 0 { 1 } else { -1 },
                _ => return None,
            };
            Some((c, m.pow(*k)))
        }
        _ => None,
    }
}

fn eval_call(call: &Call, ctx: &EvalContext) -> Result<LaurentSeries, Error> {
    let mono = |i: usize| -> Monomial { call.args[i].as_monomial().expect("checked at parse time") };
    let int = |i: usize| -> i64 { call.args[i].as_integer().expect("checked at parse time") };
    let base_or_q = |i: usize| if call.args.len() > i { mono(i) } else { Monomial::q(1) };
    match call.func {
        Func::Theta => jtheta(mono(0), mono(1), ctx),
        Func::J => J(int(0), int(1), base_or_q(2), ctx),
        Func::Jm => {
            let m = int(0);
            J(m, 3 * m, base_or_q(1), ctx)
        }
        Func::Poch => pochhammer(mono(0), mono(1), PochLength::Finite(int(2) as u64), ctx),
        Func::PochInf => pochhammer(mono(0), mono(1), PochLength::Infinite, ctx),
        Func::M => appell_m(mono(0), mono(1), mono(2), ctx),
        Func::K => small_k(mono(0), mono(1), ctx),
        Func::G2 => g2(mono(0), mono(1), ctx),
        Func::Delta => delta_term(mono(0), mono(1), mono(2), mono(3), ctx),
        Func::Lambda => lambda_term(mono(0), mono(1), mono(2), ctx),
        Func::X => mt_x(mono(0), ctx),
        Func::Chi => mt_chi(mono(0), ctx),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn ctx(n: i64) -> EvalContext {
        EvalContext::new(n).unwrap()
    }

    #[test]
    fn q_to_the_zero_is_one() {
        let s = eval(&parse("q^0").unwrap(), &ctx(7)).unwrap();
        assert_eq!(s, LaurentSeries::one(&ctx(7)));
    }

    #[test]
    fn lambda_zero_through_the_language() {
        let s = eval(&parse("lambda(-q^4, -q^10, q^8)").unwrap(), &ctx(60)).unwrap();
        assert!(s.is_zero_to_order());
    }

    #[test]
    fn errors_carry_call_span() {
        let err = eval(&parse("1 + m(q^2, q^40, 1)").unwrap(), &ctx(40)).unwrap_err();
        assert!(matches!(err.source, Error::Genericity(_)));
        assert_eq!(err.span.map(|s| (s.start, s.end)), Some((4, 19)));
    }

    #[test]
    fn division_by_zero_series() {
        let err = eval(&parse("1 / j(q^40, q^40)").unwrap(), &ctx(40)).unwrap_err();
        assert_eq!(err.source, Error::ZeroDivisor);
    }
}

//! The 10th order mock theta functions `X` and `chi`, evaluated directly at a
//! signed-monomial base.
//!
//! The Pochhammer denominators `(-B; B)_{2n}` are never inverted from
//! scratch: each summand's reciprocal is obtained from the previous one by
//! dividing out the two new factors.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::series::{EvalContext, LaurentSeries};

fn sum_eulerian(
    base: Monomial,
    ctx: &EvalContext,
    exponent: impl Fn(i64) -> i64,
    first_factor: i64,
) -> Result<LaurentSeries> {
    if base.exp() <= 0 {
        return Err(Error::BadBase(base));
    }
    let order = ctx.order();
    let mut recip = LaurentSeries::one(ctx);
    for k in 1..=first_factor {
        recip = recip.div_binomial(-base.pow(k))?;
    }
    let mut next_factor = first_factor + 1;
    let mut total = LaurentSeries::zero(order);
    let mut n = 0;
    loop {
        let shift = exponent(n);
        if shift * base.exp() >= order {
            break;
        }
        let prefactor = Monomial::neg_q(0).pow(n) * base.pow(shift);
        let term = recip.truncated(order - prefactor.exp()).shift(prefactor);
        total = total.add(&term);
        for _ in 0..2 {
            recip = recip.div_binomial(-base.pow(next_factor))?;
            next_factor += 1;
        }
        n += 1;
    }
    Ok(total)
}

/// `X(B) = sum_{n>=0} (-1)^n B^(n^2) / (-B; B)_{2n}`.
pub fn mt_x(base: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    sum_eulerian(base, ctx, |n| n * n, 0)
}

/// `chi(B) = sum_{n>=0} (-1)^n B^((n+1)^2) / (-B; B)_{2n+1}`.
pub fn mt_chi(base: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    sum_eulerian(base, ctx, |n| (n + 1) * (n + 1), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::coefficient;
    use num::Zero;

    fn ctx(n: i64) -> EvalContext {
        EvalContext::new(n).unwrap()
    }

    #[test]
    fn constant_terms() {
        for base in [Monomial::q(1), Monomial::neg_q(2), Monomial::q(7)] {
            let x = mt_x(base, &ctx(30)).unwrap();
            assert_eq!(x.coeff(0), Some(coefficient(1)));
            let chi = mt_chi(base, &ctx(30)).unwrap();
            assert!(chi.coeff(0).unwrap().is_zero());
        }
    }

    #[test]
    fn order_one() {
        let x = mt_x(Monomial::neg_q(2), &ctx(1)).unwrap();
        assert_eq!(x.valid_to(), 1);
        assert_eq!(x.coeff(0), Some(coefficient(1)));
    }

    #[test]
    fn low_terms_at_q() {
        // below q^4 only 1 - q/((1+q)(1+q^2)) contributes
        let x = mt_x(Monomial::q(1), &ctx(4)).unwrap();
        let got: Vec<i64> = (0..4).map(|e| i64::try_from(x.coeff(e).unwrap().to_integer()).unwrap()).collect();
        assert_eq!(got, vec![1, -1, 1, 0]);
    }

    #[test]
    fn rejects_bad_base() {
        assert!(mt_x(Monomial::q(0), &ctx(5)).is_err());
        assert!(mt_chi(Monomial::neg_q(-1), &ctx(5)).is_err());
    }
}

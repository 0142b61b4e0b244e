//! q-Pochhammer symbols and the theta function `j(x, B)` at signed-monomial
//! arguments.

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::series::{EvalContext, LaurentSeries};

/// Length of a Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLength {
    Finite(u64),
    Infinite,
}

/// Integer-coefficient accumulator for products of binomials `1 - u`.
struct IntSeries {
    lo: i64,
    coeffs: Vec<BigInt>,
    valid_to: i64,
}

impl IntSeries {
    fn one(valid_to: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); valid_to.max(0) as usize];
        if let Some(c) = coeffs.first_mut() {
            *c = BigInt::one();
        }
        Self { lo: 0, coeffs, valid_to: valid_to.max(0) }
    }

    fn window(&self) -> i64 {
        self.valid_to - self.lo
    }

    /// Multiplies in place by `1 - u`; `u` must not be `+q^0`.
    fn mul_binomial(&mut self, u: Monomial) {
        let e = u.exp();
        if e > 0 {
            let e = e as usize;
            for i in (e..self.coeffs.len()).rev() {
                if self.coeffs[i - e].is_zero() {
                    continue;
                }
                let prev = self.coeffs[i - e].clone();
                if u.is_negative() {
                    self.coeffs[i] += prev;
                } else {
                    self.coeffs[i] -= prev;
                }
            }
        } else if e == 0 {
            debug_assert!(u.is_negative());
            for c in &mut self.coeffs {
                *c *= 2;
            }
        } else {
            let lo = self.lo + e;
            let valid_to = self.valid_to + e;
            let mut coeffs = vec![BigInt::zero(); (valid_to - lo).max(0) as usize];
            for (i, c) in self.coeffs.iter().enumerate() {
                let k = self.lo + i as i64;
                if k < valid_to {
                    coeffs[(k - lo) as usize] += c;
                }
                let shifted = (k + e - lo) as usize;
                if u.is_negative() {
                    coeffs[shifted] += c;
                } else {
                    coeffs[shifted] -= c;
                }
            }
            *self = Self { lo, coeffs, valid_to };
        }
    }

    /// Multiplies by `prod_{k < count} (1 - a base^k)`. Returns `false` if a
    /// factor is identically zero.
    fn mul_pochhammer(&mut self, a: Monomial, base: Monomial, count: Option<u64>) -> bool {
        let mut k = 0u64;
        loop {
            if count.is_some_and(|n| k >= n) {
                return true;
            }
            let u = a * base.pow(k as i64);
            if u.is_one() {
                return false;
            }
            if base.exp() > 0 && u.exp() > 0 && u.exp() >= self.window() {
                // factor exponents only grow from here
                return true;
            }
            self.mul_binomial(u);
            k += 1;
        }
    }

    fn into_series(self) -> LaurentSeries {
        let coeffs = self.coeffs.into_iter().map(BigRational::from_integer).collect();
        LaurentSeries::from_parts(self.lo, coeffs, self.valid_to)
    }
}

/// `(a; B)_n = prod_{k=1..n} (1 - a B^(k-1))`.
///
/// A factor equal to `1 - 1` makes the product vanish and yields the exact
/// zero series.
pub fn pochhammer(
    a: Monomial,
    base: Monomial,
    n: PochLength,
    ctx: &EvalContext,
) -> Result<LaurentSeries> {
    let count = match n {
        PochLength::Finite(k) => Some(k),
        PochLength::Infinite if base.exp() <= 0 => return Err(Error::NonConvergent { a, base }),
        PochLength::Infinite => None,
    };
    let mut acc = IntSeries::one(ctx.order());
    if !acc.mul_pochhammer(a, base, count) {
        return Ok(LaurentSeries::zero(ctx.order()));
    }
    Ok(acc.into_series())
}

/// Splits `x = B^k * r` with `0 <= r.exp < B.exp`.
fn reduce(x: Monomial, base: Monomial) -> (i64, Monomial) {
    let k = x.exp().div_euclid(base.exp());
    (k, x / base.pow(k))
}

/// `j(x, B) = (x; B)_inf (B/x; B)_inf (B; B)_inf`.
///
/// The argument is first moved into `0 <= exp < B.exp` with
/// `j(B^k x, B) = (-1)^k B^(-k(k-1)/2) x^(-k) j(x, B)`; the monomial factor
/// shifts both the window and the validity bound. Returns the exact zero
/// series when `x` is an integral power of `B`.
pub fn jtheta(x: Monomial, base: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    if base.exp() <= 0 {
        return Err(Error::BadBase(base));
    }
    let (k, r) = reduce(x, base);
    if r.is_one() {
        return Ok(LaurentSeries::zero(ctx.order()));
    }
    let prefactor = Monomial::neg_q(0).pow(k) * base.pow(-(k * (k - 1) / 2)) * r.pow(-k);
    let mut acc = IntSeries::one(ctx.order());
    for a in [r, base / r, base] {
        let nonzero = acc.mul_pochhammer(a, base, None);
        debug_assert!(nonzero);
    }
    Ok(acc.into_series().shift(prefactor))
}

/// True when `j(x, B)` vanishes identically.
pub fn theta_vanishes(x: Monomial, base: Monomial) -> bool {
    x.power_of(base).is_some()
}

/// `J_{a,m} = j(base^a, base^m)`.
#[allow(non_snake_case)]
pub fn J(a: i64, m: i64, base: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    let modulus = base.pow(m);
    if m <= 0 || modulus.exp() <= 0 {
        return Err(Error::BadBase(modulus));
    }
    jtheta(base.pow(a), modulus, ctx)
}

/// `J_m = J_{m,3m}`.
#[allow(non_snake_case)]
pub fn Jm(m: i64, base: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    J(m, 3 * m, base, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::coefficient;

    fn ctx(n: i64) -> EvalContext {
        EvalContext::new(n).unwrap()
    }

    fn ints(s: &LaurentSeries) -> Vec<(i64, i64)> {
        s.terms().map(|(e, c)| (e, i64::try_from(c.to_integer()).unwrap())).collect()
    }

    #[test]
    fn euler_product_low_terms() {
        let p = pochhammer(Monomial::q(1), Monomial::q(1), PochLength::Infinite, &ctx(16)).unwrap();
        assert_eq!(ints(&p), vec![(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)]);
    }

    #[test]
    fn finite_product_with_signed_base() {
        let p = pochhammer(Monomial::neg_q(2), Monomial::neg_q(10), PochLength::Finite(3), &ctx(40))
            .unwrap();
        // (1 + q^2)(1 - q^12)(1 + q^22)
        assert_eq!(
            ints(&p),
            vec![(0, 1), (2, 1), (12, -1), (14, -1), (22, 1), (24, 1), (34, -1), (36, -1)]
        );
    }

    #[test]
    fn empty_product_is_one() {
        let p = pochhammer(Monomial::neg_q(-7), Monomial::q(3), PochLength::Finite(0), &ctx(5)).unwrap();
        assert_eq!(p, LaurentSeries::one(&ctx(5)));
    }

    #[test]
    fn finite_product_through_one_vanishes() {
        let p = pochhammer(Monomial::q(-6), Monomial::q(3), PochLength::Finite(4), &ctx(10)).unwrap();
        assert!(p.is_zero_to_order());
    }

    #[test]
    fn infinite_product_needs_positive_base() {
        assert!(matches!(
            pochhammer(Monomial::q(1), Monomial::q(0), PochLength::Infinite, &ctx(5)),
            Err(Error::NonConvergent { .. })
        ));
    }

    #[test]
    fn negative_exponent_factors_are_laurent() {
        // (q^-1; q)_2 = (1 - q^-1)(1 - 1)... avoided; use (-q^-1; q)_1 = 1 + q^-1
        let p = pochhammer(Monomial::neg_q(-1), Monomial::q(1), PochLength::Finite(1), &ctx(4)).unwrap();
        assert_eq!(p.lo(), -1);
        assert_eq!(p.valid_to(), 3);
        assert_eq!(ints(&p), vec![(-1, 1), (0, 1)]);
    }

    #[test]
    fn theta_vanishing_at_powers() {
        let z = jtheta(Monomial::q(80), Monomial::q(40), &ctx(50)).unwrap();
        assert!(z.is_zero_to_order());
        assert_eq!(z.valid_to(), 50);
        assert!(jtheta(Monomial::q(20), Monomial::neg_q(10), &ctx(50)).unwrap().is_zero_to_order());
        assert!(!jtheta(Monomial::neg_q(20), Monomial::neg_q(10), &ctx(50))
            .unwrap()
            .is_zero_to_order());
    }

    #[test]
    fn j_one_equals_euler_product() {
        let c = ctx(60);
        let euler = pochhammer(Monomial::q(1), Monomial::q(1), PochLength::Infinite, &c).unwrap();
        assert_eq!(jtheta(Monomial::q(1), Monomial::q(3), &c).unwrap(), euler);
        assert_eq!(Jm(1, Monomial::q(1), &c).unwrap(), euler);
    }

    #[test]
    fn reduction_prefactor_for_negative_argument() {
        let c = ctx(120);
        let direct = jtheta(Monomial::q(-32), Monomial::q(40), &c).unwrap();
        let reduced = jtheta(Monomial::q(8), Monomial::q(40), &c).unwrap();
        // j(q^-32, q^40) = -q^-32 j(q^8, q^40)
        assert_eq!(direct, reduced.shift(Monomial::neg_q(-32)));
        assert_eq!(direct.valid_to(), 120 - 32);
    }

    #[test]
    fn constant_two_factor_at_minus_one() {
        let c = ctx(10);
        let t = jtheta(Monomial::neg_q(0), Monomial::q(1), &c).unwrap();
        assert_eq!(t.coeff(0), Some(coefficient(2)));
    }

    #[test]
    fn capital_j_rejects_nonpositive_modulus() {
        assert!(J(1, 0, Monomial::q(1), &ctx(5)).is_err());
        assert!(J(1, 2, Monomial::q(-1), &ctx(5)).is_err());
        assert!(J(40, 40, Monomial::q(1), &ctx(50)).unwrap().is_zero_to_order());
    }
}

//! Appell-Lerch sums `m(x, B, z)` and `k(x, B)`, the universal mock theta
//! function `g2`, and the theta quotients `Delta` and `Lambda` that relate
//! them.
//!
//! Every bilateral sum is expanded term by term. A term has the shape
//! `num / (1 - den)` with monomial `num` and `den`, so its valuation is
//! `num.exp + max(0, -den.exp)`. That valuation is convex in the summation
//! index, which gives an exact stopping rule: walk outward from zero and stop
//! once the valuation is at least the working order, has been for four
//! consecutive terms, and is still increasing.

use num::{BigInt, BigRational};

use crate::error::{Error, GenericityError, Result};
use crate::monomial::Monomial;
use crate::series::{EvalContext, LaurentSeries};
use crate::theta::{jtheta, theta_vanishes};

const STOP_MARGIN: usize = 4;

#[derive(Clone, Copy, Debug)]
struct Term {
    num: Monomial,
    den: Monomial,
}

impl Term {
    fn valuation(&self) -> i64 {
        self.num.exp() + (-self.den.exp()).max(0)
    }
}

fn check_base(base: Monomial) -> Result<()> {
    if base.exp() <= 0 {
        return Err(Error::BadBase(base));
    }
    Ok(())
}

/// Sum over `n ∈ Z` of `term(n)`, truncated at `ctx.order()`.
fn bilateral_sum(ctx: &EvalContext, term: impl Fn(i64) -> Term) -> LaurentSeries {
    let order = ctx.order();
    let mut included = Vec::new();
    for step in [1i64, -1] {
        let mut n = if step == 1 { 0 } else { -1 };
        let mut above = 0usize;
        let mut prev: Option<i64> = None;
        loop {
            let t = term(n);
            let v = t.valuation();
            if v < order {
                included.push(t);
                above = 0;
            } else {
                above += 1;
            }
            let rising = prev.is_some_and(|p| v > p);
            if above >= STOP_MARGIN && rising {
                break;
            }
            prev = Some(v);
            n += step;
        }
    }
    accumulate(&included, order)
}

/// Adds the geometric expansions of all terms. Numerators are `±1` and the
/// only fractional piece is `1/(1 - (-1)) = 1/2`, so the sum is kept as
/// integers scaled by two.
fn accumulate(terms: &[Term], order: i64) -> LaurentSeries {
    let lo = terms.iter().map(Term::valuation).min().unwrap_or(order).min(order);
    let mut acc = vec![0i64; (order - lo) as usize];
    let mut put = |e: i64, v: i64| acc[(e - lo) as usize] += v;
    for t in terms {
        let sigma = t.num.sign();
        let a = t.num.exp();
        let u = t.den;
        match u.exp() {
            e if e > 0 => {
                let mut k = 0;
                while a + k * e < order {
                    put(a + k * e, 2 * sigma * u.pow(k).sign());
                    k += 1;
                }
            }
            0 => {
                debug_assert!(u.is_negative());
                put(a, sigma);
            }
            _ => {
                // 1/(1 - u) = -(w + w^2 + ...), w = 1/u
                let w = u.inv();
                let mut k = 1;
                while a + k * w.exp() < order {
                    put(a + k * w.exp(), -2 * sigma * w.pow(k).sign());
                    k += 1;
                }
            }
        }
    }
    let two = BigInt::from(2);
    let coeffs = acc.into_iter().map(|n| BigRational::new(BigInt::from(n), two.clone())).collect();
    LaurentSeries::from_parts(lo, coeffs, order)
}

/// `1 / (1 - u)` as a series in positive powers of `q`.
pub fn geom_inverse(u: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    if u.is_one() {
        return Err(GenericityError::new("geometric denominator 1 - 1").into());
    }
    Ok(accumulate(&[Term { num: Monomial::ONE, den: u }], ctx.order()))
}

/// Returns the index `n` with `step^n * offset == 1`, if one exists.
fn critical_index(offset: Monomial, step: Monomial) -> Option<i64> {
    offset.inv().power_of(step)
}

pub fn check_appell_m(x: Monomial, base: Monomial, z: Monomial) -> Result<()> {
    check_base(base)?;
    if theta_vanishes(z, base) {
        return Err(GenericityError::new(format!("z = {z} is an integral power of {base}")).into());
    }
    // B^(r-1) x z = 1
    if let Some(k) = critical_index(x * z, base) {
        return Err(GenericityError::at("pole in m: B^(r-1) x z = 1", k + 1).into());
    }
    Ok(())
}

/// `m(x, B, z) = 1/j(z, B) * sum_r (-1)^r B^(r(r-1)/2) z^r / (1 - B^(r-1) x z)`.
pub fn appell_m(x: Monomial, base: Monomial, z: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    check_appell_m(x, base, z)?;
    let sum = bilateral_sum(ctx, |r| Term {
        num: Monomial::neg_q(0).pow(r) * base.pow(r * (r - 1) / 2) * z.pow(r),
        den: base.pow(r - 1) * x * z,
    });
    Ok(sum.mul(&jtheta(z, base, ctx)?.invert()?))
}

pub fn check_small_k(x: Monomial, base: Monomial) -> Result<()> {
    check_base(base)?;
    if let Some(n) = critical_index(x.pow(2), base.pow(2)) {
        return Err(GenericityError::at("pole in k: B^(2n) x^2 = 1", n).into());
    }
    Ok(())
}

/// `k(x, B) = 1/(x j(-B, B^4)) * sum_n B^(n(2n+1)) / (1 - B^(2n) x^2)`.
pub fn small_k(x: Monomial, base: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    check_small_k(x, base)?;
    let sum = bilateral_sum(ctx, |n| Term {
        num: base.pow(n * (2 * n + 1)),
        den: base.pow(2 * n) * x.pow(2),
    });
    let norm = jtheta(-base, base.pow(4), ctx)?.shift(x);
    Ok(sum.mul(&norm.invert()?))
}

pub fn check_g2(x: Monomial, base: Monomial) -> Result<()> {
    check_base(base)?;
    if let Some(n) = critical_index(x, base) {
        return Err(GenericityError::at("pole in g2: x B^n = 1", n).into());
    }
    Ok(())
}

/// `g2(x, B) = 1/j(B, B^2) * sum_n (-1)^n B^(n(n+1)) / (1 - x B^n)`.
pub fn g2(x: Monomial, base: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    check_g2(x, base)?;
    let sum = bilateral_sum(ctx, |n| Term {
        num: Monomial::neg_q(0).pow(n) * base.pow(n * (n + 1)),
        den: x * base.pow(n),
    });
    Ok(sum.mul(&jtheta(base, base.pow(2), ctx)?.invert()?))
}

fn nonvanishing(label: &str, x: Monomial, base: Monomial) -> Result<()> {
    if theta_vanishes(x, base) {
        return Err(GenericityError::new(format!("denominator theta j({label}) vanishes: {x} is a power of {base}")).into());
    }
    Ok(())
}

fn product(factors: &[LaurentSeries]) -> LaurentSeries {
    let (first, rest) = factors.split_first().expect("at least one factor");
    rest.iter().fold(first.clone(), |acc, f| acc.mul(f))
}

/// `Delta(x, B, z1, z0) = z0 J1^3 j(z1/z0) j(x z0 z1) / (j(z0) j(z1) j(x z0) j(x z1))`,
/// all thetas at base `B`.
pub fn delta_term(
    x: Monomial,
    base: Monomial,
    z1: Monomial,
    z0: Monomial,
    ctx: &EvalContext,
) -> Result<LaurentSeries> {
    check_base(base)?;
    nonvanishing("z0", z0, base)?;
    nonvanishing("z1", z1, base)?;
    nonvanishing("x z0", x * z0, base)?;
    nonvanishing("x z1", x * z1, base)?;
    let j = |arg: Monomial| jtheta(arg, base, ctx);
    let j1 = jtheta(base, base.pow(3), ctx)?;
    let num = product(&[j1.clone(), j1.clone(), j1, j(z1 / z0)?, j(x * z0 * z1)?]).shift(z0);
    let den = product(&[j(z0)?, j(z1)?, j(x * z0)?, j(x * z1)?]);
    Ok(num.mul(&den.invert()?))
}

/// `Lambda(x, B, z) = J2 J4 j(-x z^2, B) j(-x z^3, B) /
/// (x j(x z, B) j(z^4, B^4) j(-B x^2 z^4, B^2))`.
pub fn lambda_term(x: Monomial, base: Monomial, z: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    check_base(base)?;
    let b2 = base.pow(2);
    let b4 = base.pow(4);
    let quartic = -base * x.pow(2) * z.pow(4);
    nonvanishing("x z", x * z, base)?;
    nonvanishing("z^4", z.pow(4), b4)?;
    nonvanishing("-B x^2 z^4", quartic, b2)?;
    let j2 = jtheta(b2, base.pow(6), ctx)?;
    let j4 = jtheta(b4, base.pow(12), ctx)?;
    let num = product(&[
        j2,
        j4,
        jtheta(-x * z.pow(2), base, ctx)?,
        jtheta(-x * z.pow(3), base, ctx)?,
    ]);
    let den = product(&[jtheta(x * z, base, ctx)?, jtheta(z.pow(4), b4, ctx)?, jtheta(quartic, b2, ctx)?])
        .shift(x);
    Ok(num.mul(&den.invert()?))
}

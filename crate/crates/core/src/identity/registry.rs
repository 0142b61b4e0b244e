//! The built-in identities. Each entry is stored as expression text and
//! also as a direct Rust builder that performs the same operations in the
//! same order, so the two evaluations agree bit for bit.

use super::{Builder, Identity};
use crate::appell::{appell_m, delta_term, g2, lambda_term, small_k};
use crate::error::Result;
use crate::expr::parse;
use crate::mock::{mt_chi, mt_x};
use crate::monomial::Monomial;
use crate::series::{coefficient, EvalContext, LaurentSeries};
use crate::theta::{jtheta, pochhammer, PochLength, J};

struct Entry {
    name: &'static str,
    lhs: &'static str,
    rhs: &'static str,
    min_order: i64,
    source: &'static str,
    builder: Builder,
}

const MTC_X_QUOTIENT: &str = "pochinf(q^4, q^4)^2*(j(-q^2, q^20)^2*j(q^12, q^40) + 2*q*pochinf(q^40, q^40)^3)\
/(pochinf(q^2, q^2)*pochinf(q^20, q^20)*pochinf(q^40, q^40)*j(q^8, q^40))";

const MTC_CHI_SCALED_QUOTIENT: &str = "q^2*pochinf(q^4, q^4)^2*(2*q*pochinf(q^40, q^40)^3 - j(-q^6, q^20)^2*j(q^4, q^40))\
/(pochinf(q^2, q^2)*pochinf(q^20, q^20)*pochinf(q^40, q^40)*j(q^16, q^40))";

fn entries() -> Vec<Entry> {
    vec![
        Entry {
            name: "mtc-X",
            lhs: "X(-q^2)",
            rhs: concat!(
                "-2*q*g2(q, q^20) + 2*q^5*g2(q^9, q^20) + ",
                "pochinf(q^4, q^4)^2*(j(-q^2, q^20)^2*j(q^12, q^40) + 2*q*pochinf(q^40, q^40)^3)",
                "/(pochinf(q^2, q^2)*pochinf(q^20, q^20)*pochinf(q^40, q^40)*j(q^8, q^40))"
            ),
            min_order: 40,
            source: "conjectured identity for X(-q^2)",
            builder: mtc_x,
        },
        Entry {
            name: "mtc-chi",
            lhs: "chi(-q^2)",
            rhs: concat!(
                "-2*q^3*g2(q^3, q^20) - 2*q^5*g2(q^7, q^20) + ",
                "q^2*pochinf(q^4, q^4)^2*(2*q*pochinf(q^40, q^40)^3 - j(-q^6, q^20)^2*j(q^4, q^40))",
                "/(pochinf(q^2, q^2)*pochinf(q^20, q^20)*pochinf(q^40, q^40)*j(q^16, q^40))"
            ),
            min_order: 40,
            source: "conjectured identity for chi(-q^2)",
            builder: mtc_chi,
        },
        Entry {
            name: "choi-X-a",
            lhs: "X(-q^2)",
            rhs: "-2*q^2*k(-q^2, -q^10) - Jm(5, -q^2)*Jm(10, -q^2)*J(2, 5, -q^2)/(J(2, 10, -q^2)*J(1, 5, -q^2))",
            min_order: 10,
            source: "Appell-Lerch form of X(q) at q -> -q^2",
            builder: choi_x_a,
        },
        Entry {
            name: "choi-X-b",
            lhs: "X(-q^2)",
            rhs: "2*m(-q^4, -q^10, q^8) - J(3, 10, -q^2)*J(5, 10, -q^2)/J(1, 5, -q^2)",
            min_order: 10,
            source: "X(-q^2) through m(-q^4, -q^10, q^8), via the k-to-m and z-shift laws",
            builder: choi_x_b,
        },
        Entry {
            name: "quartic-X",
            lhs: "m(-q^4, -q^10, q^8)",
            rhs: "m(q^18, q^40, q^32) - q^-4*m(q^2, q^40, q^-32)",
            min_order: 40,
            source: "base change q -> q^4 applied to m(-q^4, -q^10, q^8), then the inversion law",
            builder: quartic_x,
        },
        Entry {
            name: "zshift-X-1",
            lhs: "m(q^18, q^40, q^32)",
            rhs: "m(q^18, q^40, q) + delta(q^18, q^40, q^32, q)",
            min_order: 40,
            source: "z-shift law for m(q^18, q^40, z)",
            builder: zshift_x_1,
        },
        Entry {
            name: "zshift-X-2",
            lhs: "m(q^2, q^40, q^-32)",
            rhs: "m(q^2, q^40, q^9) + delta(q^2, q^40, q^-32, q^9)",
            min_order: 40,
            source: "z-shift law for m(q^2, q^40, z)",
            builder: zshift_x_2,
        },
        Entry {
            name: "theta-core-X",
            lhs: MTC_X_QUOTIENT,
            rhs: "-J(3, 10, -q^2)*J(5, 10, -q^2)/J(1, 5, -q^2) + 2*delta(q^18, q^40, q^32, q) - 2*q^-4*delta(q^2, q^40, q^-32, q^9)",
            min_order: 40,
            source: "theta quotient identity that suffices for the X(-q^2) identity",
            builder: theta_core_x,
        },
        Entry {
            name: "choi-chi-a",
            lhs: "chi(-q^2)",
            rhs: "2 - 2*q^4*k(q^4, -q^10) - q^2*Jm(5, -q^2)*Jm(10, -q^2)*J(1, 5, -q^2)/(J(4, 10, -q^2)*J(2, 5, -q^2))",
            min_order: 10,
            source: "Appell-Lerch form of chi(q) at q -> -q^2",
            builder: choi_chi_a,
        },
        Entry {
            name: "choi-chi-b",
            lhs: "chi(-q^2)",
            rhs: "2*m(q^2, -q^10, q^4) - q^2*J(1, 10, -q^2)*J(5, 10, -q^2)/J(2, 5, -q^2)",
            min_order: 10,
            source: "chi(-q^2) through m(q^2, -q^10, q^4), via the k-to-m and z-shift laws",
            builder: choi_chi_b,
        },
        Entry {
            name: "quartic-chi",
            lhs: "m(q^2, -q^10, q^4)",
            rhs: "m(q^14, q^40, q^16) + q^-2*m(q^6, q^40, q^-16)",
            min_order: 40,
            source: "base change q -> q^4 applied to m(q^2, -q^10, q^4), then the inversion law",
            builder: quartic_chi,
        },
        Entry {
            name: "zshift-chi-1",
            lhs: "m(q^14, q^40, q^16)",
            rhs: "m(q^14, q^40, q^3) + delta(q^14, q^40, q^16, q^3)",
            min_order: 40,
            source: "z-shift law for m(q^14, q^40, z)",
            builder: zshift_chi_1,
        },
        Entry {
            name: "zshift-chi-2",
            lhs: "m(q^6, q^40, q^-16)",
            rhs: "m(q^6, q^40, q^7) + delta(q^6, q^40, q^-16, q^7)",
            min_order: 40,
            source: "z-shift law for m(q^6, q^40, z)",
            builder: zshift_chi_2,
        },
        Entry {
            name: "theta-core-chi",
            lhs: MTC_CHI_SCALED_QUOTIENT,
            rhs: "-q^2*J(1, 10, -q^2)*J(5, 10, -q^2)/J(2, 5, -q^2) + 2*delta(q^14, q^40, q^16, q^3) + 2*q^-2*delta(q^6, q^40, q^-16, q^7)",
            min_order: 40,
            source: "theta quotient identity that suffices for the chi(-q^2) identity (with the q^2 the chain requires on the left)",
            builder: theta_core_chi,
        },
        Entry {
            name: "law-m1",
            lhs: "m(-q^3, q^10, q)",
            rhs: "-q^-3*m(-q^-3, q^10, q^-1)",
            min_order: 10,
            source: "inversion law m(x,q,z) = x^-1 m(x^-1,q,z^-1)",
            builder: law_m1,
        },
        Entry {
            name: "law-m2",
            lhs: "m(-q^3, q^10, q^2)",
            rhs: "m(-q^3, q^10, q) + delta(-q^3, q^10, q^2, q)",
            min_order: 10,
            source: "z-shift law m(x,q,z1) = m(x,q,z0) + Delta",
            builder: law_m2,
        },
        Entry {
            name: "law-m3",
            lhs: "m(-q, q^10, q^2)",
            rhs: "m(-q^12, q^40, q^8) + q^-9*m(-q^-8, q^40, q^8) - lambda(-q, q^10, q^2)",
            min_order: 40,
            source: "base change law m(x,q,z) in terms of m at base q^4",
            builder: law_m3,
        },
        Entry {
            name: "law-m4",
            lhs: "g2(q^3, q^20)",
            rhs: "-q^-3*m(q^14, q^40, q^3)",
            min_order: 40,
            source: "g2(x,q) = -x^-1 m(x^-2 q, q^2, x)",
            builder: law_m4,
        },
        Entry {
            name: "law-m5",
            lhs: "-q^2*k(-q^2, -q^10)",
            rhs: "m(-q^4, -q^10, q^-4) + Jm(1, -q^10)^4/(2*Jm(2, -q^10)^2*j(q^4, -q^10))",
            min_order: 10,
            source: "x k(x,q) = m(-x^2,q,x^-2) + J1^4/(2 J2^2 j(x^2,q))",
            builder: law_m5,
        },
        Entry {
            name: "lambda-zero-X",
            lhs: "lambda(-q^4, -q^10, q^8)",
            rhs: "0",
            min_order: 40,
            source: "Lambda(-q^4, -q^10, q^8) vanishes",
            builder: lambda_zero_x,
        },
        Entry {
            name: "lambda-zero-chi",
            lhs: "lambda(q^2, -q^10, q^4)",
            rhs: "0",
            min_order: 40,
            source: "Lambda(q^2, -q^10, q^4) vanishes",
            builder: lambda_zero_chi,
        },
    ]
}

/// All registry identities, in a fixed order.
pub fn builtin_registry() -> Vec<Identity> {
    entries()
        .into_iter()
        .map(|e| Identity {
            name: e.name.to_string(),
            lhs: parse(e.lhs).unwrap_or_else(|err| panic!("{}: lhs: {err}", e.name)),
            rhs: parse(e.rhs).unwrap_or_else(|err| panic!("{}: rhs: {err}", e.name)),
            min_order: e.min_order,
            source: e.source.to_string(),
            builtin: Some(e.builder),
        })
        .collect()
}

// Builders. Evaluation rules mirrored from the expression evaluator:
// `c*q^e*f` is an exact shift and scale, `a/b` multiplies by `b^-1`, and
// sums associate to the left.

const fn q(e: i64) -> Monomial {
    Monomial::q(e)
}

const fn nq(e: i64) -> Monomial {
    Monomial::neg_q(e)
}

fn scaled(c: i64, m: Monomial, s: &LaurentSeries) -> LaurentSeries {
    crate::expr::apply_scaled(s, c, m)
}

fn constant(c: i64, ctx: &EvalContext) -> LaurentSeries {
    LaurentSeries::monomial(coefficient(c), 0, ctx)
}

fn poch(a: Monomial, base: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    pochhammer(a, base, PochLength::Infinite, ctx)
}

fn div(a: &LaurentSeries, b: &LaurentSeries) -> Result<LaurentSeries> {
    Ok(a.mul(&b.invert()?))
}

fn eta_denominator(last: Monomial, ctx: &EvalContext) -> Result<LaurentSeries> {
    Ok(poch(q(2), q(2), ctx)?
        .mul(&poch(q(20), q(20), ctx)?)
        .mul(&poch(q(40), q(40), ctx)?)
        .mul(&jtheta(last, q(40), ctx)?))
}

fn x_quotient_parts(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries, LaurentSeries)> {
    let head = poch(q(4), q(4), ctx)?.pow(2, ctx)?;
    let inner = jtheta(nq(2), q(20), ctx)?
        .pow(2, ctx)?
        .mul(&jtheta(q(12), q(40), ctx)?)
        .add(&scaled(2, q(1), &poch(q(40), q(40), ctx)?.pow(3, ctx)?));
    Ok((head, inner, eta_denominator(q(8), ctx)?))
}

fn chi_quotient_parts(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries, LaurentSeries)> {
    let head = poch(q(4), q(4), ctx)?.pow(2, ctx)?;
    let inner = scaled(2, q(1), &poch(q(40), q(40), ctx)?.pow(3, ctx)?)
        .sub(&jtheta(nq(6), q(20), ctx)?.pow(2, ctx)?.mul(&jtheta(q(4), q(40), ctx)?));
    Ok((head, inner, eta_denominator(q(16), ctx)?))
}

fn jb(a: i64, m: i64, ctx: &EvalContext) -> Result<LaurentSeries> {
    J(a, m, nq(2), ctx)
}

fn mtc_x(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = mt_x(nq(2), ctx)?;
    let (head, inner, den) = x_quotient_parts(ctx)?;
    let rhs = scaled(-2, q(1), &g2(q(1), q(20), ctx)?)
        .add(&scaled(2, q(5), &g2(q(9), q(20), ctx)?))
        .add(&div(&head.mul(&inner), &den)?);
    Ok((lhs, rhs))
}

fn mtc_chi(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = mt_chi(nq(2), ctx)?;
    let (head, inner, den) = chi_quotient_parts(ctx)?;
    let rhs = scaled(-2, q(3), &g2(q(3), q(20), ctx)?)
        .sub(&scaled(2, q(5), &g2(q(7), q(20), ctx)?))
        .add(&div(&scaled(1, q(2), &head).mul(&inner), &den)?);
    Ok((lhs, rhs))
}

fn choi_x_a(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = mt_x(nq(2), ctx)?;
    let num = jb(5, 15, ctx)?.mul(&jb(10, 30, ctx)?).mul(&jb(2, 5, ctx)?);
    let den = jb(2, 10, ctx)?.mul(&jb(1, 5, ctx)?);
    let rhs = scaled(-2, q(2), &small_k(nq(2), nq(10), ctx)?).sub(&div(&num, &den)?);
    Ok((lhs, rhs))
}

fn choi_x_b(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = mt_x(nq(2), ctx)?;
    let quotient = div(&jb(3, 10, ctx)?.mul(&jb(5, 10, ctx)?), &jb(1, 5, ctx)?)?;
    let rhs = scaled(2, Monomial::ONE, &appell_m(nq(4), nq(10), q(8), ctx)?).sub(&quotient);
    Ok((lhs, rhs))
}

fn quartic_x(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = appell_m(nq(4), nq(10), q(8), ctx)?;
    let rhs = appell_m(q(18), q(40), q(32), ctx)?.sub(&scaled(1, q(-4), &appell_m(q(2), q(40), q(-32), ctx)?));
    Ok((lhs, rhs))
}

fn zshift(x: Monomial, z1: Monomial, z0: Monomial, ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = appell_m(x, q(40), z1, ctx)?;
    let rhs = appell_m(x, q(40), z0, ctx)?.add(&delta_term(x, q(40), z1, z0, ctx)?);
    Ok((lhs, rhs))
}

fn zshift_x_1(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    zshift(q(18), q(32), q(1), ctx)
}

fn zshift_x_2(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    zshift(q(2), q(-32), q(9), ctx)
}

fn theta_core_x(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let (head, inner, den) = x_quotient_parts(ctx)?;
    let lhs = div(&head.mul(&inner), &den)?;
    let quotient = div(&jb(3, 10, ctx)?.neg().mul(&jb(5, 10, ctx)?), &jb(1, 5, ctx)?)?;
    let rhs = quotient
        .add(&scaled(2, Monomial::ONE, &delta_term(q(18), q(40), q(32), q(1), ctx)?))
        .sub(&scaled(2, q(-4), &delta_term(q(2), q(40), q(-32), q(9), ctx)?));
    Ok((lhs, rhs))
}

fn choi_chi_a(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = mt_chi(nq(2), ctx)?;
    let num = scaled(1, q(2), &jb(5, 15, ctx)?).mul(&jb(10, 30, ctx)?).mul(&jb(1, 5, ctx)?);
    let den = jb(4, 10, ctx)?.mul(&jb(2, 5, ctx)?);
    let rhs = constant(2, ctx)
        .sub(&scaled(2, q(4), &small_k(q(4), nq(10), ctx)?))
        .sub(&div(&num, &den)?);
    Ok((lhs, rhs))
}

fn choi_chi_b(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = mt_chi(nq(2), ctx)?;
    let num = scaled(1, q(2), &jb(1, 10, ctx)?).mul(&jb(5, 10, ctx)?);
    let rhs = scaled(2, Monomial::ONE, &appell_m(q(2), nq(10), q(4), ctx)?).sub(&div(&num, &jb(2, 5, ctx)?)?);
    Ok((lhs, rhs))
}

fn quartic_chi(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = appell_m(q(2), nq(10), q(4), ctx)?;
    let rhs = appell_m(q(14), q(40), q(16), ctx)?.add(&scaled(1, q(-2), &appell_m(q(6), q(40), q(-16), ctx)?));
    Ok((lhs, rhs))
}

fn zshift_chi_1(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    zshift(q(14), q(16), q(3), ctx)
}

fn zshift_chi_2(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    zshift(q(6), q(-16), q(7), ctx)
}

fn theta_core_chi(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let (head, inner, den) = chi_quotient_parts(ctx)?;
    let lhs = div(&scaled(1, q(2), &head).mul(&inner), &den)?;
    let num = scaled(1, nq(2), &jb(1, 10, ctx)?).mul(&jb(5, 10, ctx)?);
    let rhs = div(&num, &jb(2, 5, ctx)?)?
        .add(&scaled(2, Monomial::ONE, &delta_term(q(14), q(40), q(16), q(3), ctx)?))
        .add(&scaled(2, q(-2), &delta_term(q(6), q(40), q(-16), q(7), ctx)?));
    Ok((lhs, rhs))
}

fn law_m1(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = appell_m(nq(3), q(10), q(1), ctx)?;
    let rhs = scaled(1, nq(-3), &appell_m(nq(-3), q(10), q(-1), ctx)?);
    Ok((lhs, rhs))
}

fn law_m2(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = appell_m(nq(3), q(10), q(2), ctx)?;
    let rhs = appell_m(nq(3), q(10), q(1), ctx)?.add(&delta_term(nq(3), q(10), q(2), q(1), ctx)?);
    Ok((lhs, rhs))
}

fn law_m3(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = appell_m(nq(1), q(10), q(2), ctx)?;
    let rhs = appell_m(nq(12), q(40), q(8), ctx)?
        .add(&scaled(1, q(-9), &appell_m(nq(-8), q(40), q(8), ctx)?))
        .sub(&lambda_term(nq(1), q(10), q(2), ctx)?);
    Ok((lhs, rhs))
}

fn law_m4(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let lhs = g2(q(3), q(20), ctx)?;
    let rhs = scaled(1, nq(-3), &appell_m(q(14), q(40), q(3), ctx)?);
    Ok((lhs, rhs))
}

fn law_m5(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let base = nq(10);
    let lhs = scaled(1, nq(2), &small_k(nq(2), base, ctx)?);
    let j1 = J(1, 3, base, ctx)?.pow(4, ctx)?;
    let j2 = scaled(2, Monomial::ONE, &J(2, 6, base, ctx)?.pow(2, ctx)?).mul(&jtheta(q(4), base, ctx)?);
    let rhs = appell_m(nq(4), base, q(-4), ctx)?.add(&div(&j1, &j2)?);
    Ok((lhs, rhs))
}

fn lambda_zero_x(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    Ok((lambda_term(nq(4), nq(10), q(8), ctx)?, constant(0, ctx)))
}

fn lambda_zero_chi(ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    Ok((lambda_term(q(2), nq(10), q(4), ctx)?, constant(0, ctx)))
}

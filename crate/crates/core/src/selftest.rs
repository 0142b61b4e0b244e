//! Property suites run by `qmock selftest` and by the acceptance tests.
//!
//! Every check returns a [`Check`] instead of panicking so a single run can
//! report all failures. Random inputs come from fixed seeds; the parameter
//! samplers reject non-generic tuples by asking the engine itself, so the
//! predicate used for sampling is exactly the one the operations enforce.

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::appell::{appell_m, delta_term, g2, lambda_term, small_k};
use crate::error::{Error, Result};
use crate::expr::{Call, Expr, Func};
use crate::identity::{builtin_registry, lookup, prefactor_perturbations, verify_all_of, Identity, Status};
use crate::mock::{mt_chi, mt_x};
use crate::monomial::Monomial;
use crate::oracle;
use crate::series::{first_mismatch, EvalContext, LaurentSeries};
use crate::theta::{jtheta, J};

/// Smallest order the selftest accepts; the q^40 identities need it.
pub const MIN_ORDER: i64 = 40;

/// Tuples drawn per transformation law.
pub const LAW_SAMPLES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>, ok_detail: String) -> Self {
        let passed = failures.is_empty();
        let detail = if passed { ok_detail } else { failures.join("; ") };
        Self { name: name.into(), passed, detail }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

/// A deliberate defect for demonstrating that the suite can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Multiply the `index`-th monomial prefactor of the mtc-X right side by `q`.
    MtcXPrefactor(usize),
}

impl std::str::FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, index) = s.split_once(':').unwrap_or((s, "0"));
        match kind {
            "mtc-x-prefactor" => index
                .parse()
                .map(Fault::MtcXPrefactor)
                .map_err(|_| format!("bad fault index {index:?}")),
            _ => Err(format!("unknown fault {kind:?}; known: mtc-x-prefactor[:N]")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SelftestReport {
    pub order: i64,
    pub checks: Vec<Check>,
}

impl SelftestReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

/// Runs every suite at `order`.
pub fn run(order: i64, fault: Option<Fault>) -> Result<SelftestReport> {
    if order < MIN_ORDER {
        return Err(Error::BelowMinOrder { name: "selftest".into(), order, min_order: MIN_ORDER });
    }
    let ctx = EvalContext::new(order)?;
    let mut audit = Vec::new();
    let mut checks = vec![
        ring_axioms(&ctx),
        triple_product(&ctx),
        quasi_periodicity(&ctx),
        inversion_symmetry(&ctx),
        vanishing_sweep(&ctx),
    ];
    for law in Law::ALL {
        checks.push(law_samples(law, &ctx, &mut audit));
    }
    checks.push(oracle_equivalence(&ctx, &mut audit));
    let registry = match fault {
        Some(f) => faulty_registry(f),
        None => builtin_registry(),
    };
    checks.push(registry_check(&registry, &ctx, &mut audit));
    checks.push(denominator_audit(&audit));
    Ok(SelftestReport { order, checks })
}

fn faulty_registry(fault: Fault) -> Vec<Identity> {
    let mut registry = builtin_registry();
    let Fault::MtcXPrefactor(index) = fault;
    if let Some(id) = registry.iter_mut().find(|id| id.name == "mtc-X") {
        let variants = prefactor_perturbations(&id.rhs);
        if let Some(rhs) = variants.get(index % variants.len().max(1)) {
            id.rhs = rhs.clone();
            id.builtin = None;
        }
    }
    registry
}

fn compare(f: &LaurentSeries, g: &LaurentSeries) -> std::result::Result<i64, String> {
    let window = f.valid_to().min(g.valid_to());
    match first_mismatch(f, g, window) {
        Ok(None) => Ok(window),
        Ok(Some(m)) => Err(format!("differ at q^{}: {} vs {}", m.exponent, m.lhs, m.rhs)),
        Err(e) => Err(e.to_string()),
    }
}

fn random_series(rng: &mut ChaCha8Rng, len: usize) -> LaurentSeries {
    let lo = rng.gen_range(-3..=3);
    let coeffs = (0..len)
        .map(|_| {
            let num: i64 = rng.gen_range(-9..=9);
            let den: i64 = rng.gen_range(1..=4);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        })
        .collect();
    LaurentSeries::from_coeffs(lo, coeffs)
}

/// Associativity, commutativity and distributivity on seeded random series,
/// plus `f * f^-1 = 1`.
pub fn ring_axioms(ctx: &EvalContext) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut failures = Vec::new();
    let trials = 8;
    let len = (ctx.order() / 2).max(4) as usize;
    for trial in 0..trials {
        let f = random_series(&mut rng, len);
        let g = random_series(&mut rng, len);
        let h = random_series(&mut rng, len);
        let cases = [
            ("(f+g)+h = f+(g+h)", f.add(&g).add(&h), f.add(&g.add(&h))),
            ("f(g+h) = fg+fh", f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h))),
            ("fg = gf", f.mul(&g), g.mul(&f)),
            ("(fg)h = f(gh)", f.mul(&g).mul(&h), f.mul(&g.mul(&h))),
        ];
        for (law, a, b) in cases {
            if let Err(e) = compare(&a, &b) {
                failures.push(format!("trial {trial}: {law}: {e}"));
            }
        }
        match f.invert() {
            Ok(inv) => {
                let product = f.mul(&inv);
                let one = LaurentSeries::one(ctx).truncated(product.valid_to());
                if let Err(e) = compare(&product, &one) {
                    failures.push(format!("trial {trial}: f/f = 1: {e}"));
                }
            }
            Err(Error::ZeroDivisor) => {}
            Err(e) => failures.push(format!("trial {trial}: invert: {e}")),
        }
    }
    Check::new("series ring axioms", failures, format!("{trials} random triples"))
}

/// `(x, B)` pairs covering positive and negative arguments and bases.
pub fn theta_pairs() -> Vec<(Monomial, Monomial)> {
    let (q, n) = (Monomial::q, Monomial::neg_q);
    vec![
        (q(1), q(3)),
        (q(1), q(2)),
        (n(1), q(1)),
        (n(2), q(20)),
        (q(12), q(40)),
        (q(8), q(40)),
        (q(-32), q(40)),
        (n(6), q(20)),
        (n(2), n(10)),
        (q(4), n(10)),
        (q(-7), q(5)),
        (n(9), q(4)),
    ]
}

/// Product form of `j(x, B)` against the triple-product sum.
pub fn triple_product(ctx: &EvalContext) -> Check {
    let mut failures = Vec::new();
    let pairs = theta_pairs();
    for &(x, b) in &pairs {
        match jtheta(x, b, ctx) {
            Ok(product) => {
                let sum = oracle::theta_sum(x, b, product.valid_to());
                if let Err(e) = compare(&product, &sum) {
                    failures.push(format!("j({x}, {b}): {e}"));
                }
            }
            Err(e) => failures.push(format!("j({x}, {b}): {e}")),
        }
    }
    Check::new("triple product", failures, format!("{} pairs below q^{}", pairs.len(), ctx.order()))
}

/// `j(xB, B) = -x^-1 j(x, B)`.
pub fn quasi_periodicity(ctx: &EvalContext) -> Check {
    theta_relation(ctx, "quasi-periodicity", |x, b| (x * b, -x.inv()))
}

/// `j(x, B) = j(B/x, B)`.
pub fn inversion_symmetry(ctx: &EvalContext) -> Check {
    theta_relation(ctx, "inversion symmetry", |x, b| (b / x, Monomial::ONE))
}

fn theta_relation(
    ctx: &EvalContext,
    name: &str,
    relate: impl Fn(Monomial, Monomial) -> (Monomial, Monomial),
) -> Check {
    let mut failures = Vec::new();
    let pairs = theta_pairs();
    for &(x, b) in &pairs {
        let (y, factor) = relate(x, b);
        let result = jtheta(y, b, ctx).and_then(|lhs| Ok((lhs, jtheta(x, b, ctx)?.shift(factor))));
        match result {
            Ok((lhs, rhs)) => {
                if let Err(e) = compare(&lhs, &rhs) {
                    failures.push(format!("({x}, {b}): {e}"));
                }
            }
            Err(e) => failures.push(format!("({x}, {b}): {e}")),
        }
    }
    Check::new(name, failures, format!("{} pairs below q^{}", pairs.len(), ctx.order()))
}

/// `j(B^k, B)` is the exact zero series for `k` in `-3..=3`; nearby
/// arguments are not.
pub fn vanishing_sweep(ctx: &EvalContext) -> Check {
    let mut failures = Vec::new();
    let mut count = 0;
    for b in [Monomial::q(3), Monomial::q(40), Monomial::neg_q(10), Monomial::q(1)] {
        for k in -3..=3 {
            let x = b.pow(k);
            count += 1;
            match jtheta(x, b, ctx) {
                Ok(s) if s.is_zero_to_order() => {}
                Ok(_) => failures.push(format!("j({x}, {b}) is not zero")),
                Err(e) => failures.push(format!("j({x}, {b}): {e}")),
            }
            for near in [x * Monomial::q(1), -x] {
                if near.power_of(b).is_some() {
                    continue;
                }
                count += 1;
                match jtheta(near, b, ctx) {
                    Ok(s) if s.is_zero_to_order() => failures.push(format!("j({near}, {b}) vanished")),
                    Ok(s) => {
                        if let Err(e) = compare(&s, &oracle::theta_sum(near, b, s.valid_to())) {
                            failures.push(format!("j({near}, {b}): {e}"));
                        }
                    }
                    Err(e) => failures.push(format!("j({near}, {b}): {e}")),
                }
            }
        }
    }
    Check::new("exact vanishing", failures, format!("{count} arguments"))
}

/// One of the transformation laws for Appell-Lerch sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Law {
    /// `m(x,B,z) = x^-1 m(x^-1,B,z^-1)`
    Inversion,
    /// `m(x,B,z1) = m(x,B,z0) + Delta(x,B,z1,z0)`
    ZShift,
    /// `m(x,B,z) = m(-Bx^2,B^4,z^4) - B^-1 x m(-B^-1 x^2,B^4,z^4) - Lambda(x,B,z)`
    BaseChange,
    /// `g2(x,B) = -x^-1 m(x^-2 B, B^2, x)`
    G2,
    /// `x k(x,B) = m(-x^2,B,x^-2) + J1^4 / (2 J2^2 j(x^2,B))`
    KToM,
}

impl Law {
    pub const ALL: [Law; 5] = [Law::Inversion, Law::ZShift, Law::BaseChange, Law::G2, Law::KToM];

    pub fn name(self) -> &'static str {
        match self {
            Law::Inversion => "law m1 (inversion)",
            Law::ZShift => "law m2 (z-shift)",
            Law::BaseChange => "law m3 (base change)",
            Law::G2 => "law m4 (g2 as m)",
            Law::KToM => "law m5 (k as m)",
        }
    }

    /// Both sides at a parameter tuple `(x, B, z1, z0)`; laws ignore the
    /// parameters they do not use.
    pub fn sides(self, p: [Monomial; 4], ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
        let [x, b, z, z0] = p;
        Ok(match self {
            Law::Inversion => (appell_m(x, b, z, ctx)?, appell_m(x.inv(), b, z.inv(), ctx)?.shift(x.inv())),
            Law::ZShift => (appell_m(x, b, z, ctx)?, appell_m(x, b, z0, ctx)?.add(&delta_term(x, b, z, z0, ctx)?)),
            Law::BaseChange => {
                let (b4, z4) = (b.pow(4), z.pow(4));
                let first = appell_m(-b * x.pow(2), b4, z4, ctx)?;
                let second = appell_m(-b.inv() * x.pow(2), b4, z4, ctx)?.shift(b.inv() * x);
                (appell_m(x, b, z, ctx)?, first.sub(&second).sub(&lambda_term(x, b, z, ctx)?))
            }
            Law::G2 => (g2(x, b, ctx)?, appell_m(x.pow(-2) * b, b.pow(2), x, ctx)?.shift(-x.inv())),
            Law::KToM => {
                let j1 = J(1, 3, b, ctx)?.pow(4, ctx)?;
                let j2 = J(2, 6, b, ctx)?.pow(2, ctx)?.mul(&jtheta(x.pow(2), b, ctx)?);
                let two = crate::series::coefficient(2);
                let correction = j1.mul(&j2.scale(&two).invert()?);
                (small_k(x, b, ctx)?.shift(x), appell_m(-x.pow(2), b, x.pow(-2), ctx)?.add(&correction))
            }
        })
    }
}

/// Draws parameter tuples until `count` of them are generic for `law`.
pub fn sample_tuples(law: Law, count: usize, ctx: &EvalContext) -> Vec<[Monomial; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a3_0000 + law as u64);
    let mono = |rng: &mut ChaCha8Rng, lo: i64, hi: i64| {
        let exp = rng.gen_range(lo..=hi);
        if rng.gen_bool(0.5) {
            Monomial::neg_q(exp)
        } else {
            Monomial::q(exp)
        }
    };
    let probe = EvalContext::new(8).expect("positive order");
    let mut out: Vec<[Monomial; 4]> = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 10_000 {
        attempts += 1;
        let b = mono(&mut rng, 1, 9);
        let p = [mono(&mut rng, -9, 9), b, mono(&mut rng, -9, 9), mono(&mut rng, -9, 9)];
        if out.contains(&p) {
            continue;
        }
        match law.sides(p, &probe) {
            Err(Error::Genericity(_)) | Err(Error::ZeroDivisor) => continue,
            _ => {}
        }
        // keep tuples whose sides stay informative at the working order
        if let Ok((l, r)) = law.sides(p, ctx) {
            if l.valid_to().min(r.valid_to()) >= ctx.order() * 3 / 4 {
                out.push(p);
            }
        }
    }
    out
}

/// A law at [`LAW_SAMPLES`] rejection-sampled generic tuples. Both sides
/// are appended to `audit`.
pub fn law_samples(law: Law, ctx: &EvalContext, audit: &mut Vec<LaurentSeries>) -> Check {
    let tuples = sample_tuples(law, LAW_SAMPLES, ctx);
    let mut failures = Vec::new();
    if tuples.len() < LAW_SAMPLES {
        failures.push(format!("only {} generic tuples found", tuples.len()));
    }
    let mut windows = Vec::new();
    for p in &tuples {
        let label = format!("({}, {}, {}, {})", p[0], p[1], p[2], p[3]);
        match law.sides(*p, ctx) {
            Ok((l, r)) => {
                match compare(&l, &r) {
                    Ok(w) => windows.push(w),
                    Err(e) => failures.push(format!("{label}: {e}")),
                }
                audit.extend([l, r]);
            }
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    let least = windows.iter().min().copied().unwrap_or(0);
    Check::new(law.name(), failures, format!("{} tuples, all equal below q^{least} or beyond", tuples.len()))
}

fn collect_calls<'a>(e: &'a Expr, out: &mut Vec<&'a Call>) {
    match e {
        Expr::Call(c) => {
            out.push(c);
            c.args.iter().for_each(|a| collect_calls(a, out));
        }
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            collect_calls(a, out);
            collect_calls(b, out);
        }
        Expr::Neg(a) | Expr::Pow(a, _) => collect_calls(a, out),
        Expr::Int(_) | Expr::Mono(_) => {}
    }
}

/// Every distinct `m`, `k`, `g2`, `X` and `chi` call in the registry.
pub fn registry_sum_calls() -> Vec<Call> {
    let registry = builtin_registry();
    let mut calls = Vec::new();
    for id in &registry {
        collect_calls(&id.lhs, &mut calls);
        collect_calls(&id.rhs, &mut calls);
    }
    let mut out: Vec<Call> = Vec::new();
    for c in calls {
        let relevant = matches!(c.func, Func::M | Func::K | Func::G2 | Func::X | Func::Chi);
        if relevant && !out.iter().any(|o| o == c) {
            out.push(c.clone());
        }
    }
    out
}

/// Engine and oracle expansions of one sum call, compared bit for bit.
pub fn oracle_pair(call: &Call, ctx: &EvalContext) -> Result<(LaurentSeries, LaurentSeries)> {
    let a = |i: usize| call.args[i].as_monomial().expect("monomial argument");
    let order = ctx.order();
    let engine = match call.func {
        Func::M => appell_m(a(0), a(1), a(2), ctx)?,
        Func::K => small_k(a(0), a(1), ctx)?,
        Func::G2 => g2(a(0), a(1), ctx)?,
        Func::X => mt_x(a(0), ctx)?,
        Func::Chi => mt_chi(a(0), ctx)?,
        _ => unreachable!("not a summation"),
    };
    // the oracle gets the engine's full window, which may exceed `order`
    let reach = engine.valid_to().max(order);
    let reference = match call.func {
        Func::M => oracle::appell_m(a(0), a(1), a(2), reach),
        Func::K => oracle::small_k(a(0), a(1), reach),
        Func::G2 => oracle::g2(a(0), a(1), reach),
        Func::X => oracle::mt_x(a(0), reach),
        Func::Chi => oracle::mt_chi(a(0), reach),
        _ => unreachable!(),
    };
    Ok((engine, reference))
}

/// Engine sums against the brute-force oracle on every registry call.
pub fn oracle_equivalence(ctx: &EvalContext, audit: &mut Vec<LaurentSeries>) -> Check {
    let calls = registry_sum_calls();
    let mut failures = Vec::new();
    for call in &calls {
        let label = crate::expr::render(&Expr::Call(call.clone()));
        match oracle_pair(call, ctx) {
            Ok((engine, reference)) => {
                if let Err(e) = compare(&engine, &reference) {
                    failures.push(format!("{label}: {e}"));
                }
                audit.extend([engine, reference]);
            }
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    Check::new("oracle equivalence", failures, format!("{} registry calls below q^{}", calls.len(), ctx.order()))
}

/// Verifies a registry and records every series it produced for the
/// denominator audit. Also requires the two Lambda entries to be exactly
/// zero on both sides.
pub fn registry_check(registry: &[Identity], ctx: &EvalContext, audit: &mut Vec<LaurentSeries>) -> Check {
    let mut failures = Vec::new();
    match verify_all_of(registry, ctx) {
        Ok(results) => {
            for v in &results {
                if v.report.status != Status::Equal {
                    failures.push(v.report.plain());
                }
                audit.extend(v.lhs.iter().cloned());
                audit.extend(v.rhs.iter().cloned());
            }
            for name in ["lambda-zero-X", "lambda-zero-chi"] {
                let zero = results.iter().find(|v| v.report.name == name).is_some_and(|v| {
                    v.lhs.as_ref().is_some_and(LaurentSeries::is_zero_to_order)
                        && v.rhs.as_ref().is_some_and(LaurentSeries::is_zero_to_order)
                });
                if lookup(registry, name).is_some() && !zero {
                    failures.push(format!("{name}: sides are not the exact zero series"));
                }
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    Check::new("registry", failures, format!("{} identities equal at order {}", registry.len(), ctx.order()))
}

/// Every stored coefficient has a power-of-two denominator.
pub fn denominator_audit(series: &[LaurentSeries]) -> Check {
    let bad = series.iter().filter(|s| !s.has_dyadic_denominators()).count();
    let failures = if bad == 0 { vec![] } else { vec![format!("{bad} series with non-dyadic denominators")] };
    Check::new("dyadic denominators", failures, format!("{} series audited", series.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_order() {
        assert!(matches!(run(5, None), Err(Error::BelowMinOrder { .. })));
    }

    #[test]
    fn fault_names_parse() {
        assert_eq!("mtc-x-prefactor".parse(), Ok(Fault::MtcXPrefactor(0)));
        assert_eq!("mtc-x-prefactor:2".parse(), Ok(Fault::MtcXPrefactor(2)));
        assert!("nonsense".parse::<Fault>().is_err());
    }

    #[test]
    fn samplers_find_generic_tuples() {
        let ctx = EvalContext::new(40).unwrap();
        for law in Law::ALL {
            assert_eq!(sample_tuples(law, LAW_SAMPLES, &ctx).len(), LAW_SAMPLES, "{}", law.name());
        }
    }

    #[test]
    fn registry_calls_cover_every_sum_kind() {
        let calls = registry_sum_calls();
        for f in [Func::M, Func::K, Func::G2, Func::X, Func::Chi] {
            assert!(calls.iter().any(|c| c.func == f), "{}", f.name());
        }
    }
}

//! Naive reference implementations used to cross-check the engine.
//!
//! Nothing here touches the `series`, `theta` or `appell` arithmetic: terms
//! live in a `BTreeMap`, thetas come from the bilateral triple-product sum
//! rather than the product, every geometric denominator is inverted by plain
//! long division, and summation ranges are fixed generous windows instead of
//! valuation-driven walks. Monomials are handled as raw `(sign, exponent)`
//! pairs.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use crate::monomial::Monomial;
use crate::series::LaurentSeries;

type Q = BigRational;

/// Raw signed power `(sign, exp)`.
type Raw = (i64, i64);

fn raw(m: Monomial) -> Raw {
    (m.sign(), m.exp())
}

fn raw_pow((s, e): Raw, k: i64) -> Raw {
    (if s < 0 && k % 2 != 0 { -1 } else { 1 }, e * k)
}

fn raw_mul(a: Raw, b: Raw) -> Raw {
    (a.0 * b.0, a.1 + b.1)
}

/// Truncated Laurent series known below `prec`.
#[derive(Clone, Debug)]
pub struct Trunc {
    terms: BTreeMap<i64, Q>,
    prec: i64,
}

impl Trunc {
    fn single(c: i64, e: i64, prec: i64) -> Self {
        let mut terms = BTreeMap::new();
        if e < prec && c != 0 {
            terms.insert(e, Q::from_integer(c.into()));
        }
        Self { terms, prec }
    }

    fn zero(prec: i64) -> Self {
        Self { terms: BTreeMap::new(), prec }
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }

    fn add_term(&mut self, e: i64, c: Q) {
        if e >= self.prec || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn plus(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.prec.min(other.prec));
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn scaled(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.prec);
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    fn val(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    fn times(&self, other: &Self) -> Self {
        let va = self.val().unwrap_or(self.prec);
        let vb = other.val().unwrap_or(other.prec);
        let prec = (self.prec + vb).min(other.prec + va);
        let mut out = Self::zero(prec);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                if ea + eb < prec {
                    out.add_term(ea + eb, ca * cb);
                }
            }
        }
        out
    }

    /// Long division `1 / self`.
    fn recip(&self) -> Option<Self> {
        let v = self.val()?;
        let lead = self.terms[&v].clone();
        let prec = self.prec - 2 * v;
        let mut g: BTreeMap<i64, Q> = BTreeMap::new();
        for e in -v..prec {
            let mut acc = if e == -v { Q::one() } else { Q::zero() };
            for (fe, fc) in self.terms.range(v + 1..) {
                let back = e - (fe - v);
                if back < -v {
                    break;
                }
                if let Some(gc) = g.get(&back) {
                    acc -= fc * gc;
                }
            }
            let ge = acc / &lead;
            if !ge.is_zero() {
                g.insert(e, ge);
            }
        }
        Some(Self { terms: g, prec })
    }

    fn truncate(mut self, prec: i64) -> Self {
        self.terms.retain(|e, _| *e < prec);
        self.prec = self.prec.min(prec);
        self
    }

    pub fn into_series(self) -> LaurentSeries {
        let lo = self.val().unwrap_or(self.prec).min(self.prec);
        let mut coeffs = vec![Q::zero(); (self.prec - lo).max(0) as usize];
        for (e, c) in self.terms {
            coeffs[(e - lo) as usize] = c;
        }
        LaurentSeries::from_coeffs(lo, coeffs)
    }
}

/// Precision standing in for "exact" on monomials.
const EXACT: i64 = 1 << 40;

fn binomial(u: Raw, prec: i64) -> Trunc {
    Trunc::single(1, 0, prec).plus(&Trunc::single(-u.0, u.1, prec))
}

fn margin(exps: &[i64]) -> i64 {
    4 * exps.iter().map(|e| e.abs()).sum::<i64>() + 10
}

/// `sum_n (-1)^n q^(n(3n-1)/2)`, the Euler product by the pentagonal
/// number theorem.
pub fn pentagonal(order: i64) -> LaurentSeries {
    let mut t = Trunc::zero(order);
    for n in -order - 2..=order + 2 {
        let e = n * (3 * n - 1) / 2;
        t.add_term(e, Q::from_integer(if n % 2 == 0 { 1 } else { -1 }.into()));
    }
    t.into_series()
}

fn theta_sum_raw(x: Raw, base: Raw, prec: i64) -> Trunc {
    let mut t = Trunc::zero(prec);
    let reach = 2 * (x.1.abs() + prec.abs()) + 3;
    for n in -reach..=reach {
        let (s, e) = raw_mul(raw_pow(base, n * (n - 1) / 2), raw_pow(x, n));
        let sign = if n % 2 == 0 { s } else { -s };
        t.add_term(e, Q::from_integer(sign.into()));
    }
    t
}

/// `j(x, B)` through the Jacobi triple product sum
/// `sum_n (-1)^n B^(n(n-1)/2) x^n`.
pub fn theta_sum(x: Monomial, base: Monomial, order: i64) -> LaurentSeries {
    theta_sum_raw(raw(x), raw(base), order).into_series()
}

/// `(a; B)_n` by multiplying out the factors.
pub fn pochhammer(a: Monomial, base: Monomial, n: u64, order: i64) -> LaurentSeries {
    poch_raw(raw(a), raw(base), n, order).into_series()
}

fn poch_raw(a: Raw, base: Raw, n: u64, prec: i64) -> Trunc {
    let mut acc = Trunc::single(1, 0, prec);
    for k in 0..n as i64 {
        acc = acc.times(&binomial(raw_mul(a, raw_pow(base, k)), prec));
    }
    acc
}

/// Sum of `num(n) / (1 - den(n))` over `n` in `-reach..=reach`, skipping
/// terms whose expansion starts at or beyond `prec`.
fn naive_sum(prec: i64, reach: i64, term: impl Fn(i64) -> (Raw, Raw)) -> Trunc {
    let mut total = Trunc::zero(prec);
    for n in -reach..=reach {
        let (num, den) = term(n);
        if num.1 + (-den.1).max(0) >= prec {
            continue;
        }
        let geo = binomial(den, prec - num.1 + den.1.abs()).recip().expect("generic parameters");
        let shifted = geo.times(&Trunc::single(num.0, num.1, EXACT));
        total = total.plus(&shifted.truncate(prec));
    }
    total
}

fn finish(sum: Trunc, norm: Trunc, order: i64) -> LaurentSeries {
    sum.times(&norm.recip().expect("nonzero normaliser")).truncate(order).into_series()
}

/// `m(x, B, z)` by brute force.
pub fn appell_m(x: Monomial, base: Monomial, z: Monomial, order: i64) -> LaurentSeries {
    let (x, b, z) = (raw(x), raw(base), raw(z));
    let prec = order + margin(&[x.1, b.1, z.1]);
    let reach = prec + x.1.abs() + z.1.abs() + 2;
    let sum = naive_sum(prec, reach, |r| {
        let num = raw_mul(raw_mul((if r % 2 == 0 { 1 } else { -1 }, 0), raw_pow(b, r * (r - 1) / 2)), raw_pow(z, r));
        let den = raw_mul(raw_mul(raw_pow(b, r - 1), x), z);
        (num, den)
    });
    finish(sum, theta_sum_raw(z, b, prec), order)
}

/// `k(x, B)` by brute force.
pub fn small_k(x: Monomial, base: Monomial, order: i64) -> LaurentSeries {
    let (x, b) = (raw(x), raw(base));
    let prec = order + margin(&[x.1, b.1]);
    let reach = prec + x.1.abs() + 2;
    let sum = naive_sum(prec, reach, |n| (raw_pow(b, n * (2 * n + 1)), raw_mul(raw_pow(b, 2 * n), raw_pow(x, 2))));
    let norm = theta_sum_raw((-b.0, b.1), raw_pow(b, 4), prec).times(&Trunc::single(x.0, x.1, EXACT));
    finish(sum, norm, order)
}

/// `g2(x, B)` by brute force.
pub fn g2(x: Monomial, base: Monomial, order: i64) -> LaurentSeries {
    let (x, b) = (raw(x), raw(base));
    let prec = order + margin(&[x.1, b.1]);
    let reach = prec + x.1.abs() + 2;
    let sum = naive_sum(prec, reach, |n| {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        (raw_mul((sign, 0), raw_pow(b, n * (n + 1))), raw_mul(x, raw_pow(b, n)))
    });
    finish(sum, theta_sum_raw(b, raw_pow(b, 2), prec), order)
}

fn eulerian(base: Monomial, order: i64, exponent: impl Fn(i64) -> i64, extra: u64) -> LaurentSeries {
    let b = raw(base);
    let mut total = Trunc::zero(order);
    let mut n = 0i64;
    while exponent(n) * b.1 < order {
        let den = poch_raw((-b.0, b.1), b, 2 * n as u64 + extra, order);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let (s, e) = raw_pow(b, exponent(n));
        let term = den.recip().unwrap().times(&Trunc::single(sign * s, e, order));
        total = total.plus(&term);
        n += 1;
    }
    total.into_series()
}

/// `X(B)` by summing each term with a freshly inverted denominator.
pub fn mt_x(base: Monomial, order: i64) -> LaurentSeries {
    eulerian(base, order, |n| n * n, 0)
}

/// `chi(B)` likewise.
pub fn mt_chi(base: Monomial, order: i64) -> LaurentSeries {
    eulerian(base, order, |n| (n + 1) * (n + 1), 1)
}

/// Scales a series by a rational, for assembling oracle-side identities.
pub fn scale(s: &LaurentSeries, c: &Q) -> LaurentSeries {
    let mut t = Trunc::zero(s.valid_to());
    for (e, x) in s.terms() {
        t.add_term(e, x.clone());
    }
    t.scaled(c).into_series()
}

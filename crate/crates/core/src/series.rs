//! Truncated Laurent series in `q` with exact rational coefficients.
//!
//! A [`LaurentSeries`] stores a dense window of coefficients starting at
//! exponent `lo` and carries its own validity bound `valid_to`: coefficients
//! of `q^e` are known exactly for `e < valid_to` and unknown from there on.
//! Every operation propagates that bound honestly, so multiplying by `q^-4`
//! loses four orders of trusted information instead of silently inventing
//! them.

use std::cmp::min;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Exact rational coefficient.
pub type Coefficient = BigRational;

pub fn coefficient(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Render a coefficient as `p/q` in lowest terms, `p` for integers.
pub fn render_coefficient(c: &Coefficient) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Working order for an evaluation: coefficients of `q^e` with `e < order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EvalContext {
    order: i64,
}

impl EvalContext {
    pub fn new(order: i64) -> Result<Self> {
        if order < 1 {
            return Err(Error::InvalidOrder(order));
        }
        Ok(Self { order })
    }

    pub fn order(&self) -> i64 {
        self.order
    }
}

/// The first exponent where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: Coefficient,
    pub rhs: Coefficient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    lo: i64,
    coeffs: Vec<Coefficient>,
    valid_to: i64,
}

impl LaurentSeries {
    /// The zero series, known to be zero below `valid_to`.
    pub fn zero(valid_to: i64) -> Self {
        Self { lo: valid_to, coeffs: Vec::new(), valid_to }
    }

    /// Coefficient `c` at `q^e`, valid below `ctx.order()`.
    pub fn monomial(c: Coefficient, e: i64, ctx: &EvalContext) -> Self {
        let valid_to = ctx.order();
        if e >= valid_to {
            return Self::zero(valid_to);
        }
        let mut coeffs = vec![Coefficient::zero(); (valid_to - e) as usize];
        coeffs[0] = c;
        Self { lo: e, coeffs, valid_to }
    }

    pub fn one(ctx: &EvalContext) -> Self {
        Self::monomial(Coefficient::one(), 0, ctx)
    }

    pub fn from_monomial(m: Monomial, ctx: &EvalContext) -> Self {
        Self::monomial(coefficient(m.sign()), m.exp(), ctx)
    }

    /// Dense window starting at `lo`; valid exactly through the supplied
    /// coefficients.
    pub fn from_coeffs(lo: i64, coeffs: Vec<Coefficient>) -> Self {
        let valid_to = lo + coeffs.len() as i64;
        Self { lo, coeffs, valid_to }
    }

    pub fn from_ints(lo: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(lo, coeffs.iter().map(|&c| coefficient(c)).collect())
    }

    /// Pads with zeros or cuts so that the window ends at `valid_to`.
    pub(crate) fn from_parts(lo: i64, mut coeffs: Vec<Coefficient>, valid_to: i64) -> Self {
        if valid_to <= lo {
            return Self::zero(valid_to);
        }
        coeffs.resize((valid_to - lo) as usize, Coefficient::zero());
        Self { lo, coeffs, valid_to }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn valid_to(&self) -> i64 {
        self.valid_to
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Coefficient of `q^e`, or `None` if `e` lies at or beyond the validity
    /// bound.
    pub fn coeff(&self, e: i64) -> Option<Coefficient> {
        if e >= self.valid_to {
            None
        } else if e < self.lo {
            Some(Coefficient::zero())
        } else {
            Some(self.coeffs[(e - self.lo) as usize].clone())
        }
    }

    /// Nonzero terms as `(exponent, coefficient)` in ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Coefficient)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Exponent of the lowest nonzero coefficient inside the window.
    pub fn valuation(&self) -> Option<i64> {
        self.terms().next().map(|(e, _)| e)
    }

    pub fn is_zero_to_order(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops known leading zeros so that `lo` is the true valuation.
    pub fn trimmed(&self) -> Self {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            None => Self::zero(self.valid_to),
            Some(0) => self.clone(),
            Some(k) => Self {
                lo: self.lo + k as i64,
                coeffs: self.coeffs[k..].to_vec(),
                valid_to: self.valid_to,
            },
        }
    }

    /// Forgets everything at or beyond `bound`.
    pub fn truncated(&self, bound: i64) -> Self {
        if bound >= self.valid_to {
            return self.clone();
        }
        if bound <= self.lo {
            return Self::zero(bound);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate((bound - self.lo) as usize);
        Self { lo: self.lo, coeffs, valid_to: bound }
    }

    pub fn add(&self, other: &Self) -> Self {
        let valid_to = min(self.valid_to, other.valid_to);
        let lo = min(min(self.lo, other.lo), valid_to);
        let mut coeffs = vec![Coefficient::zero(); (valid_to - lo) as usize];
        for s in [self, other] {
            for (i, c) in s.coeffs.iter().enumerate() {
                let e = s.lo + i as i64;
                if e >= valid_to {
                    break;
                }
                if !c.is_zero() {
                    coeffs[(e - lo) as usize] += c;
                }
            }
        }
        Self { lo, coeffs, valid_to }
    }

    pub fn neg(&self) -> Self {
        Self {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            valid_to: self.valid_to,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            valid_to: self.valid_to,
        }
    }

    /// Exact multiplication by `±q^s`: the window and bound move together.
    pub fn shift(&self, m: Monomial) -> Self {
        let s = self.shifted(m.exp());
        if m.is_negative() {
            s.neg()
        } else {
            s
        }
    }

    fn shifted(&self, by: i64) -> Self {
        Self { lo: self.lo + by, coeffs: self.coeffs.clone(), valid_to: self.valid_to + by }
    }

    /// Cauchy product. The result is valid below
    /// `min(f.valid_to + g.lo, g.valid_to + f.lo)` after trimming leading
    /// zeros from both factors.
    pub fn mul(&self, other: &Self) -> Self {
        let f = self.trimmed();
        let g = other.trimmed();
        let lo = f.lo + g.lo;
        let valid_to = min(f.valid_to + g.lo, g.valid_to + f.lo);
        if f.coeffs.is_empty() || g.coeffs.is_empty() {
            return Self::zero(valid_to);
        }
        let len = (valid_to - lo) as usize;
        let (fi, fd) = integer_parts(&f.coeffs);
        let (gi, gd) = integer_parts(&g.coeffs);
        let prod = convolve(&fi, &gi, len);
        let den = fd * gd;
        let coeffs = prod.into_iter().map(|n| BigRational::new(n, den.clone())).collect();
        Self { lo, coeffs, valid_to }
    }

    /// Multiplicative inverse. If the valuation is `v` and the series is
    /// valid below `t`, the inverse starts at `-v` and is valid below
    /// `t - 2v`.
    pub fn invert(&self) -> Result<Self> {
        let f = self.trimmed();
        if f.coeffs.is_empty() {
            return Err(Error::ZeroDivisor);
        }
        let len = f.coeffs.len();
        let (fi, d) = integer_parts(&f.coeffs);
        let lead = fi[0].clone();
        let h = inverse_numerators(&fi, len);
        // g_n = d * h_n / lead^(n+1)
        let mut coeffs = Vec::with_capacity(len);
        let mut lead_pow = lead.clone();
        for hn in h {
            coeffs.push(BigRational::new(&d * hn, lead_pow.clone()));
            lead_pow *= &lead;
        }
        Ok(Self { lo: -f.lo, coeffs, valid_to: -f.lo + len as i64 })
    }

    /// Integer power by repeated squaring; negative powers invert first.
    pub fn pow(&self, k: i64, ctx: &EvalContext) -> Result<Self> {
        let mut base = if k < 0 { self.invert()? } else { self.clone() };
        let mut n = k.unsigned_abs();
        let mut acc = Self::one(ctx);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Multiplies by the binomial `1 - u`.
    pub fn mul_binomial(&self, u: Monomial) -> Self {
        let (s, e) = (u.sign(), u.exp());
        let lo = min(self.lo, self.lo + e);
        let valid_to = min(self.valid_to, self.valid_to + e);
        if valid_to <= lo {
            return Self::zero(valid_to);
        }
        let mut coeffs = vec![Coefficient::zero(); (valid_to - lo) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.lo + i as i64;
            if k < valid_to {
                coeffs[(k - lo) as usize] += c;
            }
            let shifted = k + e;
            if shifted < valid_to {
                let slot = &mut coeffs[(shifted - lo) as usize];
                if s == 1 {
                    *slot -= c;
                } else {
                    *slot += c;
                }
            }
        }
        Self { lo, coeffs, valid_to }
    }

    /// Divides by the binomial `1 - u`.
    pub fn div_binomial(&self, u: Monomial) -> Result<Self> {
        match u.exp() {
            0 if !u.is_negative() => Err(Error::ZeroDivisor),
            0 => Ok(self.scale(&BigRational::new(1.into(), 2.into()))),
            e if e < 0 => self.shift(-u.inv()).div_binomial(u.inv()),
            e => {
                // g_k = h_k + s g_{k-e}
                let e = e as usize;
                let mut coeffs = self.coeffs.clone();
                for k in e..coeffs.len() {
                    let prev = coeffs[k - e].clone();
                    if prev.is_zero() {
                        continue;
                    }
                    if u.is_negative() {
                        coeffs[k] -= prev;
                    } else {
                        coeffs[k] += prev;
                    }
                }
                Ok(Self { lo: self.lo, coeffs, valid_to: self.valid_to })
            }
        }
    }

    /// True when every coefficient has a power-of-two denominator.
    pub fn has_dyadic_denominators(&self) -> bool {
        self.coeffs.iter().all(|c| is_power_of_two(c.denom()))
    }
}

fn is_power_of_two(n: &BigInt) -> bool {
    n.is_positive() && n.trailing_zeros().map(|tz| n >> tz).is_some_and(|odd| odd.is_one())
}

/// Compares `f` and `g` on every exponent below `upto`.
pub fn first_mismatch(
    f: &LaurentSeries,
    g: &LaurentSeries,
    upto: i64,
) -> Result<Option<Mismatch>> {
    let available = min(f.valid_to, g.valid_to);
    if upto > available {
        return Err(Error::InsufficientPrecision { requested: upto, available });
    }
    let start = min(f.lo, g.lo);
    for e in start..upto {
        let (a, b) = (f.coeff(e).unwrap(), g.coeff(e).unwrap());
        if a != b {
            return Ok(Some(Mismatch { exponent: e, lhs: a, rhs: b }));
        }
    }
    Ok(None)
}

/// Splits rationals into integer numerators over their common denominator.
fn integer_parts(coeffs: &[Coefficient]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| if c.denom() == &den { c.numer().clone() } else { c.numer() * (&den / c.denom()) })
        .collect();
    (nums, den)
}

fn max_bits(v: &[BigInt]) -> u64 {
    v.iter().map(|x| x.bits()).max().unwrap_or(0)
}

/// Truncated schoolbook convolution, first `len` coefficients.
fn convolve(f: &[BigInt], g: &[BigInt], len: usize) -> Vec<BigInt> {
    let terms = min(min(f.len(), g.len()), len).max(1) as u64;
    let headroom = 64 - terms.leading_zeros() as u64;
    if max_bits(f) + max_bits(g) + headroom < 126 {
        let fs: Vec<i128> = f.iter().map(|x| x.to_i128().unwrap()).collect();
        let gs: Vec<i128> = g.iter().map(|x| x.to_i128().unwrap()).collect();
        let mut acc = vec![0i128; len];
        for (a, &fa) in fs.iter().enumerate().take(len) {
            if fa == 0 {
                continue;
            }
            let upper = min(gs.len(), len - a);
            for (slot, &gb) in acc[a..a + upper].iter_mut().zip(&gs[..upper]) {
                *slot += fa * gb;
            }
        }
        return acc.into_iter().map(BigInt::from).collect();
    }
    let mut acc = vec![BigInt::zero(); len];
    for (a, fa) in f.iter().enumerate().take(len) {
        if fa.is_zero() {
            continue;
        }
        let upper = min(g.len(), len - a);
        for (slot, gb) in acc[a..a + upper].iter_mut().zip(&g[..upper]) {
            if !gb.is_zero() {
                *slot += fa * gb;
            }
        }
    }
    acc
}

/// Numerators `h_n` of the inverse of an integer series `f` with leading
/// coefficient `c`: `1/f = sum h_n q^n / c^(n+1)`, obeying
/// `h_n = -sum_{k=1..n} f_k c^(k-1) h_{n-k}`.
fn inverse_numerators(f: &[BigInt], len: usize) -> Vec<BigInt> {
    let lead = &f[0];
    if lead.abs().is_one() {
        if let Some(h) = inverse_numerators_small(f, len) {
            return h.into_iter().map(BigInt::from).collect();
        }
    }
    let mut weights = Vec::with_capacity(len);
    weights.push(BigInt::zero());
    let mut lead_pow = BigInt::one();
    for fk in f.iter().take(len).skip(1) {
        weights.push(fk * &lead_pow);
        lead_pow *= lead;
    }
    let mut h: Vec<BigInt> = Vec::with_capacity(len);
    h.push(BigInt::one());
    for n in 1..len {
        let mut acc = BigInt::zero();
        for k in 1..=n {
            if !weights[k].is_zero() {
                acc += &weights[k] * &h[n - k];
            }
        }
        h.push(-acc);
    }
    h
}

/// `i128` fast path for a unit leading coefficient; `None` on overflow.
fn inverse_numerators_small(f: &[BigInt], len: usize) -> Option<Vec<i128>> {
    let lead: i128 = f[0].to_i128()?;
    let weights: Vec<i128> = f
        .iter()
        .take(len)
        .enumerate()
        .map(|(k, x)| {
            let v = x.to_i128()?;
            Some(if k >= 2 && lead == -1 && k % 2 == 0 { -v } else { v })
        })
        .collect::<Option<_>>()?;
    let mut h = Vec::with_capacity(len);
    h.push(1i128);
    for n in 1..len {
        let mut acc: i128 = 0;
        for k in 1..=n {
            if weights[k] != 0 {
                acc = acc.checked_add(weights[k].checked_mul(h[n - k])?)?;
            }
        }
        h.push(acc.checked_neg()?);
    }
    Some(h)
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::add(self, rhs)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::sub(self, rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: Self) -> LaurentSeries {
        LaurentSeries::mul(self, rhs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries::neg(self)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            if !unit || e == 0 {
                f.write_str(&render_coefficient(&mag))?;
            }
            match e {
                0 => {}
                _ if !unit => write!(f, "*{}", Monomial::q(e))?,
                _ => write!(f, "{}", Monomial::q(e))?,
            }
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(q^{})", self.valid_to)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: i64) -> EvalContext {
        EvalContext::new(n).unwrap()
    }

    fn geometric(n: i64) -> LaurentSeries {
        LaurentSeries::from_ints(0, &vec![1; n as usize])
    }

    #[test]
    fn monomial_series_examples() {
        let c = ctx(10);
        let one = LaurentSeries::one(&c);
        assert_eq!(one.coeff(0), Some(coefficient(1)));
        assert_eq!(one.valid_to(), 10);

        let m = LaurentSeries::monomial(coefficient(-2), 1, &c);
        assert_eq!(m.terms().collect::<Vec<_>>(), vec![(1, &coefficient(-2))]);

        let m = LaurentSeries::monomial(coefficient(2), -4, &c);
        assert_eq!(m.lo(), -4);
        assert_eq!(m.coeff(-4), Some(coefficient(2)));
        assert_eq!(m.valid_to(), 10);
    }

    #[test]
    fn monomial_beyond_order_is_zero() {
        let m = LaurentSeries::monomial(coefficient(3), 12, &ctx(10));
        assert!(m.is_zero_to_order());
        assert_eq!(m.valid_to(), 10);
    }

    #[test]
    fn add_examples() {
        let a = LaurentSeries::from_ints(0, &[1, 1, 0, 0]);
        let b = LaurentSeries::from_ints(0, &[1, -1, 0, 0]);
        let s = &a + &b;
        assert_eq!(s.terms().collect::<Vec<_>>(), vec![(0, &coefficient(2))]);

        let z = LaurentSeries::zero(4);
        assert_eq!(&a + &z, a);

        let c = LaurentSeries::from_ints(-1, &[1, 0, 0, 0, 0]);
        let d = LaurentSeries::from_ints(1, &[1, 0, 0]);
        let s = &c + &d;
        assert_eq!(s.lo(), -1);
        assert_eq!(s.valid_to(), 4);
        assert_eq!(
            s.terms().map(|(e, _)| e).collect::<Vec<_>>(),
            vec![-1, 1]
        );
    }

    #[test]
    fn mul_examples() {
        let one_minus_q = LaurentSeries::from_ints(0, &[1, -1, 0, 0, 0, 0, 0, 0]);
        let p = &one_minus_q * &geometric(8);
        assert_eq!(p.valid_to(), 8);
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(0, &coefficient(1))]);

        let f = LaurentSeries::from_ints(0, &[3, 1, 4, 1, 5]);
        assert_eq!(&f * &LaurentSeries::one(&ctx(5)), f);

        let shifted = &LaurentSeries::monomial(coefficient(1), -4, &ctx(5)) * &f;
        assert_eq!(shifted.lo(), -4);
        assert_eq!(shifted.valid_to(), 1);
        assert_eq!(shifted.coeff(-2), Some(coefficient(4)));
        assert_eq!(shifted.coeff(0), Some(coefficient(5)));
    }

    #[test]
    fn invert_examples() {
        let one_minus_q = LaurentSeries::from_ints(0, &[1, -1, 0, 0, 0, 0]);
        assert_eq!(one_minus_q.invert().unwrap(), geometric(6));

        let two = LaurentSeries::from_ints(0, &[2]);
        assert_eq!(two.invert().unwrap().coeff(0), Some(BigRational::new(1.into(), 2.into())));

        let f = LaurentSeries::from_ints(2, &[1, -1, 0, 0, 0, 0]);
        let g = f.invert().unwrap();
        assert_eq!(g.lo(), -2);
        assert_eq!(g.coeffs(), geometric(6).coeffs());
        let back = &f * &g;
        assert_eq!(back.terms().collect::<Vec<_>>(), vec![(0, &coefficient(1))]);
        assert_eq!(back.valid_to(), 6);
    }

    #[test]
    fn invert_zero_is_an_error() {
        assert_eq!(LaurentSeries::zero(7).invert(), Err(Error::ZeroDivisor));
        assert_eq!(LaurentSeries::from_ints(0, &[0, 0, 0]).invert(), Err(Error::ZeroDivisor));
    }

    #[test]
    fn invert_non_unit_leading_coefficient() {
        // 1/(2 + q) = 1/2 - q/4 + q^2/8 - ...
        let f = LaurentSeries::from_ints(0, &[2, 1, 0, 0]);
        let g = f.invert().unwrap();
        let expected: Vec<_> = [(1, 2), (-1, 4), (1, 8), (-1, 16)]
            .iter()
            .map(|&(n, d)| BigRational::new(n.into(), d.into()))
            .collect();
        assert_eq!(g.coeffs(), expected.as_slice());
        assert!(g.has_dyadic_denominators());
    }

    #[test]
    fn first_mismatch_examples() {
        let mut g = vec![coefficient(0); 10];
        g[0] = coefficient(1);
        g[5] = coefficient(1);
        let g = LaurentSeries::from_coeffs(0, g);
        let mut f = vec![coefficient(0); 10];
        f[0] = coefficient(1);
        let f = LaurentSeries::from_coeffs(0, f);
        assert_eq!(
            first_mismatch(&f, &g, 10).unwrap(),
            Some(Mismatch { exponent: 5, lhs: coefficient(0), rhs: coefficient(1) })
        );
        assert_eq!(first_mismatch(&f, &g, 4).unwrap(), None);
        assert_eq!(first_mismatch(&f, &f, 10).unwrap(), None);
    }

    #[test]
    fn first_mismatch_refuses_beyond_validity() {
        let f = LaurentSeries::from_ints(0, &[1, 2, 3]);
        assert_eq!(
            first_mismatch(&f, &f, 5),
            Err(Error::InsufficientPrecision { requested: 5, available: 3 })
        );
    }

    #[test]
    fn binomials() {
        let g = geometric(6);
        let back = g.mul_binomial(Monomial::q(1));
        assert_eq!(back.terms().collect::<Vec<_>>(), vec![(0, &coefficient(1))]);
        let one = LaurentSeries::from_ints(0, &[1, 0, 0, 0, 0, 0]);
        assert_eq!(one.div_binomial(Monomial::q(1)).unwrap(), g);
        // 1/(1 - q^-2) = -q^2 - q^4 - ...
        let inv = one.div_binomial(Monomial::q(-2)).unwrap();
        assert_eq!(inv.lo(), 2);
        assert_eq!(
            inv.terms().map(|(e, c)| (e, c.to_integer().to_i64().unwrap())).collect::<Vec<_>>(),
            vec![(2, -1), (4, -1), (6, -1)]
        );
        assert_eq!(one.div_binomial(Monomial::ONE), Err(Error::ZeroDivisor));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let c = ctx(12);
        let f = LaurentSeries::from_ints(0, &[1, -1, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0]);
        let cube = &(&f * &f) * &f;
        assert_eq!(f.pow(3, &c).unwrap(), cube);
        assert_eq!(f.pow(0, &c).unwrap(), LaurentSeries::one(&c));
        let inv = f.pow(-2, &c).unwrap();
        let check = &inv * &(&f * &f);
        assert_eq!(check.terms().collect::<Vec<_>>(), vec![(0, &coefficient(1))]);
    }

    #[test]
    fn bigint_path_agrees_with_small_path() {
        let big: BigInt = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62);
        let f = LaurentSeries::from_coeffs(
            0,
            vec![BigRational::from_integer(big.clone()), coefficient(1), coefficient(-3)],
        );
        let g = LaurentSeries::from_ints(0, &[1, 1, 1]);
        let p = &f * &g;
        assert_eq!(p.coeff(2).unwrap().to_integer(), &big + BigInt::from(1 - 3));
    }

    #[test]
    fn dyadic_check() {
        assert!(is_power_of_two(&BigInt::from(1)));
        assert!(is_power_of_two(&BigInt::from(64)));
        assert!(!is_power_of_two(&BigInt::from(6)));
        assert!(!is_power_of_two(&BigInt::from(3)));
    }

    #[test]
    fn display_renders_terms() {
        let f = LaurentSeries::from_ints(-1, &[1, 0, -2, 1]);
        assert_eq!(f.to_string(), "q^-1 - 2*q + q^2 + O(q^3)");
    }
}

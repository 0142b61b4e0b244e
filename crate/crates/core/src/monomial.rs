//! Signed powers of `q`, the only argument shape accepted by the theta and
//! Appell-Lerch routines.

use std::fmt;
use std::ops::{Div, Mul, Neg};

/// `±q^exp`. There is no zero monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    negative: bool,
    exp: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { negative: false, exp: 0 };

    pub const fn new(negative: bool, exp: i64) -> Self {
        Self { negative, exp }
    }

    /// `q^exp`
    pub const fn q(exp: i64) -> Self {
        Self { negative: false, exp }
    }

    /// `-q^exp`
    pub const fn neg_q(exp: i64) -> Self {
        Self { negative: true, exp }
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    /// True for `+q^0`, the value that makes `1 - u` vanish.
    pub fn is_one(&self) -> bool {
        !self.negative && self.exp == 0
    }

    pub fn pow(self, k: i64) -> Self {
        Self { negative: self.negative && k.rem_euclid(2) == 1, exp: self.exp * k }
    }

    pub fn inv(self) -> Self {
        Self { negative: self.negative, exp: -self.exp }
    }

    /// Returns `k` with `self == base^k`, if any.
    pub fn power_of(self, base: Monomial) -> Option<i64> {
        if base.exp == 0 {
            return match (self.exp, base.negative) {
                (0, _) if !self.negative => Some(0),
                (0, true) => Some(1),
                _ => None,
            };
        }
        if self.exp % base.exp != 0 {
            return None;
        }
        let k = self.exp / base.exp;
        (base.pow(k) == self).then_some(k)
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial { negative: self.negative != rhs.negative, exp: self.exp + rhs.exp }
    }
}

impl Div for Monomial {
    type Output = Monomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Monomial) -> Monomial {
        self * rhs.inv()
    }
}

impl Neg for Monomial {
    type Output = Monomial;
    fn neg(self) -> Monomial {
        Monomial { negative: !self.negative, exp: self.exp }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        match self.exp {
            0 => f.write_str("1"),
            1 => f.write_str("q"),
            e => write!(f, "q^{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_track_sign() {
        let b = Monomial::neg_q(10);
        assert_eq!(b.pow(2), Monomial::q(20));
        assert_eq!(b.pow(3), Monomial::neg_q(30));
        assert_eq!(b.pow(-1), Monomial::neg_q(-10));
        assert_eq!(b.pow(0), Monomial::ONE);
    }

    #[test]
    fn power_of_detects_integral_powers() {
        assert_eq!(Monomial::q(80).power_of(Monomial::q(40)), Some(2));
        assert_eq!(Monomial::q(20).power_of(Monomial::neg_q(10)), Some(2));
        assert_eq!(Monomial::neg_q(20).power_of(Monomial::neg_q(10)), None);
        assert_eq!(Monomial::neg_q(-10).power_of(Monomial::neg_q(10)), Some(-1));
        assert_eq!(Monomial::ONE.power_of(Monomial::q(7)), Some(0));
        assert_eq!(Monomial::q(81).power_of(Monomial::q(40)), None);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::neg_q(4).to_string(), "-q^4");
        assert_eq!(Monomial::q(1).to_string(), "q");
        assert_eq!(Monomial::neg_q(0).to_string(), "-1");
        assert_eq!(Monomial::q(-32).to_string(), "q^-32");
    }
}

//! Double-double arithmetic: an unevaluated sum `hi + lo` of two `f64`
//! values carrying ≈31 significant decimal digits. Used to polish root
//! approximations well past `f64` precision without an arbitrary-precision
//! float dependency. Implements [`num_traits::Num`], so `Complex<Dd>` gets
//! the full complex field for free.
//!
//! The error-free transformations (`two_sum`, `quick_two_sum`, `two_prod`)
//! are the classical Dekker/Knuth building blocks; `two_prod` uses FMA.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{Num, One, Zero};

use crate::exactmath::{from_f64, to_f64};
use crate::Rational;

/// Unevaluated sum of two doubles, kept normalized: `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Error-free sum: `a + b = s + e` exactly.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free sum assuming `|a| ≥ |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Error-free product via fused multiply-add: `a·b = p + e` exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl Dd {
    /// Renormalizing constructor; the arguments need not be ordered.
    pub fn new(hi: f64, lo: f64) -> Self {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Correctly rounded double-double image of an exact rational: the
    /// leading double plus the rounded remainder (relative error ≈ 2⁻¹⁰⁶).
    pub fn from_rational(x: &Rational) -> Self {
        let hi = to_f64(x);
        if !hi.is_finite() {
            return Dd::from_f64(hi);
        }
        let lo = to_f64(&(x - from_f64(hi)));
        Dd::new(hi, lo)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    fn trunc(self) -> Self {
        let t = self.hi.trunc();
        if t == self.hi {
            Dd::new(t, self.lo.trunc())
        } else {
            Dd::from_f64(t)
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, rhs.hi);
        let p2 = p2 + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        // Three long-division digits in the quotient basis, then renormalize.
        let q1 = self.hi / rhs.hi;
        let r1 = self - rhs * Dd::from_f64(q1);
        let q2 = r1.hi / rhs.hi;
        let r2 = r1 - rhs * Dd::from_f64(q2);
        let q3 = r2.hi / rhs.hi;
        Dd::new(q1, q2) + Dd::from_f64(q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, rhs: Dd) -> Dd {
        self - rhs * (self / rhs).trunc()
    }
}

impl Zero for Dd {
    fn zero() -> Self {
        Dd { hi: 0.0, lo: 0.0 }
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for Dd {
    fn one() -> Self {
        Dd { hi: 1.0, lo: 0.0 }
    }
}

/// Error for [`Num::from_str_radix`] on [`Dd`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDdError;

impl Num for Dd {
    type FromStrRadixErr = ParseDdError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, ParseDdError> {
        if radix != 10 {
            return Err(ParseDdError);
        }
        s.parse::<f64>().map(Dd::from_f64).map_err(|_| ParseDdError)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exact rational image of a double-double (hi + lo is exact by design).
    fn exact(x: Dd) -> Rational {
        from_f64(x.hi) + from_f64(x.lo)
    }

    #[test]
    fn transformations_are_error_free() {
        for (a, b) in [(0.1, 0.2), (1e16, 1.0), (3.5, -7.25), (1e-300, 1e300)] {
            let (s, e) = two_sum(a, b);
            assert_eq!(from_f64(s) + from_f64(e), from_f64(a) + from_f64(b));
            let (p, e) = two_prod(a, b);
            assert_eq!(from_f64(p) + from_f64(e), from_f64(a) * from_f64(b));
        }
        // quick_two_sum needs |a| ≥ |b|.
        let (s, e) = quick_two_sum(1e16, 1.0);
        assert_eq!(from_f64(s) + from_f64(e), from_f64(1e16) + from_f64(1.0));
    }

    #[test]
    fn sum_keeps_sub_ulp_tail() {
        // 1e16 + 0.25 is not representable in one f64; the tail must survive.
        let x = Dd::from_f64(1e16) + Dd::from_f64(0.25);
        assert_eq!(exact(x), from_f64(1e16) + from_f64(0.25));
        assert_ne!(x.lo, 0.0);
    }

    #[test]
    fn remainder_and_truncation() {
        let x = Dd::from_f64(7.75);
        let y = Dd::from_f64(2.5);
        assert_eq!((x % y).to_f64(), 0.25);
        assert_eq!(((-x) % y).to_f64(), -0.25);
        assert_eq!(x.abs().to_f64(), 7.75);
        assert_eq!((-x).abs().to_f64(), 7.75);
    }

    #[test]
    fn parse_only_accepts_decimal() {
        assert_eq!(Dd::from_str_radix("2.5", 10).unwrap().to_f64(), 2.5);
        assert!(Dd::from_str_radix("ff", 16).is_err());
        assert!(Dd::from_str_radix("abc", 10).is_err());
    }
}

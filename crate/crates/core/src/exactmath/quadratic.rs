//! Exact arithmetic in a real quadratic extension `ℚ[√d]`.
//!
//! Used to verify closed-form threshold roots like `(1+√7)/2` or `2(3+√10)`
//! by substituting them into `q_m` and checking the result is *exactly* zero.
//! Values are pairs `a + b√d` with rational `a, b` and a fixed nonnegative
//! rational radicand `d`; for the zero test `a = b = 0` to be faithful, `d`
//! must not be the square of a rational (true of every radicand we use).

use num_traits::{One, Zero};

use super::approx_sqrt;
use crate::{RatPoly, Rational};

/// An element `a + b√d` of `ℚ[√d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadRat {
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
}

impl QuadRat {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        assert!(d >= Rational::zero(), "negative radicand");
        QuadRat { a, b, d }
    }

    /// The pure radical `√d`.
    pub fn sqrt_of(d: Rational) -> Self {
        QuadRat::new(Rational::zero(), Rational::one(), d)
    }

    /// Embeds a rational (radicand tags along for closure under ops).
    pub fn rational(a: Rational, d: Rational) -> Self {
        QuadRat::new(a, Rational::zero(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "mixed radicands");
        QuadRat::new(&self.a + &other.a, &self.b + &other.b, self.d.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d, "mixed radicands");
        QuadRat::new(
            &self.a * &other.a + &self.b * &other.b * &self.d,
            &self.a * &other.b + &self.b * &other.a,
            self.d.clone(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuadRat::new(&self.a * c, &self.b * c, self.d.clone())
    }

    /// Horner evaluation of a rational polynomial at this point.
    pub fn eval_poly(&self, p: &RatPoly) -> Self {
        let mut acc = QuadRat::rational(Rational::zero(), self.d.clone());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self).add(&QuadRat::rational(c.clone(), self.d.clone()));
        }
        acc
    }

    /// Rational approximation within `tol`, via [`approx_sqrt`].
    pub fn approx(&self, tol: &Rational) -> Rational {
        &self.a + &self.b * approx_sqrt(&self.d, tol)
    }
}

//! Scalar abstractions for the polynomial engine.
//!
//! [`Ring`] captures what dense polynomial arithmetic needs: exact equality,
//! the ring operations, and nothing about ordering or division. [`Field`] adds
//! division for remainder sequences (gcd, Sturm chains). Both carry blanket
//! impls, so `BigRational`, `f64`, `Complex<f64>`, the oracle's double-double
//! type, and nested polynomials all qualify automatically.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Commutative ring scalar: the minimum to add, subtract and multiply
/// polynomials and evaluate them by Horner's rule.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Embeds a small nonnegative integer into the ring (`1 + 1 + …`),
    /// used for derivative coefficients and factorial prefactors.
    fn from_usize(n: usize) -> Self {
        let mut acc = Self::zero();
        let mut add = Self::one();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc + add.clone();
            }
            add = add.clone() + add;
            n >>= 1;
        }
        acc
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Field scalar: a [`Ring`] with exact division, enabling polynomial long
/// division, gcd and Sturm remainder sequences.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}

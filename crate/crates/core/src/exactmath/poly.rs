//! Dense univariate polynomials generic over the scalar.
//!
//! Coefficients are stored ascending (index `i` holds the coefficient of
//! `x^i`) with no trailing zeros; the zero polynomial is the empty vector.
//! Ring arithmetic only needs [`Ring`] scalars, so the same type nests as
//! `Poly<Poly<T>>` for bivariate work; remainder sequences and gcds require
//! a [`Field`] scalar.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Field, Ring};

/// Dense univariate polynomial; see the module docs for representation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    /// The constant polynomial `c` (zero polynomial when `c = 0`).
    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`, convenient for bounds.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Leading coefficient, if nonzero polynomial.
    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Maps coefficients into another ring, re-trimming (the map may kill
    /// leading terms, e.g. when instantiating a parameter).
    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(|c| f(c)).collect())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i))
                .collect(),
        )
    }

    /// Exact composition with an affine map: returns `p(a·x + b)`.
    pub fn compose_affine(&self, a: &T, b: &T) -> Self {
        let inner = Poly::new(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &inner + Poly::constant(c.clone());
        }
        acc
    }

    /// Reverses the coefficients against degree `n`: returns `x^n · p(1/x)`.
    /// Requires `n ≥ deg p`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(n + 1 >= self.coeffs.len(), "reversal degree too small");
        let mut coeffs = vec![T::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// Substitutes `x := -x`.
    pub fn negated_variable(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `p^k` by repeated squaring.
    pub fn pow(&self, mut k: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Exact division by the monomial `x^k`; panics if any of the `k` lowest
    /// coefficients is nonzero.
    pub fn div_monomial_exact(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        assert!(
            self.coeffs.iter().take(k).all(|c| c.is_zero()),
            "polynomial not divisible by x^{k}"
        );
        Poly::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    /// Largest `k` with `x^k | p` (0 for the zero polynomial).
    pub fn trailing_zero_order(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }
}

impl<T: Field> Poly<T> {
    /// Euclidean division: returns `(q, r)` with `self = q·div + r`,
    /// `deg r < deg div`. Panics on a zero divisor.
    pub fn divrem(&self, div: &Self) -> (Self, Self) {
        let d = div.degree().expect("division by the zero polynomial");
        let lead = div.leading().unwrap().clone();
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some(n) = r.degree() {
            if n < d {
                break;
            }
            let c = r.leading().unwrap().clone() / lead.clone();
            let t = Poly::monomial(c, n - d);
            q = q + t.clone();
            r = r - &t * div;
        }
        (q, r)
    }

    /// Exact quotient; panics if the remainder is nonzero.
    pub fn exact_div(&self, div: &Self) -> Self {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "polynomial division left a remainder");
        q
    }

    /// Rescales to leading coefficient 1 (zero polynomial unchanged).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free part `p / gcd(p, p′)`, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        if g.degree_or_zero() == 0 {
            self.monic()
        } else {
            self.exact_div(&g).monic()
        }
    }

    /// Yun square-free decomposition: returns pairwise-coprime monic factors
    /// with their multiplicities, so that `p = lc · Π f_i^{mult_i}`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, u32)> {
        let p = self.monic();
        if p.degree_or_zero() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.degree_or_zero() == 0 {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut w = p.exact_div(&g);
        let mut z = dp.exact_div(&g) - w.derivative();
        let mut i = 1u32;
        while w.degree_or_zero() > 0 {
            let f = w.gcd(&z);
            if f.degree_or_zero() > 0 {
                out.push((f.clone(), i));
                w = w.exact_div(&f);
                z = z.exact_div(&f);
            }
            z = z - w.derivative();
            i += 1;
        }
        out
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b.clone(),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(coeffs)
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        &self - &rhs
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Poly<T> {
        self + &(-rhs.clone())
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Ring> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl<T: Ring> Default for Poly<T> {
    fn default() -> Self {
        Poly::zero()
    }
}

//! Exact rational scalars, polynomials, and real-root machinery.
//!
//! Everything here is exact: [`Rational`] is an always-reduced
//! arbitrary-precision fraction, [`Poly`] keeps exact coefficients, and the
//! Sturm-sequence functions in [`sturm`] count and isolate real roots with no
//! floating point involved. Numeric output (decimal strings, `f64` views) is
//! produced only at the edges, from rationals refined to an explicit
//! tolerance (default `1e-9`).

pub mod poly;
pub mod quadratic;
pub mod sturm;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::{Integer, Rational, RatPoly};

pub use poly::Poly;
pub use quadratic::QuadRat;
pub use sturm::{
    count_positive_roots, count_roots_above, isolate_positive_roots, isolate_real_roots,
    refine_root, sturm_count, IsolatedRoot,
};

/// Errors surfaced by the exact layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactmathError {
    /// `sturm_count` requires a square-free input; deflate with
    /// `squarefree_part` first.
    #[error("polynomial is not square-free: gcd(p, p') has degree {0}")]
    NonSquareFree(usize),
    /// Root refinement needs a strictly positive tolerance.
    #[error("tolerance must be positive")]
    ToleranceNotPositive,
}

/// Parse failure for rational literals.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse {0:?} as a rational (expected `p/q`, an integer, or a decimal)")]
pub struct ParseRationalError(pub String);

/// Closed interval of rationals used as a root bracket. Root-isolation
/// functions use the half-open convention: the isolated root lies in
/// `(lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    /// Builds an interval; panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    /// Membership under the half-open `(lo, hi]` convention.
    pub fn contains(&self, x: &Rational) -> bool {
        *x > self.lo && *x <= self.hi
    }

    /// Midpoint as `f64`, for display.
    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lo, self.hi)
    }
}

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Convenience constructor for small integers as rationals.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Sign of a rational as -1, 0, or +1.
pub fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses `p/q`, an integer, or a decimal string into an exact [`Rational`].
/// Decimals convert in base 10 (`1.25` ↦ `5/4`), never through binary floats.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    let err = || ParseRationalError(s.to_string());
    if t.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(den.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (sign_factor, digits) = match t.strip_prefix('-') {
        Some(rest) => (-Rational::one(), rest),
        None => (Rational::one(), t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    let valid = |p: &str| p.chars().all(|c| c.is_ascii_digit());
    if !valid(int_part) || !valid(frac_part) {
        return Err(err());
    }
    let int_val = if int_part.is_empty() {
        BigInt::zero()
    } else {
        BigInt::from_str(int_part).map_err(|_| err())?
    };
    let mut value = Rational::from_integer(int_val);
    if !frac_part.is_empty() {
        let numer = BigInt::from_str(frac_part).map_err(|_| err())?;
        let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
        value += Rational::new(numer, denom);
    }
    Ok(sign_factor * value)
}

/// Formats a rational as a decimal string with `digits` fractional digits
/// (round-half-away-from-zero), for human-readable numeric output.
pub fn decimal_string(x: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * Rational::from_integer(scale.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let rounded = if scaled.is_negative() {
        (scaled - half).ceil()
    } else {
        (scaled + half).floor()
    };
    let n = rounded.to_integer();
    let (sign_str, mag) = if n.is_negative() {
        ("-", -n)
    } else {
        ("", n)
    };
    let s = mag.to_string();
    if digits == 0 {
        return format!("{sign_str}{s}");
    }
    let d = digits as usize;
    let padded = if s.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - s.len()), s)
    } else {
        s
    };
    let (int_str, frac_str) = padded.split_at(padded.len() - d);
    format!("{sign_str}{int_str}.{frac_str}")
}

/// Rational approximation of `√x` within `tol`, by dyadic bisection.
/// Panics if `x < 0` or `tol ≤ 0`.
pub fn approx_sqrt(x: &Rational, tol: &Rational) -> Rational {
    assert!(!x.is_negative(), "square root of a negative rational");
    assert!(tol.is_positive(), "tolerance must be positive");
    if x.is_zero() {
        return Rational::zero();
    }
    let one = Rational::one();
    let mut lo = Rational::zero();
    let mut hi = if *x >= one { x.clone() } else { one };
    let two = rat_int(2);
    while &hi - &lo >= two.clone() * tol.clone() {
        let mid = (&lo + &hi) / &two;
        if &mid * &mid <= *x {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (&lo + &hi) / &two
}

/// Named ring operation for the generic polynomial-arithmetic entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Exact polynomial ring arithmetic (`add`, `sub`, `mul`); the operator
/// impls on [`Poly`] are the idiomatic spelling of the same operation.
pub fn poly_arith(p: &RatPoly, q: &RatPoly, op: PolyOp) -> RatPoly {
    match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    }
}

impl RatPoly {
    /// Rescales by a positive rational so that the coefficients become
    /// coprime integers; the sign of every coefficient is preserved.
    /// Used to keep Sturm remainder sequences small.
    pub fn primitive_normalized(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in self.coeffs() {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.coeffs() {
            let scaled = c * Rational::from_integer(den_lcm.clone());
            num_gcd = num_integer::gcd(num_gcd, scaled.to_integer());
        }
        let factor = Rational::new(den_lcm, num_gcd);
        self.scale(&factor)
    }

    /// Cauchy root bound: every complex root has modulus `< 1 + max |a_i/a_n|`.
    pub fn cauchy_root_bound(&self) -> Rational {
        let lead = self
            .leading()
            .expect("root bound of the zero polynomial")
            .clone();
        let mut max = Rational::zero();
        for c in self.coeffs() {
            let ratio = (c / &lead).abs();
            if ratio > max {
                max = ratio;
            }
        }
        Rational::one() + max
    }

    /// Splits into even and odd parts: `p(x) = e(x²) + x·o(x²)`.
    pub fn even_odd_parts(&self) -> (RatPoly, RatPoly) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (i, c) in self.coeffs().iter().enumerate() {
            if i % 2 == 0 {
                even.push(c.clone());
            } else {
                odd.push(c.clone());
            }
        }
        (RatPoly::new(even), RatPoly::new(odd))
    }

    /// Human-readable expansion like `2 - 3/2 s + s^2`, ascending powers.
    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let lead_sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {lead_sign} "));
            }
            let coeff_str = mag.to_string();
            match (i, coeff_str.as_str()) {
                (0, _) => out.push_str(&coeff_str),
                (1, "1") => out.push_str(var),
                (1, _) => out.push_str(&format!("{coeff_str} {var}")),
                (_, "1") => out.push_str(&format!("{var}^{i}")),
                (_, _) => out.push_str(&format!("{coeff_str} {var}^{i}")),
            }
        }
        out
    }
}

/// Converts an exact rational to `f64` (best effort, for display and oracle
/// hand-off).
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational from an `f64` (always possible for finite floats).
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("non-finite float cannot become a rational")
}

/// `10^{-k}` as an exact rational, the usual way tolerances are specified.
pub fn pow10_neg(k: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(k))
}

/// Raising factorial `(x+1)_k = (x+1)(x+2)⋯(x+k)` evaluated at a rational.
pub fn raising_factorial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 1..=k {
        acc *= x + rat_int(i as i64);
    }
    acc
}

/// Exact factorial as a big integer.
pub fn factorial(n: usize) -> Integer {
    let mut acc = Integer::one();
    for i in 2..=n {
        acc *= Integer::from(i);
    }
    acc
}

/// Divisors of `|n|`, enumerated by trial division. Returns `None` when the
/// search would be slow (roughly `|n| > 10^12`), so callers can fall back to
/// non-exact handling.
fn u64_divisors(n: &Integer) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut divs = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            divs.push(d);
            if d != n / d {
                divs.push(n / d);
            }
        }
        d += 1;
    }
    Some(divs)
}

/// Rational roots of a nonzero polynomial, ascending and deduplicated.
///
/// Candidates come from the rational-root theorem applied to the primitive
/// integer form: every root `±p/q` in lowest terms has `p` dividing the
/// constant coefficient and `q` dividing the leading one. Each candidate is
/// confirmed by exact evaluation, so every returned value really is a root.
/// The search is opportunistic rather than exhaustive: when the constant or
/// leading coefficient is too large for cheap divisor enumeration the result
/// may omit roots (a root at zero is always reported).
pub fn rational_roots(p: &RatPoly) -> Vec<Rational> {
    assert!(!p.is_zero(), "rational roots of the zero polynomial");
    let prim = p.primitive_normalized();
    let coeffs = prim.coeffs();
    let order = coeffs.iter().take_while(|c| c.is_zero()).count();
    let mut roots = Vec::new();
    if order > 0 {
        roots.push(Rational::zero());
    }
    if coeffs.len() - order <= 1 {
        return roots;
    }
    let deflated = RatPoly::new(coeffs[order..].to_vec());
    let leading = deflated.coeff(deflated.degree_or_zero());
    let divisor_pair = (
        u64_divisors(&deflated.coeff(0).to_integer()),
        u64_divisors(&leading.to_integer()),
    );
    let (Some(consts), Some(leads)) = divisor_pair else {
        return roots;
    };
    for p_div in &consts {
        for q_div in &leads {
            let c = Rational::new(BigInt::from(*p_div), BigInt::from(*q_div));
            for cand in [c.clone(), -c] {
                if deflated.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

//! Catalog of irreducible bounded symmetric domains and Hua polynomials.
//!
//! A domain enters the pipeline as its triple of numerical invariants
//! `(a, b, r)` (multiplicities and rank), from which the complex dimension
//! `d = r + r(r−1)a/2 + rb` and the genus `g = 2 + a(r−1) + b` are derived.
//! Named catalog entries cover the classical types `I_{p,q}`, `II_n`,
//! `III_n`, `IV_n` and the exceptional `EV`, `EVI`; raw triples are accepted
//! for exploratory work without any claim that they match a classified
//! domain.

use std::fmt;

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exactmath::{factorial, rat, rat_int};
use crate::{RatPoly, Rational};

/// Errors from catalog lookup and raw-triple validation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("unknown domain type {0:?} (expected I_{{p,q}}, II_n, III_n, IV_n, EV, or EVI)")]
    UnknownType(String),
    #[error("invalid parameters for domain type: {0}")]
    InvalidParameters(String),
}

/// Which catalog family a spec came from (or a raw triple).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainKind {
    TypeI { p: u32, q: u32 },
    TypeII { n: u32 },
    TypeIII { n: u32 },
    TypeIV { n: u32 },
    EV,
    EVI,
    Raw,
}

/// A bounded symmetric domain described by its numerical invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainSpec {
    pub kind: DomainKind,
    /// Off-diagonal multiplicity.
    pub a: u32,
    /// Boundary multiplicity.
    pub b: u32,
    /// Rank.
    pub r: u32,
    /// Complex dimension, always `r + r(r−1)a/2 + r·b`.
    pub d: u32,
    /// Genus `2 + a(r−1) + b`.
    pub g: u32,
}

/// Complex dimension from the invariants: `d = r + r(r−1)a/2 + r·b`.
/// Panics if `r = 0`.
pub fn dimension(a: u32, b: u32, r: u32) -> u32 {
    assert!(r >= 1, "rank must be at least 1");
    r + r * (r - 1) * a / 2 + r * b
}

/// Genus from the invariants: `g = 2 + a(r−1) + b`.
pub fn genus(a: u32, b: u32, r: u32) -> u32 {
    assert!(r >= 1, "rank must be at least 1");
    2 + a * (r - 1) + b
}

impl DomainSpec {
    /// Builds a spec from a raw invariant triple. No attempt is made to
    /// verify that the triple belongs to an actual symmetric domain.
    pub fn from_invariants(a: u32, b: u32, r: u32) -> Result<Self, DomainError> {
        if r == 0 {
            return Err(DomainError::InvalidParameters(
                "rank r must be at least 1".into(),
            ));
        }
        Ok(DomainSpec {
            kind: DomainKind::Raw,
            a,
            b,
            r,
            d: dimension(a, b, r),
            g: genus(a, b, r),
        })
    }

    fn named(kind: DomainKind, a: u32, b: u32, r: u32, expected_d: u32) -> Self {
        let d = dimension(a, b, r);
        assert_eq!(
            d, expected_d,
            "catalog dimension mismatch for {kind:?}: derived {d}, known {expected_d}"
        );
        DomainSpec {
            kind,
            a,
            b,
            r,
            d,
            g: genus(a, b, r),
        }
    }

    /// Display label like `I_{1,3}` or `(a=2, b=0, r=2)` for raw triples.
    pub fn label(&self) -> String {
        match &self.kind {
            DomainKind::TypeI { p, q } => format!("I_{{{p},{q}}}"),
            DomainKind::TypeII { n } => format!("II_{n}"),
            DomainKind::TypeIII { n } => format!("III_{n}"),
            DomainKind::TypeIV { n } => format!("IV_{n}"),
            DomainKind::EV => "EV".to_string(),
            DomainKind::EVI => "EVI".to_string(),
            DomainKind::Raw => format!("(a={}, b={}, r={})", self.a, self.b, self.r),
        }
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

fn parse_u32(s: &str) -> Option<u32> {
    let t = s.trim();
    if t.is_empty() || !t.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    t.parse().ok()
}

/// Looks up a named catalog entry. Grammar:
/// `I_{p,q} | II_n | III_n | IV_n | EV | EVI` with `1 ≤ p ≤ q`.
pub fn catalog_lookup(name: &str) -> Result<DomainSpec, DomainError> {
    let t = name.trim();
    let unknown = || DomainError::UnknownType(name.to_string());
    let invalid = |msg: String| DomainError::InvalidParameters(msg);

    if t == "EVI" {
        return Ok(DomainSpec::named(DomainKind::EVI, 8, 0, 3, 27));
    }
    if t == "EV" {
        return Ok(DomainSpec::named(DomainKind::EV, 6, 4, 2, 16));
    }
    if let Some(rest) = t.strip_prefix("III_") {
        let n = parse_u32(rest).ok_or_else(unknown)?;
        if n < 1 {
            return Err(invalid(format!("III_{n}: need n ≥ 1")));
        }
        return Ok(DomainSpec::named(
            DomainKind::TypeIII { n },
            1,
            0,
            n,
            n * (n + 1) / 2,
        ));
    }
    if let Some(rest) = t.strip_prefix("II_") {
        let n = parse_u32(rest).ok_or_else(unknown)?;
        if n < 2 {
            return Err(invalid(format!("II_{n}: need n ≥ 2")));
        }
        let b = if n % 2 == 0 { 0 } else { 2 };
        return Ok(DomainSpec::named(
            DomainKind::TypeII { n },
            4,
            b,
            n / 2,
            n * (n - 1) / 2,
        ));
    }
    if let Some(rest) = t.strip_prefix("IV_") {
        let n = parse_u32(rest).ok_or_else(unknown)?;
        if n < 2 {
            return Err(invalid(format!("IV_{n}: need n ≥ 2")));
        }
        return Ok(DomainSpec::named(DomainKind::TypeIV { n }, n - 2, 0, 2, n));
    }
    if let Some(rest) = t.strip_prefix("I_") {
        let inner = rest
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(unknown)?;
        let (ps, qs) = inner.split_once(',').ok_or_else(unknown)?;
        let p = parse_u32(ps).ok_or_else(unknown)?;
        let q = parse_u32(qs).ok_or_else(unknown)?;
        if p < 1 {
            return Err(invalid(format!("I_{{{p},{q}}}: need p ≥ 1")));
        }
        if p > q {
            return Err(invalid(format!("I_{{{p},{q}}}: need p ≤ q")));
        }
        return Ok(DomainSpec::named(
            DomainKind::TypeI { p, q },
            2,
            q - p,
            p,
            p * q,
        ));
    }
    Err(unknown())
}

/// A fixed spread of catalog entries (all six families, dimensions 1–27),
/// used by identity tests that must cover every `d ≤ 27` shape.
pub fn catalog_sample() -> Vec<DomainSpec> {
    [
        "I_{1,1}", "I_{1,2}", "I_{1,3}", "I_{1,4}", "I_{2,2}", "I_{2,3}", "I_{3,3}", "II_2",
        "II_3", "II_4", "II_5", "III_1", "III_2", "III_3", "IV_2", "IV_3", "IV_4", "IV_5",
        "EV", "EVI",
    ]
    .iter()
    .map(|n| catalog_lookup(n).expect("catalog names are valid"))
    .collect()
}

/// The Hua polynomial `χ_{a,b,r}(s) = Π_{j=1..r} (s+1+(j−1)a/2)_{1+b+(r−j)a}`
/// with the raising-factorial convention `(x)_k = x(x+1)⋯(x+k−1)`.
/// Exact rational coefficients; degree equals the domain dimension.
pub fn hua_polynomial(spec: &DomainSpec) -> RatPoly {
    let mut chi = RatPoly::one();
    for (c, mult) in hua_linear_factors(spec) {
        let factor = RatPoly::new(vec![c, Rational::one()]);
        chi = chi * factor.pow(mult as usize);
    }
    debug_assert_eq!(chi.degree_or_zero() as u32, spec.d);
    chi
}

/// The linear factors of `χ`: pairs `(c, k)` meaning `(s + c)^k`, sorted by
/// `c`. Useful for factored display and for root-location invariants.
pub fn hua_linear_factors(spec: &DomainSpec) -> Vec<(Rational, u32)> {
    let mut factors: Vec<(Rational, u32)> = Vec::new();
    for j in 1..=spec.r {
        let start = Rational::one() + rat(((j - 1) * spec.a) as i64, 2);
        let k = 1 + spec.b + (spec.r - j) * spec.a;
        for i in 0..k {
            let c = &start + rat_int(i as i64);
            match factors.iter_mut().find(|(v, _)| *v == c) {
                Some((_, m)) => *m += 1,
                None => factors.push((c, 1)),
            }
        }
    }
    factors.sort_by(|(x, _), (y, _)| x.cmp(y));
    factors
}

/// Factored display like `(s+1)(s+3/2)(s+2)` or `(s+1)(s+2)^2(s+3)`;
/// a single linear factor is printed bare, e.g. `s+1`.
pub fn hua_factored_string(spec: &DomainSpec) -> String {
    let factors = hua_linear_factors(spec);
    if let [(c, 1)] = factors.as_slice() {
        return if c.is_zero() {
            "s".to_string()
        } else {
            format!("s+{c}")
        };
    }
    let mut out = String::new();
    for (c, mult) in factors {
        let base = if c.is_zero() {
            "s".to_string()
        } else {
            format!("(s+{c})")
        };
        out.push_str(&base);
        if mult > 1 {
            out.push_str(&format!("^{mult}"));
        }
    }
    out
}

/// `Γ` at a positive integer or half-integer argument, exactly:
/// a rational times a power of `√π`. The argument is passed doubled
/// (`two_x = 2x ≥ 1`).
fn gamma_exact(two_x: u32) -> (Rational, i64) {
    assert!(two_x >= 1, "gamma argument must be positive");
    if two_x % 2 == 0 {
        let n = (two_x / 2) as usize;
        (Rational::from_integer(factorial(n - 1)), 0)
    } else {
        // Γ(n + 1/2) = (2n)! / (4^n n!) · √π
        let n = ((two_x - 1) / 2) as usize;
        let num = factorial(2 * n);
        let den = factorial(n) * crate::Integer::from(4u32).pow(n as u32);
        (Rational::new(num, den), 1)
    }
}

/// The Selberg constant `C(a,b,r) = Π_j Γ(b+1+(j−1)a/2)·Γ(ja/2+1)/Γ(a/2+1)`
/// in exact form: a rational multiplied by an integer power of `√π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelbergConstant {
    pub coeff: Rational,
    pub sqrt_pi_power: i64,
}

impl SelbergConstant {
    /// Numeric value (well beyond 12 significant digits for catalog sizes).
    pub fn value(&self) -> f64 {
        let base = self.coeff.to_f64().unwrap_or(f64::NAN);
        let pi_half = std::f64::consts::PI.sqrt();
        base * pi_half.powi(self.sqrt_pi_power as i32)
    }
}

impl fmt::Display for SelbergConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sqrt_pi_power {
            0 => write!(f, "{}", self.coeff),
            1 => write!(f, "{}·√π", self.coeff),
            k => write!(f, "{}·√π^{k}", self.coeff),
        }
    }
}

/// Exact evaluation of the Selberg-integral constant `C(a, b, r)`.
/// Panics if `r = 0`.
pub fn selberg_constant(a: u32, b: u32, r: u32) -> SelbergConstant {
    assert!(r >= 1, "rank must be at least 1");
    let mut coeff = Rational::one();
    let mut pi_pow: i64 = 0;
    let (den_c, den_p) = gamma_exact(a + 2); // Γ(a/2 + 1)
    for j in 1..=r {
        let (c1, p1) = gamma_exact(2 * (b + 1) + (j - 1) * a); // Γ(b+1+(j−1)a/2)
        let (c2, p2) = gamma_exact(j * a + 2); // Γ(ja/2 + 1)
        coeff *= c1 * c2 / den_c.clone();
        pi_pow += p1 + p2 - den_p;
    }
    SelbergConstant {
        coeff,
        sqrt_pi_power: pi_pow,
    }
}

//! Decomposition of scaled Hua polynomials and the representative
//! Bergman-kernel polynomial of a Cartan–Hartogs domain.
//!
//! For a base domain of dimension `d` with Hua polynomial `χ`, the scaled
//! polynomial `χ(kμ)` expands uniquely in the raising-factorial basis
//! `(k+1)_j`:
//!
//! ```text
//! χ(kμ) = Σ_{j=0}^{d} μ^j · C_{d−j}(μ) · (k+1)_j ,
//! ```
//!
//! with `C_0 ≡ 1` and `deg_μ C_i = i`. The coefficients `C_i` determine the
//! representative polynomial at twist exponent `m ≥ 0`:
//!
//! ```text
//! P_μ^m(η) = Σ_{j=0}^{d} (m+1)_j · μ^j · C_{d−j}(μ) · η^j ,
//! ```
//!
//! whose behaviour on the critical line `Re η = 1/2` drives the Lu Qikeng
//! decision. This module computes the `C_i` exactly, assembles `P_μ^m`, and
//! evaluates η-derivatives at `η = 1/2` both raw and in the normalized form
//! `q_m^k = P^(k)(1/2) / ((m+1)_k μ^k)`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::domains::{hua_polynomial, DomainSpec};
use crate::exactmath::{rat, rat_int, raising_factorial, Poly};
use crate::{EtaMuPoly, MuPoly, RatPoly, Rational};

/// Errors from decomposition and derivative queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum HuadecompError {
    #[error("derivative order {k} out of range for dimension {d} (need k ≤ d)")]
    OrderOutOfRange { k: u32, d: u32 },
}

/// A polynomial in `μ` whose coefficients are polynomials in `m`:
/// the representative polynomial at `η = 1/2` with the twist exponent left
/// symbolic. Outer variable `μ`, inner variable `m`.
pub type MuPolyOverM = Poly<Poly<Rational>>;

/// `(k+1)_j = (k+1)(k+2)⋯(k+j)` as a polynomial in `k` (monic, degree `j`).
fn rising_basis_poly(j: u32) -> RatPoly {
    let mut p = RatPoly::one();
    for i in 1..=j {
        p = p * RatPoly::new(vec![rat_int(i as i64), Rational::one()]);
    }
    p
}

/// `(m+1)_j` as a polynomial in `m` (degree `j`).
fn rising_m_poly(j: u32) -> Poly<Rational> {
    let mut p = Poly::one();
    for i in 1..=j {
        p = p * Poly::new(vec![rat_int(i as i64), Rational::one()]);
    }
    p
}

/// Substitutes `s → k·μ` into `χ(s)`, producing a polynomial in `k` whose
/// coefficients are polynomials in `μ`.
fn chi_of_k_mu(chi: &RatPoly) -> Poly<MuPoly> {
    let coeffs: Vec<MuPoly> = chi
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| MuPoly::monomial(a.clone(), i))
        .collect();
    Poly::new(coeffs)
}

/// Expands `χ(kμ)` in the raising-factorial basis and returns the
/// coefficients `C_0, C_1, …, C_d` (in that order), so that
/// `χ(kμ) = Σ_j μ^j · C_{d−j}(μ) · (k+1)_j`.
///
/// The expansion is triangular: the basis polynomial `(k+1)_j` is monic of
/// degree `j` in `k`, so peeling leading coefficients from degree `d`
/// downward determines each `μ^j C_{d−j}` exactly, and the power `μ^j`
/// divides out with no remainder.
pub fn decompose_chi(spec: &DomainSpec) -> Vec<MuPoly> {
    let d = spec.d as usize;
    let chi = hua_polynomial(spec);
    let mut work = chi_of_k_mu(&chi);
    let mut c = vec![MuPoly::zero(); d + 1];
    for j in (0..=d).rev() {
        let lead = work.coeff(j);
        if !lead.is_zero() {
            let ci = lead.clone().div_monomial_exact(j);
            let basis = rising_basis_poly(j as u32);
            let basis_mu: Poly<MuPoly> =
                Poly::new(basis.coeffs().iter().cloned().map(MuPoly::constant).collect());
            work = work - basis_mu * Poly::constant(lead.clone());
            c[d - j] = ci;
        }
        debug_assert!(work.degree().map_or(true, |deg| deg < j));
    }
    debug_assert!(work.is_zero(), "raising-factorial expansion must be exact");
    debug_assert!(c[0].is_one(), "top coefficient must be identically 1");
    for (i, ci) in c.iter().enumerate() {
        debug_assert!(
            ci.degree_or_zero() <= i,
            "C_{i} must have μ-degree at most {i}"
        );
    }
    c
}

/// The representative polynomial `P_μ^m(η)` with exact coefficients:
/// a polynomial in `η` whose coefficients are polynomials in `μ`.
/// `m = 0` is admitted (the `(m+1)_j` factors become `j!`).
pub fn representative_polynomial(spec: &DomainSpec, m: u32) -> EtaMuPoly {
    let d = spec.d as usize;
    let c = decompose_chi(spec);
    let m_rat = rat_int(m as i64);
    let coeffs: Vec<MuPoly> = (0..=d)
        .map(|j| {
            let rf = raising_factorial(&m_rat, j);
            MuPoly::monomial(rf, j) * c[d - j].clone()
        })
        .collect();
    EtaMuPoly::new(coeffs)
}

/// `q_m(μ) = P_μ^m(1/2)`: the representative polynomial evaluated on the
/// critical point `η = 1/2`, as an exact polynomial in `μ`.
pub fn q_poly(spec: &DomainSpec, m: u32) -> MuPoly {
    let p = representative_polynomial(spec, m);
    p.eval(&MuPoly::constant(rat(1, 2)))
}

/// The raw `k`-th η-derivative of `P_μ^m` evaluated at `η = 1/2`.
/// Requires `k ≤ d`.
pub fn derivative_at_half(spec: &DomainSpec, m: u32, k: u32) -> Result<MuPoly, HuadecompError> {
    if k > spec.d {
        return Err(HuadecompError::OrderOutOfRange { k, d: spec.d });
    }
    let mut p = representative_polynomial(spec, m);
    for _ in 0..k {
        p = p.derivative();
    }
    Ok(p.eval(&MuPoly::constant(rat(1, 2))))
}

/// The normalized derivative `q_m^k(μ) = P^(k)(1/2) / ((m+1)_k · μ^k)`.
/// The division is exact: every surviving term of the `k`-th derivative
/// carries at least `μ^k` and a full factor `(m+1)_k`. Requires `k ≤ d`.
pub fn normalized_derivative_at_half(
    spec: &DomainSpec,
    m: u32,
    k: u32,
) -> Result<MuPoly, HuadecompError> {
    let raw = derivative_at_half(spec, m, k)?;
    if raw.is_zero() {
        return Ok(MuPoly::zero());
    }
    let rf = raising_factorial(&rat_int(m as i64), k as usize);
    Ok(raw.div_monomial_exact(k as usize).scale(&rf.recip()))
}

/// `q_m(μ)` with the twist exponent kept symbolic: a polynomial in `μ`
/// whose coefficients are polynomials in `m`. Evaluating the inner
/// coefficients at an integer `m ≥ 0` reproduces [`q_poly`].
pub fn q_poly_symbolic_m(spec: &DomainSpec) -> MuPolyOverM {
    let d = spec.d as usize;
    let c = decompose_chi(spec);
    let mut out = MuPolyOverM::zero();
    for j in 0..=d {
        // (m+1)_j · (1/2)^j · μ^j · C_{d−j}(μ)
        let mpoly = rising_m_poly(j as u32).scale(&rat(1, 2).pow(j as i32));
        let mu_part = MuPoly::monomial(Rational::one(), j) * c[d - j].clone();
        let term = MuPolyOverM::new(
            mu_part
                .coeffs()
                .iter()
                .map(|a| mpoly.clone().scale(a))
                .collect(),
        );
        out = out + term;
    }
    out
}

/// Evaluates a symbolic-`m` polynomial at a concrete `m`, returning a
/// plain polynomial in `μ`.
pub fn eval_symbolic_m(q: &MuPolyOverM, m: u32) -> MuPoly {
    let m_rat = rat_int(m as i64);
    MuPoly::new(q.coeffs().iter().map(|cm| cm.eval(&m_rat)).collect())
}

//! Numeric evaluation over the Hermitian ball `I_{1,n}` and the Lie ball
//! `IV_n`: generic norms, the Hartogs-domain membership test, the kernel
//! variables `ξ` and `η`, and the Bergman kernel of the Hartogs domain up to
//! its positive normalization constant.
//!
//! Everything here is floating point by design; the exact pipeline lives in
//! [`crate::huadecomp`] and [`crate::localization`]. The two layers meet in
//! the representative polynomial: the kernel value is
//! `N(z,w)^{−g−mμ} · η^{m+1} · P_μ^m(η)`, so its zeros are exactly the zeros
//! of `P_μ^m` in `{Re η > 1/2}`.

use num_complex::Complex;
use rand::Rng;
use thiserror::Error;

use crate::domains::DomainKind;
use crate::exactmath::to_f64;
use crate::huadecomp::representative_polynomial;
use crate::{DomainSpec, EtaMuPoly};

/// Errors from the numeric kernel layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    /// Generic-norm evaluation is implemented for `I_{1,n}` and `IV_n` only.
    #[error("generic norm not implemented for domain {0}")]
    UnsupportedType(String),
    /// A coordinate vector has the wrong length for the domain.
    #[error("coordinate dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// A point fails the membership inequality of its domain.
    #[error("point lies outside the domain")]
    PointOutsideDomain,
    /// `N(z,w)` left the right half-plane, so the principal-branch power
    /// `N^μ` would cross the negative-axis branch cut.
    #[error("generic norm left the right half-plane (principal branch unsafe)")]
    BranchCrossing,
}

/// A point of the Hartogs domain `{(z, Z) : ‖Z‖² < N(z,z)^μ}`: a base
/// coordinate `z ∈ ℂ^d` and a fiber coordinate `Z ∈ ℂ^m`.
#[derive(Debug, Clone, PartialEq)]
pub struct HartogsPoint {
    /// Base coordinate, length = complex dimension of the base domain.
    pub base: Vec<Complex<f64>>,
    /// Fiber coordinate, length = fiber dimension `m`.
    pub fiber: Vec<Complex<f64>>,
}

impl HartogsPoint {
    pub fn new(base: Vec<Complex<f64>>, fiber: Vec<Complex<f64>>) -> Self {
        Self { base, fiber }
    }
}

/// Hermitian inner product `Σ z_i · conj(w_i)`.
fn inner(z: &[Complex<f64>], w: &[Complex<f64>]) -> Complex<f64> {
    z.iter().zip(w).map(|(a, b)| a * b.conj()).sum()
}

/// Bilinear square `z·z = Σ z_i²` (no conjugation).
fn bilinear_sq(z: &[Complex<f64>]) -> Complex<f64> {
    z.iter().map(|a| a * a).sum()
}

fn norm_sq(z: &[Complex<f64>]) -> f64 {
    z.iter().map(|a| a.norm_sqr()).sum()
}

fn check_dim(spec: &DomainSpec, v: &[Complex<f64>]) -> Result<(), KernelError> {
    let expected = spec.d as usize;
    if v.len() != expected {
        return Err(KernelError::DimensionMismatch {
            expected,
            got: v.len(),
        });
    }
    Ok(())
}

/// The generic norm `N(z, w)` of the base domain.
///
/// * `I_{1,n}` (Hermitian ball): `N = 1 − ⟨z,w⟩`;
/// * `IV_n` (Lie ball): `N = 1 − 2⟨z,w⟩ + (z·z)·conj(w·w)`.
///
/// Satisfies `N(0,0) = 1` and the Hermitian symmetry
/// `N(z,w) = conj(N(w,z))`. Other catalog types are rejected with
/// [`KernelError::UnsupportedType`].
pub fn generic_norm(
    spec: &DomainSpec,
    z: &[Complex<f64>],
    w: &[Complex<f64>],
) -> Result<Complex<f64>, KernelError> {
    check_dim(spec, z)?;
    check_dim(spec, w)?;
    let one = Complex::new(1.0, 0.0);
    match spec.kind {
        DomainKind::TypeI { p: 1, q: _ } => Ok(one - inner(z, w)),
        DomainKind::TypeIV { n: _ } => {
            Ok(one - 2.0 * inner(z, w) + bilinear_sq(z) * bilinear_sq(w).conj())
        }
        _ => Err(KernelError::UnsupportedType(spec.label())),
    }
}

/// `N(z, z)` as a real number (the diagonal of a Hermitian form is real; the
/// tiny imaginary rounding residue is dropped).
pub fn diagonal_norm(spec: &DomainSpec, z: &[Complex<f64>]) -> Result<f64, KernelError> {
    let n = generic_norm(spec, z, z)?;
    debug_assert!(n.im.abs() <= 1e-12 * (1.0 + n.re.abs()));
    Ok(n.re)
}

/// Membership of `z` in the base domain.
///
/// * Hermitian ball: `‖z‖² < 1`;
/// * Lie ball: `‖z‖² + √(‖z‖⁴ − |z·z|²) < 1`.
pub fn in_base_domain(spec: &DomainSpec, z: &[Complex<f64>]) -> Result<bool, KernelError> {
    check_dim(spec, z)?;
    let nsq = norm_sq(z);
    match spec.kind {
        DomainKind::TypeI { p: 1, q: _ } => Ok(nsq < 1.0),
        DomainKind::TypeIV { n: _ } => {
            // Cauchy–Schwarz gives |z·z| ≤ ‖z‖², so the radicand is ≥ 0 up to
            // rounding; clamp the rounding residue away.
            let radicand = (nsq * nsq - bilinear_sq(z).norm_sqr()).max(0.0);
            Ok(nsq + radicand.sqrt() < 1.0)
        }
        _ => Err(KernelError::UnsupportedType(spec.label())),
    }
}

/// Membership of `(z, Z)` in the Hartogs domain `{‖Z‖² < N(z,z)^μ}` over the
/// base domain.
pub fn in_hartogs_domain(
    spec: &DomainSpec,
    mu: f64,
    p: &HartogsPoint,
) -> Result<bool, KernelError> {
    if !in_base_domain(spec, &p.base)? {
        return Ok(false);
    }
    let n = diagonal_norm(spec, &p.base)?;
    debug_assert!(n > 0.0, "diagonal norm must be positive inside the domain");
    Ok(norm_sq(&p.fiber) < n.powf(mu))
}

/// The kernel variables `ξ = ⟨Z,W⟩ / N(z,w)^μ` and `η = 1/(1−ξ)` for a pair
/// of points of the Hartogs domain.
///
/// For in-domain pairs, `|ξ| < 1` and `Re η > 1/2`.
pub fn xi_eta(
    spec: &DomainSpec,
    mu: f64,
    p: &HartogsPoint,
    q: &HartogsPoint,
) -> Result<(Complex<f64>, Complex<f64>), KernelError> {
    if p.fiber.len() != q.fiber.len() {
        return Err(KernelError::DimensionMismatch {
            expected: p.fiber.len(),
            got: q.fiber.len(),
        });
    }
    if !in_hartogs_domain(spec, mu, p)? || !in_hartogs_domain(spec, mu, q)? {
        return Err(KernelError::PointOutsideDomain);
    }
    let n = generic_norm(spec, &p.base, &q.base)?;
    if n.re <= 0.0 {
        return Err(KernelError::BranchCrossing);
    }
    let xi = inner(&p.fiber, &q.fiber) * n.powf(-mu);
    let eta = (Complex::new(1.0, 0.0) - xi).inv();
    Ok((xi, eta))
}

/// Evaluates the representative polynomial `P_μ^m` (given as an exact
/// bivariate polynomial in `(η, μ)`) at a numeric `μ` and a complex `η`.
pub fn representative_value(poly: &EtaMuPoly, mu: f64, eta: Complex<f64>) -> Complex<f64> {
    let mut acc = Complex::new(0.0, 0.0);
    for c in poly.coeffs().iter().rev() {
        let coeff = c
            .coeffs()
            .iter()
            .rev()
            .fold(0.0, |h, a| h * mu + to_f64(a));
        acc = acc * eta + coeff;
    }
    acc
}

/// The Bergman kernel of the Hartogs domain at `((z,Z), (w,W))`, up to its
/// positive normalization constant:
///
/// `N(z,w)^{−g−mμ} · η^{m+1} · P_μ^m(η)`.
///
/// Principal-branch powers throughout; zero exactly where `P_μ^m(η) = 0`.
pub fn bergman_kernel(
    spec: &DomainSpec,
    m: u32,
    mu: f64,
    p: &HartogsPoint,
    q: &HartogsPoint,
) -> Result<Complex<f64>, KernelError> {
    let poly = representative_polynomial(spec, m);
    bergman_kernel_with(spec, &poly, m, mu, p, q)
}

/// [`bergman_kernel`] with a precomputed representative polynomial, for
/// tight sampling loops.
pub fn bergman_kernel_with(
    spec: &DomainSpec,
    poly: &EtaMuPoly,
    m: u32,
    mu: f64,
    p: &HartogsPoint,
    q: &HartogsPoint,
) -> Result<Complex<f64>, KernelError> {
    let (_, eta) = xi_eta(spec, mu, p, q)?;
    let n = generic_norm(spec, &p.base, &q.base)?;
    let exponent = -(f64::from(spec.g) + f64::from(m) * mu);
    let prefactor = n.powf(exponent) * eta.powu(m + 1);
    Ok(prefactor * representative_value(poly, mu, eta))
}

/// Draws a uniform point of the base domain by rejection from the enclosing
/// polydisc cube (both supported domains sit inside the unit ball, which sits
/// inside `[−1,1]^{2d}`).
pub fn sample_base_point<R: Rng>(
    spec: &DomainSpec,
    rng: &mut R,
) -> Result<Vec<Complex<f64>>, KernelError> {
    // Fail fast on unsupported types instead of looping forever.
    in_base_domain(spec, &vec![Complex::new(0.0, 0.0); spec.d as usize])?;
    loop {
        let z: Vec<Complex<f64>> = (0..spec.d)
            .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        if in_base_domain(spec, &z)? {
            return Ok(z);
        }
    }
}

/// Draws a random point of the Hartogs domain: a uniform base point, then a
/// fiber point uniform in the ball `‖Z‖ < N(z,z)^{μ/2}`. Every open subset
/// of the domain is hit with positive probability (the density is not the
/// uniform one on the product, which no consumer here needs).
pub fn sample_hartogs_point<R: Rng>(
    spec: &DomainSpec,
    mu: f64,
    m: u32,
    rng: &mut R,
) -> Result<HartogsPoint, KernelError> {
    let base = sample_base_point(spec, rng)?;
    let radius = diagonal_norm(spec, &base)?.powf(mu / 2.0);
    let fiber = loop {
        let candidate: Vec<Complex<f64>> = (0..m)
            .map(|_| {
                Complex::new(
                    rng.gen_range(-radius..radius),
                    rng.gen_range(-radius..radius),
                )
            })
            .collect();
        if norm_sq(&candidate) < radius * radius {
            break candidate;
        }
    };
    Ok(HartogsPoint::new(base, fiber))
}

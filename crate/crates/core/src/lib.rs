//! Exact-arithmetic toolkit for the Lu Qikeng problem on Cartan–Hartogs domains.
//!
//! The library is organised as a pipeline:
//!
//! * [`exactmath`] — arbitrary-precision rationals, dense univariate polynomials
//!   generic over the scalar, Sturm-sequence root isolation and bisection refinement;
//! * [`domains`] — the catalog of irreducible bounded symmetric domains
//!   (types `I_{p,q}`, `II_n`, `III_n`, `IV_n`, `EV`, `EVI`) with their numerical
//!   invariants `(a, b, r)` and the Hua polynomial `χ_{a,b,r}`;
//! * [`huadecomp`] — the raising-factorial decomposition
//!   `χ(kμ) = Σ_j μ^j C_{d−j}(μ) (k+1)_j` and the representative polynomial
//!   `P_μ^m(η)` of the Bergman kernel, together with `q_m(μ) = P_μ^m(1/2)` and its
//!   normalized η-derivatives;
//! * [`localization`] — exact half-plane root localization: Hurwitz minors,
//!   Routh–Hurwitz and Liénard–Chipart criteria, and closed-form degree-2/3/4
//!   criteria for `{Re z < 1/2}`;
//! * [`luqikeng`] — the decision procedure: is the Cartan–Hartogs domain over a
//!   given base Lu Qikeng for fiber dimension `m` and exponent `μ`? Plus threshold
//!   roots `μ_{m,1} ≤ μ_{m,2}` of `q_m` and the stabilization integer `m_Ω`;
//! * [`kernel`] — numeric evaluation of generic norms, the variables `ξ`, `η`,
//!   and the Bergman kernel (up to its positive constant) for types `I_{1,n}`, `IV_n`;
//! * [`oracle`] — an independent numeric layer (double-double Aberth root finding,
//!   Monte-Carlo ball integrals, adaptive Selberg quadrature) used to cross-check
//!   the exact pipeline.
//!
//! Everything on the exact path is computed with [`Rational`] coefficients; floating
//! point only ever appears in the oracle and kernel-evaluation layers.

pub mod domains;
pub mod exactmath;
pub mod huadecomp;
pub mod kernel;
pub mod localization;
pub mod luqikeng;
pub mod oracle;
pub mod scalar;

/// Exact scalar used throughout the library: arbitrary-precision reduced fraction.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision signed integer backing [`Rational`].
pub type Integer = num_bigint::BigInt;

/// Dense univariate polynomial with exact rational coefficients.
pub type RatPoly = exactmath::Poly<Rational>;

/// Polynomial in the Hartogs exponent μ, exact rational coefficients.
pub type MuPoly = exactmath::Poly<Rational>;

/// Bivariate polynomial in (η, μ): the η^j coefficient is a [`MuPoly`].
pub type EtaMuPoly = exactmath::Poly<MuPoly>;

/// Dense univariate polynomial over `f64`, for quick numeric evaluation.
pub type FloatPoly = exactmath::Poly<f64>;

pub use domains::DomainSpec;
pub use exactmath::{Interval, Poly};
pub use kernel::HartogsPoint;
pub use localization::StabilityReport;
pub use luqikeng::{ThresholdReport, Verdict};

//! Independent numeric verification layer.
//!
//! Nothing in here feeds back into the exact pipeline; these routines exist
//! so tests can confront exact results with independently computed numbers:
//!
//! * [`numeric_roots`] — all complex roots of an exact-coefficient
//!   polynomial via Aberth–Ehrlich simultaneous iteration in `f64`, polished
//!   by Newton steps in double-double arithmetic ([`dd::Dd`]), with a
//!   residual acceptance gate;
//! * [`hua_integral_mc`] — seeded Monte-Carlo estimate of the normalized
//!   ball integral `∫(1−‖z‖²)^s dV / vol`, whose exact value is
//!   `n!/(s+1)_n`;
//! * [`selberg_check`] — adaptive-Simpson evaluation of the rank-1/2
//!   Selberg integral against its exact Γ-product value.

pub mod dd;

use std::cell::Cell;

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::domains::selberg_constant;
use crate::exactmath::to_f64;
use crate::RatPoly;
use dd::Dd;

/// Errors from the numeric verification layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    /// Root iteration hit its cap, or a polished root failed the residual
    /// acceptance gate.
    #[error("root finding did not converge (iteration cap {0})")]
    OracleNonConvergence(usize),
    /// Adaptive quadrature ran out of its evaluation budget.
    #[error("adaptive quadrature exceeded its evaluation budget")]
    QuadratureBudgetExceeded,
    /// Root extraction needs degree ≥ 1.
    #[error("cannot extract roots of a constant polynomial")]
    ConstantPolynomial,
}

/// One numeric root with the multiplicity it carries in the input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericRoot {
    pub value: Complex<f64>,
    pub multiplicity: u32,
}

const ABERTH_CAP: usize = 400;

/// All `deg p` roots of `p` (grouped by multiplicity), sorted by real part
/// then imaginary part.
///
/// Pipeline: exact square-free decomposition (so the iteration only ever
/// sees simple roots and multiplicities are exact integers), Aberth–Ehrlich
/// in `f64`, then four Newton steps per root in double-double arithmetic.
/// Every returned root satisfies `|p(ρ)| / ‖p‖_∞ < tol`, else the whole
/// call fails with [`OracleError::OracleNonConvergence`].
pub fn numeric_roots(p: &RatPoly, tol: f64) -> Result<Vec<NumericRoot>, OracleError> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(OracleError::ConstantPolynomial);
    }
    let mut out: Vec<NumericRoot> = Vec::new();
    for (factor, multiplicity) in p.squarefree_decomposition() {
        if factor.degree_or_zero() == 0 {
            continue;
        }
        for z in aberth(&factor)? {
            let value = polish(&factor, z);
            out.push(NumericRoot {
                value,
                multiplicity,
            });
        }
    }

    let scale: f64 = p.coeffs().iter().map(|c| to_f64(c).abs()).fold(0.0, f64::max);
    let pc: Vec<Complex<Dd>> = dd_coeffs(p);
    for root in &out {
        let z = Complex::new(Dd::from_f64(root.value.re), Dd::from_f64(root.value.im));
        let residual = eval_dd(&pc, z);
        let residual = residual.re.to_f64().hypot(residual.im.to_f64());
        if !(residual < tol * scale) {
            return Err(OracleError::OracleNonConvergence(ABERTH_CAP));
        }
    }

    out.sort_by(|a, b| {
        a.value
            .re
            .total_cmp(&b.value.re)
            .then(a.value.im.total_cmp(&b.value.im))
    });
    Ok(out)
}

fn dd_coeffs(p: &RatPoly) -> Vec<Complex<Dd>> {
    p.coeffs()
        .iter()
        .map(|c| Complex::new(Dd::from_rational(c), Dd::zero()))
        .collect()
}

fn eval_dd(coeffs: &[Complex<Dd>], z: Complex<Dd>) -> Complex<Dd> {
    let zero = Complex::new(Dd::zero(), Dd::zero());
    coeffs.iter().rev().fold(zero, |acc, c| acc * z + *c)
}

fn derivative_coeffs(coeffs: &[Complex<Dd>]) -> Vec<Complex<Dd>> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| *c * Complex::new(Dd::from_f64(i as f64), Dd::zero()))
        .collect()
}

/// Aberth–Ehrlich simultaneous iteration on a square-free polynomial.
fn aberth(f: &RatPoly) -> Result<Vec<Complex<f64>>, OracleError> {
    let n = f.degree().expect("nonconstant by construction");
    let coeffs: Vec<f64> = f.coeffs().iter().map(to_f64).collect();
    if n == 1 {
        return Ok(vec![Complex::new(-coeffs[0] / coeffs[1], 0.0)]);
    }

    let eval = |z: Complex<f64>| -> (Complex<f64>, Complex<f64>) {
        let mut v = Complex::new(0.0, 0.0);
        let mut dv = Complex::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
        }
        (v, dv)
    };

    // Deterministic initial guesses: a gently spiralled circle inside the
    // Cauchy bound, with an irrational angular offset so real-coefficient
    // symmetry cannot trap the iteration.
    let radius = to_f64(&f.cauchy_root_bound()).max(1e-3);
    let mut z: Vec<Complex<f64>> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.42;
            let r = radius * (0.55 + 0.4 * (k as f64 + 0.5) / (n as f64));
            Complex::from_polar(r, angle)
        })
        .collect();

    for _ in 0..ABERTH_CAP {
        let mut worst = 0.0f64;
        for i in 0..n {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let w = if dv.norm() == 0.0 {
                Complex::new(1e-8, 1e-8)
            } else {
                v / dv
            };
            let mut s = Complex::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - *zj;
                    if diff.norm() > 0.0 {
                        s += diff.inv();
                    }
                }
            }
            let denom = Complex::new(1.0, 0.0) - w * s;
            let correction = if denom.norm() == 0.0 { w } else { w / denom };
            z[i] -= correction;
            worst = worst.max(correction.norm() / z[i].norm().max(1.0));
        }
        // Near simple roots of moderate conditioning the `f64` Newton step
        // dithers at a few units of 1e-13 relative and never settles further,
        // so demand only that the simultaneous iteration has stopped moving at
        // the 1e-11 level. The mutual-repulsion term keeps the iterates on
        // distinct roots at that scale, and the double-double polish plus the
        // residual gate in `numeric_roots` supply the final accuracy.
        if worst < 1e-11 {
            return Ok(z);
        }
    }
    Err(OracleError::OracleNonConvergence(ABERTH_CAP))
}

/// Four double-double Newton steps on a square-free factor.
fn polish(f: &RatPoly, z0: Complex<f64>) -> Complex<f64> {
    let coeffs = dd_coeffs(f);
    let dcoeffs = derivative_coeffs(&coeffs);
    let mut z = Complex::new(Dd::from_f64(z0.re), Dd::from_f64(z0.im));
    for _ in 0..4 {
        let v = eval_dd(&coeffs, z);
        let dv = eval_dd(&dcoeffs, z);
        if dv.re.is_zero() && dv.im.is_zero() {
            break;
        }
        z = z - v / dv;
    }
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

/// A Monte-Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// Seeded Monte-Carlo estimate of `∫_B (1−‖z‖²)^s dV / vol(B)` over the unit
/// ball of `ℂ^n`, by rejection sampling from the enclosing cube. The exact
/// value is `n!/(s+1)_n` (see [`hua_reference`]).
pub fn hua_integral_mc(n: u32, s: f64, samples: u64, seed: u64) -> McEstimate {
    assert!(s > -1.0, "the integral needs s > -1");
    assert!(samples >= 2, "need at least two samples for a standard error");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = 2 * n as usize;
    let mut sum = 0.0f64;
    let mut sumsq = 0.0f64;
    let mut accepted = 0u64;
    let mut coords = vec![0.0f64; dim];
    while accepted < samples {
        let mut nsq = 0.0;
        for c in coords.iter_mut() {
            *c = rng.gen_range(-1.0..1.0);
            nsq += *c * *c;
        }
        if nsq < 1.0 {
            let v = (1.0 - nsq).powf(s);
            sum += v;
            sumsq += v * v;
            accepted += 1;
        }
    }
    let nf = samples as f64;
    let mean = sum / nf;
    let variance = ((sumsq / nf) - mean * mean).max(0.0) * nf / (nf - 1.0);
    McEstimate {
        value: mean,
        std_error: (variance / nf).sqrt(),
        samples,
    }
}

/// Exact value `n!/(s+1)_n` of the normalized ball integral, for real `s`.
pub fn hua_reference(n: u32, s: f64) -> f64 {
    (1..=n).map(|j| f64::from(j) / (s + f64::from(j))).product()
}

/// The Hua polynomial `χ_{a,b,r}` evaluated at a real argument.
pub fn chi_value(a: u32, b: u32, r: u32, s: f64) -> f64 {
    (1..=r)
        .map(|j| {
            let x = s + f64::from((j - 1) * a) / 2.0;
            let k = 1 + b + (r - j) * a;
            (1..=k).map(|i| x + f64::from(i)).product::<f64>()
        })
        .product()
}

/// Result of a quadrature-vs-closed-form comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureCheck {
    pub estimate: f64,
    pub reference: f64,
    pub rel_dev: f64,
}

/// Evaluation-budgeted adaptive Simpson quadrature.
struct Quadrature {
    budget: Cell<i64>,
    exhausted: Cell<bool>,
}

impl Quadrature {
    fn new(budget: i64) -> Self {
        Quadrature {
            budget: Cell::new(budget),
            exhausted: Cell::new(false),
        }
    }

    fn eval(&self, f: &dyn Fn(f64) -> f64, x: f64) -> f64 {
        let left = self.budget.get() - 1;
        self.budget.set(left);
        if left < 0 {
            self.exhausted.set(true);
            return 0.0;
        }
        f(x)
    }

    fn integrate(&self, f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
        if a >= b {
            return 0.0;
        }
        let m = 0.5 * (a + b);
        let fa = self.eval(f, a);
        let fm = self.eval(f, m);
        let fb = self.eval(f, b);
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        self.refine(f, a, b, fa, fm, fb, whole, tol, 52)
    }

    #[allow(clippy::too_many_arguments)]
    fn refine(
        &self,
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        if self.exhausted.get() {
            return whole;
        }
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = self.eval(f, lm);
        let frm = self.eval(f, rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        self.refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + self.refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// How close to 1 the quadrature dares approach when `(1−t)^s` is singular
/// (`−1 < s < 0`); the missing sliver is restored analytically.
const SINGULAR_TRIM: f64 = 1e-9;

/// Compares adaptive quadrature of the rank-`r` Selberg integrand
/// `∏(1−t_j)^s t_j^b ∏|t_j−t_k|^a` over `[0,1]^r` against the exact value
/// `C(a,b,r)/χ_{a,b,r}(s)`. Only `r ∈ {1, 2}` is supported.
pub fn selberg_check(
    a: u32,
    b: u32,
    r: u32,
    s: f64,
    tol: f64,
) -> Result<QuadratureCheck, OracleError> {
    assert!(r == 1 || r == 2, "quadrature is implemented for rank 1 and 2");
    assert!(s > -1.0, "the integral needs s > -1");
    let reference = selberg_constant(a, b, r).value() / chi_value(a, b, r, s);

    let quad = Quadrature::new(40_000_000);
    let upper = if s < 0.0 { 1.0 - SINGULAR_TRIM } else { 1.0 };
    // Analytic tail of ∫ (1−t)^s · g(t) dt over [upper, 1] with g frozen at 1:
    // g(1)·SINGULAR_TRIM^{1+s}/(1+s).
    let tail_weight = if s < 0.0 {
        SINGULAR_TRIM.powf(1.0 + s) / (1.0 + s)
    } else {
        0.0
    };

    let estimate = match r {
        1 => {
            let f = |t: f64| (1.0 - t).powf(s) * t.powi(b as i32);
            quad.integrate(&f, 0.0, upper, tol * 0.05) + tail_weight
        }
        _ => {
            let inner_tol = tol * 0.002;
            let inner = |t2: f64| -> f64 {
                let g = |t1: f64| {
                    (1.0 - t1).powf(s) * t1.powi(b as i32) * (t2 - t1).powi(a as i32)
                };
                quad.integrate(&g, 0.0, t2.min(upper), inner_tol)
                    + if t2 >= upper { tail_weight } else { 0.0 }
            };
            // Symmetry: twice the integral over the simplex {t1 < t2}.
            let outer = |t2: f64| (1.0 - t2).powf(s) * t2.powi(b as i32) * inner(t2);
            let main = quad.integrate(&outer, 0.0, upper, tol * 0.05);
            let tail = if s < 0.0 { tail_weight * inner(1.0) } else { 0.0 };
            2.0 * (main + tail)
        }
    };
    if quad.exhausted.get() {
        return Err(OracleError::QuadratureBudgetExceeded);
    }
    Ok(QuadratureCheck {
        estimate,
        reference,
        rel_dev: (estimate - reference).abs() / reference.abs(),
    })
}

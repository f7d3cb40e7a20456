//! Exact root localization relative to the critical line `Re η = 1/2`.
//!
//! The central question — do all roots of a real polynomial `p(η)` satisfy
//! `Re η < 1/2`? — is answered by shifting to `Q(w) = p(w + 1/2)` and
//! testing `Q` for Hurwitz stability (all roots in the open left half
//! plane). Everything here is exact rational arithmetic: Hurwitz matrices,
//! their leading principal minors via Gaussian elimination, and the
//! closed-form low-degree criteria that the surrounding theory states
//! directly in terms of derivatives at `1/2`.
//!
//! A strict verdict is decisive in both directions: `Q` (with positive
//! leading coefficient) is Hurwitz iff every leading principal minor of its
//! Hurwitz matrix is strictly positive. When the test fails, minors alone
//! do not distinguish roots *on* the critical line from roots beyond it;
//! callers that need that distinction must follow up with the exact axis
//! analysis in the decision layer.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmath::{rat, sign};
use crate::{RatPoly, Rational};

/// Errors from stability queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum LocalizationError {
    #[error("leading coefficient must be strictly positive")]
    LeadingCoefficientNotPositive,
    #[error("wrong degree: expected {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("polynomial must have degree at least 1")]
    DegreeZero,
}

/// Outcome of a stability test.
///
/// `hurwitz_minors` holds the tested quantities in evaluation order: the
/// leading principal minors `Δ_1, …, Δ_n` for the generic path, or the
/// sign-equivalent closed-form quantities for the specialized low-degree
/// criteria. `failed_index` is the 0-based position of the first entry
/// `≤ 0` (if any), and `boundary` records whether that entry is exactly
/// zero — a hint that roots may lie on the critical line, not a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub stable: bool,
    pub hurwitz_minors: Vec<Rational>,
    pub failed_index: Option<usize>,
    pub boundary: bool,
}

impl StabilityReport {
    fn from_quantities(quantities: Vec<Rational>) -> Self {
        let failed_index = quantities.iter().position(|v| sign(v) <= 0);
        let boundary = failed_index.map_or(false, |i| quantities[i].is_zero());
        StabilityReport {
            stable: failed_index.is_none(),
            hurwitz_minors: quantities,
            failed_index,
            boundary,
        }
    }
}

/// Exact determinant by Gaussian elimination with row pivoting.
fn det_rational(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut flip = false;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Rational::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            flip = !flip;
        }
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &m[col][col];
            for k in col..n {
                let delta = &factor * &m[col][k];
                m[row][k] -= delta;
            }
        }
    }
    let mut det = Rational::one();
    for (i, row) in m.iter().enumerate() {
        det *= row[i].clone();
    }
    if flip {
        -det
    } else {
        det
    }
}

/// Coefficients in descending order `a_0, …, a_n` with `a_0` the leading
/// coefficient.
fn descending(p: &RatPoly) -> Vec<Rational> {
    let mut v: Vec<Rational> = p.coeffs().to_vec();
    v.reverse();
    v
}

/// The leading principal minors `Δ_1, …, Δ_n` of the Hurwitz matrix of
/// `p = a_0 z^n + ⋯ + a_n` (entry `(i,j)` is `a_{2j−i+1}`, zero out of
/// range). Requires `a_0 > 0`; a degree-0 input yields an empty list.
pub fn hurwitz_minors(p: &RatPoly) -> Result<Vec<Rational>, LocalizationError> {
    let lead = p.leading().cloned().unwrap_or_else(Rational::zero);
    if sign(&lead) <= 0 {
        return Err(LocalizationError::LeadingCoefficientNotPositive);
    }
    let n = p.degree_or_zero();
    let a = descending(p);
    let entry = |i: usize, j: usize| -> Rational {
        // index 2j − i + 1 in signed arithmetic
        let idx = 2 * (j as i64) - (i as i64) + 1;
        if idx < 0 || idx > n as i64 {
            Rational::zero()
        } else {
            a[idx as usize].clone()
        }
    };
    let mut minors = Vec::with_capacity(n);
    for k in 1..=n {
        let mat: Vec<Vec<Rational>> = (0..k)
            .map(|i| (0..k).map(|j| entry(i, j)).collect())
            .collect();
        minors.push(det_rational(mat));
    }
    Ok(minors)
}

/// Full Routh–Hurwitz test: with `a_0 > 0`, all roots lie in the open left
/// half plane iff `Δ_k > 0` for every `k`.
pub fn is_stable(p: &RatPoly) -> Result<StabilityReport, LocalizationError> {
    Ok(StabilityReport::from_quantities(hurwitz_minors(p)?))
}

/// Liénard–Chipart test for degree 4 exactly, in the reduced form used by
/// the closed-form criteria: with `a_0 > 0`, stability holds iff
/// `a_4 > 0`, `a_3 > 0`, `a_2 > 0` and
/// `Δ_3 = a_1 a_2 a_3 − a_1² a_4 − a_0 a_3² > 0`.
/// (`Δ_3 > 0` with `a_2, a_3 > 0` forces `a_1 > 0`, so the remaining
/// Routh–Hurwitz minors come for free.)
pub fn lienard_chipart_deg4(p: &RatPoly) -> Result<StabilityReport, LocalizationError> {
    let n = p.degree_or_zero();
    if n != 4 {
        return Err(LocalizationError::WrongDegree {
            expected: 4,
            got: n,
        });
    }
    let a = descending(p);
    if sign(&a[0]) <= 0 {
        return Err(LocalizationError::LeadingCoefficientNotPositive);
    }
    let delta3 =
        &a[1] * &a[2] * &a[3] - &a[1] * &a[1] * &a[4] - &a[0] * &a[3] * &a[3];
    Ok(StabilityReport::from_quantities(vec![
        a[4].clone(),
        a[3].clone(),
        a[2].clone(),
        delta3,
    ]))
}

/// Shifts to the critical line: `Q(w) = p(w + 1/2)`, then flips the sign if
/// needed so the leading coefficient is positive (roots are unchanged).
pub fn shift_to_half(p: &RatPoly) -> RatPoly {
    let q = p.compose_affine(&Rational::one(), &rat(1, 2));
    match q.leading() {
        Some(l) if sign(l) < 0 => -q,
        _ => q,
    }
}

/// Decides whether **all** roots of `p` satisfy `Re η < 1/2`.
///
/// Degrees 1–4 use the closed-form criteria expressed through the shifted
/// coefficients (equivalently, derivatives of `p` at `1/2`); every degree
/// also runs the generic Hurwitz-minor path on `p(w + 1/2)`, and the two
/// verdicts are checked against each other before the specialized report is
/// returned.
pub fn roots_left_of_half(p: &RatPoly) -> Result<StabilityReport, LocalizationError> {
    let n = match p.degree() {
        None | Some(0) => return Err(LocalizationError::DegreeZero),
        Some(n) => n,
    };
    let q = shift_to_half(p);
    let generic = is_stable(&q)?;
    if n > 4 {
        return Ok(generic);
    }
    let a = descending(&q);
    let quantities = match n {
        1 => vec![a[1].clone()],
        // Q(0) = p(1/2) first, then Q′(0) = p′(1/2), matching the order in
        // which the closed-form criteria are stated.
        2 => vec![a[2].clone(), a[1].clone()],
        3 => {
            let delta2 = &a[1] * &a[2] - &a[0] * &a[3];
            vec![a[3].clone(), a[2].clone(), delta2]
        }
        4 => {
            return lienard_chipart_deg4(&q).map(|special| {
                assert_eq!(
                    special.stable, generic.stable,
                    "degree-4 criterion disagrees with Hurwitz minors for {q:?}"
                );
                special
            });
        }
        _ => unreachable!(),
    };
    let special = StabilityReport::from_quantities(quantities);
    assert_eq!(
        special.stable, generic.stable,
        "low-degree criterion disagrees with Hurwitz minors for {q:?}"
    );
    Ok(special)
}

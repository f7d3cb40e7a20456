//! Sturm-sequence real-root counting, isolation, and bisection refinement.
//!
//! All arithmetic is exact. Chains are normalized to primitive integer
//! coefficients after every remainder step (a positive rescaling, so sign
//! sequences are untouched) to keep coefficient growth in check up to the
//! largest catalog degree (27).

use num_traits::{One, Signed, Zero};

use super::{rat_int, sign, ExactmathError, Interval};
use crate::{RatPoly, Rational};

/// One isolated real root: a bracket `(lo, hi]` containing exactly one
/// distinct root, its multiplicity in the original polynomial, and the exact
/// rational value when bisection happened to land on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub interval: Interval,
    pub multiplicity: u32,
    pub exact: Option<Rational>,
}

/// Sturm chain of a square-free polynomial: `p, p', −rem(…), …`, each entry
/// rescaled to primitive integer form.
fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.primitive_normalized(), p.derivative().primitive_normalized()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push((-r).primitive_normalized());
    }
}

/// Sign variations of the chain at `x`; exact zeros are skipped, which gives
/// the half-open counting convention `(a, b]` even when an endpoint is a root.
fn variations(chain: &[RatPoly], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for q in chain {
        let s = sign(&q.eval(x));
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct roots of the (square-free) chain owner in `(lo, hi]`.
fn count_in(chain: &[RatPoly], lo: &Rational, hi: &Rational) -> usize {
    if lo >= hi {
        return 0;
    }
    variations(chain, lo) - variations(chain, hi)
}

/// Exact number of distinct real roots of `p` in the half-open interval
/// `(iv.lo, iv.hi]`. The input must be square-free (deflate with
/// [`RatPoly::squarefree_part`] first); panics on the zero polynomial.
pub fn sturm_count(p: &RatPoly, iv: &Interval) -> Result<usize, ExactmathError> {
    assert!(!p.is_zero(), "Sturm count of the zero polynomial");
    let g = p.gcd(&p.derivative());
    if g.degree_or_zero() > 0 {
        return Err(ExactmathError::NonSquareFree(g.degree_or_zero()));
    }
    let chain = sturm_chain(p);
    Ok(count_in(&chain, iv.lo(), iv.hi()))
}

/// Number of distinct real roots of `p` strictly greater than `x0`
/// (multiplicity ignored; `p` need not be square-free).
pub fn count_roots_above(p: &RatPoly, x0: &Rational) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    let sf = p.squarefree_part();
    if sf.degree_or_zero() == 0 {
        return 0;
    }
    let chain = sturm_chain(&sf);
    let bound = sf.cauchy_root_bound();
    let hi = if &bound > x0 { bound } else { x0 + Rational::one() };
    count_in(&chain, x0, &hi)
}

/// Number of distinct positive real roots of `p` (multiplicity ignored).
pub fn count_positive_roots(p: &RatPoly) -> usize {
    count_roots_above(p, &Rational::zero())
}

struct Isolator<'a> {
    factor: &'a RatPoly,
    chain: Vec<RatPoly>,
}

impl Isolator<'_> {
    /// Splits a bracket known to contain exactly one root of `factor` into a
    /// half of half the width still containing it.
    fn shrink(&self, root: &mut PendingRoot) {
        if let Some(x) = &root.exact {
            // Tighten around the known exact value instead of bisecting.
            let lo = root.lo.clone().max(x - root_gap(&root.lo, &root.hi));
            root.lo = lo;
            root.hi = x.clone();
            return;
        }
        let mid = (&root.lo + &root.hi) / rat_int(2);
        if self.factor.eval(&mid).is_zero() {
            root.exact = Some(mid.clone());
            root.hi = mid;
            return;
        }
        if count_in(&self.chain, &root.lo, &mid) == 1 {
            root.hi = mid;
        } else {
            root.lo = mid;
        }
    }
}

fn root_gap(lo: &Rational, hi: &Rational) -> Rational {
    (hi - lo) / rat_int(4)
}

struct PendingRoot {
    lo: Rational,
    hi: Rational,
    multiplicity: u32,
    exact: Option<Rational>,
    owner: usize,
}

/// Isolates every distinct real root of `p` in `(lo, hi]`: pairwise-disjoint
/// brackets, sorted ascending, each annotated with the root's multiplicity in
/// `p`. Exact rational roots hit by bisection are reported exactly.
pub fn isolate_roots_in(p: &RatPoly, lo: &Rational, hi: &Rational) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    let factors: Vec<(RatPoly, u32)> = p.squarefree_decomposition();
    let isolators: Vec<Isolator> = factors
        .iter()
        .filter(|(f, _)| f.degree_or_zero() > 0)
        .map(|(f, _)| Isolator {
            factor: f,
            chain: sturm_chain(f),
        })
        .collect();
    let mults: Vec<u32> = factors
        .iter()
        .filter(|(f, _)| f.degree_or_zero() > 0)
        .map(|(_, m)| *m)
        .collect();

    let mut pending: Vec<PendingRoot> = Vec::new();
    for (idx, iso) in isolators.iter().enumerate() {
        let mut stack = vec![(lo.clone(), hi.clone())];
        while let Some((a, b)) = stack.pop() {
            let n = count_in(&iso.chain, &a, &b);
            match n {
                0 => {}
                1 => {
                    let exact = if iso.factor.eval(&b).is_zero() {
                        Some(b.clone())
                    } else {
                        None
                    };
                    pending.push(PendingRoot {
                        lo: a,
                        hi: b,
                        multiplicity: mults[idx],
                        exact,
                        owner: idx,
                    });
                }
                _ => {
                    let mid = (&a + &b) / rat_int(2);
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
    }

    // Brackets from different square-free factors can overlap even though the
    // roots themselves are distinct; shrink until pairwise disjoint.
    loop {
        pending.sort_by(|x, y| x.lo.cmp(&y.lo).then(x.hi.cmp(&y.hi)));
        let mut overlap = None;
        for i in 1..pending.len() {
            if pending[i].lo < pending[i - 1].hi {
                overlap = Some(i);
                break;
            }
        }
        match overlap {
            None => break,
            Some(i) => {
                let (left, right) = pending.split_at_mut(i);
                let a = &mut left[i - 1];
                let b = &mut right[0];
                isolators[a.owner].shrink(a);
                isolators[b.owner].shrink(b);
            }
        }
    }

    pending
        .into_iter()
        .map(|r| IsolatedRoot {
            interval: Interval::new(r.lo, r.hi),
            multiplicity: r.multiplicity,
            exact: r.exact,
        })
        .collect()
}

/// Isolates all distinct real roots of `p` (any sign).
pub fn isolate_real_roots(p: &RatPoly) -> Vec<IsolatedRoot> {
    if p.degree_or_zero() == 0 {
        assert!(!p.is_zero(), "root isolation of the zero polynomial");
        return Vec::new();
    }
    let bound = p.cauchy_root_bound();
    isolate_roots_in(p, &(-bound.clone()), &bound)
}

/// Isolates the distinct strictly positive real roots of `p`, sorted
/// ascending. A root at zero (if any) is excluded.
pub fn isolate_positive_roots(p: &RatPoly) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    let order = p.trailing_zero_order();
    let stripped = p.div_monomial_exact(order);
    if stripped.degree_or_zero() == 0 {
        return Vec::new();
    }
    let bound = stripped.cauchy_root_bound();
    isolate_roots_in(&stripped, &Rational::zero(), &bound)
}

/// Refines an isolating bracket to a rational within `tol` of the root, by
/// bisection (dyadic midpoints). The returned value always lies inside the
/// input interval; an exactly-rational root is returned exactly.
pub fn refine_root(
    p: &RatPoly,
    iv: &Interval,
    tol: &Rational,
) -> Result<Rational, ExactmathError> {
    if !tol.is_positive() {
        return Err(ExactmathError::ToleranceNotPositive);
    }
    let mut hi = iv.hi().clone();
    if p.eval(&hi).is_zero() {
        return Ok(hi);
    }
    let mut lo = iv.lo().clone();
    let two = rat_int(2);

    // The left endpoint may sit exactly on a *different* root of p (isolation
    // is half-open); probe inward until the bracket has clean opposite signs.
    // The sign right of the isolated root never changes, so `s_hi` stays valid
    // as `hi` moves inward.
    let s_hi = sign(&p.eval(&hi));
    let mut s_lo = sign(&p.eval(&lo));
    while s_lo == 0 {
        let probe = (&lo + &hi) / &two;
        let s_probe = sign(&p.eval(&probe));
        if s_probe == 0 {
            return Ok(probe);
        }
        if s_probe == s_hi {
            hi = probe;
        } else {
            lo = probe;
            s_lo = s_probe;
        }
    }

    while &hi - &lo >= two.clone() * tol.clone() {
        let mid = (&lo + &hi) / &two;
        let s_mid = sign(&p.eval(&mid));
        if s_mid == 0 {
            return Ok(mid);
        }
        if s_mid == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((&lo + &hi) / &two)
}

/// Isolates and refines in one call: all distinct real roots of `p` in
/// ascending order, each within `tol`.
pub fn real_roots_refined(p: &RatPoly, tol: &Rational) -> Vec<Rational> {
    isolate_real_roots(p)
        .iter()
        .map(|r| refine_root(p, &r.interval, tol).expect("positive tolerance"))
        .collect()
}

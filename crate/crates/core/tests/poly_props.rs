//! Property tests for the exact polynomial layer: ring laws, evaluation
//! homomorphisms, affine composition, Euclidean division, square-free
//! structure, Sturm counting, and root isolation/refinement on polynomials
//! with constructed root sets.

use proptest::prelude::*;

use lqk_core::exactmath::{
    isolate_real_roots, pow10_neg, rat, rational_roots, refine_root, sturm_count, Interval,
};
use lqk_core::{RatPoly, Rational};
use num_traits::{One, Signed, Zero};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| rat(n, d))
}

fn arb_poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(arb_rational(), 0..=max_deg + 1).prop_map(RatPoly::new)
}

fn arb_nonzero_poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    arb_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

/// Distinct rationals paired with multiplicities, as constructed root data.
fn arb_root_data(max_roots: usize) -> impl Strategy<Value = Vec<(Rational, u32)>> {
    proptest::collection::btree_map((-10i64..=10, 1i64..=4), 1u32..=2, 1..=max_roots).prop_map(
        |m| {
            let mut out: Vec<(Rational, u32)> = Vec::new();
            for ((n, d), mult) in m {
                let r = rat(n, d);
                if out.iter().all(|(seen, _)| seen != &r) {
                    out.push((r, mult));
                }
            }
            out.sort_by(|a, b| a.0.cmp(&b.0));
            out
        },
    )
}

fn from_root_data(data: &[(Rational, u32)]) -> RatPoly {
    let mut p = RatPoly::one();
    for (r, mult) in data {
        for _ in 0..*mult {
            p = p * RatPoly::new(vec![-r.clone(), Rational::one()]);
        }
    }
    p
}

proptest! {
    #[test]
    fn ring_laws(p in arb_poly(5), q in arb_poly(5), r in arb_poly(5)) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &RatPoly::zero(), p.clone());
        prop_assert_eq!(&p * &RatPoly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in arb_poly(5),
        q in arb_poly(5),
        x in arb_rational(),
    ) {
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn affine_composition_evaluates_pointwise(
        p in arb_poly(5),
        a in arb_rational(),
        b in arb_rational(),
        x in arb_rational(),
    ) {
        let composed = p.compose_affine(&a, &b);
        prop_assert_eq!(composed.eval(&x), p.eval(&(&a * &x + &b)));
    }

    #[test]
    fn affine_composition_round_trips(
        p in arb_poly(5),
        a in arb_rational().prop_filter("invertible", |a| !a.is_zero()),
        b in arb_rational(),
    ) {
        let inv_a = Rational::one() / &a;
        let inv_b = -&b / &a;
        prop_assert_eq!(p.compose_affine(&a, &b).compose_affine(&inv_a, &inv_b), p);
    }

    #[test]
    fn division_identity_holds(p in arb_poly(6), q in arb_nonzero_poly(4)) {
        let (quot, rem) = p.divrem(&q);
        prop_assert_eq!(&(&quot * &q) + &rem, p);
        prop_assert!(rem.is_zero() || rem.degree().unwrap() < q.degree().unwrap());
    }

    #[test]
    fn primitive_form_keeps_sign_and_roots(p in arb_nonzero_poly(5), x in arb_rational()) {
        let prim = p.primitive_normalized();
        // Integer coefficients, jointly coprime.
        let mut gcd = num_bigint::BigInt::ZERO;
        for c in prim.coeffs() {
            prop_assert!(c.is_integer());
            gcd = num_integer::gcd(gcd, c.to_integer());
        }
        prop_assert_eq!(gcd, num_bigint::BigInt::from(1));
        // Positive rescaling: values keep their sign everywhere.
        prop_assert_eq!(p.eval(&x).is_positive(), prim.eval(&x).is_positive());
        prop_assert_eq!(p.eval(&x).is_zero(), prim.eval(&x).is_zero());
    }

    #[test]
    fn squarefree_decomposition_reconstructs(p in arb_nonzero_poly(6)) {
        prop_assume!(p.degree_or_zero() >= 1);
        let lead = p.leading().unwrap().clone();
        let mut product = RatPoly::constant(lead);
        for (factor, mult) in p.squarefree_decomposition() {
            // Each factor is monic and square-free.
            prop_assert_eq!(factor.leading().unwrap(), &Rational::one());
            prop_assert_eq!(factor.gcd(&factor.derivative()).degree_or_zero(), 0);
            product = product * factor.pow(mult as usize);
        }
        prop_assert_eq!(product, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sturm_counts_are_additive(
        data in arb_root_data(4),
        cuts in proptest::collection::vec(arb_rational(), 3),
    ) {
        let p = from_root_data(&data).squarefree_part();
        let mut cuts = cuts;
        cuts.sort();
        let (a, b, c) = (cuts[0].clone(), cuts[1].clone(), cuts[2].clone());
        let whole = sturm_count(&p, &Interval::new(a.clone(), c.clone())).unwrap();
        let left = sturm_count(&p, &Interval::new(a, b.clone())).unwrap();
        let right = sturm_count(&p, &Interval::new(b, c)).unwrap();
        prop_assert_eq!(whole, left + right);
    }

    #[test]
    fn isolation_brackets_every_constructed_root(data in arb_root_data(4)) {
        let p = from_root_data(&data);
        let isolated = isolate_real_roots(&p);
        prop_assert_eq!(isolated.len(), data.len());
        let tol = pow10_neg(9);
        for (found, (root, mult)) in isolated.iter().zip(&data) {
            prop_assert!(found.interval.contains(root));
            prop_assert_eq!(found.multiplicity, *mult);
            let refined = refine_root(&p.squarefree_part(), &found.interval, &tol).unwrap();
            prop_assert!((refined - root).abs() <= tol);
        }
    }

    #[test]
    fn rational_root_search_is_exhaustive_on_small_inputs(
        data in arb_root_data(3),
        irrational_factor in proptest::bool::ANY,
        scale in arb_rational().prop_filter("nonzero", |s| !s.is_zero()),
    ) {
        let mut p = from_root_data(&data).scale(&scale);
        if irrational_factor {
            // x² − 2 contributes no rational roots.
            p = p * RatPoly::new(vec![rat(-2, 1), rat(0, 1), rat(1, 1)]);
        }
        let expected: Vec<Rational> = data.iter().map(|(r, _)| r.clone()).collect();
        prop_assert_eq!(rational_roots(&p), expected);
    }
}

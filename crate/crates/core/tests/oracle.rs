//! Checks for the independent numeric layer: polished root finding against
//! known algebraic values, double-double arithmetic against exact rationals,
//! and both integral oracles against their closed-form references.

use num_complex::Complex;
use num_traits::{One, Signed};

use lqk_core::domains::{catalog_lookup, hua_polynomial, DomainSpec};
use lqk_core::exactmath::{from_f64, rat, rat_int, to_f64};
use lqk_core::luqikeng::{decide, instantiate_at_mu};
use lqk_core::oracle::dd::Dd;
use lqk_core::oracle::{
    chi_value, hua_integral_mc, hua_reference, numeric_roots, selberg_check, OracleError,
};
use lqk_core::{RatPoly, Rational};

fn domain(name: &str) -> DomainSpec {
    catalog_lookup(name).expect("catalog entry")
}

fn int_poly(coeffs: &[i64]) -> RatPoly {
    RatPoly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
}

/// `∏ (x − r)^k` from a list of (root, multiplicity) pairs.
fn from_roots(roots: &[(Rational, u32)]) -> RatPoly {
    let mut p = RatPoly::one();
    for (r, k) in roots {
        for _ in 0..*k {
            p = p * RatPoly::new(vec![-r.clone(), rat_int(1)]);
        }
    }
    p
}

/// Exact rational image of a double-double value (the sum is exact).
fn dd_to_rational(x: Dd) -> Rational {
    from_f64(x.hi) + from_f64(x.lo)
}

#[test]
fn root_goldens_real_and_complex() {
    // x² − 2 → ±√2.
    let roots = numeric_roots(&int_poly(&[-2, 0, 1]), 1e-12).unwrap();
    assert_eq!(roots.len(), 2);
    let sqrt2 = 2.0f64.sqrt();
    assert!((roots[0].value.re + sqrt2).abs() < 1e-14);
    assert!((roots[1].value.re - sqrt2).abs() < 1e-14);
    assert!(roots.iter().all(|r| r.value.im.abs() < 1e-14));
    assert!(roots.iter().all(|r| r.multiplicity == 1));

    // (x−1)(x−2)(x−3), expanded by hand.
    let roots = numeric_roots(&int_poly(&[-6, 11, -6, 1]), 1e-12).unwrap();
    let expected = [1.0, 2.0, 3.0];
    assert_eq!(roots.len(), 3);
    for (root, want) in roots.iter().zip(expected) {
        assert!((root.value.re - want).abs() < 1e-13, "{:?}", root);
        assert!(root.value.im.abs() < 1e-13);
    }

    // x² + 1 → ±i, sorted by imaginary part once real parts tie.
    let roots = numeric_roots(&int_poly(&[1, 0, 1]), 1e-12).unwrap();
    assert!((roots[0].value - Complex::new(0.0, -1.0)).norm() < 1e-14);
    assert!((roots[1].value - Complex::new(0.0, 1.0)).norm() < 1e-14);

    // Rational roots that need denominator clearing: (x − 1/3)(x − 1/7).
    let p = from_roots(&[(rat(1, 3), 1), (rat(1, 7), 1)]);
    let roots = numeric_roots(&p, 1e-12).unwrap();
    assert!((roots[0].value.re - 1.0 / 7.0).abs() < 1e-15);
    assert!((roots[1].value.re - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn root_multiplicities_from_squarefree_decomposition() {
    // (x−1)²(x+2): the repeated root is reported once, with its multiplicity.
    let p = from_roots(&[(rat_int(1), 2), (rat_int(-2), 1)]);
    let roots = numeric_roots(&p, 1e-12).unwrap();
    assert_eq!(roots.len(), 2);
    assert!((roots[0].value.re + 2.0).abs() < 1e-13);
    assert_eq!(roots[0].multiplicity, 1);
    assert!((roots[1].value.re - 1.0).abs() < 1e-13);
    assert_eq!(roots[1].multiplicity, 2);

    // (x−1)³(x+2)²: multiplicities stay exact integers and add up to deg p.
    let p = from_roots(&[(rat_int(1), 3), (rat_int(-2), 2)]);
    let roots = numeric_roots(&p, 1e-12).unwrap();
    assert_eq!(roots.len(), 2);
    assert_eq!(roots[0].multiplicity, 2);
    assert_eq!(roots[1].multiplicity, 3);
    let total: u32 = roots.iter().map(|r| r.multiplicity).sum();
    assert_eq!(total as usize, p.degree().unwrap());
}

#[test]
fn nearby_simple_roots_converge_within_the_iteration_cap() {
    // Frozen regression: four simple real roots on a 1/64 grid, the closest
    // pair 1/32 apart. The f64 stage's per-sweep correction dithers at a few
    // units of 1e-13 relative here, so an over-tight step criterion spins to
    // the iteration cap even though the iterates are already exact to machine
    // precision.
    let p = from_roots(&[
        (rat(45, 64), 1),
        (rat(77, 64), 1),
        (rat(87, 64), 1),
        (rat(89, 64), 1),
    ]);
    let roots = numeric_roots(&p, 1e-12).expect("simple well-separated roots must converge");
    assert_eq!(roots.len(), 4);
    for (root, want) in roots.iter().zip([45.0, 77.0, 87.0, 89.0]) {
        assert!((root.value.re - want / 64.0).abs() < 1e-14, "{root:?}");
        assert!(root.value.im.abs() < 1e-14);
        assert_eq!(root.multiplicity, 1);
    }
}

#[test]
fn roots_are_invariant_under_scaling() {
    let p = int_poly(&[-6, 11, -6, 1]);
    let scaled_up = p.scale(&rat_int(7));
    let scaled_down = p.scale(&rat(1, 3));
    let base = numeric_roots(&p, 1e-12).unwrap();
    for q in [scaled_up, scaled_down] {
        let other = numeric_roots(&q, 1e-12).unwrap();
        assert_eq!(base.len(), other.len());
        for (x, y) in base.iter().zip(&other) {
            assert!((x.value - y.value).norm() < 1e-12);
            assert_eq!(x.multiplicity, y.multiplicity);
        }
    }
}

#[test]
fn representative_polynomial_roots_track_the_decision() {
    // For the 3-ball at m = 1 the threshold is √2: below it no root of
    // P_μ^m may cross Re η = 1/2, above it at least one must.
    let spec = domain("I_{1,3}");
    for (mu, expect_crossing) in [(rat_int(1), false), (rat_int(2), true)] {
        let p = instantiate_at_mu(&spec, 1, &mu);
        let roots = numeric_roots(&p, 1e-10).unwrap();
        let crossing = roots.iter().filter(|r| r.value.re > 0.5).count();
        assert_eq!(crossing > 0, expect_crossing, "μ = {mu}");
        let verdict = decide(&spec, 1, &mu).unwrap();
        assert_eq!(verdict.is_lu_qikeng, !expect_crossing);
    }
}

#[test]
fn degenerate_inputs_are_rejected() {
    assert_eq!(
        numeric_roots(&int_poly(&[5]), 1e-12),
        Err(OracleError::ConstantPolynomial)
    );
    assert_eq!(
        numeric_roots(&RatPoly::new(vec![]), 1e-12),
        Err(OracleError::ConstantPolynomial)
    );
}

#[test]
fn dd_images_of_rationals_are_correctly_rounded() {
    // Relative error of the two-component image must be ≈ 2⁻¹⁰⁶; we allow
    // 2⁻¹⁰⁴ slack. A plain f64 is only good to 2⁻⁵³, so this pins the lo
    // component really carrying the remainder.
    let tiny = Rational::new(1.into(), num_bigint::BigInt::from(2u8).pow(104));
    for x in [rat(1, 3), rat(22, 7), rat(-355, 113), rat(1, 10)] {
        let err = (dd_to_rational(Dd::from_rational(&x)) - &x).abs();
        assert!(err <= &tiny * x.abs(), "x = {x}, err = {err}");
    }
}

#[test]
fn dd_arithmetic_matches_exact_rationals() {
    let bound = Rational::new(1.into(), num_bigint::BigInt::from(2u8).pow(99));
    let a_exact = rat(1, 3);
    let b_exact = rat(1, 7);
    let a = Dd::from_rational(&a_exact);
    let b = Dd::from_rational(&b_exact);
    let cases: [(Dd, Rational); 4] = [
        (a + b, rat(10, 21)),
        (a - b, rat(4, 21)),
        (a * b, rat(1, 21)),
        (a / b, rat(7, 3)),
    ];
    for (got, want) in cases {
        let err = (dd_to_rational(got) - &want).abs();
        assert!(err <= &bound * want.abs(), "want {want}, err {err}");
    }
    assert_eq!(dd_to_rational((-a).abs()), dd_to_rational(a));
}

#[test]
fn complex_dd_multiplication_is_exact_on_integers() {
    let c = |re: f64, im: f64| Complex::new(Dd::from_f64(re), Dd::from_f64(im));
    let product = c(1.0, 2.0) * c(3.0, 4.0);
    assert_eq!(product.re.to_f64(), -5.0);
    assert_eq!(product.im.to_f64(), 10.0);
    let quotient = product / c(3.0, 4.0);
    assert!((quotient.re.to_f64() - 1.0).abs() < 1e-30);
    assert!((quotient.im.to_f64() - 2.0).abs() < 1e-30);
}

#[test]
fn mc_ball_integral_within_four_sigma() {
    for (n, s, reference) in [(1, 1.0, 0.5), (2, 1.0, 1.0 / 3.0)] {
        let est = hua_integral_mc(n, s, 20_000, 42);
        assert_eq!(est.samples, 20_000);
        assert!(est.std_error > 0.0 && est.std_error < 0.02);
        assert!(
            (est.value - reference).abs() < 4.0 * est.std_error,
            "n={n} s={s}: {est:?} vs {reference}"
        );
        assert_eq!(reference, hua_reference(n, s));
    }
    // Same seed, same stream, bit-identical estimate.
    let a = hua_integral_mc(2, 1.0, 5_000, 7);
    let b = hua_integral_mc(2, 1.0, 5_000, 7);
    assert_eq!(a, b);
}

#[test]
fn mc_is_exact_at_s_zero() {
    let est = hua_integral_mc(3, 0.0, 1_000, 1);
    assert_eq!(est.value, 1.0);
    assert_eq!(est.std_error, 0.0);
}

#[test]
fn hua_reference_closed_forms() {
    assert_eq!(hua_reference(1, 1.0), 0.5);
    assert!((hua_reference(2, 1.0) - 1.0 / 3.0).abs() < 1e-15);
    // n!/(s+1)_n at n = 3, s = 2: 6/(3·4·5).
    assert!((hua_reference(3, 2.0) - 0.1).abs() < 1e-15);
    for n in 1..6 {
        assert_eq!(hua_reference(n, 0.0), 1.0);
    }
}

#[test]
fn chi_value_matches_exact_polynomial() {
    assert_eq!(chi_value(1, 0, 2, 1.0), 15.0);
    for name in ["I_{1,2}", "IV_3", "I_{2,2}", "II_4"] {
        let spec = domain(name);
        let chi = hua_polynomial(&spec);
        for s in [rat_int(0), rat_int(1), rat(3, 2), rat_int(5)] {
            let exact = to_f64(&chi.eval(&s));
            let float = chi_value(spec.a, spec.b, spec.r, to_f64(&s));
            assert!(
                (float - exact).abs() <= 1e-12 * exact.abs(),
                "{name} at s={s}: {float} vs {exact}"
            );
        }
    }
}

#[test]
fn selberg_quadrature_rank_one() {
    // b = 0: ∫₀¹ (1−t)^s dt = 1/(s+1).
    let check = selberg_check(1, 0, 1, 1.0, 1e-9).unwrap();
    assert_eq!(check.reference, 0.5);
    assert!(check.rel_dev < 1e-8, "{check:?}");

    // b = 2: ∫₀¹ t²(1−t) dt = 1/12 = 2!/χ at s = 1.
    let check = selberg_check(3, 2, 1, 1.0, 1e-9).unwrap();
    assert!((check.reference - 1.0 / 12.0).abs() < 1e-15);
    assert!(check.rel_dev < 1e-8, "{check:?}");
}

#[test]
fn selberg_quadrature_rank_one_singular() {
    // s = −1/2 makes the integrand blow up at t = 1; the trimmed sliver is
    // restored analytically and the total is ∫₀¹ (1−t)^{−1/2} dt = 2.
    let check = selberg_check(1, 0, 1, -0.5, 1e-7).unwrap();
    assert_eq!(check.reference, 2.0);
    assert!(check.rel_dev < 1e-5, "{check:?}");
}

#[test]
fn selberg_quadrature_rank_two() {
    // (a, b, s) = (1, 0, 0): the double integral is 1/3, matching the
    // normalization constant of the rank-2 unit disc product.
    let check = selberg_check(1, 0, 2, 0.0, 1e-8).unwrap();
    assert!((check.reference - 1.0 / 3.0).abs() < 1e-15);
    assert!(check.rel_dev < 1e-6, "{check:?}");

    // (a, b, s) = (2, 0, 1): value 2/72 = 1/36.
    let check = selberg_check(2, 0, 2, 1.0, 1e-8).unwrap();
    assert!((check.reference - 1.0 / 36.0).abs() < 1e-15);
    assert!(check.rel_dev < 1e-6, "{check:?}");
}

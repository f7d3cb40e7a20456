//! Cross-check suites: each suite confronts the exact decision machinery
//! with an independent numeric computation and reports pass/fail with the
//! measured numbers.

use serde_json::{json, Value};

use lqk_core::domains::catalog_lookup;
use lqk_core::exactmath::{rat, rat_int};
use lqk_core::luqikeng::{decide, instantiate_at_mu, threshold};
use lqk_core::oracle::{hua_integral_mc, hua_reference, numeric_roots, selberg_check};
use lqk_core::Rational;

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub fn run_all(seed: u64, samples: u64, tol: &Rational) -> Vec<SuiteResult> {
    vec![
        localization_suite(tol),
        ball_integral_suite(seed, samples),
        quadrature_suite(),
    ]
}

/// Exact half-plane decision vs. numerically localized roots, over a probe
/// grid straddling every computed threshold.
fn localization_suite(tol: &Rational) -> SuiteResult {
    let domains = ["I_{1,1}", "I_{1,2}", "I_{1,3}", "IV_3", "I_{1,4}", "IV_4"];
    let band = 1e-8f64;
    let mut probes = 0usize;
    let mut skipped = 0usize;
    let mut mismatches = Vec::new();
    for name in domains {
        let spec = catalog_lookup(name).expect("catalog domain");
        for m in 1..=8u32 {
            let report = threshold(&spec, m, tol);
            let mut mus: Vec<Rational> = vec![rat(1, 2)];
            let roots: Vec<&Rational> = report
                .mu_m_1
                .iter()
                .chain(report.mu_m_2.iter())
                .map(|r| &r.value)
                .collect();
            for (i, root) in roots.iter().enumerate() {
                // Midpoint of the previous region and a point past the root.
                let prev = if i == 0 { rat_int(0) } else { roots[i - 1].clone() };
                mus.push((prev + *root) / rat_int(2));
                mus.push(*root + rat(1, 3));
            }
            mus.push(roots.last().map_or(rat_int(1), |r| (*r).clone()) + rat_int(5));
            for mu in mus {
                let verdict = match decide(&spec, m, &mu) {
                    Ok(v) => v,
                    Err(_) => {
                        skipped += 1;
                        continue;
                    }
                };
                if verdict.boundary {
                    skipped += 1;
                    continue;
                }
                let inst = instantiate_at_mu(&spec, m, &mu);
                let numeric = match numeric_roots(&inst, 1e-10) {
                    Ok(r) => r,
                    Err(e) => {
                        mismatches.push(format!("{name} m={m} mu={mu}: oracle error {e}"));
                        continue;
                    }
                };
                if numeric.iter().any(|r| (r.value.re - 0.5).abs() <= band) {
                    skipped += 1;
                    continue;
                }
                let strict_right = numeric
                    .iter()
                    .filter(|r| r.value.re > 0.5 + band)
                    .map(|r| r.multiplicity as usize)
                    .sum::<usize>();
                probes += 1;
                if (strict_right == 0) != verdict.is_lu_qikeng {
                    mismatches.push(format!(
                        "{name} m={m} mu={mu}: exact says {}, numeric right-count {}",
                        verdict.is_lu_qikeng, strict_right
                    ));
                }
            }
        }
    }
    let passed = mismatches.is_empty() && probes > 0;
    let detail = if passed {
        format!("{probes} probes agree ({skipped} boundary/ambiguous skipped)")
    } else {
        format!("{} disagreements: {}", mismatches.len(), mismatches.join("; "))
    };
    SuiteResult {
        name: "half-plane decision vs numeric roots",
        passed,
        detail,
    }
}

/// Seeded Monte-Carlo estimate of the unit-ball moment integral vs. the
/// closed form n!/(s+1)_n, for n = 1, 2 at s = 1.
fn ball_integral_suite(seed: u64, samples: u64) -> SuiteResult {
    let mut detail = Vec::new();
    let mut passed = true;
    for n in [1u32, 2] {
        let est = hua_integral_mc(n, 1.0, samples, seed);
        let reference = hua_reference(n, 1.0);
        let dev = (est.value - reference).abs();
        let sigmas = if est.std_error > 0.0 { dev / est.std_error } else { 0.0 };
        if sigmas > 4.0 {
            passed = false;
        }
        detail.push(format!(
            "n={n}: {:.6} vs {:.6} ({:.2}σ, {} samples)",
            est.value, reference, sigmas, est.samples
        ));
    }
    SuiteResult {
        name: "Monte-Carlo ball integral",
        passed,
        detail: detail.join("; "),
    }
}

/// Adaptive quadrature of the rank-1/rank-2 moment integrals against the
/// closed-form product of gamma factors.
fn quadrature_suite() -> SuiteResult {
    let cases: [(u32, u32, u32, f64); 4] = [(1, 0, 1, 1.0), (3, 2, 1, 1.0), (1, 0, 2, 0.0), (2, 0, 2, 1.0)];
    let mut max_dev = 0.0f64;
    let mut failures = Vec::new();
    for (a, b, r, s) in cases {
        match selberg_check(a, b, r, s, 1e-9) {
            Ok(check) => {
                max_dev = max_dev.max(check.rel_dev);
                if check.rel_dev > 1e-6 {
                    failures.push(format!("({a},{b},{r}) s={s}: rel dev {:.2e}", check.rel_dev));
                }
            }
            Err(e) => failures.push(format!("({a},{b},{r}) s={s}: {e}")),
        }
    }
    let passed = failures.is_empty();
    let detail = if passed {
        format!("4 cases, max relative deviation {max_dev:.2e}")
    } else {
        failures.join("; ")
    };
    SuiteResult {
        name: "quadrature vs closed-form constants",
        passed,
        detail,
    }
}

pub fn to_json(results: &[SuiteResult]) -> Value {
    let suites: Vec<Value> = results
        .iter()
        .map(|r| json!({ "name": r.name, "passed": r.passed, "detail": r.detail }))
        .collect();
    json!({
        "suites": suites,
        "all_passed": results.iter().all(|r| r.passed),
    })
}

pub fn to_text(results: &[SuiteResult]) -> String {
    let mut out = String::new();
    for r in results {
        let tag = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{tag}] {} — {}\n", r.name, r.detail));
    }
    out
}

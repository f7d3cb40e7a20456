//! End-to-end tests of the `lqk` binary: exit codes, golden output for the
//! documented examples, JSON round-tripping, and determinism.

use std::process::{Command, Output};

use lqk_core::exactmath::parse_rational;
use serde_json::Value;

fn lqk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lqk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn json_of(output: &Output) -> Value {
    serde_json::from_str(&stdout_of(output)).expect("valid JSON on stdout")
}

#[test]
fn chi_prints_factored_form_and_coefficients() {
    let out = lqk(&["chi", "IV_3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("(s+1)(s+3/2)(s+2)"), "{text}");
    assert!(text.contains("[3, 13/2, 9/2, 1]"), "{text}");

    let out = lqk(&["chi", "--raw", "2", "1", "1"]);
    assert!(stdout_of(&out).contains("(s+1)(s+2)"));

    let out = lqk(&["chi", "I_{1,1}"]);
    assert!(stdout_of(&out).contains("χ(s) = s+1"));
}

#[test]
fn chi_rejects_bad_input() {
    let out = lqk(&["chi", "Bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown domain"));

    let out = lqk(&["chi"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lqk(&["chi", "IV_3", "--raw", "1", "0", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("not both"));

    // Rank 0 is rejected outright.
    let out = lqk(&["chi", "--raw", "2", "1", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_matches_table_entries() {
    let out = lqk(&["decompose", "I_{1,2}", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["c"][1], serde_json::json!(["3", "-3"]));

    let out = lqk(&["decompose", "I_{1,4}", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["c"][1], serde_json::json!(["10", "-10"]));

    let out = lqk(&["decompose", "--raw", "1", "0", "1"]);
    let text = stdout_of(&out);
    assert!(text.contains("χ(s) = s+1"));
    assert!(text.contains("C_0 = 1"));
    assert!(text.contains("C_1 = 1 - μ"));
}

#[test]
fn decide_exit_codes_follow_the_verdict() {
    // Exactly at the threshold: Lu Qikeng, boundary, exit 3.
    let out = lqk(&["decide", "I_{1,2}", "--m", "2", "--mu", "4"]);
    assert_eq!(out.status.code(), Some(3));
    let text = stdout_of(&out);
    assert!(text.contains("Lu Qikeng"), "{text}");
    assert!(text.contains("boundary"), "{text}");

    // Past the last threshold: not Lu Qikeng, exit 1.
    let out = lqk(&["decide", "IV_4", "--m", "7", "--mu", "7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("not Lu Qikeng"));

    // The disc stays Lu Qikeng for any exponent: exit 0.
    let out = lqk(&["decide", "I_{1,1}", "--m", "1", "--mu", "1000000"]);
    assert_eq!(out.status.code(), Some(0));

    // Validation failures: exit 2.
    for mu in ["0", "-3", "2x"] {
        let out = lqk(&["decide", "I_{1,2}", "--m", "2", &format!("--mu={mu}")]);
        assert_eq!(out.status.code(), Some(2), "mu = {mu}");
    }
    let out = lqk(&["decide", "I_{1,2}", "--m", "0", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decide_json_reports_the_verdict() {
    let out = lqk(&["decide", "IV_4", "--m", "7", "--mu", "7", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["is_lu_qikeng"], Value::Bool(false));
    assert_eq!(v["boundary"], Value::Bool(false));
    assert_eq!(v["mu"], Value::String("7".into()));
    assert!(v["method"].as_array().is_some_and(|m| !m.is_empty()));

    let out = lqk(&["decide", "I_{1,2}", "--m", "2", "--mu", "4", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["is_lu_qikeng"], Value::Bool(true));
    assert_eq!(v["boundary"], Value::Bool(true));
}

#[test]
fn decimal_mu_is_parsed_exactly() {
    // 1.5 must mean exactly 3/2: right at the threshold for IV_3, m = 23/…
    // use I_{1,2} m=1 whose threshold is exactly 2, probed at 2.0.
    let out = lqk(&["decide", "I_{1,2}", "--m", "1", "--mu", "2.0"]);
    assert_eq!(out.status.code(), Some(3), "2.0 must hit the threshold exactly");
    let out = lqk(&["decide", "I_{1,2}", "--m", "1", "--mu", "2.000000001"]);
    assert_eq!(out.status.code(), Some(1));
    let out = lqk(&["decide", "I_{1,2}", "--m", "1", "--mu", "1.999999999"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn threshold_reports_both_roots() {
    let out = lqk(&["threshold", "I_{1,4}", "--m", "2", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["positive_root_count"], 2);
    assert_eq!(v["verified_sufficient"], Value::Bool(true));
    let mu1: f64 = v["mu_m_1"]["decimal"].as_str().unwrap().parse().unwrap();
    let mu2: f64 = v["mu_m_2"]["decimal"].as_str().unwrap().parse().unwrap();
    assert!((mu1 - 1.41518).abs() < 5e-5, "mu1 = {mu1}");
    assert!((mu2 - 11.33302).abs() < 5e-5, "mu2 = {mu2}");

    let out = lqk(&["threshold", "I_{1,2}", "--m", "5"]);
    let text = stdout_of(&out);
    assert!(text.contains("+inf"), "{text}");

    // Exact rational roots are flagged as such.
    let out = lqk(&["threshold", "I_{1,2}", "--m", "2", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["mu_m_1"]["exact"], Value::String("4".into()));
}

#[test]
fn momega_matches_known_values() {
    for (name, expected) in [
        ("I_{1,1}", 1),
        ("I_{1,2}", 3),
        ("I_{1,3}", 6),
        ("IV_3", 6),
        ("I_{1,4}", 8),
        ("IV_4", 8),
    ] {
        let out = lqk(&["momega", name, "--json"]);
        assert!(out.status.success());
        let v = json_of(&out);
        assert_eq!(v["m_omega"], expected, "{name}");
        assert_eq!(v["proven"], Value::Bool(true), "{name}");
    }
}

#[test]
fn rootcount_counts_and_flags_boundaries() {
    let out = lqk(&["rootcount", "I_{1,4}", "--m", "3", "--mu", "2", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["count"], 1);
    assert_eq!(v["ambiguous"], 0);

    let out = lqk(&["rootcount", "I_{1,2}", "--m", "2", "--mu", "4"]);
    assert_eq!(out.status.code(), Some(3));

    let out = lqk(&["rootcount", "I_{1,2}", "--m", "2", "--mu", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kernel_eval_reports_values_and_faults() {
    // Diagonal point deep inside the domain: positive kernel.
    let out = lqk(&[
        "kernel-eval", "I_{1,2}", "--m", "2", "--mu", "3/2",
        "--base", "0.3+0.1i,0.2", "--fiber", "0.5,0.1i",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("ξ"), "{text}");

    let out = lqk(&[
        "kernel-eval", "I_{1,2}", "--m", "2", "--mu", "3/2",
        "--base", "0.3+0.1i,0.2", "--fiber", "0.5,0.1i", "--json",
    ]);
    let v = json_of(&out);
    // ξ = ‖Z‖²/N(z,z)^μ on the diagonal: real and positive.
    assert!(v["xi"]["re"].as_f64().unwrap() > 0.0);
    assert!(v["xi"]["im"].as_f64().unwrap().abs() < 1e-15);
    assert!(v["kernel"]["re"].as_f64().unwrap() > 0.0);

    // Fiber dimension must match m.
    let out = lqk(&[
        "kernel-eval", "I_{1,2}", "--m", "2", "--mu", "3/2",
        "--base", "0,0", "--fiber", "0.5",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Point outside the domain.
    let out = lqk(&[
        "kernel-eval", "I_{1,2}", "--m", "1", "--mu", "1", "--base", "2,0",
        "--fiber", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));

    // A pair whose generic norm leaves the right half-plane: indeterminate.
    let out = lqk(&[
        "kernel-eval", "IV_3", "--m", "1", "--mu", "1/2",
        "--base", "0.685-0.282i,0.252-0.158i,0.468-0.172i", "--fiber", "0.1",
        "--base2", "0.581+0.264i,0.059-0.091i,0.364+0.328i", "--fiber2", "0.1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("branch"));
}

#[test]
fn kernel_sign_flips_past_the_threshold() {
    // Unit-disc fiber pair ((0, c), (0, -c)) gives ξ = -c², η = 1/(1+c²).
    // For m=1, μ=3 (past the threshold μ₁ = 2) the kernel changes sign
    // between c² = 0.6 and c² = 0.7.
    let run = |c: &str| {
        let out = lqk(&[
            "kernel-eval", "I_{1,2}", "--m", "1", "--mu", "3",
            "--base", "0,0", "--fiber", c, &format!("--fiber2=-{c}"), "--json",
        ]);
        assert!(out.status.success());
        let v = json_of(&out);
        v["kernel"]["re"].as_f64().unwrap()
    };
    assert!(run("0.774596669") > 0.0); // c² ≈ 0.6
    assert!(run("0.836660027") < 0.0); // c² ≈ 0.7
}

#[test]
fn verify_suites_pass() {
    let out = lqk(&["verify", "--samples", "20000", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["all_passed"], Value::Bool(true));
    assert_eq!(v["suites"].as_array().unwrap().len(), 3);
}

#[test]
fn table_is_deterministic_and_accurate() {
    let a = lqk(&["table", "--all"]);
    let b = lqk(&["table", "--all"]);
    assert!(a.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b), "byte-identical reruns");

    let out = lqk(&["table", "--all", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["finite_reference_cells"], 30);
    assert!(v["max_deviation"].as_f64().unwrap() < 5e-5);

    // Without --all, a single domain is required.
    let out = lqk(&["table"]);
    assert_eq!(out.status.code(), Some(2));
}

/// Every rational string in any JSON output parses back to an equal value.
#[test]
fn json_rationals_round_trip() {
    fn walk(v: &Value, check: &mut impl FnMut(&str)) {
        match v {
            Value::String(s) => check(s),
            Value::Array(items) => items.iter().for_each(|x| walk(x, check)),
            Value::Object(map) => map.values().for_each(|x| walk(x, check)),
            _ => {}
        }
    }
    let outputs = [
        lqk(&["chi", "IV_3", "--json"]),
        lqk(&["decompose", "IV_4", "--json"]),
        lqk(&["qpoly", "I_{1,4}", "--m", "3", "--json"]),
        lqk(&["threshold", "I_{1,4}", "--m", "2", "--json"]),
        lqk(&["poly", "IV_3", "--m", "2", "--mu", "5/3", "--json"]),
    ];
    let mut checked = 0usize;
    for out in &outputs {
        let v = json_of(out);
        walk(&v, &mut |s: &str| {
            // Rational payloads: integers, fractions, or decimal refinements.
            if s.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-')
                && s.chars().all(|c| c.is_ascii_digit() || "/-.".contains(c))
            {
                let parsed = parse_rational(s).unwrap_or_else(|_| panic!("unparsable: {s}"));
                assert_eq!(render_back(&parsed, s), *s, "round trip of {s}");
                checked += 1;
            }
        });
    }
    assert!(checked > 40, "only {checked} rational strings checked");
}

/// Re-serializes a parsed rational in the same shape as the input string
/// (the numerator carries the sign; the denominator stays positive).
fn render_back(x: &lqk_core::Rational, original: &str) -> String {
    if original.contains('.') {
        // Decimal refinement strings: re-render at the same digit count.
        let digits = original.split('.').nth(1).map_or(0, str::len) as u32;
        lqk_core::exactmath::decimal_string(x, digits)
    } else if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

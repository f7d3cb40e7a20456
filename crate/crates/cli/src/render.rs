//! Output formatting shared by all subcommands: exact rationals as `p/q`
//! strings, polynomials in a named variable, decimal refinements tied to the
//! requested tolerance, and complex-vector parsing for kernel evaluation.

use num_complex::Complex;
use num_traits::One;
use serde_json::{json, Value};

use lqk_core::exactmath::decimal_string;
use lqk_core::{RatPoly, Rational};

/// Exact rational as a round-trippable string: `"3"`, `"-3/4"`.
pub fn rat_str(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Ascending coefficient list of a polynomial as JSON strings.
pub fn coeff_json(p: &RatPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| json!(rat_str(c))).collect())
}

/// Ascending coefficient list as plain text: `[3, 13/2, 9/2, 1]`.
pub fn coeff_text(p: &RatPoly) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(rat_str).collect();
    format!("[{}]", parts.join(", "))
}

/// Number of decimal digits that resolves `tol` (9 for the default 10⁻⁹).
pub fn digits_for(tol: &Rational) -> u32 {
    let mut digits = 0u32;
    let mut step = Rational::one();
    let ten = Rational::from_integer(10.into());
    while &step > tol && digits < 30 {
        step /= &ten;
        digits += 1;
    }
    digits
}

/// Decimal rendering of an exact refinement, at the tolerance's resolution.
pub fn decimal(x: &Rational, tol: &Rational) -> String {
    decimal_string(x, digits_for(tol))
}

/// Parses one complex coordinate: `1.5`, `-2`, `0.5+0.25i`, `-i`, `0.3i`.
pub fn parse_complex(s: &str) -> Result<Complex<f64>, String> {
    let t = s.trim();
    let err = || format!("cannot parse {t:?} as a complex number");
    if t.is_empty() {
        return Err(err());
    }
    if !t.ends_with('i') {
        return t.parse::<f64>().map(|re| Complex::new(re, 0.0)).map_err(|_| err());
    }
    let body = &t[..t.len() - 1];
    // Split off the imaginary term at the last sign that is not leading and
    // not an exponent sign.
    let split = body
        .char_indices()
        .rev()
        .find(|&(pos, ch)| {
            (ch == '+' || ch == '-')
                && pos > 0
                && !matches!(body.as_bytes()[pos - 1], b'e' | b'E')
        })
        .map(|(pos, _)| pos);
    let (re_part, im_part) = match split {
        Some(pos) => (&body[..pos], &body[pos..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() {
        0.0
    } else {
        re_part.parse::<f64>().map_err(|_| err())?
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| err())?,
    };
    Ok(Complex::new(re, im))
}

/// Parses a comma-separated list of complex coordinates; empty input is the
/// empty vector.
pub fn parse_complex_vec(s: &str) -> Result<Vec<Complex<f64>>, String> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(parse_complex).collect()
}

/// JSON view of a complex number.
pub fn complex_json(z: Complex<f64>) -> Value {
    json!({ "re": z.re, "im": z.im })
}

//! `lqk` — exact Lu Qikeng decisions for Cartan–Hartogs domains.
//!
//! Every pipeline stage is exposed as a subcommand: the base domain's
//! moment polynomial (`chi`), its raising-factorial decomposition
//! (`decompose`), the representative kernel polynomial (`poly`), the
//! critical-line sections (`qpoly`), the exact decision (`decide`),
//! threshold localization (`threshold`, `table`), the stabilization
//! exponent (`momega`), numeric cross-checks (`rootcount`, `verify`), and
//! direct kernel evaluation (`kernel-eval`).
//!
//! Exit codes: 0 = Lu Qikeng / success, 1 = not Lu Qikeng / check failure,
//! 2 = parse or validation error, 3 = boundary or indeterminate.

mod render;
mod table;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex;
use serde_json::{json, Value};

use lqk_core::domains::{catalog_lookup, hua_factored_string, hua_polynomial, DomainSpec};
use lqk_core::exactmath::{parse_rational, to_f64};
use lqk_core::huadecomp::{
    decompose_chi, normalized_derivative_at_half, representative_polynomial,
};
use lqk_core::kernel::{
    bergman_kernel_with, generic_norm, representative_value, xi_eta, HartogsPoint, KernelError,
};
use lqk_core::luqikeng::{
    decide, halfplane_root_count, instantiate_at_mu, m_omega_with, threshold, LuqikengError,
    ThresholdRoot,
};
use lqk_core::Rational;

use render::{coeff_json, coeff_text, complex_json, decimal, parse_complex_vec, rat_str};

#[derive(Parser)]
#[command(
    name = "lqk",
    version,
    about = "Exact Lu Qikeng decisions for Cartan-Hartogs domains over bounded symmetric bases"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Tolerance for root refinement and decimal display (rational or decimal).
    #[arg(long, global = true, default_value = "1/1000000000")]
    tol: String,

    /// Seed for the randomized cross-check suites.
    #[arg(long, global = true, default_value_t = 20240815)]
    seed: u64,

    /// Domain invariants `a b r` in place of a catalog name.
    #[arg(long, global = true, num_args = 3, value_names = ["A", "B", "R"])]
    raw: Option<Vec<u32>>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the moment polynomial χ(s) of a base domain.
    Chi { domain: Option<String> },
    /// Print the coefficients C_0..C_d of the raising-factorial decomposition.
    Decompose { domain: Option<String> },
    /// Print the representative kernel polynomial P_μ^m(η).
    Poly {
        domain: Option<String>,
        #[arg(long)]
        m: u32,
        /// Substitute a concrete exponent μ (rational or decimal).
        #[arg(long)]
        mu: Option<String>,
    },
    /// Print the critical-line section q_m(μ) or its normalized derivative.
    Qpoly {
        domain: Option<String>,
        #[arg(long)]
        m: u32,
        /// Derivative order k (0 = q_m itself).
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Decide the Lu Qikeng property at (m, μ). Exit 0 = yes, 1 = no, 3 = boundary.
    Decide {
        domain: Option<String>,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        mu: String,
    },
    /// Locate the positive threshold roots μ_{m,1} (and μ_{m,2}) of q_m exactly.
    Threshold {
        domain: Option<String>,
        #[arg(long)]
        m: u32,
    },
    /// Find the smallest m from which the domain is Lu Qikeng for every μ > 0.
    Momega {
        domain: Option<String>,
        /// Consecutive root-free fiber dimensions required before stopping.
        #[arg(long, default_value_t = 8)]
        window: u32,
        /// Search cap on m.
        #[arg(long, default_value_t = 64)]
        cap: u32,
    },
    /// Count roots of P_μ^m strictly right of Re η = 1/2 (numeric cross-check).
    Rootcount {
        domain: Option<String>,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        mu: String,
    },
    /// Evaluate the weighted kernel at a pair of Hartogs-domain points.
    KernelEval {
        domain: Option<String>,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        mu: String,
        /// Base point z: comma-separated complex coordinates, e.g. "0.3+0.1i,0.2".
        #[arg(long)]
        base: String,
        /// Fiber point Z (m comma-separated complex coordinates).
        #[arg(long)]
        fiber: String,
        /// Second base point w (defaults to z).
        #[arg(long)]
        base2: Option<String>,
        /// Second fiber point W (defaults to Z).
        #[arg(long)]
        fiber2: Option<String>,
    },
    /// Run the numeric cross-check suites. Exit 0 iff every suite passes.
    Verify {
        /// Monte-Carlo sample count.
        #[arg(long, default_value_t = 200_000)]
        samples: u64,
    },
    /// Reproduce the threshold table (all five reference domains, or one domain).
    Table {
        /// Full grid with per-cell deviation from the reference digits.
        #[arg(long)]
        all: bool,
        domain: Option<String>,
    },
}

struct CliError {
    code: u8,
    msg: String,
}

impl CliError {
    fn new(code: u8, msg: impl Into<String>) -> Self {
        CliError {
            code,
            msg: msg.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.msg);
            ExitCode::from(err.code)
        }
    }
}

fn resolve_domain(domain: &Option<String>, raw: &Option<Vec<u32>>) -> Result<DomainSpec, CliError> {
    match (domain, raw) {
        (Some(name), None) => catalog_lookup(name).map_err(|e| CliError::new(2, e.to_string())),
        (None, Some(v)) => {
            let &[a, b, r] = v.as_slice() else {
                return Err(CliError::new(2, "--raw needs exactly three values: a b r"));
            };
            DomainSpec::from_invariants(a, b, r).map_err(|e| CliError::new(2, e.to_string()))
        }
        (Some(_), Some(_)) => Err(CliError::new(
            2,
            "give either a catalog name or --raw a b r, not both",
        )),
        (None, None) => Err(CliError::new(
            2,
            "missing domain: give a catalog name (e.g. 'I_{1,2}') or --raw a b r",
        )),
    }
}

fn parse_tol(s: &str) -> Result<Rational, CliError> {
    let tol = parse_rational(s).map_err(|e| CliError::new(2, e.to_string()))?;
    if !num_traits::Signed::is_positive(&tol) {
        return Err(CliError::new(2, "tolerance must be positive"));
    }
    Ok(tol)
}

fn parse_mu(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::new(2, e.to_string()))
}

fn require_fiber_dim(m: u32) -> Result<(), CliError> {
    if m == 0 {
        return Err(CliError::new(2, "the fiber dimension m must be at least 1"));
    }
    Ok(())
}

fn emit(json_mode: bool, value: Value, text: String) {
    use std::io::Write;
    let out = if json_mode {
        let mut s = serde_json::to_string_pretty(&value).expect("serializable value");
        s.push('\n');
        s
    } else {
        text
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush())
        .is_err()
    {
        // Downstream closed the pipe (e.g. `lqk … | head`): exit quietly
        // with the conventional SIGPIPE status.
        std::process::exit(141);
    }
}

fn fmt_complex(z: Complex<f64>) -> String {
    if z.im == 0.0 {
        format!("{:.12}", z.re)
    } else if z.im < 0.0 {
        format!("{:.12} - {:.12}i", z.re, -z.im)
    } else {
        format!("{:.12} + {:.12}i", z.re, z.im)
    }
}

fn spec_header(spec: &DomainSpec) -> String {
    format!(
        "{}: a={} b={} r={}  (d={}, g={})",
        spec.label(),
        spec.a,
        spec.b,
        spec.r,
        spec.d,
        spec.g
    )
}

fn spec_json(spec: &DomainSpec) -> Value {
    json!({
        "label": spec.label(),
        "a": spec.a,
        "b": spec.b,
        "r": spec.r,
        "d": spec.d,
        "g": spec.g,
    })
}

fn threshold_root_json(root: &ThresholdRoot, tol: &Rational) -> Value {
    json!({
        "decimal": decimal(&root.value, tol),
        "value": rat_str(&root.value),
        "exact": root.exact.as_ref().map(rat_str),
        "bracket": { "lo": rat_str(root.interval.lo()), "hi": rat_str(root.interval.hi()) },
        "multiplicity": root.multiplicity,
    })
}

fn threshold_root_text(label: &str, root: &ThresholdRoot, tol: &Rational) -> String {
    match &root.exact {
        Some(exact) => format!(
            "{label} = {} exactly (multiplicity {})\n",
            rat_str(exact),
            root.multiplicity
        ),
        None => format!(
            "{label} ≈ {} (multiplicity {})\n",
            decimal(&root.value, tol),
            root.multiplicity
        ),
    }
}

fn run(cli: &Cli) -> Result<u8, CliError> {
    let tol = parse_tol(&cli.tol)?;
    match &cli.command {
        Command::Chi { domain } => {
            let spec = resolve_domain(domain, &cli.raw)?;
            let chi = hua_polynomial(&spec);
            let factored = hua_factored_string(&spec);
            emit(
                cli.json,
                json!({
                    "domain": spec_json(&spec),
                    "factored": factored,
                    "coefficients": coeff_json(&chi),
                }),
                format!(
                    "{}\nχ(s) = {}\ncoefficients (ascending): {}\n",
                    spec_header(&spec),
                    factored,
                    coeff_text(&chi)
                ),
            );
            Ok(0)
        }
        Command::Decompose { domain } => {
            let spec = resolve_domain(domain, &cli.raw)?;
            let chi = hua_polynomial(&spec);
            let cs = decompose_chi(&spec);
            let mut text = format!(
                "{}\nχ(s) = {}\n",
                spec_header(&spec),
                hua_factored_string(&spec)
            );
            for (i, c) in cs.iter().enumerate() {
                text.push_str(&format!(
                    "C_{i} = {}   {}\n",
                    c.display_with_var("μ"),
                    coeff_text(c)
                ));
            }
            let arrays: Vec<Value> = cs.iter().map(coeff_json).collect();
            emit(
                cli.json,
                json!({
                    "domain": spec_json(&spec),
                    "chi": coeff_json(&chi),
                    "c": arrays,
                }),
                text,
            );
            Ok(0)
        }
        Command::Poly { domain, m, mu } => {
            require_fiber_dim(*m)?;
            let spec = resolve_domain(domain, &cli.raw)?;
            match mu {
                Some(mu_str) => {
                    let mu = parse_mu(mu_str)?;
                    let inst = instantiate_at_mu(&spec, *m, &mu);
                    emit(
                        cli.json,
                        json!({
                            "domain": spec_json(&spec),
                            "m": m,
                            "mu": rat_str(&mu),
                            "coefficients": coeff_json(&inst),
                        }),
                        format!(
                            "{}  m={} μ={}\nP(η) = {}\ncoefficients (ascending): {}\n",
                            spec_header(&spec),
                            m,
                            rat_str(&mu),
                            inst.display_with_var("η"),
                            coeff_text(&inst)
                        ),
                    );
                }
                None => {
                    let poly = representative_polynomial(&spec, *m);
                    let mut text = format!("{}  m={}\n", spec_header(&spec), m);
                    let mut arrays = Vec::new();
                    for (j, c) in poly.coeffs().iter().enumerate() {
                        text.push_str(&format!("η^{j}: {}\n", c.display_with_var("μ")));
                        arrays.push(coeff_json(c));
                    }
                    emit(
                        cli.json,
                        json!({
                            "domain": spec_json(&spec),
                            "m": m,
                            "eta_coefficients": arrays,
                        }),
                        text,
                    );
                }
            }
            Ok(0)
        }
        Command::Qpoly { domain, m, k } => {
            require_fiber_dim(*m)?;
            let spec = resolve_domain(domain, &cli.raw)?;
            let q = normalized_derivative_at_half(&spec, *m, *k)
                .map_err(|e| CliError::new(2, e.to_string()))?;
            let name = if *k == 0 {
                format!("q_{m}")
            } else {
                format!("q_{m}^{k}")
            };
            emit(
                cli.json,
                json!({
                    "domain": spec_json(&spec),
                    "m": m,
                    "k": k,
                    "coefficients": coeff_json(&q),
                }),
                format!(
                    "{}\n{name}(μ) = {}\ncoefficients (ascending): {}\n",
                    spec_header(&spec),
                    q.display_with_var("μ"),
                    coeff_text(&q)
                ),
            );
            Ok(0)
        }
        Command::Decide { domain, m, mu } => {
            require_fiber_dim(*m)?;
            let spec = resolve_domain(domain, &cli.raw)?;
            let mu = parse_mu(mu)?;
            let verdict = decide(&spec, *m, &mu).map_err(|e| match e {
                LuqikengError::MuNotPositive => CliError::new(2, e.to_string()),
                other => CliError::new(1, other.to_string()),
            })?;
            let oracle_count = (verdict.right_halfplane_root_count >= 0)
                .then_some(verdict.right_halfplane_root_count);
            let mut text = format!(
                "{}  m={} μ={}: {}{}\n",
                spec_header(&spec),
                m,
                rat_str(&mu),
                if verdict.is_lu_qikeng {
                    "Lu Qikeng"
                } else {
                    "not Lu Qikeng"
                },
                if verdict.boundary {
                    " (boundary: μ is exactly a threshold root)"
                } else {
                    ""
                }
            );
            for line in &verdict.method {
                text.push_str(&format!("  - {line}\n"));
            }
            emit(
                cli.json,
                json!({
                    "domain": spec_json(&spec),
                    "m": m,
                    "mu": rat_str(&mu),
                    "is_lu_qikeng": verdict.is_lu_qikeng,
                    "boundary": verdict.boundary,
                    "right_halfplane_root_count": oracle_count,
                    "method": verdict.method,
                }),
                text,
            );
            Ok(if verdict.boundary {
                3
            } else if verdict.is_lu_qikeng {
                0
            } else {
                1
            })
        }
        Command::Threshold { domain, m } => {
            require_fiber_dim(*m)?;
            let spec = resolve_domain(domain, &cli.raw)?;
            let report = threshold(&spec, *m, &tol);
            let mut text = format!(
                "{}  m={} (tolerance {})\nq_{m}(μ) = {}\npositive roots: {}{}\n",
                spec_header(&spec),
                m,
                rat_str(&tol),
                report.q_poly.display_with_var("μ"),
                report.positive_root_count,
                if report.verified_sufficient {
                    " (sign-region criteria verified)"
                } else {
                    ""
                }
            );
            match (&report.mu_m_1, &report.mu_m_2) {
                (None, _) => text.push_str(&format!(
                    "μ_{m} = +inf (Lu Qikeng for every μ > 0)\n"
                )),
                (Some(r1), None) => {
                    text.push_str(&threshold_root_text(&format!("μ_{{{m},1}}"), r1, &tol))
                }
                (Some(r1), Some(r2)) => {
                    text.push_str(&threshold_root_text(&format!("μ_{{{m},1}}"), r1, &tol));
                    text.push_str(&threshold_root_text(&format!("μ_{{{m},2}}"), r2, &tol));
                }
            }
            emit(
                cli.json,
                json!({
                    "domain": spec_json(&spec),
                    "m": m,
                    "tolerance": rat_str(&tol),
                    "q_poly": coeff_json(&report.q_poly),
                    "positive_root_count": report.positive_root_count,
                    "verified_sufficient": report.verified_sufficient,
                    "mu_m_1": report.mu_m_1.as_ref().map(|r| threshold_root_json(r, &tol)),
                    "mu_m_2": report.mu_m_2.as_ref().map(|r| threshold_root_json(r, &tol)),
                }),
                text,
            );
            Ok(0)
        }
        Command::Momega {
            domain,
            window,
            cap,
        } => {
            let spec = resolve_domain(domain, &cli.raw)?;
            let report = m_omega_with(&spec, *window, *cap)
                .map_err(|e| CliError::new(1, e.to_string()))?;
            let note = if report.proven {
                "proved: q_m stays positive-root-free for every m beyond the anchor"
            } else {
                "sampled window only; no certificate for all larger m"
            };
            emit(
                cli.json,
                json!({
                    "domain": spec_json(&spec),
                    "m_omega": report.m,
                    "proven": report.proven,
                }),
                format!("{}\nm_Ω = {} ({note})\n", spec_header(&spec), report.m),
            );
            Ok(0)
        }
        Command::Rootcount { domain, m, mu } => {
            require_fiber_dim(*m)?;
            let spec = resolve_domain(domain, &cli.raw)?;
            let mu = parse_mu(mu)?;
            let count = halfplane_root_count(&spec, *m, &mu, to_f64(&tol)).map_err(|e| match e {
                LuqikengError::MuNotPositive => CliError::new(2, e.to_string()),
                LuqikengError::BoundaryMu => CliError::new(3, e.to_string()),
                other => CliError::new(1, other.to_string()),
            })?;
            let mut text = format!(
                "{}  m={} μ={}: {} root(s) with Re η > 1/2 ({} ambiguous), max |Im| = {:.3e}\n",
                spec_header(&spec),
                m,
                rat_str(&mu),
                count.count,
                count.ambiguous,
                count.max_abs_im
            );
            for root in &count.roots {
                text.push_str(&format!(
                    "  η = {} (multiplicity {})\n",
                    fmt_complex(root.value),
                    root.multiplicity
                ));
            }
            let roots: Vec<Value> = count
                .roots
                .iter()
                .map(|r| {
                    json!({
                        "re": r.value.re,
                        "im": r.value.im,
                        "multiplicity": r.multiplicity,
                    })
                })
                .collect();
            emit(
                cli.json,
                json!({
                    "domain": spec_json(&spec),
                    "m": m,
                    "mu": rat_str(&mu),
                    "count": count.count,
                    "ambiguous": count.ambiguous,
                    "max_abs_im": count.max_abs_im,
                    "roots": roots,
                }),
                text,
            );
            Ok(0)
        }
        Command::KernelEval {
            domain,
            m,
            mu,
            base,
            fiber,
            base2,
            fiber2,
        } => {
            require_fiber_dim(*m)?;
            let spec = resolve_domain(domain, &cli.raw)?;
            let mu_exact = parse_mu(mu)?;
            let mu = to_f64(&mu_exact);
            let z = parse_complex_vec(base).map_err(|e| CliError::new(2, e))?;
            let zf = parse_complex_vec(fiber).map_err(|e| CliError::new(2, e))?;
            let w = match base2 {
                Some(s) => parse_complex_vec(s).map_err(|e| CliError::new(2, e))?,
                None => z.clone(),
            };
            let wf = match fiber2 {
                Some(s) => parse_complex_vec(s).map_err(|e| CliError::new(2, e))?,
                None => zf.clone(),
            };
            for (name, f) in [("Z", &zf), ("W", &wf)] {
                if f.len() != *m as usize {
                    return Err(CliError::new(
                        2,
                        format!("fiber point {name} must have exactly m = {m} coordinates"),
                    ));
                }
            }
            let p = HartogsPoint::new(z, zf);
            let q = HartogsPoint::new(w, wf);
            let map_kernel_err = |e: KernelError| match e {
                KernelError::BranchCrossing => CliError::new(3, e.to_string()),
                other => CliError::new(2, other.to_string()),
            };
            let norm = generic_norm(&spec, &p.base, &q.base).map_err(map_kernel_err)?;
            let (xi, eta) = xi_eta(&spec, mu, &p, &q).map_err(map_kernel_err)?;
            let poly = representative_polynomial(&spec, *m);
            let p_value = representative_value(&poly, mu, eta);
            let kernel =
                bergman_kernel_with(&spec, &poly, *m, mu, &p, &q).map_err(map_kernel_err)?;
            emit(
                cli.json,
                json!({
                    "domain": spec_json(&spec),
                    "m": m,
                    "mu": rat_str(&mu_exact),
                    "norm": complex_json(norm),
                    "xi": complex_json(xi),
                    "eta": complex_json(eta),
                    "p_value": complex_json(p_value),
                    "kernel": complex_json(kernel),
                }),
                format!(
                    "{}  m={} μ={}\nN(z,w) = {}\nξ = {}  (|ξ| = {:.12})\nη = {}\nP(η) = {}\nkernel (up to positive constant) = {}\n",
                    spec_header(&spec),
                    m,
                    rat_str(&mu_exact),
                    fmt_complex(norm),
                    fmt_complex(xi),
                    xi.norm(),
                    fmt_complex(eta),
                    fmt_complex(p_value),
                    fmt_complex(kernel)
                ),
            );
            Ok(0)
        }
        Command::Verify { samples } => {
            let results = verify::run_all(cli.seed, *samples, &tol);
            let all_passed = results.iter().all(|r| r.passed);
            emit(cli.json, verify::to_json(&results), verify::to_text(&results));
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Table { all, domain } => {
            match (all, domain, &cli.raw) {
                (true, None, None) => {
                    let grid = table::compute_grid(&tol);
                    emit(
                        cli.json,
                        table::to_json(&grid, &tol),
                        table::to_text(&grid, &tol),
                    );
                    Ok(0)
                }
                (false, _, _) if domain.is_some() || cli.raw.is_some() => {
                    let spec = resolve_domain(domain, &cli.raw)?;
                    let mut text = format!(
                        "{} thresholds for m = 1..7 (tolerance {})\n",
                        spec_header(&spec),
                        rat_str(&tol)
                    );
                    let mut rows = Vec::new();
                    for m in 1..=7u32 {
                        let report = threshold(&spec, m, &tol);
                        let show = |r: &Option<ThresholdRoot>, when_absent: &str| match r {
                            Some(root) => decimal(&root.value, &tol),
                            None => when_absent.to_string(),
                        };
                        text.push_str(&format!(
                            "m={m}: μ_{{m,1}} = {}, μ_{{m,2}} = {}\n",
                            show(&report.mu_m_1, "inf"),
                            show(&report.mu_m_2, "-"),
                        ));
                        rows.push(json!({
                            "m": m,
                            "mu_m_1": report.mu_m_1.as_ref().map(|r| threshold_root_json(r, &tol)),
                            "mu_m_2": report.mu_m_2.as_ref().map(|r| threshold_root_json(r, &tol)),
                        }));
                    }
                    emit(
                        cli.json,
                        json!({
                            "domain": spec_json(&spec),
                            "tolerance": rat_str(&tol),
                            "rows": rows,
                        }),
                        text,
                    );
                    Ok(0)
                }
                _ => Err(CliError::new(
                    2,
                    "table needs either --all or a single domain",
                )),
            }
        }
    }
}

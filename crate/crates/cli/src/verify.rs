//! `genzeta verify`: every invariant suite, reported as JSON.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use genzeta::fractional::{frac_regulator_fp, FracConfig};
use genzeta::hankel::regulator_circle_ray;
use genzeta::series::PowerSeries;
use genzeta::special::{gamma_c, sin_pi, zeta_c, zeta_neg_int_from, BernoulliTable};
use genzeta::stirling::eigen_check;
use genzeta::trace::{trace_closed_form, trace_integer, trace_laurent_oracle, trace_polylog_expansion};
use genzeta::zeta_fn::reg_product;
use genzeta::{GeneratorSpec, Rational};
use num_complex::Complex64;
use serde::Serialize;

use crate::{open_out, CliError, CliResult};

const BERNOULLI_CHECK_MAX: usize = 12;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Extra generator files to check alongside the built-in set.
    #[arg(long)]
    pub generator: Vec<PathBuf>,
    /// Run the fractional route checks on every generator.
    #[arg(long)]
    pub frac: bool,
    /// Corrupt the Bernoulli number with this index before checking.
    #[arg(long, hide = true)]
    pub sabotage_bernoulli: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub checks: Vec<CheckResult>,
}

struct Suite {
    checks: Vec<CheckResult>,
}

impl Suite {
    fn record(&mut self, suite: impl Into<String>, outcome: Result<String, String>) {
        let (status, detail) = match outcome {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        self.checks.push(CheckResult {
            suite: suite.into(),
            status,
            detail,
        });
    }

    fn skip(&mut self, suite: impl Into<String>, reason: String) {
        self.checks.push(CheckResult {
            suite: suite.into(),
            status: Status::Skipped,
            detail: reason,
        });
    }

    fn report(self) -> Report {
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        Report {
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
            checks: self.checks,
        }
    }
}

fn within(worst: f64, tol: f64, what: &str) -> Result<String, String> {
    let detail = format!("max {what} = {worst:.3e} (tolerance {tol:.0e})");
    if worst <= tol {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Bernoulli numbers against `t/(e^t - 1)` and against the constant terms of
/// `sum n^m e^{-nt}` about `t = 0`.
fn bernoulli_expansion(table: &BernoulliTable) -> Result<String, String> {
    let n = BERNOULLI_CHECK_MAX;
    let mut fact = Rational::from_integer(1.into());
    let mut shifted = Vec::with_capacity(n + 1);
    for k in 0..=n {
        fact *= Rational::from_integer((k as i64 + 1).into());
        shifted.push(fact.recip());
    }
    let generating = PowerSeries::new(shifted, n).reciprocal().map_err(|e| e.to_string())?;
    let mut fact = Rational::from_integer(1.into());
    for k in 0..=n {
        if k > 0 {
            fact *= Rational::from_integer((k as i64).into());
        }
        if &(generating.coeff(k) * &fact) != table.get(k) {
            return Err(format!("B_{k} = {} disagrees with t/(e^t - 1)", table.get(k)));
        }
    }
    let riemann = GeneratorSpec::riemann();
    for m in 0..n as u32 {
        let expansion = trace_polylog_expansion(&riemann, m).map_err(|e| e.to_string())?;
        let from_table = zeta_neg_int_from(table, m);
        if expansion != from_table {
            return Err(format!(
                "constant term of sum n^{m} e^(-nt) is {expansion}, Bernoulli table gives {from_table}"
            ));
        }
    }
    Ok(format!("B_0..B_{n} and zeta(-m), m < {n}, consistent"))
}

fn integer_identities(g: &GeneratorSpec) -> Result<String, String> {
    for m in 0..=6 {
        let a = trace_integer(g, m).map_err(|e| e.to_string())?.total;
        let b = trace_laurent_oracle(g, m).map_err(|e| e.to_string())?;
        let c = trace_polylog_expansion(g, m).map_err(|e| e.to_string())?;
        let d = if m <= 3 {
            Some(trace_closed_form(g, m).map_err(|e| e.to_string())?)
        } else {
            None
        };
        if a != b || a != c || d.as_ref().is_some_and(|d| d != &a) {
            return Err(format!("m = {m}: routes disagree ({a}, {b}, {c})"));
        }
    }
    Ok("m = 0..6 agree across all routes".into())
}

fn conclusion_triple() -> Result<String, String> {
    let cases: [(&[i64], i64); 3] = [(&[1, 0, 3], 0), (&[1, 2], -20), (&[1, 2, 3], 4)];
    for (c, want) in cases {
        let g = GeneratorSpec::polynomial("g", c).map_err(|e| e.to_string())?;
        let got = trace_integer(&g, 2).map_err(|e| e.to_string())?.total;
        if got != Rational::from_integer(want.into()) {
            return Err(format!("{c:?}: sum n^2 = {got}, expected {want}"));
        }
    }
    Ok("sum n^2 = 0, -20, 4".into())
}

const ALPHAS: [f64; 7] = [-0.5, -0.1, 0.3, 0.5, 1.3, 1.7, 2.5];

fn riemann_reduction(cfg: &FracConfig) -> Result<String, String> {
    let g = GeneratorSpec::riemann();
    let mut worst: f64 = 0.0;
    for a in ALPHAS {
        let v = frac_regulator_fp(&g, re(a), cfg).map_err(|e| e.to_string())?;
        worst = worst.max((v.total - zeta_c(re(-a)).map_err(|e| e.to_string())?).norm());
    }
    within(worst, 1e-8, "|R - zeta(-alpha)|")
}

fn cubic_closed_form(cfg: &FracConfig) -> Result<String, String> {
    let g = GeneratorSpec::polynomial("cubic", &[1, 0, 3]).map_err(|e| e.to_string())?;
    let mut worst: f64 = 0.0;
    for a in ALPHAS {
        let a = re(a);
        let v = frac_regulator_fp(&g, a, cfg).map_err(|e| e.to_string())?;
        let closed = (|| {
            Ok::<_, genzeta::Error>(
                zeta_c(-a)? - gamma_c(3.0 * (1.0 + a) / 2.0)? * sin_pi(a / 2.0) / gamma_c((3.0 + a) / 2.0)?,
            )
        })()
        .map_err(|e| e.to_string())?;
        worst = worst.max((v.total - closed).norm());
    }
    within(worst, 1e-8, "deviation from the Gamma closed form")
}

fn route_equivalence(g: &GeneratorSpec, cfg: &FracConfig) -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for a in ALPHAS {
        let fp = frac_regulator_fp(g, re(a), cfg).map_err(|e| e.to_string())?;
        let cr = regulator_circle_ray(g, re(a), &cfg.contour, cfg.tol).map_err(|e| e.to_string())?;
        worst = worst.max((fp.total - cr.total).norm());
    }
    within(worst, 1e-7, "route difference")
}

fn products(cfg: &FracConfig) -> Result<String, String> {
    let cubic = GeneratorSpec::polynomial("cubic", &[1, 0, 3]).map_err(|e| e.to_string())?;
    let p1 = reg_product(&GeneratorSpec::riemann(), cfg).map_err(|e| e.to_string())?;
    let p2 = reg_product(&cubic, cfg).map_err(|e| e.to_string())?;
    let d1 = (p1.product - (2.0 * PI).sqrt()).abs();
    let d2 = (p2.product - (2.0 * PI).sqrt() * (-PI / 2.0).exp()).abs();
    within(d1.max(d2), 1e-6, "product error")
}

fn eigen_identity() -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for a in [re(0.5), re(1.5), re(-0.3), Complex64::new(2.0, 0.5)] {
        for n in 1..=8 {
            worst = worst.max(eigen_check(a, n));
        }
    }
    within(worst, 1e-10, "eigen deviation")
}

pub fn run_suites(args: &VerifyArgs) -> CliResult<Report> {
    let mut table = BernoulliTable::new(BERNOULLI_CHECK_MAX + 1);
    if let Some(k) = args.sabotage_bernoulli {
        let slot = table
            .values
            .get_mut(k)
            .ok_or_else(|| CliError::Usage(format!("no Bernoulli number with index {k}")))?;
        *slot += Rational::from_integer(1.into());
    }
    let mut generators = vec![
        GeneratorSpec::riemann(),
        GeneratorSpec::polynomial("cubic", &[1, 0, 3])?,
        GeneratorSpec::polynomial("linear", &[1, 2])?,
        GeneratorSpec::polynomial("quadratic", &[1, 2, 3])?,
    ];
    for p in &args.generator {
        generators.push(GeneratorSpec::from_path(p)?);
    }

    let cfg = FracConfig::default();
    let mut suite = Suite { checks: Vec::new() };
    suite.record("bernoulli_expansion", bernoulli_expansion(&table));
    suite.record("conclusion_triple", conclusion_triple());
    for g in &generators {
        suite.record(format!("integer_traces[{}]", g.name()), integer_identities(g));
    }
    suite.record("riemann_reduction", riemann_reduction(&cfg));
    suite.record("closed_form_regulator", cubic_closed_form(&cfg));
    suite.record("regularized_products", products(&cfg));
    suite.record("eigen_identity", eigen_identity());
    if args.frac {
        for g in &generators {
            let name = format!("route_equivalence[{}]", g.name());
            match g.require_hankel() {
                Ok(_) => suite.record(name, route_equivalence(g, &cfg)),
                Err(e) => suite.skip(name, e.to_string()),
            }
        }
    }
    Ok(suite.report())
}

pub fn cmd_verify(args: &VerifyArgs) -> CliResult<()> {
    let report = run_suites(args)?;
    let mut out = open_out(args.out.as_deref())?;
    serde_json::to_writer_pretty(&mut out, &report).map_err(|e| CliError::Usage(e.to_string()))?;
    writeln!(out)?;
    out.flush()?;
    if report.failed > 0 {
        return Err(CliError::VerificationFailed(report.failed));
    }
    Ok(())
}

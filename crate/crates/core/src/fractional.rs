//! Fractional regulator `R_L(alpha)` for `Re alpha > -1`.
//!
//! For a Hankel-type generator,
//!
//! ```text
//! R_L(alpha) = zeta(-alpha) - fp int_0^inf x^{-alpha-2} phi(-x)^{-alpha-1} dx / Gamma(-alpha)
//! ```
//!
//! where `fp` is the Hadamard finite part at `x = 0`. The finite part equals
//! the continued Mellin transform of `phi(-x)^{-alpha-1}` at `s = -alpha-1`.
//!
//! The integral is split into three pieces. Near the origin the integrand is
//! replaced by its Taylor expansion and integrated term by term, which is
//! where the finite part is taken. Near infinity the same is done in `u = 1/x`.
//! The middle range is smooth and goes to adaptive Gauss-Kronrod.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::generator::GeneratorSpec;
use crate::hankel::{regulator_circle_ray, ContourConfig};
use crate::quad::gauss_kronrod;
use crate::roots::poly_roots;
use crate::series::{rational_to_f64, PowerSeries, DEFAULT_ORDER};
use crate::special::{polylog_series, rgamma_c, zeta_c};
use crate::trace::trace_integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    FpMellin,
    CircleRay,
    IntegerFormula,
    IntegerLimit,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::FpMellin => "fp_mellin",
            Route::CircleRay => "circle_ray",
            Route::IntegerFormula => "integer_formula",
            Route::IntegerLimit => "integer_limit",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegulatorValue {
    pub alpha: Complex64,
    pub zeta_part: Complex64,
    pub correction: Complex64,
    pub total: Complex64,
    pub route: Route,
    pub err_estimate: f64,
    /// `|fp_mellin - circle_ray|` when both routes ran.
    pub crosscheck_delta: Option<f64>,
}

impl RegulatorValue {
    pub(crate) fn new(alpha: Complex64, zeta_part: Complex64, correction: Complex64, route: Route, err: f64) -> Self {
        Self {
            alpha,
            zeta_part,
            correction,
            total: zeta_part + correction,
            route,
            err_estimate: err.max(0.0),
            crosscheck_delta: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FinitePartResult {
    pub value: Complex64,
    /// Taylor terms removed at the origin and integrated analytically.
    pub subtracted_terms: usize,
    /// End of the analytically integrated range at the origin.
    pub split_point: f64,
    /// Estimated error: quadrature plus the truncated series at both ends.
    pub tail_error: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FracConfig {
    /// Absolute tolerance of the middle-range quadrature.
    pub tol: f64,
    /// Truncation order of the end-point expansions.
    pub series_order: usize,
    /// Distance to a nonnegative integer below which the dispatcher uses the
    /// integer route.
    pub delta: f64,
    /// Use the Richardson limit of the fractional route at integers instead of
    /// the exact integer formula.
    pub integer_limit: bool,
    pub crosscheck: bool,
    pub crosscheck_tol: f64,
    pub contour: ContourConfig,
}

impl Default for FracConfig {
    fn default() -> Self {
        Self {
            tol: 1e-11,
            series_order: DEFAULT_ORDER,
            delta: 1e-3,
            integer_limit: false,
            crosscheck: false,
            crosscheck_tol: 1e-7,
            contour: ContourConfig::default(),
        }
    }
}

/// Real-axis data for `phi(-x)`, `x >= 0`, of a Hankel-type polynomial generator.
#[derive(Clone, Debug)]
pub(crate) struct RayProfile {
    /// `phi(-x)` coefficients, ascending.
    pub phi_neg: Vec<Complex64>,
    /// `u^d phi(-1/u)`, the reversed polynomial.
    pub phi_neg_rev: Vec<Complex64>,
    pub degree: usize,
    /// Smallest modulus of a zero of `phi`, infinite when `phi` is constant.
    pub inner_radius: f64,
    /// Largest modulus of a zero of `phi`.
    pub outer_radius: f64,
}

impl RayProfile {
    pub fn new(g: &GeneratorSpec) -> Result<Self> {
        g.require_hankel()?;
        let phi: Vec<Complex64> = g.phi_reduced_complex()?;
        let phi_neg: Vec<Complex64> = phi
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { *c })
            .collect();
        let degree = phi.len() - 1;
        let phi_neg_rev = phi_neg.iter().rev().copied().collect();
        let roots = poly_roots(&phi);
        let inner_radius = roots.iter().map(|r| r.norm()).fold(f64::INFINITY, f64::min);
        let outer_radius = roots.iter().map(|r| r.norm()).fold(0.0, f64::max);
        Ok(Self {
            phi_neg,
            phi_neg_rev,
            degree,
            inner_radius,
            outer_radius,
        })
    }

    /// `phi(-x)` for real `x >= 0`; positive under the Hankel conditions.
    pub fn phi_neg_at(&self, x: f64) -> f64 {
        self.phi_neg.iter().rev().fold(0.0, |acc, c| acc * x + c.re)
    }

    /// `u^d phi(-1/u)` for real `u >= 0`.
    pub fn phi_neg_rev_at(&self, u: f64) -> f64 {
        self.phi_neg_rev.iter().rev().fold(0.0, |acc, c| acc * u + c.re)
    }

    /// `x^{-beta-1} phi(-x)^{-beta}`.
    pub fn ray_integrand(&self, beta: Complex64, x: f64) -> Complex64 {
        (-(beta + 1.0) * x.ln() - beta * self.phi_neg_at(x).ln()).exp()
    }

    /// Point where the origin expansion stops; well inside its disk of convergence.
    pub fn head_split(&self) -> f64 {
        (0.5 * self.inner_radius).min(0.5)
    }

    /// Point beyond which the expansion in `u = 1/x` is used.
    pub fn tail_split(&self) -> f64 {
        (2.0 * self.outer_radius).max(2.0)
    }

    /// `int_X^inf x^{-beta-1} phi(-x)^{-beta} dx` from the series of
    /// `(u^d phi(-1/u))^{-beta}` integrated termwise in `u = 1/x`.
    pub fn tail_by_series(&self, beta: Complex64, x_split: f64, order: usize) -> Result<(Complex64, f64)> {
        let u_s = 1.0 / x_split;
        let series = PowerSeries::new(self.phi_neg_rev.clone(), order).powc(-beta)?;
        let lead = beta * (self.degree as f64 + 1.0);
        let mut sum = Complex64::new(0.0, 0.0);
        let mut last = 0.0;
        for (j, b) in series.coeffs().iter().enumerate() {
            let e = lead + j as f64;
            let term = b * (e * u_s.ln()).exp() / e;
            sum += term;
            last = term.norm();
        }
        let ratio = u_s * self.outer_radius;
        Ok((sum, last * ratio / (1.0 - ratio).max(1e-3)))
    }
}

/// `fp int_0^inf x^{-alpha-2} phi(-x)^{-alpha-1} dx`.
pub fn finite_part_mellin(g: &GeneratorSpec, alpha: Complex64, cfg: &FracConfig) -> Result<FinitePartResult> {
    if alpha.re <= -1.0 {
        return Err(Error::OutOfRegularizationRegion(alpha.to_string()));
    }
    if alpha.im == 0.0 && alpha.re.fract() == 0.0 {
        return Err(Error::InvalidArgument(format!(
            "finite part is singular at the integer alpha = {alpha}"
        )));
    }
    let min_terms = alpha.re.floor() as i64 + 2;
    if (cfg.series_order as i64 + 1) < min_terms {
        return Err(Error::InvalidArgument(format!(
            "series order {} cannot subtract {min_terms} terms",
            cfg.series_order
        )));
    }
    let profile = RayProfile::new(g)?;
    let beta = alpha + 1.0;

    // Origin: fp int_0^{x_s} x^{j-beta-1} dx = x_s^{j-beta} / (j - beta) for every j.
    let x_s = profile.head_split();
    let head_series = PowerSeries::new(profile.phi_neg.clone(), cfg.series_order).powc(-beta)?;
    let mut head = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    for (j, a) in head_series.coeffs().iter().enumerate() {
        let e = j as f64 - beta;
        let term = a * (e * x_s.ln()).exp() / e;
        head += term;
        last = term.norm();
    }
    let ratio = x_s / profile.inner_radius;
    let head_err = last * ratio / (1.0 - ratio).max(1e-3);

    let x_t = profile.tail_split();
    let (tail, tail_err) = profile.tail_by_series(beta, x_t, cfg.series_order)?;

    let mid = gauss_kronrod(|x| profile.ray_integrand(beta, x), x_s, x_t, cfg.tol)?;

    Ok(FinitePartResult {
        value: head + mid.value + tail,
        subtracted_terms: head_series.coeffs().len(),
        split_point: x_s,
        tail_error: mid.err + head_err + tail_err,
    })
}

/// `zeta(-alpha) - fp / Gamma(-alpha)` through the finite-part integral.
pub fn frac_regulator_fp(g: &GeneratorSpec, alpha: Complex64, cfg: &FracConfig) -> Result<RegulatorValue> {
    let fp = finite_part_mellin(g, alpha, cfg)?;
    let rg = rgamma_c(-alpha);
    let zeta_part = zeta_c(-alpha)?;
    Ok(RegulatorValue::new(
        alpha,
        zeta_part,
        -fp.value * rg,
        Route::FpMellin,
        fp.tail_error * rg.norm(),
    ))
}

/// `L^alpha K_L(t) = sum_{k>=1} k^alpha exp(-k Phi(t))`.
pub fn frac_action_direct_sum(g: &GeneratorSpec, alpha: Complex64, t: f64, tol: f64) -> Result<Complex64> {
    if !(t > 0.0) {
        return Err(Error::InvalidArgument(format!("direct sum needs t > 0, got {t}")));
    }
    let w = (-g.phi_eval_real(t)?).exp();
    polylog_series(-alpha, Complex64::new(w, 0.0), tol)
}

/// Richardson limit of the fractional route at the integer `m`:
/// symmetric averages at `m +- eps` for `eps in {1e-2, 1e-3}`, extrapolated in `eps^2`.
pub fn integer_limit(g: &GeneratorSpec, m: u32, cfg: &FracConfig) -> Result<RegulatorValue> {
    let (e1, e2) = (1e-2, 1e-3);
    let at = |eps: f64| -> Result<(Complex64, Complex64, f64)> {
        let hi = frac_regulator_fp(g, Complex64::new(m as f64 + eps, 0.0), cfg)?;
        let lo = frac_regulator_fp(g, Complex64::new(m as f64 - eps, 0.0), cfg)?;
        Ok((
            0.5 * (hi.total + lo.total),
            0.5 * (hi.correction + lo.correction),
            hi.err_estimate.max(lo.err_estimate),
        ))
    };
    let (t1, c1, err1) = at(e1)?;
    let (t2, c2, err2) = at(e2)?;
    let w = e1 * e1 / (e1 * e1 - e2 * e2);
    let extrap = |a1: Complex64, a2: Complex64| a2 * w + a1 * (1.0 - w);
    let total = extrap(t1, t2);
    let correction = extrap(c1, c2);
    let alpha = Complex64::new(m as f64, 0.0);
    let mut v = RegulatorValue::new(alpha, total - correction, correction, Route::IntegerLimit, err1 + err2);
    v.total = total;
    Ok(v)
}

fn nearest_integer(alpha: Complex64, delta: f64) -> Option<u32> {
    if alpha.im != 0.0 {
        return None;
    }
    let m = alpha.re.round();
    (m >= 0.0 && (alpha.re - m).abs() < delta).then_some(m as u32)
}

/// Dispatcher over the integer formula, the integer limit and the
/// finite-part route, with an optional circle+ray cross-check.
pub fn frac_regulator(g: &GeneratorSpec, alpha: Complex64, cfg: &FracConfig) -> Result<RegulatorValue> {
    if alpha.re <= -1.0 {
        return Err(Error::OutOfRegularizationRegion(alpha.to_string()));
    }
    if let Some(m) = nearest_integer(alpha, cfg.delta) {
        if cfg.integer_limit {
            return integer_limit(g, m, cfg);
        }
        let t = trace_integer(g, m)?;
        let c = |q| Complex64::new(rational_to_f64(q), 0.0);
        let mut v = RegulatorValue::new(alpha, c(&t.zeta_part), c(&t.correction), Route::IntegerFormula, 0.0);
        v.total = c(&t.total);
        return Ok(v);
    }
    let mut v = frac_regulator_fp(g, alpha, cfg)?;
    if cfg.crosscheck {
        let other = regulator_circle_ray(g, alpha, &cfg.contour, cfg.tol)?;
        let delta = (other.total - v.total).norm();
        v.crosscheck_delta = Some(delta);
        if delta > cfg.crosscheck_tol {
            return Err(Error::RouteDisagreement {
                alpha: alpha.to_string(),
                delta,
            });
        }
    }
    Ok(v)
}

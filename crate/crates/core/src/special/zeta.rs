//! Complex Riemann zeta function.
//!
//! For `Re s >= 1/2` the Dirichlet eta function is summed with Borwein's
//! alternating-series acceleration and divided by `1 - 2^{1-s}`; elsewhere the
//! functional equation reflects into that half plane.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::gamma::{as_integer, ln_gamma_c, sin_pi};
use crate::error::{Error, Result};

const BORWEIN_TERMS: usize = 60;

/// Borwein weights `(d_k - d_n) / d_n` for `k = 0..n`.
fn borwein_weights() -> &'static [f64] {
    static WEIGHTS: OnceLock<Vec<f64>> = OnceLock::new();
    WEIGHTS.get_or_init(|| {
        let n = BORWEIN_TERMS;
        let mut d = Vec::with_capacity(n + 1);
        let mut term = 1.0f64;
        let mut acc = 1.0f64;
        d.push(acc);
        for i in 1..=n {
            let fi = i as f64;
            let fnn = n as f64;
            term *= 4.0 * (fnn + fi - 1.0) * (fnn - fi + 1.0) / ((2.0 * fi) * (2.0 * fi - 1.0));
            acc += term;
            d.push(acc);
        }
        let dn = d[n];
        d[..n].iter().map(|dk| (dk - dn) / dn).collect()
    })
}

/// `exp(w) - 1` without cancellation for small `|w|`.
pub fn expm1_c(w: Complex64) -> Complex64 {
    let em1 = w.re.exp_m1();
    let half = 0.5 * w.im;
    let s = half.sin();
    Complex64::new(em1 * w.im.cos() - 2.0 * s * s, (em1 + 1.0) * w.im.sin())
}

fn eta_borwein(s: Complex64) -> Complex64 {
    let weights = borwein_weights();
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, w) in weights.iter().enumerate() {
        let term = *w * (-s * ((k + 1) as f64).ln()).exp();
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    -acc
}

/// `zeta(s)` for `Re s >= 1/2`; `one_minus_s` is passed separately so that a
/// reflected argument keeps full relative precision near the pole.
fn zeta_right(s: Complex64, one_minus_s: Complex64) -> Complex64 {
    // 1 - 2^{1-s} = -expm1((1-s) ln 2)
    let denom = -expm1_c(one_minus_s * std::f64::consts::LN_2);
    eta_borwein(s) / denom
}

pub fn zeta_c(s: Complex64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::PoleAtOne);
    }
    if s == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(-0.5, 0.0));
    }
    if let Some(n) = as_integer(s) {
        if n < 0 && n % 2 == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
    }
    if s.re >= 0.5 {
        return Ok(zeta_right(s, 1.0 - s));
    }
    // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)
    let one_minus = 1.0 - s;
    let log_scale = s * std::f64::consts::LN_2 + (s - 1.0) * PI.ln() + ln_gamma_c(one_minus)?;
    Ok(log_scale.exp() * sin_pi(s * 0.5) * zeta_right(one_minus, s))
}

pub fn zeta_real(s: f64) -> Result<f64> {
    zeta_c(Complex64::new(s, 0.0)).map(|z| z.re)
}

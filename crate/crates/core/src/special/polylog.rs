//! Polylogarithm `Li_s(w) = sum_{k>=1} w^k / k^s` in three regimes: the
//! convergent series for `|w| < 1`, the Eulerian closed form at negative
//! integer order, and the expansion in `mu = ln w` around the branch point
//! `w = 1`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::combinatorics::{EulerianTable, EULERIAN_MAX_ROW};
use super::gamma::{as_integer, gamma_c};
use super::zeta::zeta_c;
use crate::error::{Error, Result};

/// Hard cap on the number of terms of the direct series.
pub const SERIES_TERM_CAP: usize = 1_000_000;

/// `Li_{-m}(x) = (1-x)^{-(m+1)} sum_{k<m} <m,k> x^{m-k}`, and `x/(1-x)` for `m = 0`.
pub fn polylog_neg_int(m: u32, x: Complex64) -> Result<Complex64> {
    if x == Complex64::new(1.0, 0.0) {
        return Err(Error::PoleAtOne);
    }
    let one_minus = 1.0 - x;
    if m == 0 {
        return Ok(x / one_minus);
    }
    let m = m as usize;
    if m > EULERIAN_MAX_ROW {
        return Err(Error::InvalidArgument(format!(
            "negative-integer order {m} exceeds the Eulerian table ({EULERIAN_MAX_ROW})"
        )));
    }
    let table = EulerianTable::new(m);
    let mut num = Complex64::new(0.0, 0.0);
    for k in (0..m).rev() {
        num = (num + table.get(m, k) as f64) * x;
    }
    // builds sum_k <m,k> x^{k+1}, equal to sum_k <m,k> x^{m-k} by symmetry
    Ok(num / one_minus.powi(m as i32 + 1))
}

/// Direct series summed until a rigorous tail bound drops below `tol`.
///
/// With `sigma = -Re s`, successive term magnitudes satisfy
/// `t_{k+1}/t_k = |w| ((k+1)/k)^sigma`; once that ratio `q` is below one the
/// tail after term `K` is at most `t_{K+1} / (1 - q)`.
pub fn polylog_series(s: Complex64, w: Complex64, tol: f64) -> Result<Complex64> {
    let r = w.norm();
    if r >= 1.0 {
        return Err(Error::DivergentArgument(r));
    }
    if r == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let sigma = -s.re;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut wk = Complex64::new(1.0, 0.0);
    for k in 1..=SERIES_TERM_CAP {
        wk *= w;
        let kf = k as f64;
        sum += wk * (-s * kf.ln()).exp();
        let next = r * wk.norm() * (kf + 1.0).powf(sigma);
        let q = if sigma > 0.0 {
            r * ((kf + 2.0) / (kf + 1.0)).powf(sigma)
        } else {
            r
        };
        if q < 1.0 && next / (1.0 - q) <= tol {
            return Ok(sum);
        }
    }
    Err(Error::TermCapExceeded(SERIES_TERM_CAP))
}

/// `Gamma(1-s)(-mu)^{s-1} + zeta(s) + sum_{k=1}^{terms} zeta(s-k) mu^k / k!`.
pub fn polylog_expand_near_one(s: Complex64, mu: Complex64, terms: usize) -> Result<Complex64> {
    if let Some(n) = as_integer(s) {
        if n >= 1 {
            return Err(Error::InvalidOrder(format!("{s}")));
        }
    }
    if mu.norm() >= 2.0 * PI {
        return Err(Error::OutOfDisk(mu.norm()));
    }
    let mut acc = zeta_c(s)?;
    if mu != Complex64::new(0.0, 0.0) {
        acc += gamma_c(1.0 - s)? * (-mu).powc(s - 1.0);
    }
    let mut pow = Complex64::new(1.0, 0.0);
    for k in 1..=terms {
        pow = pow * mu / k as f64;
        acc += zeta_c(s - k as f64)? * pow;
    }
    Ok(acc)
}

/// Regular part of the expansion near `w = 1`: everything except the
/// singular `Gamma(1-s)(-mu)^{s-1}` term, summed until terms stall.
pub fn polylog_regular_part(s: Complex64, mu: Complex64) -> Result<Complex64> {
    let mut acc = zeta_c(s)?;
    let mut pow = Complex64::new(1.0, 0.0);
    for k in 1..=400 {
        pow = pow * mu / k as f64;
        let term = zeta_c(s - k as f64)? * pow;
        acc += term;
        if k > 4 && term.norm() <= 1e-17 * acc.norm().max(1e-300) {
            return Ok(acc);
        }
    }
    Ok(acc)
}

/// `Li_s(w)` on the open unit disk, switching from the direct series to the
/// `mu`-expansion once `|w| > 1/2` so that the cost stays bounded near `|w| = 1`.
pub fn polylog_in_disk(s: Complex64, w: Complex64) -> Result<Complex64> {
    PolylogDisk::new(s)?.eval(w)
}

const DISK_TERMS: usize = 120;

/// [`polylog_in_disk`] for a fixed order with the `mu`-expansion coefficients
/// `zeta(s-k)/k!` computed once, for evaluation over many points.
#[derive(Clone, Debug)]
pub struct PolylogDisk {
    s: Complex64,
    singular: Option<Complex64>,
    coeffs: Vec<Complex64>,
}

impl PolylogDisk {
    pub fn new(s: Complex64) -> Result<Self> {
        if matches!(as_integer(s), Some(n) if n >= 1) {
            return Ok(Self {
                s,
                singular: None,
                coeffs: Vec::new(),
            });
        }
        let mut coeffs = Vec::with_capacity(DISK_TERMS + 1);
        let mut fact = 1.0;
        for k in 0..=DISK_TERMS {
            if k > 0 {
                fact *= k as f64;
            }
            coeffs.push(zeta_c(s - k as f64)? / fact);
        }
        Ok(Self {
            s,
            singular: Some(gamma_c(1.0 - s)?),
            coeffs,
        })
    }

    pub fn eval(&self, w: Complex64) -> Result<Complex64> {
        let r = w.norm();
        if r >= 1.0 {
            return Err(Error::DivergentArgument(r));
        }
        let singular = match self.singular {
            Some(g) if r > 0.5 => g,
            _ => return polylog_series(self.s, w, 1e-16 * (1.0 + r)),
        };
        let mu = w.ln();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pow = Complex64::new(1.0, 0.0);
        for (k, c) in self.coeffs.iter().enumerate() {
            let term = c * pow;
            acc += term;
            if k > 4 && term.norm() <= 1e-17 * acc.norm().max(1e-300) {
                break;
            }
            pow *= mu;
        }
        Ok(singular * (-mu).powc(self.s - 1.0) + acc)
    }
}

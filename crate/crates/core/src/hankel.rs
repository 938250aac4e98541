//! Circle-plus-ray route for the fractional regulator and the branch map of
//! `Li_{-alpha}(exp(-Phi(z)))`.
//!
//! The Hankel contour is collapsed onto a circle of radius `rho` about the
//! origin plus the two banks of the cut along the negative real axis:
//!
//! ```text
//! R_L(alpha) = zeta(-alpha)
//!            + Gamma(1+alpha)/(2 pi i) oint_{|z|=rho} Phi(z)^{-1-alpha} dz/z
//!            - 1/Gamma(-alpha) int_rho^inf (-Phi(-x))^{-1-alpha} dx/x
//! ```

use std::io::{self, Write};

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::fractional::{RayProfile, RegulatorValue, Route};
use crate::generator::GeneratorSpec;
use crate::quad::{gauss_kronrod, tanh_sinh_unit};
use crate::roots::poly_roots;
use crate::special::{gamma_c, rgamma_c, sin_pi, zeta_c, PolylogDisk};

const MAX_CIRCLE_POINTS: usize = 1 << 16;
const CIRCLE_TOL: f64 = 1e-11;
const SECONDARY_LEVELS: i64 = 3;

#[derive(Clone, Debug, PartialEq)]
pub struct ContourConfig {
    pub rho: f64,
    /// Starting number of samples on the circle; doubled until converged.
    pub n_circle: usize,
}

impl Default for ContourConfig {
    fn default() -> Self {
        Self {
            rho: 0.25,
            n_circle: 512,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourPiece {
    pub value: Complex64,
    pub err: f64,
}

/// Zeros of `Phi(z) + 2 pi i k`.
pub fn phi_level_roots(g: &GeneratorSpec, k: i64) -> Result<Vec<Complex64>> {
    let mut coeffs: Vec<Complex64> = g.phi_poly_f64()?.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    coeffs[0] += Complex64::new(0.0, 2.0 * std::f64::consts::PI * k as f64);
    Ok(poly_roots(&coeffs))
}

/// Largest radius for which the circle stays inside the principal sheet of
/// `Phi^{-1-alpha}`: no zero of `phi` and no secondary zero of `exp(Phi) - 1`.
pub fn max_radius(g: &GeneratorSpec) -> Result<f64> {
    let mut r = f64::INFINITY;
    for z in poly_roots(&g.phi_reduced_complex()?) {
        r = r.min(z.norm());
    }
    for k in 1..=SECONDARY_LEVELS {
        for s in [k, -k] {
            for z in phi_level_roots(g, s)? {
                r = r.min(z.norm());
            }
        }
    }
    Ok(r)
}

fn check_radius(g: &GeneratorSpec, rho: f64) -> Result<()> {
    if !(rho > 0.0) {
        return Err(Error::RadiusTooLarge {
            rho,
            reason: "radius must be positive".into(),
        });
    }
    let limit = max_radius(g)?;
    if rho >= limit {
        return Err(Error::RadiusTooLarge {
            rho,
            reason: format!("a zero of Phi or of Phi + 2 pi i k lies at radius {limit:.6}"),
        });
    }
    Ok(())
}

fn circle_once(phi: &[Complex64], beta: Complex64, rho: f64, n: usize) -> Result<Complex64> {
    use std::f64::consts::PI;
    let theta = |j: usize| -PI + 2.0 * PI * j as f64 / n as f64;
    let eval = |t: f64| {
        let z = Complex64::from_polar(rho, t);
        phi.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    };
    let values: Vec<Complex64> = (0..n).map(|j| eval(theta(j))).collect();
    let mid = n / 2;
    let mut logs = vec![Complex64::new(0.0, 0.0); n];
    logs[mid] = values[mid].ln();
    for j in mid + 1..n {
        logs[j] = logs[j - 1] + (values[j] / values[j - 1]).ln();
    }
    for j in (0..mid).rev() {
        logs[j] = logs[j + 1] + (values[j] / values[j + 1]).ln();
    }
    let max_phi = values.iter().map(|v| v.norm()).fold(0.0, f64::max) * rho;
    if max_phi >= 2.0 * PI {
        return Err(Error::RadiusTooLarge {
            rho,
            reason: format!("|Phi| reaches {max_phi:.6} >= 2 pi on the circle"),
        });
    }
    // phi(rho e^{i theta})^{-beta}: periodic, with nonnegative Fourier modes only.
    let mut buf: Vec<Complex64> = logs.iter().map(|l| (-beta * l).exp()).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);

    let mut sum = Complex64::new(0.0, 0.0);
    for (idx, c) in buf.iter().enumerate() {
        let k = if idx < n / 2 { idx as i64 } else { idx as i64 - n as i64 };
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let coeff = c * sign / n as f64;
        let d = Complex64::new(k as f64, 0.0) - beta;
        // int_{-pi}^{pi} e^{i (k - beta) theta} d theta
        let weight = if d.norm() < 1e-14 {
            Complex64::new(2.0 * PI, 0.0)
        } else {
            2.0 * PI * sin_pi(d) / (PI * d)
        };
        sum += coeff * weight;
    }
    Ok(sum)
}

/// `Gamma(1+alpha)/(2 pi i) oint_{|z|=rho} Phi(z)^{-1-alpha} dz/z`, principal branch.
///
/// Writing `Phi = z phi`, the integrand on the circle is `rho^{-beta}
/// e^{-i beta theta} phi^{-beta}`. The smooth periodic factor `phi^{-beta}` is
/// sampled and Fourier-transformed, and each mode is integrated exactly
/// against the non-periodic `e^{-i beta theta}`.
pub fn circle_integral(g: &GeneratorSpec, alpha: Complex64, cfg: &ContourConfig) -> Result<ContourPiece> {
    if alpha.re <= -1.0 {
        return Err(Error::OutOfRegularizationRegion(alpha.to_string()));
    }
    check_radius(g, cfg.rho)?;
    let phi = g.phi_reduced_complex()?;
    let beta = alpha + 1.0;
    let scale = gamma_c(beta)? * (-beta * cfg.rho.ln()).exp() / (2.0 * std::f64::consts::PI);
    let mut n = cfg.n_circle.max(16).next_power_of_two();
    let mut prev = circle_once(&phi, beta, cfg.rho, n)?;
    loop {
        n *= 2;
        let next = circle_once(&phi, beta, cfg.rho, n)?;
        let diff = (next - prev).norm() * scale.norm();
        if diff < CIRCLE_TOL || n >= MAX_CIRCLE_POINTS {
            if diff >= CIRCLE_TOL {
                return Err(Error::QuadratureFailure {
                    tol: CIRCLE_TOL,
                    estimate: diff,
                });
            }
            return Ok(ContourPiece {
                value: scale * next,
                err: diff,
            });
        }
        prev = next;
    }
}

/// `1/Gamma(-alpha) int_rho^inf (-Phi(-x))^{-1-alpha} dx/x`.
///
/// Gauss-Kronrod on `[rho, 1]` and tanh-sinh in `u = 1/x` beyond.
pub fn ray_integral(g: &GeneratorSpec, alpha: Complex64, rho: f64, tol: f64) -> Result<ContourPiece> {
    if alpha.re <= -1.0 {
        return Err(Error::OutOfRegularizationRegion(alpha.to_string()));
    }
    let rg = rgamma_c(-alpha);
    if rg == Complex64::new(0.0, 0.0) {
        return Ok(ContourPiece {
            value: rg,
            err: 0.0,
        });
    }
    let profile = RayProfile::new(g)?;
    let beta = alpha + 1.0;
    let cut = rho.max(1.0);
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    if rho < cut {
        let near = gauss_kronrod(|x| profile.ray_integrand(beta, x), rho, cut, tol)?;
        value += near.value;
        err += near.err;
    }
    // x = cut/u turns the tail into cut^{-beta(d+1)} u^{beta(d+1)-1} P(u/cut)^{-beta}
    // with P(u) = u^d phi(-1/u), which is positive on [0, 1].
    let d = profile.degree as f64;
    let exponent = beta * (d + 1.0) - 1.0;
    let far = tanh_sinh_unit(
        |u| {
            let reduced = profile.phi_neg_rev_at(u / cut);
            (exponent * u.ln() - beta * reduced.ln() - beta * (d + 1.0) * cut.ln()).exp()
        },
        tol,
    )?;
    value += far.value;
    err += far.err;
    Ok(ContourPiece {
        value: value * rg,
        err: err * rg.norm(),
    })
}

/// Regulator through the circle and ray pieces.
pub fn regulator_circle_ray(g: &GeneratorSpec, alpha: Complex64, cfg: &ContourConfig, tol: f64) -> Result<RegulatorValue> {
    if alpha.re <= -1.0 {
        return Err(Error::OutOfRegularizationRegion(alpha.to_string()));
    }
    g.require_hankel()?;
    let circle = circle_integral(g, alpha, cfg)?;
    let ray = ray_integral(g, alpha, cfg.rho, tol)?;
    Ok(RegulatorValue::new(
        alpha,
        zeta_c(-alpha)?,
        circle.value - ray.value,
        Route::CircleRay,
        circle.err + ray.err,
    ))
}

/// Values of `Li_{-alpha}(exp(-Phi(z)))` on a rectangular grid.
///
/// Rows run over the imaginary part, columns over the real part. Cells where
/// `|exp(-Phi)|` is not below one are left undefined.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexGrid {
    pub re_range: (f64, f64),
    pub im_range: (f64, f64),
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<Option<Complex64>>,
}

/// Grid geometry `re0:re1:im0:im1:nx:ny`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub re_range: (f64, f64),
    pub im_range: (f64, f64),
    pub nx: usize,
    pub ny: usize,
}

impl std::str::FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::InvalidArgument(format!("grid {s:?} is not re0:re1:im0:im1:nx:ny"));
        if parts.len() != 6 {
            return Err(bad());
        }
        let f = |i: usize| parts[i].trim().parse::<f64>().map_err(|_| bad());
        let n = |i: usize| parts[i].trim().parse::<usize>().map_err(|_| bad());
        let spec = GridSpec {
            re_range: (f(0)?, f(1)?),
            im_range: (f(2)?, f(3)?),
            nx: n(4)?,
            ny: n(5)?,
        };
        if spec.nx < 2 || spec.ny < 2 {
            return Err(Error::InvalidArgument("grid needs at least two points per axis".into()));
        }
        Ok(spec)
    }
}

fn lerp(range: (f64, f64), i: usize, n: usize) -> f64 {
    range.0 + (range.1 - range.0) * i as f64 / (n - 1) as f64
}

impl ComplexGrid {
    pub fn point(&self, ix: usize, iy: usize) -> Complex64 {
        Complex64::new(lerp(self.re_range, ix, self.nx), lerp(self.im_range, iy, self.ny))
    }

    pub fn get(&self, ix: usize, iy: usize) -> Option<Complex64> {
        self.values[iy * self.nx + ix]
    }

    /// Grid point of largest `|value|` within `radius` of `center`.
    pub fn peak_near(&self, center: Complex64, radius: f64) -> Option<(Complex64, f64)> {
        let mut best: Option<(Complex64, f64)> = None;
        for iy in 0..self.ny {
            for ix in 0..self.nx {
                let z = self.point(ix, iy);
                if (z - center).norm() > radius {
                    continue;
                }
                if let Some(v) = self.get(ix, iy) {
                    if best.is_none_or(|(_, m)| v.norm() > m) {
                        best = Some((z, v.norm()));
                    }
                }
            }
        }
        best
    }

    /// CSV with header `re,im,abs,arg,defined`; undefined cells print `nan,nan,0`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "re,im,abs,arg,defined")?;
        for iy in 0..self.ny {
            for ix in 0..self.nx {
                let z = self.point(ix, iy);
                match self.get(ix, iy) {
                    Some(v) => writeln!(out, "{:.16e},{:.16e},{:.16e},{:.16e},1", z.re, z.im, v.norm(), v.arg())?,
                    None => writeln!(out, "{:.16e},{:.16e},nan,nan,0", z.re, z.im)?,
                }
            }
        }
        Ok(())
    }
}

pub fn branch_map(g: &GeneratorSpec, alpha: Complex64, grid: &GridSpec) -> Result<ComplexGrid> {
    let phi = g.phi_poly_f64()?;
    let li = PolylogDisk::new(-alpha)?;
    let mut out = ComplexGrid {
        re_range: grid.re_range,
        im_range: grid.im_range,
        nx: grid.nx,
        ny: grid.ny,
        values: Vec::with_capacity(grid.nx * grid.ny),
    };
    for iy in 0..grid.ny {
        for ix in 0..grid.nx {
            let z = Complex64::new(lerp(grid.re_range, ix, grid.nx), lerp(grid.im_range, iy, grid.ny));
            let p = phi.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
            let w = (-p).exp();
            let v = if w.norm() < 1.0 - 1e-9 {
                li.eval(w).ok().filter(|v| v.is_finite())
            } else {
                None
            };
            out.values.push(v);
        }
    }
    Ok(out)
}

//! Complex Gamma function.
//!
//! Lanczos approximation with `g = 607/128` and 15 coefficients on
//! `Re z >= 1/2`; the reflection formula covers the left half plane.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G_HALF: f64 = 5.242_187_5; // 607/128 + 1/2
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

/// Returns `Some(n)` when `z` is exactly the integer `n`.
pub(crate) fn as_integer(z: Complex64) -> Option<i64> {
    (z.im == 0.0 && z.re.fract() == 0.0 && z.re.abs() < 9.0e15).then_some(z.re as i64)
}

/// `(sin(pi x), cos(pi x))` with exact argument reduction, so both vanish
/// exactly where they should.
fn sin_cos_pi_real(x: f64) -> (f64, f64) {
    // r in [-1, 1], exact
    let r = x - 2.0 * (x / 2.0).round();
    if r > 0.5 {
        let (s, c) = (PI * (1.0 - r)).sin_cos();
        (s, -c)
    } else if r < -0.5 {
        let (s, c) = (PI * (-1.0 - r)).sin_cos();
        (s, -c)
    } else if r.abs() == 0.5 {
        (r.signum(), 0.0)
    } else {
        (PI * r).sin_cos()
    }
}

/// `sin(pi z)`, exactly zero at the integers.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi_real(z.re);
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// `cos(pi z)`, exactly zero at the half-integers.
pub fn cos_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi_real(z.re);
    let y = PI * z.im;
    Complex64::new(c * y.cosh(), -s * y.sinh())
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let mut ser = Complex64::new(LANCZOS[0], 0.0);
    for (j, c) in LANCZOS.iter().enumerate().skip(1) {
        ser += *c / (z + j as f64);
    }
    let t = z + LANCZOS_G_HALF;
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + (ser / z).ln()
}

/// `ln Gamma(z)` up to a multiple of `2 pi i`; only `exp` of it is meaningful.
pub fn ln_gamma_c(z: Complex64) -> Result<Complex64> {
    if let Some(n) = as_integer(z) {
        if n <= 0 {
            return Err(Error::PoleAtNonpositiveInteger(n));
        }
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z))
    } else {
        let s = sin_pi(z);
        Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_right(1.0 - z))
    }
}

pub fn gamma_c(z: Complex64) -> Result<Complex64> {
    if let Some(n) = as_integer(z) {
        if n <= 0 {
            return Err(Error::PoleAtNonpositiveInteger(n));
        }
        if n <= 21 {
            return Ok(Complex64::new(
                crate::special::factorial_f64(n as u64 - 1),
                0.0,
            ));
        }
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z).exp())
    } else {
        Ok(PI / (sin_pi(z) * ln_gamma_right(1.0 - z).exp()))
    }
}

/// `1 / Gamma(z)`, entire; exactly zero at the nonpositive integers.
pub fn rgamma_c(z: Complex64) -> Complex64 {
    if let Some(n) = as_integer(z) {
        if n <= 0 {
            return Complex64::new(0.0, 0.0);
        }
    }
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        sin_pi(z) * ln_gamma_right(1.0 - z).exp() / PI
    }
}

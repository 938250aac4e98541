//! Generalized zeta function `Z_L(alpha) = R_L(-alpha)` and regularized products.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fractional::{frac_regulator, frac_regulator_fp, FracConfig};
use crate::generator::GeneratorSpec;

#[derive(Clone, Debug, PartialEq)]
pub struct ProductValue {
    pub z_prime_0: f64,
    /// `exp(-Z_L'(0))`, the regularized value of `prod n`.
    pub product: f64,
    pub step: f64,
    /// Order of the leading error term after extrapolation.
    pub richardson_order: u32,
}

/// `Z_L(alpha)` for `Re alpha < 1`.
pub fn gen_zeta(g: &GeneratorSpec, alpha: Complex64, cfg: &FracConfig) -> Result<Complex64> {
    if alpha.re >= 1.0 {
        return Err(Error::OutOfRegion(alpha.to_string()));
    }
    Ok(frac_regulator(g, -alpha, cfg)?.total)
}

/// `exp(-Z_L'(0))` with `Z_L'(0)` from central differences at steps `1e-3`
/// and `5e-4`, combined by one Richardson step. The stencil never touches
/// `alpha = 0` itself.
pub fn reg_product(g: &GeneratorSpec, cfg: &FracConfig) -> Result<ProductValue> {
    reg_product_with_step(g, cfg, 1e-3)
}

/// [`reg_product`] with the coarse stencil step chosen by the caller.
pub fn reg_product_with_step(g: &GeneratorSpec, cfg: &FracConfig, step: f64) -> Result<ProductValue> {
    if !(step > 0.0 && step < 0.5) {
        return Err(Error::InvalidArgument(format!("stencil step {step} must lie in (0, 1/2)")));
    }
    let z = |a: f64| -> Result<f64> { Ok(frac_regulator_fp(g, Complex64::new(-a, 0.0), cfg)?.total.re) };
    let diff = |h: f64| -> Result<f64> { Ok((z(h)? - z(-h)?) / (2.0 * h)) };
    let coarse = diff(step)?;
    let fine = diff(step / 2.0)?;
    let z_prime_0 = (4.0 * fine - coarse) / 3.0;
    Ok(ProductValue {
        z_prime_0,
        product: (-z_prime_0).exp(),
        step,
        richardson_order: 4,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{gamma_c, sin_pi, zeta_c};
    use std::f64::consts::PI;

    #[test]
    fn riemann_reduction() {
        let cfg = FracConfig::default();
        let r = GeneratorSpec::riemann();
        for a in [-2.5, -1.3, 0.0, 0.4, 0.9] {
            let a = Complex64::new(a, 0.0);
            assert!((gen_zeta(&r, a, &cfg).unwrap() - zeta_c(a).unwrap()).norm() < 1e-8);
        }
        assert!(matches!(gen_zeta(&r, Complex64::new(1.0, 0.0), &cfg), Err(Error::OutOfRegion(_))));
    }

    #[test]
    fn cubic_zeta() {
        let g = GeneratorSpec::polynomial("cubic", &[1, 0, 3]).unwrap();
        let a = Complex64::new(0.3, 0.0);
        let want = zeta_c(a).unwrap()
            + gamma_c(3.0 * (1.0 - a) / 2.0).unwrap() * sin_pi(a / 2.0) / gamma_c((3.0 - a) / 2.0).unwrap();
        let got = gen_zeta(&g, a, &FracConfig::default()).unwrap();
        assert!((got - want).norm() < 1e-9);
    }

    #[test]
    fn products() {
        let cfg = FracConfig::default();
        let p = reg_product(&GeneratorSpec::riemann(), &cfg).unwrap();
        assert!((p.product - (2.0 * PI).sqrt()).abs() < 1e-6);
        assert!((p.z_prime_0 + 0.5 * (2.0 * PI).ln()).abs() < 1e-7);
        let g = GeneratorSpec::polynomial("cubic", &[1, 0, 3]).unwrap();
        let p = reg_product(&g, &cfg).unwrap();
        assert!((p.product - (2.0 * PI).sqrt() * (-PI / 2.0).exp()).abs() < 1e-6, "{}", p.product);
    }
}

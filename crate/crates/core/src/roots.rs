//! Complex polynomial roots by Aberth-Ehrlich iteration with a Newton polish.

use num_complex::Complex64;

/// Evaluates `sum c_k z^k` and its derivative.
pub fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of the polynomial with ascending coefficients `coeffs`.
/// Trailing zero coefficients are ignored; a constant polynomial has no roots.
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let deg = match coeffs.iter().rposition(|c| c.norm() != 0.0) {
        Some(d) => d,
        None => return Vec::new(),
    };
    if deg == 0 {
        return Vec::new();
    }
    let lead = coeffs[deg];
    let monic: Vec<Complex64> = coeffs[..=deg].iter().map(|c| c / lead).collect();
    // Fujiwara-style bound on root moduli.
    let bound = (0..deg)
        .map(|k| monic[k].norm().powf(1.0 / (deg - k) as f64))
        .fold(0.0f64, f64::max)
        * 2.0;
    let radius = bound.max(1e-3);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();

    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let (p, dp) = eval_with_derivative(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..deg)
                .filter(|&j| j != i)
                .map(|j| 1.0 / (z[i] - z[j]))
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            z[i] -= step;
            max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z.into_iter().map(|r| newton_polish(&monic, r)).collect()
}

/// A few Newton steps on `p(z) = 0`, kept only while they reduce `|p|`.
pub fn newton_polish(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    let mut best = eval_with_derivative(coeffs, z).0.norm();
    for _ in 0..8 {
        let (p, dp) = eval_with_derivative(coeffs, z);
        if dp.norm() == 0.0 {
            break;
        }
        let next = z - p / dp;
        let val = eval_with_derivative(coeffs, next).0.norm();
        if val >= best {
            break;
        }
        best = val;
        z = next;
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cubic_with_known_roots() {
        // z + z^3 = z (z - i)(z + i)
        let mut r = poly_roots(&[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        r.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((r[0] - c(0.0, -1.0)).norm() < 1e-13);
        assert!(r[1].norm() < 1e-13);
        assert!((r[2] - c(0.0, 1.0)).norm() < 1e-13);
    }

    #[test]
    fn residuals_are_small() {
        let p = [c(2.0, 1.0), c(-3.0, 0.5), c(0.0, 0.0), c(1.0, -1.0), c(0.5, 0.0)];
        let roots = poly_roots(&p);
        assert_eq!(roots.len(), 4);
        for r in roots {
            assert!(eval_with_derivative(&p, r).0.norm() < 1e-12, "{r}");
        }
        assert!(poly_roots(&[c(3.0, 0.0), c(0.0, 0.0)]).is_empty());
    }
}

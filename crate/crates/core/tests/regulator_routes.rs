use genzeta::fractional::{finite_part_mellin, frac_action_direct_sum, FracConfig};
use genzeta::hankel::{circle_integral, regulator_circle_ray, ContourConfig};
use genzeta::series::PowerSeries;
use genzeta::special::{gamma_c, zeta_c};
use genzeta::stirling::frac_operator_apply;
use genzeta::zeta_fn::{gen_zeta, reg_product, reg_product_with_step};
use genzeta::GeneratorSpec;
use num_complex::Complex64;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn poly(c: &[i64]) -> GeneratorSpec {
    GeneratorSpec::polynomial(format!("{c:?}"), c).unwrap()
}

const ALPHAS: [f64; 7] = [-0.5, -0.1, 0.3, 0.5, 1.3, 1.7, 2.5];

#[test]
fn finite_part_matches_mellin_closed_form() {
    let g = poly(&[1, 0, 3]);
    let cfg = FracConfig::default();
    for a in [-0.95, -0.6, -0.3, 0.1, 0.45, 0.8, 1.25, 1.9, 2.4, 2.99] {
        let a = re(a);
        let fp = finite_part_mellin(&g, a, &cfg).unwrap();
        let want = gamma_c(-(a + 1.0) / 2.0).unwrap() * gamma_c(3.0 * (a + 1.0) / 2.0).unwrap()
            / (2.0 * gamma_c(a + 1.0).unwrap());
        assert!((fp.value - want).norm() <= 1e-9 * want.norm().max(1.0), "{a}: {} vs {want}", fp.value);
        assert!(fp.subtracted_terms as f64 >= a.re.floor() + 2.0);
    }
}

#[test]
fn rho_invariance_and_real_values() {
    for c in [&[1][..], &[1, 0, 3], &[1, 0, 0, 0, 5]] {
        let g = poly(c);
        for a in ALPHAS {
            let at = |rho| {
                let cfg = ContourConfig {
                    rho,
                    ..ContourConfig::default()
                };
                regulator_circle_ray(&g, re(a), &cfg, 1e-12).unwrap().total
            };
            let (v2, v3) = (at(0.2), at(0.3));
            assert!((v2 - v3).norm() <= 1e-9, "{c:?} alpha {a}");
            assert!(v2.im.abs() <= 1e-10);
        }
    }
}

#[test]
fn circle_sampling_converged() {
    let g = poly(&[1, 0, 3]);
    let coarse = circle_integral(&g, re(0.5), &ContourConfig { rho: 0.25, n_circle: 512 }).unwrap();
    let fine = circle_integral(&g, re(0.5), &ContourConfig { rho: 0.25, n_circle: 1024 }).unwrap();
    assert!(coarse.err < 1e-11);
    assert!((coarse.value - fine.value).norm() < 1e-11);
}

#[test]
fn complex_alpha_routes_agree() {
    let g = poly(&[1, 0, 3]);
    let cfg = FracConfig::default();
    let a = Complex64::new(0.7, -0.4);
    let fp = genzeta::fractional::frac_regulator_fp(&g, a, &cfg).unwrap();
    let cr = regulator_circle_ray(&g, a, &cfg.contour, 1e-12).unwrap();
    assert!((fp.total - cr.total).norm() < 1e-9);
}

#[test]
fn truncated_polylog_identity() {
    let g = poly(&[1, 0, 3]);
    let t = 1.5;
    let tau = (-g.phi_eval_real(t).unwrap()).exp();
    let n = 8;
    let coeffs: Vec<Complex64> = (0..=n).map(|k| re(if k == 0 { 0.0 } else { tau.powi(k as i32) })).collect();
    let alpha = re(0.5);
    let acted = frac_operator_apply(alpha, &PowerSeries::new(coeffs, n));
    let at_one: Complex64 = acted.coeffs().iter().sum();
    let direct = frac_action_direct_sum(&g, alpha, t, 1e-16).unwrap();
    assert!((at_one - direct).norm() < 1e-12, "{at_one} vs {direct}");
}

#[test]
fn zeta_reduction_and_product_stability() {
    let cfg = FracConfig::default();
    let r = GeneratorSpec::riemann();
    for a in [-2.5, -1.3, 0.0, 0.4, 0.9] {
        let a = re(a);
        assert!((gen_zeta(&r, a, &cfg).unwrap() - zeta_c(a).unwrap()).norm() <= 1e-8);
    }
    for g in [r, poly(&[1, 0, 3])] {
        let p1 = reg_product(&g, &cfg).unwrap();
        let p2 = reg_product_with_step(&g, &cfg, 5e-4).unwrap();
        assert!(p1.product > 0.0);
        assert!((p1.product - p2.product).abs() < 1e-7);
    }
}

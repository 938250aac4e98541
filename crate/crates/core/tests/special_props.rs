use genzeta::series::rational_to_f64;
use genzeta::special::{gamma_c, polylog_neg_int, polylog_series, zeta_c, zeta_neg_int, BernoulliTable};
use genzeta::{PowerSeries, Rational};
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn gamma_recurrence_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 100 {
        let z = Complex64::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
        if z.norm() > 10.0 {
            continue;
        }
        let lhs = gamma_c(z + 1.0).unwrap();
        let rhs = z * gamma_c(z).unwrap();
        assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1e-300), "z = {z}");
        checked += 1;
    }
}

#[test]
fn zeta_at_negative_integers() {
    for m in 0..=10u32 {
        let exact = rational_to_f64(&zeta_neg_int(m));
        let z = zeta_c(Complex64::new(-f64::from(m), 0.0)).unwrap();
        assert!((z.re - exact).abs() <= 1e-12 * exact.abs().max(1.0), "m = {m}");
        assert_eq!(z.im, 0.0);
    }
}

#[test]
fn polylog_series_matches_closed_form() {
    for m in 0..=4u32 {
        for x in [0.1, 0.5, 0.9] {
            let x = Complex64::new(x, 0.0);
            let closed = polylog_neg_int(m, x).unwrap();
            let series = polylog_series(Complex64::new(-f64::from(m), 0.0), x, 1e-14).unwrap();
            assert!((series - closed).norm() <= 1e-10 * closed.norm().max(1.0), "m = {m}, x = {x}");
        }
    }
}

#[test]
fn bernoulli_generating_function() {
    let n = 20;
    let table = BernoulliTable::new(n);
    // (e^t - 1)/t = sum t^k / (k+1)!
    let mut fact = BigInt::from(1);
    let mut coeffs = Vec::new();
    for k in 0..=n {
        fact *= k + 1;
        coeffs.push(Rational::new(1.into(), fact.clone()));
    }
    let inv = PowerSeries::new(coeffs, n).reciprocal().unwrap();
    let mut kfact = BigInt::from(1);
    for k in 0..=n {
        if k > 0 {
            kfact *= k;
        }
        assert_eq!(inv.coeff(k) * Rational::from_integer(kfact.clone()), *table.get(k), "B_{k}");
    }
}

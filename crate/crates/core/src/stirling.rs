//! Stirling numbers of the second kind at complex upper argument and the
//! fractional Euler operator `(z D_z)^alpha = sum_k {alpha, k} z^k D^k`.

use num_complex::Complex64;

use crate::series::PowerSeries;
use crate::special::binomial_f64;

/// Largest `k` accepted by [`stirling2_frac`]; beyond it the alternating sum
/// loses roughly `k` bits and the result is noise.
pub const MAX_STIRLING_K: u32 = 64;

/// Neumaier-compensated sum, componentwise.
fn compensated_sum(xs: &[Complex64]) -> Complex64 {
    fn sum(xs: impl Iterator<Item = f64>) -> f64 {
        let (mut s, mut c) = (0.0f64, 0.0f64);
        for x in xs {
            let t = s + x;
            c += if s.abs() >= x.abs() { (s - t) + x } else { (x - t) + s };
            s = t;
        }
        s + c
    }
    Complex64::new(sum(xs.iter().map(|z| z.re)), sum(xs.iter().map(|z| z.im)))
}

fn pow_real(l: u32, alpha: Complex64) -> Complex64 {
    let l = f64::from(l);
    Complex64::from_polar(l.powf(alpha.re), alpha.im * l.ln())
}

/// `{alpha, k} = (1/k!) sum_{l=1}^k (-1)^{k-l} C(k,l) l^alpha`, and
/// `{alpha, 0} = [alpha = 0]`.
pub fn stirling2_frac(alpha: Complex64, k: u32) -> Complex64 {
    if k == 0 {
        let one = alpha == Complex64::new(0.0, 0.0);
        return Complex64::new(if one { 1.0 } else { 0.0 }, 0.0);
    }
    assert!(k <= MAX_STIRLING_K, "k = {k} exceeds {MAX_STIRLING_K}");
    let mut kfact = 1.0;
    for i in 2..=k {
        kfact *= f64::from(i);
    }
    let terms: Vec<Complex64> = (1..=k)
        .map(|l| {
            let sign = if (k - l).is_multiple_of(2) { 1.0 } else { -1.0 };
            pow_real(l, alpha) * (sign * binomial_f64(k.into(), l.into()))
        })
        .collect();
    // integer alpha keeps every term an exact integer until the final division
    compensated_sum(&terms) / kfact
}

/// Coefficient of `z^n` in `(z D_z)^alpha z^n`: `sum_{k=1}^n {alpha,k} n!/(n-k)!`.
pub fn eigenvalue(alpha: Complex64, n: u32) -> Complex64 {
    if n == 0 {
        return stirling2_frac(alpha, 0);
    }
    let mut falling = 1.0;
    let terms: Vec<Complex64> = (1..=n)
        .map(|k| {
            falling *= f64::from(n - k + 1);
            stirling2_frac(alpha, k) * falling
        })
        .collect();
    compensated_sum(&terms)
}

/// Term-by-term action of `(z D_z)^alpha` on a truncated series.
pub fn frac_operator_apply(alpha: Complex64, f: &PowerSeries<Complex64>) -> PowerSeries<Complex64> {
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| c * eigenvalue(alpha, n as u32))
        .collect();
    PowerSeries::new(coeffs, f.order())
}

/// Largest defect of `sum_{k=l}^n (-1)^{k-l} C(k,l) C(n,k) = [l = n]` over `l`,
/// evaluated exactly.
pub fn collapse_defect(n: u32) -> u128 {
    let binom = |a: u32, b: u32| -> i128 {
        let mut r: i128 = 1;
        for i in 0..b {
            r = r * i128::from(a - i) / i128::from(i + 1);
        }
        r
    };
    (1..=n)
        .map(|l| {
            let s: i128 = (l..=n)
                .map(|k| {
                    let sign = if (k - l) % 2 == 0 { 1 } else { -1 };
                    sign * binom(k, l) * binom(n, k)
                })
                .sum();
            (s - i128::from(l == n)).unsigned_abs()
        })
        .max()
        .unwrap_or(0)
}

/// `|[z^n] (z D_z)^alpha z^n - n^alpha|`, plus any defect in the exact
/// coefficient-collapse identity behind it.
pub fn eigen_check(alpha: Complex64, n: u32) -> f64 {
    let deviation = (eigenvalue(alpha, n) - pow_real(n, alpha)).norm();
    deviation + collapse_defect(n) as f64
}

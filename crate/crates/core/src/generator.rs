//! Generators `L = -h(t) d/dt`, stored through `p(t) = 1/h(t)`.
//!
//! The eigenfunctions of `L` are `exp(-n Phi(t))` with `Phi(t) = int_0^t p`,
//! so every regulator in this crate is a functional of `Phi`. Polynomial `p`
//! gives `Phi` exactly on the whole real line; a truncated series only
//! determines derivatives at the origin and is limited to integer traces.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{format_rational, parse_rational, rational_to_f64, Coeff, PowerSeries, Rational};
use crate::special::expm1_c;

/// On-disk generator description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub name: String,
    pub inv_h: Vec<RationalLiteral>,
    #[serde(default = "default_polynomial")]
    pub polynomial: bool,
}

fn default_polynomial() -> bool {
    true
}

/// A rational written either as a string `"p/q"` or as a JSON integer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalLiteral {
    Text(String),
    Integer(i64),
}

impl RationalLiteral {
    fn parse(&self) -> Result<Rational> {
        match self {
            Self::Text(s) => parse_rational(s),
            Self::Integer(n) => Ok(Rational::from_int(*n)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    name: String,
    inv_h: Vec<Rational>,
    is_polynomial: bool,
}

impl GeneratorSpec {
    /// Validates `p(0) > 0` and a non-empty coefficient list. Trailing zero
    /// coefficients of a polynomial are dropped.
    pub fn new(name: impl Into<String>, mut inv_h: Vec<Rational>, is_polynomial: bool) -> Result<Self> {
        if inv_h.is_empty() {
            return Err(Error::EmptySpec);
        }
        if !inv_h[0].is_positive() {
            return Err(Error::NonpositiveConstant(format_rational(&inv_h[0])));
        }
        if is_polynomial {
            while inv_h.len() > 1 && inv_h.last().is_some_and(Zero::is_zero) {
                inv_h.pop();
            }
        }
        Ok(Self {
            name: name.into(),
            inv_h,
            is_polynomial,
        })
    }

    /// Polynomial generator with integer coefficients.
    pub fn polynomial(name: impl Into<String>, coeffs: &[i64]) -> Result<Self> {
        Self::new(name, coeffs.iter().map(|&c| Rational::from_int(c)).collect(), true)
    }

    /// `h = 1`, the Riemann zeta scheme.
    pub fn riemann() -> Self {
        Self::polynomial("riemann", &[1]).expect("constant 1 is a valid generator")
    }

    pub fn from_file_spec(file: &GeneratorFile) -> Result<Self> {
        let coeffs = file
            .inv_h
            .iter()
            .map(RationalLiteral::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.name.clone(), coeffs, file.polynomial)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let file: GeneratorFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file_spec(&file)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    pub fn to_file_spec(&self) -> GeneratorFile {
        GeneratorFile {
            name: self.name.clone(),
            inv_h: self
                .inv_h
                .iter()
                .map(|c| RationalLiteral::Text(format_rational(c)))
                .collect(),
            polynomial: self.is_polynomial,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn inv_h(&self) -> &[Rational] {
        &self.inv_h
    }

    pub fn is_polynomial(&self) -> bool {
        self.is_polynomial
    }

    /// Highest order to which `p` is known: unbounded for polynomials.
    pub fn known_order(&self) -> Option<usize> {
        (!self.is_polynomial).then(|| self.inv_h.len() - 1)
    }

    /// `p(t)` as a series of the given order, or `TruncationTooLow` when a
    /// series-only generator does not determine that many coefficients.
    pub fn inv_h_series(&self, order: usize) -> Result<PowerSeries<Rational>> {
        if let Some(known) = self.known_order() {
            if order > known {
                return Err(Error::TruncationTooLow { have: known, need: order });
            }
        }
        Ok(PowerSeries::new(self.inv_h.clone(), order))
    }

    /// `h(t) = 1/p(t)` about the origin.
    pub fn h_series(&self, order: usize) -> Result<PowerSeries<Rational>> {
        self.inv_h_series(order)?.reciprocal()
    }

    /// `Phi = int p` and `phi = Phi / z`, with `phi` of order `order`.
    pub fn build_phi(&self, order: usize) -> Result<PhiData> {
        let p = self.inv_h_series(order)?;
        let phi_series = p.integrate();
        let phi_reduced = phi_series.shift_down(1)?;
        let phi_poly_coeffs = self.is_polynomial.then(|| {
            let mut c = vec![Rational::zero()];
            c.extend(
                self.inv_h
                    .iter()
                    .enumerate()
                    .map(|(k, a)| a.clone() / Rational::from_int(k as i64 + 1)),
            );
            c
        });
        Ok(PhiData {
            phi_series,
            phi_reduced,
            phi_poly_coeffs,
        })
    }

    /// Exact antiderivative coefficients `Phi_0..=Phi_{d+1}` of a polynomial generator.
    pub fn phi_poly(&self) -> Result<Vec<Rational>> {
        if !self.is_polynomial {
            return Err(Error::NotPolynomial(self.name.clone()));
        }
        Ok(self
            .build_phi(self.inv_h.len() - 1)?
            .phi_poly_coeffs
            .expect("polynomial generator has polynomial Phi"))
    }

    /// `Phi` coefficients as doubles.
    pub fn phi_poly_f64(&self) -> Result<Vec<f64>> {
        Ok(self.phi_poly()?.iter().map(rational_to_f64).collect())
    }

    /// `phi(z) = Phi(z)/z` coefficients as complex doubles (polynomial generators).
    pub fn phi_reduced_complex(&self) -> Result<Vec<Complex64>> {
        Ok(self.phi_poly_f64()?[1..]
            .iter()
            .map(|&c| Complex64::new(c, 0.0))
            .collect())
    }

    pub fn phi_eval_real(&self, x: f64) -> Result<f64> {
        Ok(horner(&self.phi_poly_f64()?, x))
    }

    /// `-Phi(-x)`, the quantity that must stay positive and increasing for
    /// Hankel-type generators.
    pub fn neg_phi_neg(&self, x: f64) -> Result<f64> {
        Ok(-horner(&self.phi_poly_f64()?, -x))
    }

    /// Generalized spectral function `1/(exp(Phi(t)) - 1)`.
    pub fn gsf_eval(&self, t: f64) -> Result<f64> {
        if !(t > 0.0) {
            return Err(Error::InvalidArgument(format!("gsf needs t > 0, got {t}")));
        }
        let phi = self.phi_eval_real(t)?;
        Ok(1.0 / expm1_c(Complex64::new(phi, 0.0)).re)
    }

    /// Sampled check of the Hankel conditions on a logarithmic grid.
    pub fn validate_hankel(&self, grid: &HankelGrid) -> HankelValidation {
        let fail = |reason: String| HankelValidation {
            passed: false,
            min_neg_phi: f64::NAN,
            tail_exponent: f64::NAN,
            reason: Some(reason),
            warnings: Vec::new(),
        };
        let coeffs = match self.phi_poly_f64() {
            Ok(c) => c,
            Err(e) => return fail(e.to_string()),
        };
        let p: Vec<f64> = self.inv_h.iter().map(rational_to_f64).collect();
        let xs = grid.points();

        let mut warnings = Vec::new();
        let mut reason = None;
        let mut min_neg_phi = f64::INFINITY;
        let mut prev_neg = f64::NEG_INFINITY;
        let mut prev_pos = 0.0;
        let mut prev_p = horner(&p, 0.0);
        let mut p_warned = false;
        for &x in &xs {
            let neg = -horner(&coeffs, -x);
            let pos = horner(&coeffs, x);
            min_neg_phi = min_neg_phi.min(neg);
            if reason.is_none() {
                if !(neg > 0.0) {
                    reason = Some(format!("-Phi(-x) = {neg:e} is not positive at x = {x:e}"));
                } else if !(neg > prev_neg) {
                    reason = Some(format!("-Phi(-x) stops increasing at x = {x:e}"));
                } else if !(pos > prev_pos) {
                    reason = Some(format!("Phi(x) stops increasing at x = {x:e}"));
                }
            }
            let px = horner(&p, x);
            if !p_warned && px < prev_p {
                warnings.push(format!(
                    "h(t) increases near t = {x:e}; integer traces are unaffected"
                ));
                p_warned = true;
            }
            prev_p = px;
            prev_neg = neg;
            prev_pos = pos;
        }

        let hi = grid.x_max;
        let lo = hi / 10.0;
        let tail_exponent =
            ((-horner(&coeffs, -hi)).ln() - (-horner(&coeffs, -lo)).ln()) / (hi / lo).ln();
        if reason.is_none() && !(tail_exponent > 0.0) {
            reason = Some(format!(
                "1/Phi(x) does not vanish as x -> -inf (tail exponent {tail_exponent})"
            ));
        }
        HankelValidation {
            passed: reason.is_none(),
            min_neg_phi,
            tail_exponent,
            reason,
            warnings,
        }
    }

    /// Polynomial generator whose Hankel check passed, or the reason it cannot
    /// drive a fractional route.
    pub fn require_hankel(&self) -> Result<HankelValidation> {
        if !self.is_polynomial {
            return Err(Error::NotPolynomial(self.name.clone()));
        }
        let v = self.validate_hankel(&HankelGrid::default());
        if v.passed {
            Ok(v)
        } else {
            Err(Error::HankelConditionsFailed {
                name: self.name.clone(),
                reason: v.reason.clone().unwrap_or_default(),
            })
        }
    }
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// `Phi` and `phi` about the origin, plus the exact polynomial when available.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiData {
    pub phi_series: PowerSeries<Rational>,
    pub phi_reduced: PowerSeries<Rational>,
    pub phi_poly_coeffs: Option<Vec<Rational>>,
}

/// Logarithmic sample grid on `[x_min, x_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HankelGrid {
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
}

impl Default for HankelGrid {
    fn default() -> Self {
        Self {
            x_min: 1e-3,
            x_max: 1e3,
            points: 200,
        }
    }
}

impl HankelGrid {
    pub fn points(&self) -> Vec<f64> {
        let n = self.points.max(2);
        let (a, b) = (self.x_min.ln(), self.x_max.ln());
        (0..n)
            .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HankelValidation {
    pub passed: bool,
    /// Minimum of `-Phi(-x)` over the grid.
    pub min_neg_phi: f64,
    /// Growth power of `-Phi(-x)` over the top decade of the grid.
    pub tail_exponent: f64,
    pub reason: Option<String>,
    pub warnings: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(p: i64, d: i64) -> Rational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    #[test]
    fn make_generator_validation() {
        assert_eq!(GeneratorSpec::polynomial("e", &[]), Err(Error::EmptySpec));
        assert!(matches!(
            GeneratorSpec::polynomial("neg", &[-1, 2]),
            Err(Error::NonpositiveConstant(_))
        ));
        assert!(matches!(
            GeneratorSpec::polynomial("zero", &[0, 1]),
            Err(Error::NonpositiveConstant(_))
        ));
        let g = GeneratorSpec::polynomial("trail", &[1, 2, 0, 0]).unwrap();
        assert_eq!(g.inv_h().len(), 2);
    }

    #[test]
    fn json_parsing() {
        let g = GeneratorSpec::from_json_str(r#"{"name": "cubic", "inv_h": ["1", "0", "3"], "polynomial": true}"#)
            .unwrap();
        assert_eq!(g.inv_h(), &[q(1, 1), q(0, 1), q(3, 1)]);
        let g = GeneratorSpec::from_json_str(r#"{"name": "mixed", "inv_h": ["1/2", 2]}"#).unwrap();
        assert!(g.is_polynomial());
        assert_eq!(g.inv_h()[0], q(1, 2));
        assert!(matches!(
            GeneratorSpec::from_json_str(r#"{"name": "bad", "inv_h": ["1/x"]}"#),
            Err(Error::MalformedRational(_))
        ));
        assert!(matches!(GeneratorSpec::from_json_str("{"), Err(Error::Parse(_))));
        let round = GeneratorSpec::from_file_spec(&g.to_file_spec()).unwrap();
        assert_eq!(round, g);
    }

    #[test]
    fn phi_examples() {
        let d = GeneratorSpec::riemann().build_phi(4).unwrap();
        assert_eq!(d.phi_series, PowerSeries::new(vec![q(0, 1), q(1, 1)], 5));
        assert_eq!(d.phi_reduced, PowerSeries::one(4));

        let cubic = GeneratorSpec::polynomial("cubic", &[1, 0, 3]).unwrap();
        assert_eq!(cubic.phi_poly().unwrap(), vec![q(0, 1), q(1, 1), q(0, 1), q(1, 1)]);
        let d = cubic.build_phi(6).unwrap();
        assert_eq!(d.phi_reduced.coeffs()[..3], [q(1, 1), q(0, 1), q(1, 1)]);

        let g = GeneratorSpec::polynomial("g123", &[1, 2, 3]).unwrap();
        assert_eq!(g.phi_poly().unwrap(), vec![q(0, 1), q(1, 1), q(1, 1), q(1, 1)]);
    }

    #[test]
    fn real_axis_evaluation() {
        let cubic = GeneratorSpec::polynomial("cubic", &[1, 0, 3]).unwrap();
        assert_eq!(cubic.phi_eval_real(2.0).unwrap(), 10.0);
        assert_eq!(cubic.neg_phi_neg(2.0).unwrap(), 10.0);
        assert_eq!(GeneratorSpec::riemann().phi_eval_real(7.0).unwrap(), 7.0);

        let series_only = GeneratorSpec::new("s", vec![q(1, 1), q(1, 1)], false).unwrap();
        assert!(matches!(series_only.phi_eval_real(1.0), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn gsf_values() {
        let r = GeneratorSpec::riemann();
        assert!((r.gsf_eval(std::f64::consts::LN_2).unwrap() - 1.0).abs() < 1e-15);
        assert!(r.gsf_eval(800.0).unwrap() == 0.0);
        let g = GeneratorSpec::polynomial("g", &[1, 2, 3]).unwrap();
        let t = 0.3;
        let phi = g.phi_eval_real(t).unwrap();
        let direct: f64 = (1..2000).map(|n| (-(n as f64) * phi).exp()).sum();
        assert!((g.gsf_eval(t).unwrap() - direct).abs() < 1e-12);
    }

    #[test]
    fn hankel_examples() {
        let grid = HankelGrid::default();
        assert!(GeneratorSpec::riemann().validate_hankel(&grid).passed);
        let cubic = GeneratorSpec::polynomial("cubic", &[1, 0, 3]).unwrap();
        let v = cubic.validate_hankel(&grid);
        assert!(v.passed);
        assert!((v.tail_exponent - 3.0).abs() < 1e-3);
        assert!(v.warnings.is_empty());
        let bad = GeneratorSpec::polynomial("bad", &[1, 2]).unwrap();
        let v = bad.validate_hankel(&grid);
        assert!(!v.passed);
        assert!(v.min_neg_phi < 0.0);
        assert!(matches!(bad.require_hankel(), Err(Error::HankelConditionsFailed { .. })));
    }

    #[test]
    fn monotonicity_of_h_is_only_a_warning() {
        // p(t) = 2 - t + t^2 dips before rising; Phi stays Hankel-admissible.
        let g = GeneratorSpec::polynomial("dip", &[2, -1, 1]).unwrap();
        let v = g.validate_hankel(&HankelGrid::default());
        assert!(v.passed, "{:?}", v.reason);
        assert_eq!(v.warnings.len(), 1);
    }
}

//! Regularized integer traces `R_L(m)` for `sum n^m`, exact in the rationals.
//!
//! The regulator is `zeta(-m)` plus the residue of `m! Phi(z)^{-m-1} / z` at
//! the origin. Three independent evaluations are provided:
//!
//! * [`trace_integer`]: `m! [z^{m+1}] phi(z)^{-(m+1)}` with `phi = Phi/z`;
//! * [`trace_closed_form`]: the explicit polynomials in `h^{(k)}(0)` for `m <= 3`;
//! * [`trace_laurent_oracle`]: the constant term of the Laurent expansion of
//!   `Phi^{-m-1}`, with its own long-division inverse.
//!
//! [`trace_polylog_expansion`] additionally expands `Li_{-m}(exp(-Phi(z)))`
//! through the Eulerian closed form and reads off the constant term.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::generator::GeneratorSpec;
use crate::series::{Coeff, PowerSeries, Rational};
use crate::special::{factorial_big, zeta_neg_int, EulerianTable, EULERIAN_MAX_ROW};

#[derive(Clone, Debug, PartialEq)]
pub struct TraceValue {
    pub m: u32,
    pub zeta_part: Rational,
    pub correction: Rational,
    pub total: Rational,
}

impl TraceValue {
    fn new(m: u32, correction: Rational) -> Self {
        let zeta_part = zeta_neg_int(m);
        let total = zeta_part.clone() + correction.clone();
        Self {
            m,
            zeta_part,
            correction,
            total,
        }
    }
}

fn factorial_q(n: u32) -> Rational {
    BigRational::from_integer(factorial_big(n as u64))
}

fn check_order(g: &GeneratorSpec, need: usize) -> Result<()> {
    match g.known_order() {
        Some(have) if have < need => Err(Error::TruncationTooLow { have, need }),
        _ => Ok(()),
    }
}

/// `zeta(-m) + m! [z^{m+1}] (1/phi(z))^{m+1}`.
pub fn trace_integer(g: &GeneratorSpec, m: u32) -> Result<TraceValue> {
    let order = m as usize + 1;
    check_order(g, order)?;
    let phi = g.build_phi(order)?.phi_reduced;
    let inv = phi.reciprocal()?.powi(i64::from(m) + 1)?;
    let correction = factorial_q(m) * inv.coeff(order);
    Ok(TraceValue::new(m, correction))
}

/// Explicit trace identities for `m <= 3` in terms of `h^{(k)}(0)`.
pub fn trace_closed_form(g: &GeneratorSpec, m: u32) -> Result<Rational> {
    if m > 3 {
        return Err(Error::UnsupportedOrder(m));
    }
    let need = m as usize + 1;
    check_order(g, need)?;
    let h = g.h_series(need)?;
    // h^{(k)}(0) = k! [t^k] h(t)
    let d = |k: u32| factorial_q(k) * h.coeff(k as usize);
    let n = |x: i64| Rational::from_int(x);
    let (h0, h1, h2) = (d(0), d(1), d(2));
    let correction = match m {
        0 => h1 / n(2),
        1 => (n(4) * &h0 * &h2 + &h1 * &h1) / n(12),
        2 => (d(3) * &h0 * &h0 + n(2) * &h0 * &h1 * &h2) / n(4),
        _ => {
            let (h3, h4) = (d(3), d(4));
            let h0_2 = &h0 * &h0;
            let h1_2 = &h1 * &h1;
            (n(24) * &h0_2 * &h0 * h4 + n(56) * &h0_2 * &h2 * &h2 - &h1_2 * &h1_2
                + n(108) * &h0_2 * h3 * &h1
                + n(64) * &h0 * &h1_2 * &h2)
                / n(120)
        }
    };
    Ok(zeta_neg_int(m) + correction)
}

/// Laurent series `z^valuation * (c_0 + c_1 z + ...)` over the rationals.
#[derive(Clone, Debug)]
struct Laurent {
    valuation: i64,
    coeffs: Vec<Rational>,
}

impl Laurent {
    fn from_series(s: &PowerSeries<Rational>) -> Self {
        let v = s.valuation().unwrap_or(s.order());
        Self {
            valuation: v as i64,
            coeffs: s.coeffs()[v..].to_vec(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        Self {
            valuation: self.valuation + other.valuation,
            coeffs: out,
        }
    }

    /// Long division `1 / self`, solving `sum_j c_j b_{k-j} = [k = 0]` for each `k`.
    fn inverse(&self) -> Self {
        let n = self.coeffs.len();
        let c0 = &self.coeffs[0];
        let mut b: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut rhs = if k == 0 { Rational::one() } else { Rational::zero() };
            for j in 1..=k {
                rhs -= &self.coeffs[j] * &b[k - j];
            }
            b.push(rhs / c0);
        }
        Self {
            valuation: -self.valuation,
            coeffs: b,
        }
    }

    /// Coefficient of `z^k`, or `None` when `k` lies beyond the known range.
    fn coeff(&self, k: i64) -> Option<Rational> {
        let idx = k - self.valuation;
        if idx < 0 {
            Some(Rational::zero())
        } else {
            self.coeffs.get(idx as usize).cloned()
        }
    }
}

/// `zeta(-m) + m! [z^0] Phi(z)^{-m-1}` by Laurent bookkeeping.
pub fn trace_laurent_oracle(g: &GeneratorSpec, m: u32) -> Result<Rational> {
    let need = m as usize + 1;
    check_order(g, need)?;
    // Phi through z^{m+2} fixes phi = Phi/z through z^{m+1}
    let phi = g.inv_h_series(need)?.integrate();
    let base = Laurent::from_series(&phi);
    let mut power = base.clone();
    for _ in 0..m {
        power = power.mul(&base);
    }
    let constant = power.inverse().coeff(0).ok_or(Error::TruncationTooLow {
        have: phi.order(),
        need: need + 1,
    })?;
    Ok(zeta_neg_int(m) + factorial_q(m) * constant)
}

/// Constant term of `Li_{-m}(exp(-Phi(z)))` about `z = 0`, using the Eulerian
/// closed form of the polylogarithm at negative integer order.
pub fn trace_polylog_expansion(g: &GeneratorSpec, m: u32) -> Result<Rational> {
    let mu = m as usize;
    if mu > EULERIAN_MAX_ROW {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds the Eulerian table")));
    }
    check_order(g, mu + 1)?;
    let order = mu + 2;
    let phi = g.inv_h_series(mu + 1)?.integrate();
    let tau = phi.scale(&Rational::from_int(-1)).exp_nilpotent()?;
    let one = PowerSeries::<Rational>::one(order);
    let numerator = if m == 0 {
        tau.clone()
    } else {
        let table = EulerianTable::new(mu);
        let mut acc = PowerSeries::zero(order);
        for k in 0..mu {
            let c = Rational::from_integer(BigInt::from(table.get(mu, k)));
            acc = acc.add(&tau.powi((mu - k) as i64)?.scale(&c));
        }
        acc
    };
    // 1 - tau = z * s(z) with s(0) = p(0) != 0
    let s = one.sub(&tau).shift_down(1)?;
    let denom_inv = s.reciprocal()?.powi(mu as i64 + 1)?;
    Ok(numerator.mul(&denom_inv).coeff(mu + 1))
}

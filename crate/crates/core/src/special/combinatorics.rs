//! Exact integer and rational tables: Bernoulli, Eulerian and classical
//! Stirling numbers of the second kind.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::series::Rational;

/// Bernoulli numbers `B_0..=B_K` with the convention `B_1 = -1/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct BernoulliTable {
    pub values: Vec<Rational>,
}

impl BernoulliTable {
    /// Builds `B_0..=B_max` from `sum_{j=0}^{k} C(k+1, j) B_j = 0`.
    pub fn new(max: usize) -> Self {
        let mut values: Vec<Rational> = Vec::with_capacity(max + 1);
        values.push(Rational::one());
        for k in 1..=max {
            // binom holds C(k+1, j) as j advances.
            let mut binom = BigInt::one();
            let mut acc = Rational::zero();
            for (j, b) in values.iter().enumerate() {
                acc += b * BigRational::from_integer(binom.clone());
                binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
            }
            values.push(-acc / BigRational::from_integer(BigInt::from(k + 1)));
        }
        Self { values }
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }
}

/// `zeta(-m) = (-1)^m B_{m+1} / (m+1)` as an exact rational.
pub fn zeta_neg_int(m: u32) -> Rational {
    let table = BernoulliTable::new(m as usize + 1);
    zeta_neg_int_from(&table, m)
}

pub fn zeta_neg_int_from(table: &BernoulliTable, m: u32) -> Rational {
    let b = table.get(m as usize + 1).clone() / BigRational::from_integer(BigInt::from(m + 1));
    if m.is_multiple_of(2) {
        b
    } else {
        -b
    }
}

/// Largest row index representable without overflow (33! < 2^128).
pub const EULERIAN_MAX_ROW: usize = 33;

/// Eulerian numbers `<m, k>` for `0 <= k < m`, rows `0..=M`. Row 0 is `[1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerianTable {
    pub rows: Vec<Vec<u128>>,
}

impl EulerianTable {
    pub fn new(max_row: usize) -> Self {
        assert!(
            max_row <= EULERIAN_MAX_ROW,
            "Eulerian rows above {EULERIAN_MAX_ROW} overflow u128"
        );
        let mut rows: Vec<Vec<u128>> = vec![vec![1]];
        for m in 1..=max_row {
            let prev = &rows[m - 1];
            let row = (0..m)
                .map(|k| {
                    let stay = if m == 1 { 0 } else { prev.get(k).copied().unwrap_or(0) };
                    let up = if k == 0 { 0 } else { prev.get(k - 1).copied().unwrap_or(0) };
                    if m == 1 {
                        1
                    } else {
                        (k as u128 + 1) * stay + (m - k) as u128 * up
                    }
                })
                .collect();
            rows.push(row);
        }
        Self { rows }
    }

    pub fn get(&self, m: usize, k: usize) -> u128 {
        self.rows[m].get(k).copied().unwrap_or(0)
    }

    pub fn row(&self, m: usize) -> &[u128] {
        &self.rows[m]
    }
}

/// Classical Stirling numbers of the second kind `{n, k}` for `n, k <= max`.
pub fn stirling2_table(max: usize) -> Vec<Vec<u128>> {
    let mut t = vec![vec![0u128; max + 1]; max + 1];
    t[0][0] = 1;
    for n in 1..=max {
        for k in 1..=n {
            t[n][k] = k as u128 * t[n - 1][k] + t[n - 1][k - 1];
        }
    }
    t
}

pub fn binomial_f64(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

pub fn factorial_f64(n: u64) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

pub fn factorial_big(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

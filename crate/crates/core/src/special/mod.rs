//! Special functions used by the regulators.

mod combinatorics;
mod gamma;
mod polylog;
mod zeta;

pub use combinatorics::{
    binomial_f64, factorial_big, factorial_f64, stirling2_table, zeta_neg_int, zeta_neg_int_from,
    BernoulliTable, EulerianTable, EULERIAN_MAX_ROW,
};
pub use gamma::{cos_pi, gamma_c, ln_gamma_c, rgamma_c, sin_pi};
pub use polylog::{
    polylog_expand_near_one, polylog_in_disk, polylog_neg_int, polylog_regular_part,
    polylog_series, PolylogDisk, SERIES_TERM_CAP,
};
pub use zeta::{expm1_c, zeta_c, zeta_real};

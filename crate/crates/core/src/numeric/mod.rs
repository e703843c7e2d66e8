//! High-precision zeta values and the independent numeric oracles:
//! nested-sum multiple zeta values, adaptive quadrature of every integral
//! in the expansion, Monte Carlo for `r`-dimensional norms, and the exact
//! distribution function of `Z_n`.

mod cdf;
mod context;
mod integrals;
mod montecarlo;
mod mzv;
pub mod quad;
mod real;
mod sum;
mod zeta_values;

pub use cdf::{cdf_infinity, cdf_zn, g_norm, sup_cdf_distance, CdfReport};
pub use context::PrecisionContext;
pub use integrals::{
    cross_moment, kolbig_check, quad_i, quad_i_xform, quad_moment_indep2,
    quad_moment_indep2_2d, quad_moment_pair, snp_quadrature,
};
pub use montecarlo::{mc_norm_moment, McEstimate};
pub use mzv::{mzv_numeric, mzv_numeric_with_error, MzvValue};
pub use real::Real;
pub use sum::NeumaierSum;
pub use zeta_values::{eval_zeta_poly, zeta_f64, zeta_value};

//! Exact rational combinatorics.
//!
//! Bernoulli and Euler numbers, Stirling numbers of both kinds, partial
//! Bell polynomials, truncated multiple zeta (star) values and the
//! coefficient families derived from them. Nothing here rounds.

mod basic;
mod bell;
mod euler;
pub mod identities;
mod mzv;
mod stirling;

pub use basic::{binomial, factorial, falling_factorial};
pub(crate) use basic::falling_factorial_f64;
pub use bell::bell_partial;
pub use euler::{
    a_coeff, a_coeff_from_bernoulli, bernoulli, beta_coeff, beta_coeff_from_euler_polys,
    euler_at, euler_at_zero, generalized_euler_at_zero, generalized_euler_at_zero_stirling,
};
pub use mzv::{
    binom_pow_sum, partial_fraction_rhs, stirling_mzv_check, truncated_mzv, truncated_star,
    truncated_star_weighted, MzvIndex, WeightedStarIndex,
};
pub use stirling::{
    c_coeffs, gamma_coeffs, gamma_coeffs_by_elimination, stirling_first, stirling_first_unsigned,
    stirling_second,
};

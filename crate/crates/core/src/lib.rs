//! Asymptotic expansions of p-norm integrals and moments.
//!
//! The crate computes the coefficients of
//!
//! ```text
//! I(n) = ∫₀¹ [xⁿ + (1−x)ⁿ]^{1/n} dx ~ Σ_p I_p / n^p
//! ```
//!
//! exactly, as rational polynomials in the Riemann zeta values ζ(2), ζ(3), …,
//! together with the moment expansions of `‖(U, 1−U)‖_n` and
//! `‖(U₁, …, U_r)‖_n` for uniform random variables. Every closed form has an
//! independent numeric counterpart (nested-sum multiple zeta values,
//! adaptive quadrature, Monte Carlo) so that the two can be checked against
//! each other; [`verify`] bundles those cross-checks.
//!
//! Layout:
//!
//! * [`combinatorics`]: exact Bernoulli/Euler numbers, Stirling numbers,
//!   Bell polynomials, truncated (star, weighted) multiple zeta values.
//! * [`zeta`]: polynomials in formal zeta generators, reduction of
//!   `ζ(q, {1}_m)`, formal combinations of alternating MZVs.
//! * [`series`]: the expansion coefficients themselves.
//! * [`numeric`]: high-precision zeta values, the MZV nested-sum oracle,
//!   quadrature, Monte Carlo and distribution-function measurements.

pub mod combinatorics;
mod error;
pub mod numeric;
pub mod rational;
pub mod series;
pub mod verify;
pub mod zeta;

pub use combinatorics::{MzvIndex, WeightedStarIndex};
pub use error::{Error, Result};
pub use numeric::{PrecisionContext, Real};
pub use rational::Rational;
pub use series::{AsymptoticSeries, Coefficient, MomentModel, MomentSpec};
pub use zeta::{FormalCombination, ZetaMonomial, ZetaPolynomial};

//! Polynomials in the formal generators `ζ(2), ζ(3), …`, their even-argument
//! normal form, the reduction of height-one multiple zeta values
//! `ζ(q, {1}_m)`, and unevaluated combinations of alternating MZVs.

mod formal;
mod monomial;
mod polynomial;
mod reduction;

pub use formal::FormalCombination;
pub use monomial::ZetaMonomial;
pub use polynomial::{ParsePolynomialError, ZetaPolynomial};
pub use reduction::{even_zeta_ratio, normalize_even, reduce_height_one};

use crate::combinatorics::{a_coeff, binomial, MzvIndex};
use crate::error::{Error, Result};
use crate::rational::{rat, sign, Rational};
use crate::zeta::{normalize_even, reduce_height_one, FormalCombination, ZetaPolynomial};

use super::{AsymptoticSeries, Coefficient};

/// Highest order with a tabulated closed form in [`tabulated_ip`].
pub const TABULATED_MAX: u32 = 12;

const TABLE: [&str; 11] = [
    "1/8*z2",
    "1/8*z3",
    "-3/32*z4",
    "-1/8*z2*z3",
    "83/256*z6 - 1/16*z3^2",
    "3/16*z7 + 27/64*z3*z4 + 3/16*z2*z5",
    "-2533/1536*z8 + 3/16*z3*z5 + 5/32*z2*z3^2",
    "-5/6*z9 - 289/128*z3*z6 - 135/64*z4*z5 - 9/8*z2*z7 + 5/96*z3^3",
    "293937/20480*z10 - 87/32*z3*z7 - 9/16*z5^2 - 81/64*z3^2*z4 - 21/16*z2*z3*z5",
    "63/8*z11 + 58007/3072*z3*z8 + 5187/256*z5*z6 + 135/8*z4*z7 + 115/12*z2*z9 \
     - 13/48*z2*z3^3 - 21/32*z3^2*z5",
    "-2095281645/11321344*z12 + 115/12*z3*z9 + 81/8*z5*z7 + 5765/512*z3^2*z6 \
     + 1323/64*z3*z4*z5 + 45/4*z2*z3*z7 + 45/8*z2*z5^2 - 13/192*z3^4",
];

/// Entries of the reference table that disagree with the computed
/// coefficient, as `(p, ip_poly_form(p) − tabulated_ip(p))`. Both the
/// alternating-sum route and direct quadrature of `I(n)` side with the
/// computed value.
const TABLE_DEVIATIONS: [(u32, &str); 2] = [(10, "51/32*z3*z7"), (11, "27/16*z4*z7")];

/// The reference closed form of `I_p` for `2 ≤ p ≤ 12`, as tabulated,
/// even-normalized. Two entries carry a misprinted coefficient; see
/// [`table_deviation`].
pub fn tabulated_ip(p: u32) -> Option<ZetaPolynomial> {
    if !(2..=TABULATED_MAX).contains(&p) {
        return None;
    }
    let poly: ZetaPolynomial = TABLE[(p - 2) as usize].parse().expect("table entry parses");
    Some(normalize_even(&poly))
}

/// Known difference `I_p − tabulated_ip(p)`; zero except for `p = 10, 11`.
pub fn table_deviation(p: u32) -> ZetaPolynomial {
    TABLE_DEVIATIONS
        .iter()
        .find(|(q, _)| *q == p)
        .map(|(_, d)| d.parse().expect("deviation parses"))
        .unwrap_or_else(ZetaPolynomial::zero)
}

fn check_order(p: u32) -> Result<()> {
    if p < 2 {
        return Err(Error::invalid(format!("I_p is defined for p ≥ 2, got p = {p}")));
    }
    Ok(())
}

/// `I_p = (−1)^p Σ_{j=2}^{p} a_{⌊(j−1)/2⌋} ζ(j̄, {1}_{p−j})`.
pub fn ip_alt_form(p: u32) -> Result<FormalCombination> {
    check_order(p)?;
    let mut out = FormalCombination::new();
    for j in 2..=p {
        let c = sign(p as i64) * a_coeff((j - 1) / 2);
        out.push(c, MzvIndex::height_one(j, p - j, true)?);
    }
    Ok(out)
}

/// `w(p,k) = Σ_{j=0}^{k−1} C(k−1,j) a_{⌊(p−1−j)/2⌋}`.
pub fn poly_weight(p: u32, k: u32) -> Result<Rational> {
    if p < 2 || k == 0 || k >= p {
        return Err(Error::invalid(format!("poly_weight needs 1 ≤ k ≤ p−1, got p = {p}, k = {k}")));
    }
    Ok((0..k).fold(Rational::from_integer(0.into()), |acc, j| {
        acc + binomial(k - 1, j) * a_coeff((p - 1 - j) / 2)
    }))
}

/// `ρ_k = (−1)^{p+k} w(p,k) / 2`.
pub fn rho(p: u32, k: u32) -> Result<Rational> {
    Ok(sign((p + k) as i64) * poly_weight(p, k)? * rat(1, 2))
}

/// `I_p = ((−1)^p / 2) Σ_{k=1}^{p−1} (−1)^k w(p,k) ζ(k+1, {1}_{p−k−1})`
/// as an even-normalized polynomial in the ordinary zeta values.
pub fn ip_poly_form(p: u32) -> Result<ZetaPolynomial> {
    check_order(p)?;
    let mut out = ZetaPolynomial::zero();
    for k in 1..p {
        let c = sign((p + k) as i64) * poly_weight(p, k)? * rat(1, 2);
        out += &(&reduce_height_one(k + 1, p - k - 1)? * &c);
    }
    Ok(normalize_even(&out))
}

/// Coefficients `I_0, …, I_order` of `I(n) ~ Σ_p I_p n^{−p}`.
pub fn i_series(order: u32) -> Result<AsymptoticSeries> {
    let mut coeffs = vec![Coefficient::Exact(ZetaPolynomial::constant(rat(3, 4)))];
    if order >= 1 {
        coeffs.push(Coefficient::Exact(ZetaPolynomial::zero()));
    }
    for p in 2..=order {
        coeffs.push(Coefficient::Exact(ip_poly_form(p)?));
    }
    Ok(AsymptoticSeries::new(
        coeffs,
        "I(n) = ∫₀¹ [xⁿ + (1−x)ⁿ]^{1/n} dx",
    ))
}

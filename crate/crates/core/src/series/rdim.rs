use std::f64::consts::PI;

use crate::combinatorics::{binomial, truncated_mzv, truncated_star, truncated_star_weighted, MzvIndex, WeightedStarIndex};
use crate::error::{Error, Result};
use crate::numeric::{mzv_numeric, NeumaierSum, PrecisionContext};
use crate::rational::{int, sign, Rational};

/// `E(Z_∞^s) = r/(r+s)` for the maximum of `r` independent uniforms.
pub fn rdim_prefactor(r: u32, s: f64) -> f64 {
    r as f64 / (r as f64 + s)
}

/// Two-term approximation `r/(r+s) · (1 + s(r−1)π²/(12n²))`.
pub fn rdim_leading(r: u32, s: f64, n: f64) -> Result<f64> {
    if r < 2 || !(s > 0.0) || !(n >= 1.0) {
        return Err(Error::invalid(format!("rdim_leading needs r ≥ 2, s > 0, n ≥ 1 (r={r}, s={s}, n={n})")));
    }
    let correction = s * (r - 1) as f64 * PI * PI / (12.0 * n * n);
    Ok(rdim_prefactor(r, s) * (1.0 + correction))
}

/// `Σ_{ℓ=0}^{p−2} s^{p−ℓ−1} (−ζ(ℓ+2‾, {1}_{p−ℓ−2}))`, so that for `r = 2`
///
/// ```text
/// E(Z_n^s) = 2/(2+s) · (1 + Σ_{p≥2} (−1)^p c_p / n^p)
/// ```
pub fn r2_moment_coeff(s: f64, p: u32, ctx: &PrecisionContext) -> Result<f64> {
    if !(s.is_finite() && s > 0.0) || p < 2 {
        return Err(Error::invalid(format!("r2_moment_coeff needs s > 0, p ≥ 2 (s={s}, p={p})")));
    }
    let mut acc = NeumaierSum::new();
    for l in 0..=p - 2 {
        let z = mzv_numeric(&MzvIndex::height_one(l + 2, p - l - 2, true)?, ctx)?;
        acc.add(-s.powi((p - l - 1) as i32) * z);
    }
    Ok(acc.value())
}

/// Truncated `r = 2` expansion of `E(Z_n^s)` through `n^{−order}`.
pub fn r2_moment_value(s: f64, n: f64, order: u32, ctx: &PrecisionContext) -> Result<f64> {
    let mut acc = NeumaierSum::new();
    acc.add(1.0);
    for p in 2..=order {
        let sgn = if p % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sgn * r2_moment_coeff(s, p, ctx)? / n.powi(p as i32));
    }
    Ok(rdim_prefactor(2, s) * acc.value())
}

/// `ζ*_m({1}_R; {1}_{R−1}, 2) − ζ*_m({1}_R) − 1/m^R = Σ_{j=1}^{m−1} C(m,j)/j^R`.
fn star_difference(m: u32, big_r: u32) -> Result<Rational> {
    let ones = vec![1; big_r as usize];
    let mut weights = vec![int(1); big_r as usize];
    *weights.last_mut().expect("R ≥ 1") = int(2);
    let weighted = truncated_star_weighted(&WeightedStarIndex::new(ones.clone(), weights, m)?);
    let last = Rational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(m), big_r as usize));
    Ok(weighted - truncated_star(m, &ones) - last)
}

fn half_bracket(m: u32, l1: u32, l2: u32) -> Result<Rational> {
    let mut acc = int(0);
    for i in 1..=l1 + 1 {
        let c = binomial(i + l2 - 1, l2);
        let denom = num_traits::pow(num_bigint::BigInt::from(m), (1 + i + l2) as usize);
        acc += c * star_difference(m, l1 + 2 - i)? / Rational::from_integer(denom);
    }
    Ok(acc)
}

/// The `m`-th summand of the bracket in the `r = 3` representation for
/// fixed `(ℓ₁, ℓ₂, k)`:
///
/// ```text
/// (−1)^{m−k} ζ_{m−1}({1}_{k−1}) · [Σ_{i=1}^{ℓ₁+1} C(i+ℓ₂−1, ℓ₂) D_m(ℓ₁+2−i) / m^{1+i+ℓ₂} + (ℓ₁ ↔ ℓ₂)]
/// ```
///
/// where `D_m(R) = ζ*_m({1}_R; {1}_{R−1}, 2) − ζ*_m({1}_R) − m^{−R}`.
/// The sum over `m` is not performed.
pub fn r3_bracket_summand(m: u32, l1: u32, l2: u32, k: u32) -> Result<Rational> {
    if m == 0 || k == 0 {
        return Err(Error::invalid(format!("r3_bracket_summand needs m, k ≥ 1 (m={m}, k={k})")));
    }
    let ones = vec![1; (k - 1) as usize];
    let outer = sign(m as i64 - k as i64) * truncated_mzv(m - 1, &ones);
    Ok(outer * (half_bracket(m, l1, l2)? + half_bracket(m, l2, l1)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{quad_moment_indep2, quad_moment_indep2_2d};

    #[test]
    fn prefactor_and_leading() {
        assert!((rdim_prefactor(2, 1.0) - 2.0 / 3.0).abs() < 1e-15);
        assert!((rdim_prefactor(3, 1.0) - 0.75).abs() < 1e-15);
        let v = rdim_leading(3, 1.0, 20.0).unwrap();
        assert!((v - 0.753084).abs() < 5e-7, "{v}");
        assert!((rdim_leading(2, 1.0, 1e9).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!(rdim_leading(1, 1.0, 20.0).is_err());
    }

    #[test]
    fn r2_coefficients() {
        let ctx = PrecisionContext::default();
        for s in [0.5, 1.0, 2.0] {
            let c2 = r2_moment_coeff(s, 2, &ctx).unwrap();
            assert!((c2 - s * PI * PI / 12.0).abs() < 1e-12);
        }
        for n in [20.0f64, 40.0] {
            let series = r2_moment_value(1.0, n, 6, &ctx).unwrap();
            let quad = quad_moment_indep2(n, 1.0, &ctx).unwrap();
            assert!((series - quad).abs() < 10.0 / n.powi(7), "n={n}: {series} vs {quad}");
            let quad2d = quad_moment_indep2_2d(n, 1.0, 1e-9).unwrap();
            assert!((series - quad2d).abs() < 1e-7, "n={n}: {series} vs {quad2d}");
        }
    }

    fn direct(m: u32, l1: u32, l2: u32, k: u32) -> Rational {
        let ones = vec![1; (k - 1) as usize];
        let outer = sign(m as i64 - k as i64) * truncated_mzv(m - 1, &ones) / int(m as i64);
        let inner = (1..m).fold(int(0), |acc, j| {
            let d = num_traits::pow(num_bigint::BigInt::from(j), (l1 + 1) as usize)
                * num_traits::pow(num_bigint::BigInt::from(m - j), (l2 + 1) as usize);
            acc + binomial(m, j) / Rational::from_integer(d)
        });
        outer * inner
    }

    #[test]
    fn r3_summand_matches_direct_binomial_sum() {
        for m in 1..=12 {
            for l1 in 0..=3 {
                for l2 in 0..=3 {
                    for k in 1..=3 {
                        assert_eq!(r3_bracket_summand(m, l1, l2, k).unwrap(), direct(m, l1, l2, k), "m={m} l1={l1} l2={l2} k={k}");
                    }
                }
            }
        }
        assert!(r3_bracket_summand(0, 0, 0, 1).is_err());
    }
}

use crate::combinatorics::{bell_partial, euler_at_zero, falling_factorial_f64, gamma_coeffs, MzvIndex};
use crate::error::{Error, Result};
use crate::numeric::{mzv_numeric, PrecisionContext};
use crate::numeric::NeumaierSum;
use crate::rational::{int, pow2, sign, to_f64, Rational};
use crate::zeta::FormalCombination;

/// `E(Z_∞^s) = 2(1 − 2^{−(s+1)})/(s+1)` for integer `s`.
pub fn moment_constant_exact(s: u32) -> Rational {
    int(2) * (Rational::from_integer(1.into()) - pow2(-(s as i64) - 1)) / int(s as i64 + 1)
}

/// `E(Z_∞^s) = 2(1 − 2^{−(s+1)})/(s+1)`.
pub fn moment_constant(s: f64) -> f64 {
    2.0 * (1.0 - (-(s + 1.0)).exp2()) / (s + 1.0)
}

fn check(s_positive: bool, p: u32) -> Result<()> {
    if !s_positive {
        return Err(Error::invalid("moment order s must be positive"));
    }
    if p < 2 {
        return Err(Error::invalid(format!("moment coefficients start at p = 2, got {p}")));
    }
    Ok(())
}

/// Coefficient of `n^{−p}` in `E(Z_n^s)` for integer `s`:
///
/// ```text
/// (−1)^p Σ_{k=1}^{p−1} s^k/(s+1) Σ_{j=1}^{s+1} γ_{s+1,j} (−1)^{j−1} E_{p−k+j−1}(0) ζ(p+1−k‾, {1}_{k−1})
/// ```
pub fn moment_coeff_int(s: u32, p: u32) -> Result<FormalCombination> {
    check(s > 0, p)?;
    let gamma = gamma_coeffs(s);
    let mut out = FormalCombination::new();
    let mut s_pow = Rational::from_integer(1.into());
    for k in 1..p {
        s_pow *= int(s as i64);
        let inner = gamma.iter().enumerate().fold(Rational::from_integer(0.into()), |acc, (i, g)| {
            acc + sign(i as i64) * g * euler_at_zero(p - k + i as u32)
        });
        let c = sign(p as i64) * &s_pow / int(s as i64 + 1) * inner;
        out.push(c, MzvIndex::height_one(p + 1 - k, k - 1, true)?);
    }
    Ok(out)
}

/// Numeric value of [`moment_coeff_int`].
pub fn moment_coeff_int_value(s: u32, p: u32, ctx: &PrecisionContext) -> Result<f64> {
    moment_coeff_int(s, p)?.evaluate(|i| mzv_numeric(i, ctx))
}

/// Coefficient of `n^{−p}` in `E(Z_n^s)` for real `s > 0`:
///
/// ```text
/// (−1)^p Σ_{k=1}^{p−1} s^k/(s+1) ζ(p+1−k‾, {1}_{k−1}) 2^{−s} Σ_{ℓ=1}^{p−k} (s+1)↓ℓ B_{p−k,ℓ}(E_1(0), E_2(0), …)
/// ```
pub fn moment_coeff_real(s: f64, p: u32, ctx: &PrecisionContext) -> Result<f64> {
    check(s.is_finite() && s > 0.0, p)?;
    let euler: Vec<Rational> = (1..p).map(euler_at_zero).collect();
    let scale = (-s).exp2() / (s + 1.0);
    let mut acc = NeumaierSum::new();
    for k in 1..p {
        let j = p - k;
        let mut bell = NeumaierSum::new();
        for l in 1..=j {
            let b = bell_partial(j, l, &euler[..(j - l + 1) as usize])?;
            bell.add(falling_factorial_f64(s + 1.0, l) * to_f64(&b));
        }
        let z = mzv_numeric(&MzvIndex::height_one(p + 1 - k, k - 1, true)?, ctx)?;
        acc.add(s.powi(k as i32) * scale * bell.value() * z);
    }
    let sgn = if p % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sgn * acc.value())
}

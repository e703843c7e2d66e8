//! Bernoulli numbers, Euler polynomials and the coefficient families
//! `a_n`, `β_j` and `E_k^{(r)}(0)` built from them.

use std::sync::Mutex;

use num_traits::{One, Zero};

use super::basic::binomial;
use super::stirling::{gamma_coeffs, stirling_first};
use crate::rational::{int, pow2, rat, sign, Rational};

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// `B_n` with `B₁ = −1/2`, from `Σ_{k≤n} C(n+1,k) B_k = 0`. Memoized.
pub fn bernoulli(n: u32) -> Rational {
    let n = n as usize;
    let mut table = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= n {
        let m = table.len() as u32;
        let sum = table
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| acc + binomial(m + 1, k as u32) * b);
        table.push(-sum / int(m as i64 + 1));
    }
    table[n].clone()
}

/// `E_n(0)` via `E_n(0) = −2(2^{n+1}−1) B_{n+1} / (n+1)`.
pub fn euler_at_zero(n: u32) -> Rational {
    let b = bernoulli(n + 1);
    let factor = pow2(n as i64 + 1) - Rational::one();
    int(-2) * factor * b / int(n as i64 + 1)
}

/// `E_n(x) = Σ_k C(n,k) E_k(0) x^{n−k}`.
pub fn euler_at(n: u32, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xpow = Rational::one();
    // k runs downward so that x^{n−k} is built incrementally
    for k in (0..=n).rev() {
        acc += binomial(n, k) * euler_at_zero(k) * &xpow;
        xpow *= x;
    }
    acc
}

/// `a_n = E_{2n+1}(0) / 2`.
pub fn a_coeff(n: u32) -> Rational {
    euler_at_zero(2 * n + 1) / int(2)
}

/// `a_n = (1 − 2^{2n+2}) B_{2n+2} / (2n+2)`.
pub fn a_coeff_from_bernoulli(n: u32) -> Rational {
    let m = 2 * n + 2;
    (Rational::one() - pow2(m as i64)) * bernoulli(m) / int(m as i64)
}

/// `β_j = (−1)^{j+1} E_{2⌊(j+1)/2⌋+1}(0) / 4`: the coefficients of
/// `∫₀¹ u^r (1+u)^{−3} du = Σ_j β_{j−1} r^{−j}`.
pub fn beta_coeff(j: u32) -> Rational {
    sign(j as i64 + 1) * euler_at_zero(2 * ((j + 1) / 2) + 1) / int(4)
}

/// `β_j = (−1)^j (E_{j+1}(−1) + E_{j+2}(−1)) / 4`, the unsimplified form.
pub fn beta_coeff_from_euler_polys(j: u32) -> Rational {
    let minus_one = int(-1);
    sign(j as i64) * (euler_at(j + 1, &minus_one) + euler_at(j + 2, &minus_one)) * rat(1, 4)
}

/// Generalized Euler value `E_k^{(r)}(0)`, the `t^k/k!` coefficient of
/// `(2/(1+e^t))^r`, as `2^{r−1} Σ_{j=1}^{r} (−1)^{j−1} γ_{r,j} E_{k+j−1}(0)`.
pub fn generalized_euler_at_zero(k: u32, r: u32) -> Rational {
    if r == 0 {
        return if k == 0 { Rational::one() } else { Rational::zero() };
    }
    let gammas = gamma_coeffs(r - 1);
    let sum = gammas.iter().enumerate().fold(Rational::zero(), |acc, (i, g)| {
        let j = i as u32 + 1;
        acc + sign(j as i64 - 1) * g * euler_at_zero(k + j - 1)
    });
    pow2(r as i64 - 1) * sum
}

/// Same value through signed Stirling numbers:
/// `2^{r−1}/(r−1)! Σ_{j=0}^{r} s(r,j) (−1)^{r+j} E_{k+j−1}(0)`.
pub fn generalized_euler_at_zero_stirling(k: u32, r: u32) -> Rational {
    if r == 0 {
        return if k == 0 { Rational::one() } else { Rational::zero() };
    }
    let mut sum = Rational::zero();
    // s(r, 0) = 0 for r ≥ 1, so j starts at 1
    for j in 1..=r {
        sum += stirling_first(r, j) * sign((r + j) as i64) * euler_at_zero(k + j - 1);
    }
    pow2(r as i64 - 1) * sum / super::factorial(r - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
        for n in (3..40).step_by(2) {
            assert!(bernoulli(n).is_zero());
        }
    }

    // Independent route: (1 + e^t) Σ E_n(0) t^n/n! = 2 gives
    // 2 E_n(0) + Σ_{k<n} C(n,k) E_k(0) = 0 for n ≥ 1.
    #[test]
    fn euler_zero_matches_generating_function() {
        let mut gf = vec![int(1)];
        for n in 1..40u32 {
            let s = (0..n).fold(Rational::zero(), |acc, k| acc + binomial(n, k) * &gf[k as usize]);
            gf.push(-s / int(2));
        }
        for (n, e) in gf.iter().enumerate() {
            assert_eq!(&euler_at_zero(n as u32), e, "E_{n}(0)");
        }
    }

    #[test]
    fn euler_zero_examples() {
        assert_eq!(euler_at_zero(0), int(1));
        assert_eq!(euler_at_zero(1), rat(-1, 2));
        assert_eq!(euler_at_zero(2), int(0));
        assert_eq!(euler_at_zero(7), rat(17, 8));
        for n in (2..30).step_by(2) {
            assert!(euler_at_zero(n).is_zero());
        }
    }

    #[test]
    fn euler_polynomial_examples() {
        assert_eq!(euler_at(1, &int(0)), rat(-1, 2));
        assert_eq!(euler_at(2, &int(1)), int(0));
        assert_eq!(euler_at(2, &int(0)) + euler_at(2, &int(1)), int(0));
        assert_eq!(euler_at(3, &int(-1)), rat(-9, 4));
        for n in 0..12 {
            assert_eq!(
                euler_at(n, &int(-1)),
                int(2) * sign(n as i64) - euler_at_zero(n)
            );
        }
    }

    #[test]
    fn a_coefficients() {
        let expected = [
            rat(-1, 4),
            rat(1, 8),
            rat(-1, 4),
            rat(17, 16),
            rat(-31, 4),
            rat(691, 8),
            rat(-5461, 4),
        ];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(&a_coeff(n as u32), e);
            assert_eq!(&a_coeff_from_bernoulli(n as u32), e);
        }
    }

    #[test]
    fn beta_coefficients() {
        assert_eq!(beta_coeff(0), rat(1, 8));
        assert_eq!(beta_coeff(1), rat(1, 16));
        for j in 0..=20u32 {
            assert_eq!(beta_coeff(j), beta_coeff_from_euler_polys(j), "j={j}");
            assert_eq!(
                int(2) * sign(j as i64 - 1) * beta_coeff(j),
                a_coeff((j + 1) / 2)
            );
        }
    }

    #[test]
    fn generalized_euler_reduces_to_ordinary() {
        for k in 0..=20 {
            assert_eq!(generalized_euler_at_zero(k, 1), euler_at_zero(k));
        }
        assert_eq!(generalized_euler_at_zero(0, 2), int(1));
        assert_eq!(generalized_euler_at_zero(3, 0), int(0));
    }
}

//! Exact identities among the combinatorial families, each returning
//! whether it holds for the given arguments. The verification suite runs
//! them over ranges; nothing here rounds.

use num_traits::{One, Zero};

use super::{
    a_coeff, beta_coeff, binom_pow_sum, binomial, c_coeffs, euler_at, euler_at_zero, factorial,
    falling_factorial, gamma_coeffs, gamma_coeffs_by_elimination, generalized_euler_at_zero,
    generalized_euler_at_zero_stirling, partial_fraction_rhs, stirling_first, stirling_second,
    truncated_star_weighted, WeightedStarIndex,
};
use crate::rational::{int, pow2, sign, Rational};

/// `Σ_{j=0}^{n} E_{k+j}(0) C(n,j) = (−1)^{n+k} Σ_{j=0}^{k} E_{n+j}(0) C(k,j)`.
pub fn eulerz(n: u32, k: u32) -> bool {
    let lhs = (0..=n).fold(Rational::zero(), |acc, j| acc + euler_at_zero(k + j) * binomial(n, j));
    let rhs = (0..=k).fold(Rational::zero(), |acc, j| acc + euler_at_zero(n + j) * binomial(k, j));
    lhs == sign((n + k) as i64) * rhs
}

/// `E_n(x) + E_n(x+1) = 2xⁿ`.
pub fn euler_reflection(n: u32, x: &Rational) -> bool {
    let x1 = x + Rational::one();
    euler_at(n, x) + euler_at(n, &x1) == int(2) * num_traits::pow(x.clone(), n as usize)
}

/// `Σ_k s(m,k)`, which is 0 for `m ≥ 2`.
pub fn stirling_first_row_sum(m: u32) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, k| acc + stirling_first(m, k))
}

/// `x^r = Σ_j S(r,j) x(x−1)⋯(x−j+1)`.
pub fn stirling_second_power(r: u32, x: &Rational) -> bool {
    let rhs = (0..=r).fold(Rational::zero(), |acc, j| {
        acc + stirling_second(r, j) * falling_factorial(x, j)
    });
    num_traits::pow(x.clone(), r as usize) == rhs
}

/// The closed-form `γ_{s+1,·}` solve `Σ_{r=j}^{s+1} c_{r,j} γ_{s+1,r} = δ_{j,s+1}`
/// and coincide with back substitution.
pub fn gamma_triangular(s: u32) -> bool {
    let gamma = gamma_coeffs(s);
    let columns: Vec<Vec<Rational>> = (1..=s + 1).map(c_coeffs).collect();
    let size = (s + 1) as usize;
    let solves = (0..size).all(|j| {
        let lhs = (j..size).fold(Rational::zero(), |acc, r| acc + &columns[r][j] * &gamma[r]);
        lhs == if j + 1 == size { Rational::one() } else { Rational::zero() }
    });
    solves && gamma == gamma_coeffs_by_elimination(s)
}

/// `Σ_{j=1}^{s+1} (−1)^{j−1} γ_{s+1,j} E_{j−1}(0) = 2^{−s}`.
pub fn gamma_at_zero(s: u32) -> bool {
    let sum = gamma_coeffs(s).iter().enumerate().fold(Rational::zero(), |acc, (i, g)| {
        acc + sign(i as i64) * g * euler_at_zero(i as u32)
    });
    sum == pow2(-(s as i64))
}

/// The γ form and the Stirling form of `E_k^{(r)}(0)` agree.
pub fn generalized_euler_dual(k: u32, r: u32) -> bool {
    generalized_euler_at_zero(k, r) == generalized_euler_at_zero_stirling(k, r)
}

/// `Σ_j C(m,j)/j^r = ζ*_m({1}_r; {1}_{r−1}, 2) − ζ*_m({1}_r)`.
pub fn binom_pow_sum_star(m: u32, r: u32) -> bool {
    let mut weights = vec![Rational::one(); r as usize];
    weights[r as usize - 1] = int(2);
    let Ok(weighted) = WeightedStarIndex::new(vec![1; r as usize], weights, m) else {
        return false;
    };
    let Ok(plain) = WeightedStarIndex::unweighted(vec![1; r as usize], m) else {
        return false;
    };
    binom_pow_sum(m, r) == truncated_star_weighted(&weighted) - truncated_star_weighted(&plain)
}

/// `1/(j^a (m−j)^b)` equals its partial fraction split.
pub fn partial_fraction(a: u32, b: u32, m: u32, j: u32) -> bool {
    let lhs = Rational::new(
        1.into(),
        num_bigint::BigInt::from(j).pow(a) * num_bigint::BigInt::from(m - j).pow(b),
    );
    lhs == partial_fraction_rhs(a, b, m, j)
}

/// `2(−1)^{j−1} β_j = a_{⌊(j+1)/2⌋}`.
pub fn beta_a_relation(j: u32) -> bool {
    int(2) * sign(j as i64 - 1) * beta_coeff(j) == a_coeff((j + 1) / 2)
}

/// Taylor coefficients of `−tanh(t/2)/2 = −(eᵗ−1)/(2(eᵗ+1))` through `t^order`
/// equal `a_n/(2n+1)!` at odd powers and vanish at even ones.
pub fn tanh_generating_function(order: u32) -> bool {
    let len = order as usize + 1;
    let exp: Vec<Rational> = (0..len as u32).map(|k| Rational::one() / factorial(k)).collect();
    let mut num = exp.clone();
    num[0] -= Rational::one();
    let mut den = exp;
    den[0] += Rational::one();
    // power-series division num/den
    let mut q = vec![Rational::zero(); len];
    for i in 0..len {
        let mut acc = num[i].clone();
        for j in 0..i {
            acc -= &q[j] * &den[i - j];
        }
        q[i] = acc / &den[0];
    }
    (0..len).all(|i| {
        let coeff = -&q[i] / int(2);
        if i % 2 == 0 {
            coeff.is_zero()
        } else {
            coeff == a_coeff((i as u32 - 1) / 2) / factorial(i as u32)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn eulerz_range() {
        for n in 0..=30 {
            for k in 0..=30 {
                assert!(eulerz(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn euler_reflection_range() {
        let xs = [int(-2), int(-1), int(0), rat(1, 2), int(1), int(3)];
        for n in 0..=15 {
            for x in &xs {
                assert!(euler_reflection(n, x));
            }
        }
    }

    #[test]
    fn stirling_rows() {
        for m in 2..=20 {
            assert!(stirling_first_row_sum(m).is_zero());
        }
        assert_eq!(stirling_first_row_sum(1), int(1));
        for r in 0..=10 {
            for x in [int(-3), rat(1, 3), int(7)] {
                assert!(stirling_second_power(r, &x));
            }
        }
    }

    #[test]
    fn gamma_families() {
        for s in 1..=15 {
            assert!(gamma_triangular(s));
        }
        for s in 1..=10 {
            assert!(gamma_at_zero(s));
        }
        for k in 0..=20 {
            for r in 1..=8 {
                assert!(generalized_euler_dual(k, r));
            }
        }
    }

    #[test]
    fn binomial_power_sums() {
        for m in 1..=40 {
            for r in 1..=6 {
                assert!(binom_pow_sum_star(m, r), "m={m} r={r}");
            }
        }
    }

    #[test]
    fn partial_fractions() {
        for a in 1..=5 {
            for b in 1..=5 {
                for m in 2..=30 {
                    for j in 1..m {
                        assert!(partial_fraction(a, b, m, j));
                    }
                }
            }
        }
    }

    #[test]
    fn a_and_beta() {
        for j in 0..=20 {
            assert!(beta_a_relation(j));
        }
        assert!(tanh_generating_function(15));
    }
}

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::basic::{factorial, factorial_int};
use crate::rational::{big, sign, Rational};

/// Row `m` of the signed first-kind numbers: `x(x−1)⋯(x−m+1) = Σ_k s(m,k) x^k`.
fn first_kind_row(m: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for i in 0..m {
        // multiply the polynomial by (x − i)
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (k, c) in row.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * BigInt::from(i);
        }
        row = next;
    }
    row
}

fn second_kind_row(r: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..r {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, c) in row.iter().enumerate() {
            next[j] += c * BigInt::from(j);
            next[j + 1] += c;
        }
        row = next;
    }
    row
}

/// Signed Stirling number of the first kind `s(m,k)`; zero for `k > m`.
pub fn stirling_first(m: u32, k: u32) -> Rational {
    if k > m {
        return Rational::zero();
    }
    big(first_kind_row(m).swap_remove(k as usize))
}

/// `|s(m,k)|`, the number of permutations of `m` elements with `k` cycles.
pub fn stirling_first_unsigned(m: u32, k: u32) -> Rational {
    if k > m {
        return Rational::zero();
    }
    let mut row = first_kind_row(m);
    let v = std::mem::take(&mut row[k as usize]);
    big(if v < BigInt::zero() { -v } else { v })
}

/// Stirling number of the second kind `S(r,j)`; zero for `j > r`.
pub fn stirling_second(r: u32, j: u32) -> Rational {
    if j > r {
        return Rational::zero();
    }
    big(second_kind_row(r).swap_remove(j as usize))
}

/// `c_{r,1}, …, c_{r,r}` with `c_{r,j} = (−1)^{j−1} (j−1)! S(r,j)`: the
/// `(r−1)`-st derivative of the logistic function `f = 1/(1+e^{−t})` is
/// `Σ_j c_{r,j} f^j`.
pub fn c_coeffs(r: u32) -> Vec<Rational> {
    let row = second_kind_row(r);
    (1..=r)
        .map(|j| sign(j as i64 - 1) * big(factorial_int(j - 1)) * big(row[j as usize].clone()))
        .collect()
}

/// `γ_{s+1,1}, …, γ_{s+1,s+1}` in closed form, `(−1)^{r−1} |s(s+1,r)| / s!`.
pub fn gamma_coeffs(s: u32) -> Vec<Rational> {
    let row = first_kind_row(s + 1);
    let fact = factorial(s);
    (1..=s + 1)
        .map(|r| {
            let v = row[r as usize].clone();
            let unsigned = if v < BigInt::zero() { -v } else { v };
            sign(r as i64 - 1) * big(unsigned) / &fact
        })
        .collect()
}

/// Solves the upper-triangular system `Σ_{r=j}^{s+1} c_{r,j} γ_r = δ_{j,s+1}`
/// by back substitution. Agrees with [`gamma_coeffs`].
pub fn gamma_coeffs_by_elimination(s: u32) -> Vec<Rational> {
    let size = (s + 1) as usize;
    // column r−1 holds c_{r,1..r}
    let columns: Vec<Vec<Rational>> = (1..=s + 1).map(c_coeffs).collect();
    let entry = |j: usize, r: usize| -> &Rational { &columns[r][j] };
    let mut gamma = vec![Rational::zero(); size];
    for j in (0..size).rev() {
        let mut rhs = if j + 1 == size { Rational::one() } else { Rational::zero() };
        for r in j + 1..size {
            rhs -= entry(j, r) * &gamma[r];
        }
        gamma[j] = rhs / entry(j, j);
    }
    gamma
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn first_kind_examples() {
        assert_eq!(stirling_first(3, 2), int(-3));
        assert_eq!(stirling_first(4, 2), int(11));
        assert_eq!(stirling_first(5, 5), int(1));
        assert_eq!(stirling_first(5, 2), int(-50));
        assert_eq!(stirling_first(6, 3), int(-225));
        assert_eq!(stirling_first(2, 3), int(0));
        assert_eq!(stirling_first(0, 0), int(1));
        assert_eq!(stirling_first_unsigned(4, 2), int(11));
        assert_eq!(stirling_first_unsigned(5, 2), int(50));
    }

    #[test]
    fn second_kind_examples() {
        assert_eq!(stirling_second(3, 2), int(3));
        assert_eq!(stirling_second(4, 1), int(1));
        assert_eq!(stirling_second(4, 4), int(1));
        assert_eq!(stirling_second(5, 3), int(25));
        assert_eq!(stirling_second(8, 2), int(127));
        assert_eq!(stirling_second(2, 5), int(0));
    }

    // Enumerates set partitions by restricted growth strings.
    fn count_partitions(r: usize, blocks: usize) -> u64 {
        fn go(pos: usize, r: usize, max: usize, blocks: usize) -> u64 {
            if pos == r {
                return (max == blocks) as u64;
            }
            (0..=max.min(blocks - 1))
                .map(|b| go(pos + 1, r, max.max(b + 1), blocks))
                .sum()
        }
        if blocks == 0 {
            return (r == 0) as u64;
        }
        go(0, r, 0, blocks)
    }

    #[test]
    fn second_kind_counts_partitions() {
        for r in 1..=8 {
            for j in 1..=r {
                assert_eq!(
                    stirling_second(r as u32, j as u32),
                    int(count_partitions(r, j) as i64)
                );
            }
        }
    }

    #[test]
    fn c_and_gamma_examples() {
        assert_eq!(c_coeffs(2), vec![int(1), int(-1)]);
        assert_eq!(c_coeffs(3), vec![int(1), int(-3), int(2)]);
        for r in 1..=12u32 {
            let c = c_coeffs(r);
            assert_eq!(c[0], int(1));
            assert_eq!(c[r as usize - 1], sign(r as i64 - 1) * factorial(r - 1));
        }
        assert_eq!(gamma_coeffs(1), vec![int(1), int(-1)]);
        assert_eq!(gamma_coeffs(2), vec![int(1), rat(-3, 2), rat(1, 2)]);
        assert_eq!(gamma_coeffs(3), vec![int(1), rat(-11, 6), int(1), rat(-1, 6)]);
    }

    #[test]
    fn gamma_closed_form_solves_triangular_system() {
        for s in 0..=15 {
            assert_eq!(gamma_coeffs(s), gamma_coeffs_by_elimination(s), "s={s}");
        }
    }
}

#[cfg(test)]
mod derivative_polynomial_tests {
    use super::*;
    use crate::rational::int;

    // d/dt Σ c_j f^j = Σ j c_j f^{j−1} f' with f' = f − f².
    fn differentiate(p: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            let j = int(i as i64 + 1);
            out[i] += &j * c;
            out[i + 1] -= &j * c;
        }
        out
    }

    #[test]
    fn c_coeffs_are_logistic_derivatives() {
        let mut poly = vec![int(1)];
        for r in 1..=12 {
            assert_eq!(c_coeffs(r), poly, "r={r}");
            poly = differentiate(&poly);
        }
    }
}

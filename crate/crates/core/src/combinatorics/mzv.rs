//! Multiple zeta indices and their exactly summable truncations.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::basic::binomial;
use super::stirling::stirling_first;
use crate::error::{Error, Result};
use crate::rational::{sign, Rational};

/// Index `(i₁, …, i_k)` of a (possibly alternating) multiple zeta value
///
/// ```text
/// ζ(i₁, …, i_k) = Σ_{n₁ > ⋯ > n_k ≥ 1} ε^{n₁} / (n₁^{i₁} ⋯ n_k^{i_k})
/// ```
///
/// where `ε = −1` when the first argument is barred and `1` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MzvIndex {
    args: Vec<u32>,
    bar_first: bool,
}

impl MzvIndex {
    pub fn new(args: Vec<u32>, bar_first: bool) -> Result<Self> {
        if args.is_empty() {
            return Err(Error::invalid("multiple zeta index must be non-empty"));
        }
        if args.contains(&0) {
            return Err(Error::invalid("multiple zeta arguments must be positive"));
        }
        Ok(MzvIndex { args, bar_first })
    }

    pub fn plain(args: &[u32]) -> Result<Self> {
        Self::new(args.to_vec(), false)
    }

    pub fn barred(args: &[u32]) -> Result<Self> {
        Self::new(args.to_vec(), true)
    }

    /// `ζ(q, {1}_m)`, or `ζ(q̄, {1}_m)` when `bar` is set.
    pub fn height_one(q: u32, m: u32, bar: bool) -> Result<Self> {
        let mut args = vec![q];
        args.extend(std::iter::repeat(1).take(m as usize));
        Self::new(args, bar)
    }

    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn bar_first(&self) -> bool {
        self.bar_first
    }

    pub fn depth(&self) -> usize {
        self.args.len()
    }

    pub fn weight(&self) -> u32 {
        self.args.iter().sum()
    }

    /// The series converges unless the leading argument is an unbarred 1.
    pub fn is_convergent(&self) -> bool {
        self.bar_first || self.args[0] >= 2
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ζ(")?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if i == 0 && self.bar_first {
                // combining macron over every digit
                for ch in a.to_string().chars() {
                    write!(f, "{ch}\u{0304}")?;
                }
            } else {
                write!(f, "{a}")?;
            }
        }
        write!(f, ")")
    }
}

/// Truncated weighted star index: arguments `i_j`, weights `x_j` and the
/// truncation `r` of
///
/// ```text
/// ζ*_r(i₁,…,i_k; x₁,…,x_k) = Σ_{r ≥ n₁ ≥ ⋯ ≥ n_k ≥ 1} x₁^{n₁}⋯x_k^{n_k} / (n₁^{i₁}⋯n_k^{i_k})
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedStarIndex {
    args: Vec<u32>,
    weights: Vec<Rational>,
    r: u32,
}

impl WeightedStarIndex {
    pub fn new(args: Vec<u32>, weights: Vec<Rational>, r: u32) -> Result<Self> {
        if args.len() != weights.len() {
            return Err(Error::invalid(format!(
                "{} arguments but {} weights",
                args.len(),
                weights.len()
            )));
        }
        if r == 0 {
            return Err(Error::invalid("truncation must be at least 1"));
        }
        if args.contains(&0) {
            return Err(Error::invalid("star arguments must be positive"));
        }
        Ok(WeightedStarIndex { args, weights, r })
    }

    /// All weights equal to 1.
    pub fn unweighted(args: Vec<u32>, r: u32) -> Result<Self> {
        let weights = vec![Rational::one(); args.len()];
        Self::new(args, weights, r)
    }

    pub fn args(&self) -> &[u32] {
        &self.args
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn truncation(&self) -> u32 {
        self.r
    }
}

fn inv_pow(n: u32, e: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(n).pow(e))
}

/// `ζ_r(i₁,…,i_k) = Σ_{r ≥ n₁ > ⋯ > n_k ≥ 1} 1/(n₁^{i₁}⋯n_k^{i_k})`.
///
/// The empty index gives 1 and `r < k` gives 0. Runs in `O(r·k)` rational
/// operations by growing every suffix sum one `n` at a time.
pub fn truncated_mzv(r: u32, args: &[u32]) -> Rational {
    let k = args.len();
    // suffix[j] = ζ_n(args[j..]); suffix[k] = 1
    let mut suffix = vec![Rational::zero(); k + 1];
    suffix[k] = Rational::one();
    for n in 1..=r {
        // ascending j reads suffix[j+1] before it includes n
        for j in 0..k {
            let inc = inv_pow(n, args[j]) * &suffix[j + 1];
            suffix[j] += inc;
        }
    }
    suffix.swap_remove(0)
}

/// `s(m,k) = (−1)^{m−k} (m−1)! ζ_{m−1}({1}_{k−1})`, checked exactly.
pub fn stirling_mzv_check(m: u32, k: u32) -> bool {
    if k == 0 || k > m {
        return false;
    }
    let ones = vec![1; (k - 1) as usize];
    let rhs = sign((m - k) as i64) * super::factorial(m - 1) * truncated_mzv(m - 1, &ones);
    stirling_first(m, k) == rhs
}

/// Truncated weighted multiple zeta star value.
pub fn truncated_star_weighted(w: &WeightedStarIndex) -> Rational {
    let k = w.args.len();
    // suffix[j] = ζ*_n(args[j..]; weights[j..]); suffix[k] = 1
    let mut suffix = vec![Rational::zero(); k + 1];
    suffix[k] = Rational::one();
    let mut wpow: Vec<Rational> = vec![Rational::one(); k];
    for n in 1..=w.r {
        for (p, x) in wpow.iter_mut().zip(&w.weights) {
            *p *= x;
        }
        // descending j: n may repeat, so suffix[j+1] must already include n
        for j in (0..k).rev() {
            let inc = &wpow[j] * inv_pow(n, w.args[j]) * &suffix[j + 1];
            suffix[j] += inc;
        }
    }
    suffix.swap_remove(0)
}

/// Unweighted truncated star value `ζ*_r(i₁,…,i_k)`.
pub fn truncated_star(r: u32, args: &[u32]) -> Rational {
    let k = args.len();
    let mut suffix = vec![Rational::zero(); k + 1];
    suffix[k] = Rational::one();
    for n in 1..=r {
        for j in (0..k).rev() {
            let inc = inv_pow(n, args[j]) * &suffix[j + 1];
            suffix[j] += inc;
        }
    }
    suffix.swap_remove(0)
}

/// `Σ_{j=1}^{m} C(m,j) / j^r`.
pub fn binom_pow_sum(m: u32, r: u32) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, j| acc + binomial(m, j) * inv_pow(j, r))
}

/// Right-hand side of the partial fraction split of `1/(j^a (m−j)^b)`:
///
/// ```text
/// Σ_{i=1}^{a} C(i+b−2, b−1) / (m^{i+b−1} j^{a+1−i})
///   + Σ_{i=1}^{b} C(i+a−2, a−1) / (m^{i+a−1} (m−j)^{b+1−i})
/// ```
pub fn partial_fraction_rhs(a: u32, b: u32, m: u32, j: u32) -> Rational {
    assert!(a >= 1 && b >= 1 && j >= 1 && j < m, "need a,b ≥ 1 and 1 ≤ j < m");
    let mut acc = Rational::zero();
    for i in 1..=a {
        acc += binomial(i + b - 2, b - 1) * inv_pow(m, i + b - 1) * inv_pow(j, a + 1 - i);
    }
    for i in 1..=b {
        acc += binomial(i + a - 2, a - 1) * inv_pow(m, i + a - 1) * inv_pow(m - j, b + 1 - i);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

fn harmonic(m: u32) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, j| acc + inv_pow(j, 1))
}

fn two_pow_over_k_sum(m: u32) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, k| {
        acc + crate::rational::big(BigInt::one() << k as usize) * inv_pow(k, 1)
    })
}

    // Direct enumeration of all strictly decreasing tuples.
    fn brute_mzv(r: u32, args: &[u32]) -> Rational {
        fn go(upper: u32, args: &[u32]) -> Rational {
            match args.split_first() {
                None => Rational::one(),
                Some((&a, rest)) => (1..upper).fold(Rational::zero(), |acc, n| {
                    acc + inv_pow(n, a) * go(n, rest)
                }),
            }
        }
        go(r + 1, args)
    }

    fn brute_star(r: u32, args: &[u32], weights: &[Rational]) -> Rational {
        fn go(upper: u32, args: &[u32], weights: &[Rational]) -> Rational {
            match args.split_first() {
                None => Rational::one(),
                Some((&a, rest)) => (1..=upper).fold(Rational::zero(), |acc, n| {
                    let w = num_traits::pow(weights[0].clone(), n as usize);
                    acc + w * inv_pow(n, a) * go(n, rest, &weights[1..])
                }),
            }
        }
        go(r, args, weights)
    }

    #[test]
    fn truncated_mzv_examples() {
        assert_eq!(truncated_mzv(3, &[1]), rat(11, 6));
        assert_eq!(truncated_mzv(3, &[1, 1]), int(1));
        assert_eq!(truncated_mzv(1, &[1, 1]), int(0));
        assert_eq!(truncated_mzv(0, &[2]), int(0));
        assert_eq!(truncated_mzv(5, &[]), int(1));
    }

    #[test]
    fn truncated_mzv_matches_enumeration() {
        for r in 0..9 {
            for args in [&[1u32][..], &[2, 1], &[1, 2], &[3, 1, 1], &[1, 1, 1], &[2, 2, 1]] {
                assert_eq!(truncated_mzv(r, args), brute_mzv(r, args), "r={r} {args:?}");
            }
        }
    }

    #[test]
    fn stirling_identity_examples() {
        assert!(stirling_mzv_check(4, 2));
        assert!(stirling_mzv_check(3, 3));
        for m in 1..=12 {
            assert!(stirling_mzv_check(m, 1));
        }
        assert!(!stirling_mzv_check(2, 3));
    }

    #[test]
    fn star_examples() {
        let w = WeightedStarIndex::new(vec![1, 1], vec![int(1), int(2)], 3).unwrap();
        assert_eq!(truncated_star_weighted(&w), rat(56, 9));
        let w = WeightedStarIndex::unweighted(vec![1, 1], 3).unwrap();
        assert_eq!(truncated_star_weighted(&w), rat(85, 36));
        assert_eq!(truncated_star(3, &[1, 1]), rat(85, 36));
        for k in 1..6 {
            let w = WeightedStarIndex::unweighted(vec![1; k], 1).unwrap();
            assert_eq!(truncated_star_weighted(&w), int(1));
        }
    }

    #[test]
    fn star_matches_enumeration() {
        let weights = [rat(1, 2), int(3), rat(-2, 3)];
        for r in 1..7 {
            for args in [&[1u32][..], &[2, 1], &[1, 3, 1]] {
                let ws = weights[..args.len()].to_vec();
                let idx = WeightedStarIndex::new(args.to_vec(), ws.clone(), r).unwrap();
                assert_eq!(truncated_star_weighted(&idx), brute_star(r, args, &ws));
            }
        }
    }

    #[test]
    fn star_index_validation() {
        assert!(WeightedStarIndex::new(vec![1, 2], vec![int(1)], 3).is_err());
        assert!(WeightedStarIndex::new(vec![1], vec![int(1)], 0).is_err());
        assert!(MzvIndex::new(vec![], false).is_err());
        assert!(MzvIndex::new(vec![2, 0], false).is_err());
    }

    #[test]
    fn binom_pow_sum_examples() {
        assert_eq!(binom_pow_sum(2, 1), rat(5, 2));
        assert_eq!(binom_pow_sum(3, 2), rat(139, 36));
        assert_eq!(rat(56, 9) - rat(85, 36), rat(139, 36));
        for m in 1..=20 {
            assert_eq!(binom_pow_sum(m, 1), two_pow_over_k_sum(m) - harmonic(m));
        }
    }

    #[test]
    fn index_display_and_convergence() {
        let i = MzvIndex::barred(&[2, 1]).unwrap();
        assert_eq!(i.to_string(), "ζ(2\u{304},1)");
        assert!(i.is_convergent());
        assert!(!MzvIndex::plain(&[1, 1]).unwrap().is_convergent());
        assert!(MzvIndex::barred(&[1]).unwrap().is_convergent());
        assert_eq!(MzvIndex::height_one(3, 2, false).unwrap().args(), &[3, 1, 1]);
        assert_eq!(MzvIndex::height_one(3, 2, false).unwrap().weight(), 5);
    }

    #[test]
    fn partial_fraction_small() {
        for (a, b, m, j) in [(1, 1, 3, 1), (2, 3, 7, 4), (5, 1, 9, 2)] {
            let lhs = inv_pow(j, a) * inv_pow(m - j, b);
            assert_eq!(partial_fraction_rhs(a, b, m, j), lhs);
        }
    }
}

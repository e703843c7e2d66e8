use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{big, Rational};

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Rational {
    big(binomial_int(n, k))
}

pub(crate) fn binomial_int(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> Rational {
    big(factorial_int(n))
}

pub(crate) fn factorial_int(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Falling factorial `x (x−1) ⋯ (x−ℓ+1)`; the empty product is 1.
pub fn falling_factorial(x: &Rational, len: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..len {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

/// Falling factorial for a real argument.
pub(crate) fn falling_factorial_f64(x: f64, len: u32) -> f64 {
    (0..len).fold(1.0, |acc, i| acc * (x - i as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(60, 30), big("118264581564861424".parse::<BigInt>().unwrap()));
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(&rat(5, 2), 2), rat(15, 4));
        assert_eq!(falling_factorial(&rat(-7, 3), 0), int(1));
        assert_eq!(falling_factorial(&int(3), 4), int(0));
        assert_eq!(falling_factorial_f64(2.5, 2), 3.75);
    }
}

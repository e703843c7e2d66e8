use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A product `ζ(k₁) ζ(k₂) ⋯` of formal generators, stored as the sorted
/// multiset of arguments. The empty monomial is the constant 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZetaMonomial {
    factors: Vec<u32>,
}

impl ZetaMonomial {
    pub fn new(mut factors: Vec<u32>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|&&k| k < 2) {
            return Err(Error::invalid(format!("zeta generator ζ({bad}) needs an argument ≥ 2")));
        }
        factors.sort_unstable();
        Ok(ZetaMonomial { factors })
    }

    pub fn one() -> Self {
        ZetaMonomial::default()
    }

    /// The single generator `ζ(k)`. Panics if `k < 2`.
    pub fn generator(k: u32) -> Self {
        assert!(k >= 2, "zeta generator needs an argument ≥ 2, got {k}");
        ZetaMonomial { factors: vec![k] }
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().sum()
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, other: &ZetaMonomial) -> ZetaMonomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            if self.factors[i] <= other.factors[j] {
                factors.push(self.factors[i]);
                i += 1;
            } else {
                factors.push(other.factors[j]);
                j += 1;
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        ZetaMonomial { factors }
    }

    /// `(argument, exponent)` pairs in increasing argument order.
    pub fn powers(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &k in &self.factors {
            match out.last_mut() {
                Some((last, e)) if *last == k => *e += 1,
                _ => out.push((k, 1)),
            }
        }
        out
    }

    pub(crate) fn from_sorted_unchecked(factors: Vec<u32>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        ZetaMonomial { factors }
    }
}

/// Weight first, then number of factors, then the sorted arguments.
impl Ord for ZetaMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then(self.factors.len().cmp(&other.factors.len()))
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for ZetaMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `z3^2*z4`; the empty monomial prints as `1`.
impl fmt::Display for ZetaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (k, e)) in self.powers().into_iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "z{k}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_storage() {
        let m = ZetaMonomial::new(vec![4, 3, 3]).unwrap();
        assert_eq!(m.factors(), &[3, 3, 4]);
        assert_eq!(m.weight(), 10);
        assert_eq!(m.to_string(), "z3^2*z4");
        assert!(ZetaMonomial::new(vec![1]).is_err());
        assert_eq!(ZetaMonomial::one().to_string(), "1");
    }

    #[test]
    fn ordering() {
        let z6 = ZetaMonomial::generator(6);
        let z33 = ZetaMonomial::new(vec![3, 3]).unwrap();
        let z5 = ZetaMonomial::generator(5);
        assert!(z5 < z6);
        assert!(z6 < z33);
        assert!(ZetaMonomial::one() < z5);
        assert_eq!(z6.mul(&z33), ZetaMonomial::new(vec![6, 3, 3]).unwrap());
    }
}

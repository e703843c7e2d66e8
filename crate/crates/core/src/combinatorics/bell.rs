use num_traits::{One, Zero};

use super::basic::binomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Partial Bell polynomial `B_{n,k}(x₁, …, x_{n−k+1})` by the recurrence
/// `B_{n,k} = Σ_{j=1}^{n−k+1} C(n−1, j−1) x_j B_{n−j,k−1}`.
///
/// `B_{0,0} = 1`, and `B_{n,0} = B_{0,k} = 0` otherwise. Extra entries of
/// `xs` beyond `n−k+1` are ignored.
pub fn bell_partial(n: u32, k: u32, xs: &[Rational]) -> Result<Rational> {
    if k > n {
        return Ok(Rational::zero());
    }
    if k == 0 {
        return Ok(if n == 0 { Rational::one() } else { Rational::zero() });
    }
    let need = (n - k + 1) as usize;
    if xs.len() < need {
        return Err(Error::invalid(format!(
            "B_{{{n},{k}}} needs {need} arguments, got {}",
            xs.len()
        )));
    }
    let (n, k) = (n as usize, k as usize);
    // table[m][c] = B_{m,c} for m ≤ n, c ≤ k
    let mut table = vec![vec![Rational::zero(); k + 1]; n + 1];
    table[0][0] = Rational::one();
    for c in 1..=k {
        // only B_{m,c} with m − c ≤ n − k feed into B_{n,k}
        for m in c..=n - k + c {
            let mut acc = Rational::zero();
            for j in 1..=m - c + 1 {
                let prev = &table[m - j][c - 1];
                if !prev.is_zero() {
                    acc += binomial((m - 1) as u32, (j - 1) as u32) * &xs[j - 1] * prev;
                }
            }
            table[m][c] = acc;
        }
    }
    Ok(std::mem::take(&mut table[n][k]))
}

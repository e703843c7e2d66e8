use std::collections::HashMap;
use std::sync::Mutex;

use super::{NeumaierSum, PrecisionContext};
use crate::combinatorics::{bernoulli, factorial, MzvIndex};
use crate::error::{Error, Result};
use crate::rational::to_f64;

/// A nested-sum value with its empirical error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MzvValue {
    pub value: f64,
    pub error: f64,
}

type Key = (MzvIndex, u64, u32);

static CACHE: Mutex<Option<HashMap<Key, MzvValue>>> = Mutex::new(None);

/// Order of the `1/N` expansions used for unbarred tails.
const TAIL_ORDER: usize = 24;

/// Coefficients `t[r]` with `Σ_{m>N} m^{−s} ~ Σ_r t[r] N^{−r}`:
/// `N^{1−s}/(s−1) − N^{−s}/2 + Σ_j B_{2j}/(2j)! s(s+1)⋯(s+2j−2) N^{1−s−2j}`.
fn hurwitz_tail(s: usize) -> Vec<f64> {
    debug_assert!(s >= 2);
    let mut t = vec![0.0; TAIL_ORDER + 1];
    if s - 1 <= TAIL_ORDER {
        t[s - 1] = 1.0 / (s as f64 - 1.0);
    }
    if s <= TAIL_ORDER {
        t[s] = -0.5;
    }
    let mut rising = s as f64;
    let mut j = 1;
    while s + 2 * j - 1 <= TAIL_ORDER {
        let b = to_f64(&(bernoulli(2 * j as u32) / factorial(2 * j as u32)));
        t[s + 2 * j - 1] = b * rising;
        rising *= (s + 2 * j - 1) as f64 * (s + 2 * j) as f64;
        j += 1;
    }
    t
}

fn eval_series(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Unbarred index: backward recurrence on the tails
/// `R_j(n) = Σ_{m₁>⋯>m_j>n} Π m_t^{−i_t}`, started at `n = N` from their
/// asymptotic expansions in `1/N`.
fn unbarred(args: &[u32], big_n: u64) -> MzvValue {
    let k = args.len();
    // expansions of R_0 … R_k at N
    let mut series = vec![vec![0.0; TAIL_ORDER + 1]; k + 1];
    series[0][0] = 1.0;
    for j in 1..=k {
        let mut next = vec![0.0; TAIL_ORDER + 1];
        for (r, &c) in series[j - 1].iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let s = args[j - 1] as usize + r;
            if s > TAIL_ORDER + 1 {
                continue;
            }
            for (q, t) in hurwitz_tail(s).iter().enumerate() {
                next[q] += c * t;
            }
        }
        series[j] = next;
    }
    let x = 1.0 / big_n as f64;
    let mut tails: Vec<NeumaierSum> = series
        .iter()
        .map(|c| {
            let mut s = NeumaierSum::new();
            s.add(eval_series(c, x));
            s
        })
        .collect();
    // the first neglected expansion term bounds the start-up error
    let start_error = x.powi(TAIL_ORDER as i32 + 1) * 10.0;
    for n in (1..=big_n).rev() {
        let nf = n as f64;
        for j in (1..=k).rev() {
            let inner = tails[j - 1].value();
            tails[j].add(inner * nf.powi(-(args[j - 1] as i32)));
        }
    }
    let value = tails[k].value();
    MzvValue { value, error: start_error + value.abs() * 1e-15 * (k as f64) }
}

/// Barred leading index: forward partial sums in `n₁`, then iterated
/// pairwise averaging of the last `depth + 1` partial sums.
fn barred(args: &[u32], big_n: u64, depth: u32) -> MzvValue {
    let k = args.len();
    // inner[j] = ζ_n(args[j..]) for j ≥ 1; inner[k] = 1
    let mut inner: Vec<NeumaierSum> = vec![NeumaierSum::new(); k + 1];
    inner[k].add(1.0);
    let mut total = NeumaierSum::new();
    let keep = depth as usize + 1;
    let mut partials: Vec<f64> = Vec::with_capacity(keep);
    for n in 1..=big_n {
        let nf = n as f64;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let inner_prev = if k > 1 { inner[1].value() } else { 1.0 };
        total.add(sign * inner_prev * nf.powi(-(args[0] as i32)));
        for j in 1..k {
            let v = inner[j + 1].value() * nf.powi(-(args[j] as i32));
            inner[j].add(v);
        }
        if n > big_n - keep as u64 {
            partials.push(total.value());
        }
    }
    let mut level = partials;
    let mut previous = level[level.len() - 1];
    while level.len() > 1 {
        previous = level[level.len() - 1];
        level = level.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    }
    let value = level[0];
    MzvValue { value, error: (value - previous).abs() }
}

/// Numeric value of a (possibly alternating) multiple zeta value by nested
/// summation over `n₁ ≤ ctx.sum_terms`, with its error estimate. Cached.
pub fn mzv_numeric_with_error(index: &MzvIndex, ctx: &PrecisionContext) -> Result<MzvValue> {
    if !index.is_convergent() {
        return Err(Error::Divergent(index.to_string()));
    }
    let key = (index.clone(), ctx.sum_terms, ctx.accel_order);
    if let Some(v) = CACHE.lock().unwrap_or_else(|e| e.into_inner()).get_or_insert_with(HashMap::new).get(&key) {
        return Ok(*v);
    }
    let v = if index.bar_first() {
        barred(index.args(), ctx.sum_terms, ctx.accel_order)
    } else {
        unbarred(index.args(), ctx.sum_terms)
    };
    CACHE
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .insert(key, v);
    Ok(v)
}

/// Numeric value of a convergent (alternating) multiple zeta value.
pub fn mzv_numeric(index: &MzvIndex, ctx: &PrecisionContext) -> Result<f64> {
    mzv_numeric_with_error(index, ctx).map(|v| v.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::zeta_f64;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn plain(a: &[u32]) -> f64 {
        mzv_numeric(&MzvIndex::plain(a).unwrap(), &ctx()).unwrap()
    }

    fn bar(a: &[u32]) -> f64 {
        mzv_numeric(&MzvIndex::barred(a).unwrap(), &ctx()).unwrap()
    }

    #[test]
    fn single_values() {
        for k in 2..=10 {
            assert!((plain(&[k]) - zeta_f64(k)).abs() < 1e-13, "k={k}");
            let alt = (2f64.powi(1 - k as i32) - 1.0) * zeta_f64(k);
            assert!((bar(&[k]) - alt).abs() < 1e-9, "k={k}");
        }
        assert!((bar(&[1]) + std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn depth_two_values() {
        assert!((plain(&[2, 1]) - zeta_f64(3)).abs() < 1e-12);
        assert!((plain(&[3, 1]) - zeta_f64(4) / 4.0).abs() < 1e-12);
        assert!((plain(&[4, 1]) - 0.0965512).abs() < 1e-7);
        assert!((bar(&[2, 1]) - zeta_f64(3) / 8.0).abs() < 1e-9);
        let data_mine = -29.0 / 32.0 * zeta_f64(5) + 0.5 * zeta_f64(2) * zeta_f64(3);
        assert!((bar(&[4, 1]) - data_mine).abs() < 1e-9);
        let other = -zeta_f64(4) / 16.0 + 0.5 * bar(&[3, 1]);
        assert!((bar(&[2, 1, 1]) - other).abs() < 1e-9);
    }

    #[test]
    fn divergent_is_rejected() {
        let err = mzv_numeric(&MzvIndex::plain(&[1, 2]).unwrap(), &ctx()).unwrap_err();
        assert!(matches!(err, Error::Divergent(_)));
    }

    #[test]
    fn error_estimates_are_small() {
        let v = mzv_numeric_with_error(&MzvIndex::barred(&[3, 1, 1]).unwrap(), &ctx()).unwrap();
        assert!(v.error < 1e-10, "{v:?}");
    }
}

use std::collections::HashMap;
use std::sync::Mutex;

use super::{PrecisionContext, Real};
use crate::combinatorics::bernoulli;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};
use crate::zeta::{even_zeta_ratio, ZetaPolynomial};

static CACHE: Mutex<Option<HashMap<(u32, u32), Real>>> = Mutex::new(None);

/// Largest number of Euler–Maclaurin correction terms.
const MAX_EM_TERMS: u32 = 60;
const DIRECT_TERMS: [u32; 4] = [100, 200, 400, 1000];

/// `log10` of the size of the `j`-th Euler–Maclaurin correction for
/// `Σ_{n>N} n^{−k}`, `|B_{2j}|/(2j)! · k(k+1)⋯(k+2j−2) · N^{1−k−2j}`.
fn em_term_log10(k: u32, j: u32, n: u32) -> f64 {
    // |B_{2j}|/(2j)! ≈ 2/(2π)^{2j}
    let mut log = 2f64.log10() - 2.0 * j as f64 * (2.0 * std::f64::consts::PI).log10();
    for i in 0..(2 * j - 1) {
        log += ((k + i) as f64).log10();
    }
    log - (k + 2 * j - 1) as f64 * (n as f64).log10()
}

/// Smallest direct-sum length and correction count whose truncation error
/// stays below `10^{−digits−3}`.
fn plan(k: u32, digits: u32) -> std::result::Result<(u32, u32), f64> {
    let target = -(digits as f64) - 3.0;
    let mut best = f64::INFINITY;
    for &n in &DIRECT_TERMS {
        for j in 1..=MAX_EM_TERMS {
            let err = em_term_log10(k, j + 1, n);
            best = best.min(err);
            if err < target {
                return Ok((n, j));
            }
        }
    }
    Err(best)
}

fn odd_zeta(k: u32, ctx: &PrecisionContext) -> Result<Real> {
    let (n, terms) = plan(k, ctx.digits).map_err(|best| Error::NonConvergence {
        what: format!("ζ({k}) at {} digits", ctx.digits),
        estimate: 10f64.powf(best),
        target: 10f64.powf(-(ctx.digits as f64)),
    })?;
    let bits = ctx.bits() + 16;
    let one = Real::from_int(1, bits);
    let mut acc = Real::zero(bits);
    for m in 1..n {
        acc = acc + &one / &Real::from_int(m as i64, bits).powi(k as i64);
    }
    // Σ_{m≥N} m^{−k} = N^{1−k}/(k−1) + N^{−k}/2 + Σ_j B_{2j}/(2j)! k^{(2j−1)} N^{1−k−2j}
    let big_n = Real::from_int(n as i64, bits);
    let inv_n = &one / &big_n;
    let n_pow = inv_n.powi(k as i64 - 1);
    acc = acc + &n_pow / &Real::from_int(k as i64 - 1, bits);
    acc = acc + &(&n_pow * &inv_n) / &Real::from_int(2, bits);
    let inv_n2 = &inv_n * &inv_n;
    let mut power = &n_pow * &inv_n2;
    let mut rising = int(k as i64);
    for j in 1..=terms {
        // rising = k(k+1)⋯(k+2j−2)
        let coeff: Rational = bernoulli(2 * j) / crate::combinatorics::factorial(2 * j) * &rising;
        acc = acc + &Real::from_rational(&coeff, bits) * &power;
        power = &power * &inv_n2;
        rising *= int((k + 2 * j - 1) as i64) * int((k + 2 * j) as i64);
    }
    Ok(acc)
}

/// `ζ(k)` to `ctx.digits` decimal digits: `r_k π^k` for even `k`, a direct
/// sum with Euler–Maclaurin tail for odd `k`. Cached per `(k, digits)`.
pub fn zeta_value(k: u32, ctx: &PrecisionContext) -> Result<Real> {
    if k < 2 {
        return Err(Error::invalid(format!("ζ(k) needs k ≥ 2, got {k}")));
    }
    let key = (k, ctx.digits);
    if let Some(v) = CACHE.lock().unwrap_or_else(|e| e.into_inner()).get_or_insert_with(HashMap::new).get(&key) {
        return Ok(v.clone());
    }
    let value = if k % 2 == 0 {
        let bits = ctx.bits();
        Real::from_rational(&even_zeta_ratio(k)?, bits) * Real::pi(bits).powi(k as i64)
    } else {
        odd_zeta(k, ctx)?
    };
    CACHE
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .get_or_insert_with(HashMap::new)
        .insert(key, value.clone());
    Ok(value)
}

/// `ζ(k)` rounded to double precision.
pub fn zeta_f64(k: u32) -> f64 {
    zeta_value(k, &PrecisionContext::default())
        .map(|v| v.to_f64())
        .unwrap_or(f64::NAN)
}

/// Substitutes `ζ(k)` for every generator, honoring the constant term.
pub fn eval_zeta_poly(p: &ZetaPolynomial, ctx: &PrecisionContext) -> Result<Real> {
    let bits = ctx.bits();
    let mut acc = Real::zero(bits);
    for (m, c) in p.terms() {
        let mut term = Real::from_rational(c, bits);
        for &k in m.factors() {
            term = term * zeta_value(k, ctx)?;
        }
        acc = acc + term;
    }
    Ok(acc)
}

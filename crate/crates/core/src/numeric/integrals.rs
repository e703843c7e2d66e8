use super::quad::integrate;
use super::{mzv_numeric, PrecisionContext};
use crate::combinatorics::{binomial, MzvIndex};
use crate::error::{Error, Result};
use crate::rational::to_f64;

fn check_n(n: f64) -> Result<()> {
    if !(n >= 1.0 && n.is_finite()) {
        return Err(Error::invalid(format!("n must be a finite number ≥ 1, got {n}")));
    }
    Ok(())
}

fn check_s(s: f64) -> Result<()> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::invalid(format!("moment order s must be positive, got {s}")));
    }
    Ok(())
}

/// `[0, …, 1]` with extra breakpoints where `uⁿ` turns on, at distance
/// `c/n` from 1.
fn unit_points(n: f64) -> Vec<f64> {
    let mut pts = vec![0.0];
    for c in [20.0, 10.0, 4.0, 1.0] {
        let p = 1.0 - c / n;
        if p > *pts.last().unwrap() + 1e-3 && p < 1.0 {
            pts.push(p);
        }
    }
    pts.push(1.0);
    pts
}

/// `(1 + uⁿ)^{e}` for `u ∈ [0, 1]`.
fn one_plus_pow(u: f64, n: f64, e: f64) -> f64 {
    (e * u.powf(n).ln_1p()).exp()
}

/// `I(n) = 2∫₀¹ (1+uⁿ)^{1/n} (1+u)^{−3} du`.
pub fn quad_i(n: f64, ctx: &PrecisionContext) -> Result<f64> {
    quad_moment_pair(n, 1.0, ctx)
}

/// `I(n) = ∫₀¹ (xⁿ + (1−x)ⁿ)^{1/n} dx`, computed as
/// `2∫_{1/2}^1 x (1 + ((1−x)/x)ⁿ)^{1/n} dx`.
pub fn quad_i_xform(n: f64, ctx: &PrecisionContext) -> Result<f64> {
    check_n(n)?;
    let r = integrate(|x| 2.0 * g_of(x, n), &half_points(n), ctx.quad_rel_tol, 0.0)?;
    Ok(r.value)
}

/// `g(x) = max(x,1−x)(1 + (min/max)ⁿ)^{1/n} = (xⁿ + (1−x)ⁿ)^{1/n}`.
fn g_of(x: f64, n: f64) -> f64 {
    let (hi, lo) = if x >= 0.5 { (x, 1.0 - x) } else { (1.0 - x, x) };
    hi * one_plus_pow(lo / hi, n, 1.0 / n)
}

/// Breakpoints on `[1/2, 1]` clustered where `((1−x)/x)ⁿ` decays.
fn half_points(n: f64) -> Vec<f64> {
    let mut pts = vec![0.5];
    for c in [0.25, 1.0, 4.0, 10.0] {
        let p = 0.5 + c / n;
        if p < 0.999 && p > *pts.last().unwrap() {
            pts.push(p);
        }
    }
    pts.push(1.0);
    pts
}

/// `E(Z_n^s)` for `Z_n = ‖(U, 1−U)‖_n`:
/// `2∫₀¹ (1+uⁿ)^{s/n} (1+u)^{−(s+2)} du`.
pub fn quad_moment_pair(n: f64, s: f64, ctx: &PrecisionContext) -> Result<f64> {
    check_n(n)?;
    check_s(s)?;
    let f = |u: f64| 2.0 * one_plus_pow(u, n, s / n) * (1.0 + u).powf(-(s + 2.0));
    Ok(integrate(f, &unit_points(n), ctx.quad_rel_tol, 0.0)?.value)
}

/// `E(‖(U₁, U₂)‖_n^s) = (2/(2+s)) ∫₀¹ (1+uⁿ)^{s/n} du` for independent
/// uniforms.
pub fn quad_moment_indep2(n: f64, s: f64, ctx: &PrecisionContext) -> Result<f64> {
    check_n(n)?;
    check_s(s)?;
    let f = |u: f64| one_plus_pow(u, n, s / n);
    let r = integrate(f, &unit_points(n), ctx.quad_rel_tol, 0.0)?;
    Ok(2.0 / (2.0 + s) * r.value)
}

/// The same moment as a direct double integral over the unit square,
/// at tolerance `tol`. Slow; used to validate the one-dimensional form.
pub fn quad_moment_indep2_2d(n: f64, s: f64, tol: f64) -> Result<f64> {
    check_n(n)?;
    check_s(s)?;
    // symmetric in (x, y): integrate over y < x and double
    let inner = |x: f64| -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        let f = |y: f64| (x.powf(n) + y.powf(n)).powf(s / n);
        let pts: Vec<f64> = unit_points(n).into_iter().map(|t| t * x).collect();
        integrate(f, &pts, tol * 0.1, 0.0).map(|r| r.value).unwrap_or(f64::NAN)
    };
    let r = integrate(inner, &[0.0, 0.5, 1.0], tol, 0.0)?;
    if r.value.is_nan() {
        return Err(Error::NonConvergence {
            what: "inner quadrature of the two-dimensional moment".into(),
            estimate: f64::NAN,
            target: tol,
        });
    }
    Ok(2.0 * r.value)
}

/// `E(Z_n Z_∞) = ∫₀¹ (xⁿ + (1−x)ⁿ)^{1/n} max(x, 1−x) dx`.
pub fn cross_moment(n: f64, ctx: &PrecisionContext) -> Result<f64> {
    check_n(n)?;
    let r = integrate(|x| 2.0 * x * g_of(x, n), &half_points(n), ctx.quad_rel_tol, 0.0)?;
    Ok(r.value)
}

/// `S_{n,p}(z) = (−1)^{n+p−1}/((n−1)! p!) ∫₀¹ log^{n−1}(t) log^p(1−zt) dt/t`
/// for `z = ±1`, after `t = e^{−v}`; on `v ∈ [0,1]` a second substitution
/// `v = e^{−y}` absorbs the logarithmic endpoint singularity at `z = 1`.
pub fn snp_quadrature(n: u32, p: u32, z: i32, ctx: &PrecisionContext) -> Result<f64> {
    if n == 0 || p == 0 {
        return Err(Error::invalid("S_{n,p} needs n, p ≥ 1"));
    }
    if z != 1 && z != -1 {
        return Err(Error::invalid(format!("z must be ±1, got {z}")));
    }
    // log(1 − z e^{−v})
    let log_term = move |v: f64| -> f64 {
        if z == 1 && v < std::f64::consts::LN_2 {
            (-(-v).exp_m1()).ln()
        } else if z == 1 {
            (-(-v).exp()).ln_1p()
        } else {
            (-v).exp().ln_1p()
        }
    };
    let nm1 = (n - 1) as i32;
    // ∫₀^∞ (−v)^{n−1} log^p(1 − z e^{−v}) dv
    let outer = move |v: f64| (-v).powi(nm1) * log_term(v).powi(p as i32);
    let inner = move |y: f64| {
        let v = (-y).exp();
        outer(v) * v
    };
    let tol = ctx.quad_rel_tol;
    let abs = 1e-16;
    let far = 40.0 + 8.0 * n as f64;
    let mut pts = vec![1.0];
    let mut x = 2.0;
    while x < far {
        pts.push(x);
        x *= 2.0;
    }
    pts.push(far);
    let upper = integrate(outer, &pts, tol, abs)?.value;
    let near_end = 40.0 / n as f64 + 4.0;
    let lower = integrate(inner, &[0.0, 1.0, 4.0, near_end.max(8.0)], tol, abs)?.value;
    let sign = if (n + p - 1) % 2 == 0 { 1.0 } else { -1.0 };
    let fact: f64 = (1..n).map(|i| i as f64).product::<f64>() * (1..=p).map(|i| i as f64).product::<f64>();
    Ok(sign * (upper + lower) / fact)
}

/// `|Σ_{j=1}^{n} C(n+p−j−1, p−1) σ_{j,n+p−j} + Σ_{j=1}^{p} C(n+p−j−1, n−1) σ_{j,n+p−j} − s_{n,p}|`
/// with `σ_{j,q} = (−1)^q ζ(\overline{j+1}, {1}_{q−1})` and
/// `s_{n,p} = ζ(n+1, {1}_{p−1})`, all from the nested-sum oracle.
pub fn kolbig_check(n: u32, p: u32, ctx: &PrecisionContext) -> Result<f64> {
    if n == 0 || p == 0 {
        return Err(Error::invalid("Kölbig identity needs n, p ≥ 1"));
    }
    let sigma = |j: u32, q: u32| -> Result<f64> {
        let v = mzv_numeric(&MzvIndex::height_one(j + 1, q - 1, true)?, ctx)?;
        Ok(if q % 2 == 0 { v } else { -v })
    };
    let mut lhs = 0.0;
    for j in 1..=n {
        lhs += to_f64(&binomial(n + p - j - 1, p - 1)) * sigma(j, n + p - j)?;
    }
    for j in 1..=p {
        lhs += to_f64(&binomial(n + p - j - 1, n - 1)) * sigma(j, n + p - j)?;
    }
    let rhs = mzv_numeric(&MzvIndex::height_one(n + 1, p - 1, false)?, ctx)?;
    Ok((lhs - rhs).abs())
}

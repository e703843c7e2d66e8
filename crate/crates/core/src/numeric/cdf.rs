use serde::Serialize;

use crate::error::{Error, Result};

/// `g(x) = (xⁿ + (1−x)ⁿ)^{1/n}`, so that `Z_n = g(U)`.
pub fn g_norm(x: f64, n: f64) -> f64 {
    let (hi, lo) = if x >= 0.5 { (x, 1.0 - x) } else { (1.0 - x, x) };
    if hi == 0.0 {
        return 0.0;
    }
    hi * ((lo / hi).powf(n).ln_1p() / n).exp()
}

/// `F_n(z) = P(Z_n ≤ z)` for the dependent pair `(U, 1−U)`: `2x* − 1` where
/// `g(x*) = z` on `[1/2, 1]`, found by 60 bisection steps.
pub fn cdf_zn(z: f64, n: f64) -> f64 {
    let low = g_norm(0.5, n);
    if z < low {
        return 0.0;
    }
    if z >= 1.0 {
        return 1.0;
    }
    let (mut a, mut b) = (0.5, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (a + b);
        if g_norm(mid, n) <= z {
            a = mid;
        } else {
            b = mid;
        }
    }
    (2.0 * (0.5 * (a + b)) - 1.0).clamp(0.0, 1.0)
}

/// `F_∞(z) = 2z − 1` on `[1/2, 1]`, the law of `max(U, 1−U)`.
pub fn cdf_infinity(z: f64) -> f64 {
    (2.0 * z - 1.0).clamp(0.0, 1.0)
}

/// Measured distance between `F_n` and `F_∞`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CdfReport {
    pub n: f64,
    pub grid_points: usize,
    pub sup_distance: f64,
    pub argmax: f64,
    /// `max_z (F_n(z) − F_∞(z))`; non-positive since `Z_n ≥ Z_∞`.
    pub max_signed_excess: f64,
    pub sup_times_n: f64,
}

/// `sup_z |F_n(z) − F_∞(z)|` over a uniform grid on `[g(1/2), 1]`,
/// including the left limit at `g(1/2)` where `F_n` jumps off 0, refined
/// by golden-section search around the best grid point.
pub fn sup_cdf_distance(n: f64, grid: usize) -> Result<CdfReport> {
    if grid < 64 {
        return Err(Error::invalid(format!("grid size must be ≥ 64, got {grid}")));
    }
    if !(n >= 1.0) {
        return Err(Error::invalid(format!("n must be ≥ 1, got {n}")));
    }
    let low = g_norm(0.5, n);
    let diff = |z: f64| cdf_zn(z, n) - cdf_infinity(z);
    // left limit: F_n(z⁻) = 0
    let mut best = (cdf_infinity(low), low);
    let mut excess = f64::NEG_INFINITY;
    let step = (1.0 - low) / (grid - 1) as f64;
    for i in 0..grid {
        let z = low + step * i as f64;
        let d = diff(z);
        excess = excess.max(d);
        if d.abs() > best.0 {
            best = (d.abs(), z);
        }
    }
    // golden-section refinement of |F_n − F_∞| on the neighbouring cells
    let (mut a, mut b) = ((best.1 - step).max(low), (best.1 + step).min(1.0));
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..80 {
        let c = b - phi * (b - a);
        let d = a + phi * (b - a);
        if diff(c).abs() > diff(d).abs() {
            b = d;
        } else {
            a = c;
        }
    }
    let z = 0.5 * (a + b);
    let d = diff(z);
    excess = excess.max(d);
    if d.abs() > best.0 {
        best = (d.abs(), z);
    }
    Ok(CdfReport {
        n,
        grid_points: grid,
        sup_distance: best.0,
        argmax: best.1,
        max_signed_excess: excess,
        sup_times_n: best.0 * n,
    })
}

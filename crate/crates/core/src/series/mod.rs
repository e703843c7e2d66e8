//! Expansion coefficients in powers of `1/n`.
//!
//! [`integral`] covers `I(n)` in the alternating basis and the exact
//! zeta-polynomial basis, [`moments`] the moments of `Z_n = ‖(U, 1−U)‖_n`,
//! and [`rdim`] the moments of `‖(U₁, …, U_r)‖_n` for independent uniforms.

pub mod integral;
pub mod moments;
pub mod rdim;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{eval_zeta_poly, PrecisionContext, Real};
use crate::zeta::ZetaPolynomial;

pub use integral::{
    i_series, ip_alt_form, ip_poly_form, poly_weight, rho, table_deviation, tabulated_ip,
    TABULATED_MAX,
};
pub use moments::{
    moment_coeff_int, moment_coeff_int_value, moment_coeff_real, moment_constant,
    moment_constant_exact,
};
pub use rdim::{
    r2_moment_coeff, r2_moment_value, r3_bracket_summand, rdim_leading, rdim_prefactor,
};

/// One coefficient of an expansion: exact, or a number when it involves
/// alternating values or a non-integer parameter.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficient {
    Exact(ZetaPolynomial),
    Numeric(f64),
}

impl Coefficient {
    pub fn value(&self, ctx: &PrecisionContext) -> Result<Real> {
        match self {
            Coefficient::Exact(p) => eval_zeta_poly(p, ctx),
            Coefficient::Numeric(x) => Real::from_f64(*x, ctx.bits()),
        }
    }

    pub fn as_exact(&self) -> Option<&ZetaPolynomial> {
        match self {
            Coefficient::Exact(p) => Some(p),
            Coefficient::Numeric(_) => None,
        }
    }
}

/// `Σ_p c_p n^{−p}`; `coeffs[p]` multiplies `n^{−p}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticSeries {
    coeffs: Vec<Coefficient>,
    description: String,
}

impl AsymptoticSeries {
    pub fn new(coeffs: Vec<Coefficient>, description: impl Into<String>) -> Self {
        AsymptoticSeries { coeffs, description: description.into() }
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn coeff(&self, p: usize) -> Option<&Coefficient> {
        self.coeffs.get(p)
    }

    /// Highest available order.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

/// `Σ_{p ≤ order} c_p / n^p` at the working precision of `ctx`.
pub fn eval_truncated(
    series: &AsymptoticSeries,
    n: f64,
    order: usize,
    ctx: &PrecisionContext,
) -> Result<Real> {
    if order > series.order() {
        return Err(Error::invalid(format!(
            "truncation order {order} exceeds series order {}",
            series.order()
        )));
    }
    if !(n.is_finite() && n > 0.0) {
        return Err(Error::invalid(format!("n must be positive, got {n}")));
    }
    let bits = ctx.bits();
    let inv_n = Real::from_int(1, bits) / Real::from_f64(n, bits)?;
    let mut scale = Real::from_int(1, bits);
    let mut acc = Real::zero(bits);
    for c in &series.coeffs[..=order] {
        acc = acc + c.value(ctx)? * scale.clone();
        scale = scale * inv_n.clone();
    }
    Ok(acc)
}

/// Which random vector the moment refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentModel {
    /// `(U, 1−U)` for a single uniform `U`.
    DependentPair,
    /// `(U₁, …, U_r)` with independent uniforms.
    Independent,
}

/// The moment `E(Z_n^s)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MomentSpec {
    pub s: f64,
    pub r: u32,
    pub model: MomentModel,
}

impl MomentSpec {
    pub fn dependent_pair(s: f64) -> Self {
        MomentSpec { s, r: 1, model: MomentModel::DependentPair }
    }

    pub fn independent(r: u32, s: f64) -> Self {
        MomentSpec { s, r, model: MomentModel::Independent }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.s.is_finite() && self.s > 0.0) {
            return Err(Error::invalid(format!("moment order s must be positive, got {}", self.s)));
        }
        match self.model {
            MomentModel::DependentPair if self.r != 1 => {
                Err(Error::invalid("the dependent pair is encoded with r = 1"))
            }
            MomentModel::Independent if self.r < 2 => {
                Err(Error::invalid(format!("independent model needs r ≥ 2, got {}", self.r)))
            }
            _ => Ok(()),
        }
    }

    /// `s` as a small positive integer, if it is one.
    pub fn integer_s(&self) -> Option<u32> {
        (self.s.fract() == 0.0 && self.s >= 1.0 && self.s <= 64.0).then_some(self.s as u32)
    }

    /// `E(Z_∞^s)`.
    pub fn limit(&self) -> f64 {
        match self.model {
            MomentModel::DependentPair => moment_constant(self.s),
            MomentModel::Independent => rdim_prefactor(self.r, self.s),
        }
    }

    /// Expansion of `E(Z_n^s)` through `n^{−order}`.
    ///
    /// Independent vectors with `r ≥ 3` stop at the `n^{−2}` term.
    /// `real_path` forces the Bell-polynomial route for the dependent
    /// pair even when `s` is an integer.
    pub fn series(&self, order: u32, real_path: bool, ctx: &PrecisionContext) -> Result<AsymptoticSeries> {
        self.validate()?;
        let s = self.s;
        let mut coeffs = Vec::new();
        match self.model {
            MomentModel::DependentPair => {
                let int_s = if real_path { None } else { self.integer_s() };
                coeffs.push(match int_s {
                    Some(k) => Coefficient::Exact(ZetaPolynomial::constant(moment_constant_exact(k))),
                    None => Coefficient::Numeric(moment_constant(s)),
                });
                if order >= 1 {
                    coeffs.push(Coefficient::Numeric(0.0));
                }
                for p in 2..=order {
                    let c = match int_s {
                        Some(k) => moment_coeff_int_value(k, p, ctx)?,
                        None => moment_coeff_real(s, p, ctx)?,
                    };
                    coeffs.push(Coefficient::Numeric(c));
                }
                Ok(AsymptoticSeries::new(coeffs, format!("E(Z_n^{s}), Z_n = ‖(U, 1−U)‖_n")))
            }
            MomentModel::Independent => {
                let pre = rdim_prefactor(self.r, s);
                coeffs.push(Coefficient::Numeric(pre));
                if order >= 1 {
                    coeffs.push(Coefficient::Numeric(0.0));
                }
                if self.r == 2 {
                    for p in 2..=order {
                        let sgn = if p % 2 == 0 { 1.0 } else { -1.0 };
                        coeffs.push(Coefficient::Numeric(pre * sgn * r2_moment_coeff(s, p, ctx)?));
                    }
                } else if order >= 2 {
                    let c2 = s * (self.r - 1) as f64 * std::f64::consts::PI.powi(2) / 12.0;
                    coeffs.push(Coefficient::Numeric(pre * c2));
                }
                Ok(AsymptoticSeries::new(
                    coeffs,
                    format!("E(Z_n^{s}), Z_n = ‖(U₁, …, U_{})‖_n", self.r),
                ))
            }
        }
    }
}

use serde::Serialize;

use crate::error::{Error, Result};

/// Working precision and the truncation, acceleration and tolerance knobs
/// of every numeric routine.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrecisionContext {
    /// Decimal digits for high-precision values and printed decimals.
    pub digits: u32,
    /// Number of leading-index terms summed by the MZV oracle.
    pub sum_terms: u64,
    /// Depth of iterated averaging for alternating tails.
    pub accel_order: u32,
    /// Relative tolerance of adaptive quadrature.
    pub quad_rel_tol: f64,
    pub seed: u64,
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            digits: 30,
            sum_terms: 1_000_000,
            accel_order: 8,
            quad_rel_tol: 1e-12,
            seed: 0x5eed,
        }
    }
}

impl PrecisionContext {
    pub fn validate(&self) -> Result<()> {
        if self.digits < 15 {
            return Err(Error::invalid(format!("digits must be ≥ 15, got {}", self.digits)));
        }
        if self.sum_terms < 1_000 {
            return Err(Error::invalid(format!(
                "sum_terms must be ≥ 1000, got {}",
                self.sum_terms
            )));
        }
        if !(self.quad_rel_tol > 0.0 && self.quad_rel_tol < 1.0) {
            return Err(Error::invalid(format!(
                "quadrature tolerance must lie in (0, 1), got {}",
                self.quad_rel_tol
            )));
        }
        Ok(())
    }

    pub fn with_digits(mut self, digits: u32) -> Self {
        self.digits = digits;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Binary precision matching `digits`, plus guard bits.
    pub(crate) fn bits(&self) -> usize {
        (self.digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let ctx = PrecisionContext::default();
        assert!(ctx.validate().is_ok());
        assert_eq!(ctx.digits, 30);
        assert!(ctx.clone().with_digits(10).validate().is_err());
        let bad = PrecisionContext { sum_terms: 10, ..ctx };
        assert!(bad.validate().is_err());
    }
}

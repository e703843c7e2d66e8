use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rational::Rational;

type Float = FBig<HalfEven, 2>;

/// Binary floating-point number of arbitrary precision.
///
/// Binary operations run at the larger precision of their operands.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Real(Float);

fn to_ibig(n: &BigInt) -> IBig {
    IBig::from_le_bytes(&n.to_signed_bytes_le())
}

impl Real {
    pub fn zero(bits: usize) -> Self {
        Self::from_int(0, bits)
    }

    pub fn from_int(n: i64, bits: usize) -> Self {
        Real(Float::from(n).with_precision(bits).value())
    }

    pub fn from_bigint(n: &BigInt, bits: usize) -> Self {
        Real(Float::from(to_ibig(n)).with_precision(bits).value())
    }

    pub fn from_rational(r: &Rational, bits: usize) -> Self {
        Self::from_bigint(r.numer(), bits) / Self::from_bigint(r.denom(), bits)
    }

    /// Exact binary value of a finite `f64`, rounded to `bits`.
    pub fn from_f64(x: f64, bits: usize) -> Result<Self> {
        let v = Float::try_from(x)
            .map_err(|_| Error::invalid(format!("cannot represent {x} as a real")))?;
        Ok(Real(v.with_precision(bits).value()))
    }

    pub fn pi(bits: usize) -> Self {
        Real(Float::pi(bits))
    }

    pub fn precision(&self) -> usize {
        self.0.precision()
    }

    pub fn powi(&self, e: i64) -> Self {
        Real(self.0.powi(IBig::from(e)))
    }

    pub fn abs(&self) -> Self {
        if self.0 < Float::ZERO {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    /// Decimal rendering with `sig` significant digits, trailing zeros
    /// removed. Plain notation for moderate exponents, `d.ddd…e±x`
    /// otherwise.
    pub fn to_decimal_string(&self, sig: u32) -> String {
        let sig = sig.max(1) as usize;
        let dec = self.0.to_decimal().value().with_precision(sig).value();
        let repr = dec.repr();
        let mant = repr.significand().clone();
        if mant == IBig::ZERO {
            return "0".to_string();
        }
        let negative = mant < IBig::ZERO;
        let digits = if negative { (-mant).to_string() } else { mant.to_string() };
        let exp = repr.exponent();
        // value = 0.d₁d₂… × 10^point
        let point = digits.len() as isize + exp;
        let body = if (-8..=24).contains(&point) {
            if point <= 0 {
                format!("0.{}{}", "0".repeat((-point) as usize), digits)
            } else if point as usize >= digits.len() {
                format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
            } else {
                let (int, frac) = digits.split_at(point as usize);
                format!("{int}.{frac}")
            }
        } else {
            let (lead, rest) = digits.split_at(1);
            if rest.is_empty() {
                format!("{lead}e{}", point - 1)
            } else {
                format!("{lead}.{rest}e{}", point - 1)
            }
        };
        let body = trim_fraction(body);
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn trim_fraction(s: String) -> String {
    let (mantissa, exp) = match s.find('e') {
        Some(i) => (s[..i].to_string(), s[i..].to_string()),
        None => (s, String::new()),
    };
    if !mantissa.contains('.') {
        return mantissa + &exp;
    }
    let t = mantissa.trim_end_matches('0').trim_end_matches('.');
    format!("{t}{exp}")
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .map(|p| p as u32)
            .unwrap_or_else(|| (self.precision() as f64 / std::f64::consts::LOG2_10) as u32);
        f.write_str(&self.to_decimal_string(digits.max(1)))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn pi_digits() {
        let pi = Real::pi(200);
        assert_eq!(
            pi.to_decimal_string(40),
            "3.141592653589793238462643383279502884197"
        );
    }

    #[test]
    fn rational_conversion_and_format() {
        let bits = 128;
        let r = Real::from_rational(&rat(-3, 4), bits);
        assert_eq!(r.to_decimal_string(30), "-0.75");
        let third = Real::from_rational(&rat(1, 3), bits);
        assert_eq!(third.to_decimal_string(5), "0.33333");
        let big = Real::from_int(123_456_789, bits) * Real::from_int(1_000_000_000_000_000, bits);
        assert_eq!(big.to_decimal_string(4), "123500000000000000000000");
        let tiny = Real::from_rational(&rat(1, 7), bits) / Real::from_int(10_i64.pow(12), bits);
        assert_eq!(tiny.to_decimal_string(3), "1.43e-13");
        assert_eq!(Real::zero(bits).to_decimal_string(5), "0");
        assert!((third.to_f64() - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn huge_rational() {
        let n = BigInt::from(10).pow(60) + 1;
        let d = BigInt::from(10).pow(60) * 4;
        let r = Real::from_rational(&Rational::new(n, d), 256);
        assert_eq!(r.to_decimal_string(70), "0.25000000000000000000000000000000000000000000000000000000000025");
    }
}

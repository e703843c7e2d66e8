use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::ZetaMonomial;
use crate::rational::{self, Rational};

/// Finitely supported map from monomials in `ζ(2), ζ(3), …` to rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ZetaPolynomial {
    terms: BTreeMap<ZetaMonomial, Rational>,
}

impl ZetaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, ZetaMonomial::one())
    }

    /// `ζ(k)`. Panics if `k < 2`.
    pub fn zeta(k: u32) -> Self {
        Self::term(Rational::one(), ZetaMonomial::generator(k))
    }

    pub fn term(c: Rational, m: ZetaMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: by weight, then number of factors, then
    /// arguments.
    pub fn terms(&self) -> impl Iterator<Item = (&ZetaMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &ZetaMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The coefficient of the heaviest monomial in canonical order.
    pub fn leading(&self) -> Option<(&ZetaMonomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(ZetaMonomial::weight).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: ZetaMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        ZetaPolynomial { terms }
    }

    /// Double-precision evaluation from a table of generator values.
    pub fn eval_f64(&self, zeta: impl Fn(u32) -> f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| rational::to_f64(c) * m.factors().iter().map(|&k| zeta(k)).product::<f64>())
            .sum()
    }
}

impl From<Rational> for ZetaPolynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Neg for ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn neg(mut self) -> Self {
        for v in self.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

impl Neg for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn neg(self) -> ZetaPolynomial {
        -self.clone()
    }
}

impl AddAssign<&ZetaPolynomial> for ZetaPolynomial {
    fn add_assign(&mut self, rhs: &ZetaPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&ZetaPolynomial> for ZetaPolynomial {
    fn sub_assign(&mut self, rhs: &ZetaPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add<&ZetaPolynomial> for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn add(self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn add(mut self, rhs: ZetaPolynomial) -> ZetaPolynomial {
        self += &rhs;
        self
    }
}

impl Sub<&ZetaPolynomial> for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn sub(self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn sub(mut self, rhs: ZetaPolynomial) -> ZetaPolynomial {
        self -= &rhs;
        self
    }
}

impl Mul<&ZetaPolynomial> for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn mul(self, rhs: &ZetaPolynomial) -> ZetaPolynomial {
        let mut out = ZetaPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn mul(self, rhs: ZetaPolynomial) -> ZetaPolynomial {
        &self * &rhs
    }
}

impl Mul<&Rational> for &ZetaPolynomial {
    type Output = ZetaPolynomial;
    fn mul(self, rhs: &Rational) -> ZetaPolynomial {
        self.scale(rhs)
    }
}

/// Canonical text, e.g. `83/256*z6 - 1/16*z3^2`; unit coefficients are
/// omitted and the zero polynomial prints as `0`.
impl fmt::Display for ZetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", rational::to_string(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational::to_string(&abs))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolynomialError(String);

impl fmt::Display for ParsePolynomialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse zeta polynomial: {}", self.0)
    }
}

impl std::error::Error for ParsePolynomialError {}

fn parse_factor(s: &str) -> Result<(u32, u32), ParsePolynomialError> {
    let bad = || ParsePolynomialError(format!("bad factor {s:?}"));
    let body = s.strip_prefix('z').ok_or_else(bad)?;
    let (k, e) = match body.split_once('^') {
        Some((k, e)) => (k, e.parse::<u32>().map_err(|_| bad())?),
        None => (body, 1),
    };
    let k: u32 = k.parse().map_err(|_| bad())?;
    if k < 2 || e == 0 {
        return Err(bad());
    }
    Ok((k, e))
}

/// Accepts the canonical text form, in any term order.
impl FromStr for ZetaPolynomial {
    type Err = ParsePolynomialError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        // split into signed terms
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut neg = false;
        let mut cur = String::new();
        for tok in s.split_whitespace() {
            match tok {
                "+" | "-" => {
                    if !cur.is_empty() {
                        pieces.push((neg, std::mem::take(&mut cur)));
                    }
                    neg = tok == "-";
                }
                _ => {
                    let t = match tok.strip_prefix('-') {
                        Some(rest) if cur.is_empty() => {
                            neg = !neg;
                            rest
                        }
                        _ => tok,
                    };
                    cur.push_str(t);
                }
            }
        }
        if cur.is_empty() {
            return Err(ParsePolynomialError(format!("dangling sign in {s:?}")));
        }
        pieces.push((neg, cur));

        let mut out = Self::zero();
        for (neg, piece) in pieces {
            let mut coeff = Rational::one();
            let mut factors = Vec::new();
            for part in piece.split('*') {
                if part.starts_with('z') {
                    let (k, e) = parse_factor(part)?;
                    factors.extend(std::iter::repeat(k).take(e as usize));
                } else {
                    coeff *= rational::parse(part)
                        .ok_or_else(|| ParsePolynomialError(format!("bad coefficient {part:?}")))?;
                }
            }
            if neg {
                coeff = -coeff;
            }
            let m = ZetaMonomial::new(factors).map_err(|e| ParsePolynomialError(e.to_string()))?;
            out.add_term(m, coeff);
        }
        Ok(out)
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    monomial: &'a [u32],
    coeff: String,
}

/// JSON: `[{"monomial":[3,3],"coeff":"-1/16"}, …]`.
impl Serialize for ZetaPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermJson { monomial: m.factors(), coeff: rational::to_string(c) })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn z(k: u32) -> ZetaPolynomial {
        ZetaPolynomial::zeta(k)
    }

    #[test]
    fn ring_examples() {
        assert!((&z(2) - &z(2)).is_zero());
        let p = &z(2) * &z(3);
        assert_eq!(p.coeff(&ZetaMonomial::new(vec![2, 3]).unwrap()), int(1));
        assert_eq!(z(3).scale(&rat(1, 8)).to_string(), "1/8*z3");
        assert_eq!(ZetaPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn display_order_and_signs() {
        let p = z(6).scale(&rat(83, 256)) - (&z(3) * &z(3)).scale(&rat(1, 16));
        assert_eq!(p.to_string(), "83/256*z6 - 1/16*z3^2");
        let q = -z(5) + ZetaPolynomial::constant(rat(3, 4));
        assert_eq!(q.to_string(), "3/4 - z5");
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "83/256*z6 - 1/16*z3^2",
            "-1/8*z2*z3",
            "3/4",
            "0",
            "z2 + z3",
            "293937/20480*z10 - 87/32*z3*z7 - 9/16*z5^2 - 81/64*z3^2*z4 - 21/16*z2*z3*z5",
        ] {
            let p: ZetaPolynomial = text.parse().unwrap();
            let again: ZetaPolynomial = p.to_string().parse().unwrap();
            assert_eq!(p, again, "{text}");
        }
        assert!("z1".parse::<ZetaPolynomial>().is_err());
        assert!("1/8*".parse::<ZetaPolynomial>().is_err());
        assert!("z3 -".parse::<ZetaPolynomial>().is_err());
    }

    #[test]
    fn json_shape() {
        let p: ZetaPolynomial = "83/256*z6 - 1/16*z3^2".parse().unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"monomial":[6],"coeff":"83/256"},{"monomial":[3,3],"coeff":"-1/16"}]"#
        );
    }
}

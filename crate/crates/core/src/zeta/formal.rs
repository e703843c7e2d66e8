use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::combinatorics::MzvIndex;
use crate::error::Result;
use crate::rational::{self, Rational};

/// Unevaluated rational combination `Σ c_i ζ(index_i)` of (possibly
/// alternating) multiple zeta values.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalCombination {
    terms: Vec<(Rational, MzvIndex)>,
}

impl FormalCombination {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(c: Rational, index: MzvIndex) -> Self {
        let mut f = Self::new();
        f.push(c, index);
        f
    }

    /// Adds `c·ζ(index)`, merging with an existing term of the same index.
    pub fn push(&mut self, c: Rational, index: MzvIndex) {
        if c.is_zero() {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|(_, i)| *i == index) {
            self.terms[pos].0 += c;
            if self.terms[pos].0.is_zero() {
                self.terms.remove(pos);
            }
        } else {
            self.terms.push((c, index));
        }
    }

    pub fn extend(&mut self, other: &FormalCombination) {
        for (c, i) in &other.terms {
            self.push(c.clone(), i.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::new();
        for (v, i) in &self.terms {
            out.push(v * c, i.clone());
        }
        out
    }

    pub fn terms(&self) -> &[(Rational, MzvIndex)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms sorted by index, for order-independent comparison.
    pub fn sorted(&self) -> Self {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        FormalCombination { terms }
    }

    /// `Σ c_i v(index_i)` for a numeric evaluator `v`.
    pub fn evaluate(&self, mut value: impl FnMut(&MzvIndex) -> Result<f64>) -> Result<f64> {
        let mut acc = 0.0;
        for (c, i) in &self.terms {
            acc += rational::to_f64(c) * value(i)?;
        }
        Ok(acc)
    }
}

/// `-1/4·ζ(2̄) + 17/16·ζ(4̄)`; unit coefficients are omitted.
impl fmt::Display for FormalCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (c, i)) in self.terms.iter().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "{i}")?;
            } else {
                write!(f, "{}·{i}", rational::to_string(&abs))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    coeff: String,
    args: &'a [u32],
    bar_first: bool,
}

/// JSON: `[{"coeff":"-1/4","args":[2],"bar_first":true}, …]`.
impl Serialize for FormalCombination {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (c, i) in &self.terms {
            seq.serialize_element(&TermJson {
                coeff: rational::to_string(c),
                args: i.args(),
                bar_first: i.bar_first(),
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn merging_and_display() {
        let two_bar = MzvIndex::barred(&[2]).unwrap();
        let mut f = FormalCombination::single(rat(-1, 4), two_bar.clone());
        assert_eq!(f.to_string(), "-1/4·ζ(2\u{304})");
        f.push(rat(1, 4), two_bar.clone());
        assert!(f.is_zero());
        f.push(int(1), MzvIndex::barred(&[12, 1]).unwrap());
        f.push(int(-3), MzvIndex::plain(&[3]).unwrap());
        assert_eq!(f.to_string(), "ζ(1\u{304}2\u{304},1) - 3·ζ(3)");
        let v = f.evaluate(|i| Ok(i.weight() as f64)).unwrap();
        assert_eq!(v, 13.0 - 9.0);
    }

    #[test]
    fn json_shape() {
        let f = FormalCombination::single(rat(-1, 4), MzvIndex::barred(&[2]).unwrap());
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"[{"coeff":"-1/4","args":[2],"bar_first":true}]"#
        );
    }
}

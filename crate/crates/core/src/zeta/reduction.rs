use std::sync::RwLock;

use super::{ZetaMonomial, ZetaPolynomial};
use crate::combinatorics::{bernoulli, binomial, factorial};
use crate::error::{Error, Result};
use crate::rational::{int, pow2, sign, Rational};

/// `ζ(2k)/π^{2k} = (−1)^{k+1} B_{2k} 2^{2k} / (2 (2k)!)` for even `two_k ≥ 2`.
pub fn even_zeta_ratio(two_k: u32) -> Result<Rational> {
    if two_k < 2 || two_k % 2 == 1 {
        return Err(Error::invalid(format!(
            "even_zeta_ratio needs an even argument ≥ 2, got {two_k}"
        )));
    }
    let k = two_k / 2;
    Ok(sign(k as i64 + 1) * bernoulli(two_k) * pow2(two_k as i64) / (int(2) * factorial(two_k)))
}

fn ratio(two_k: u32) -> Rational {
    even_zeta_ratio(two_k).expect("even argument")
}

/// Rewrites every monomial so that it carries at most one even generator,
/// using `ζ(2j)ζ(2k) = [r_{2j} r_{2k} / r_{2j+2k}] ζ(2j+2k)` with
/// `r = ζ(2k)/π^{2k}`.
pub fn normalize_even(p: &ZetaPolynomial) -> ZetaPolynomial {
    let mut out = ZetaPolynomial::zero();
    for (m, c) in p.terms() {
        let (even, odd): (Vec<u32>, Vec<u32>) = m.factors().iter().partition(|&&k| k % 2 == 0);
        let mut coeff = c.clone();
        let mut factors = odd;
        if let Some((&first, rest)) = even.split_first() {
            let mut merged = first;
            for &e in rest {
                coeff *= ratio(merged) * ratio(e) / ratio(merged + e);
                merged += e;
            }
            factors.push(merged);
        }
        factors.sort_unstable();
        out.add_term(ZetaMonomial::from_sorted_unchecked(factors), coeff);
    }
    out
}

/// Homogeneous component of a bivariate series: entry `i` is the
/// coefficient of `x^i y^{d−i}`.
type Component = Vec<ZetaPolynomial>;

/// Components `E_0, E_1, …` of
/// `exp(Σ_{k≥2} (x^k + y^k − (x+y)^k) ζ(k)/k)`, grown on demand.
static COMPONENTS: RwLock<Vec<Component>> = RwLock::new(Vec::new());

/// `L_d = (ζ(d)/d)(x^d + y^d − (x+y)^d)`; the pure powers cancel.
fn log_component(d: u32) -> Component {
    let z = ZetaPolynomial::zeta(d);
    (0..=d)
        .map(|i| {
            if i == 0 || i == d {
                ZetaPolynomial::zero()
            } else {
                z.scale(&(-binomial(d, i) / int(d as i64)))
            }
        })
        .collect()
}

fn component(degree: u32) -> Component {
    {
        let cache = COMPONENTS.read().unwrap_or_else(|e| e.into_inner());
        if cache.len() > degree as usize {
            return cache[degree as usize].clone();
        }
    }
    let mut cache = COMPONENTS.write().unwrap_or_else(|e| e.into_inner());
    if cache.is_empty() {
        cache.push(vec![ZetaPolynomial::one()]);
        cache.push(vec![ZetaPolynomial::zero(); 2]);
    }
    // d E_d = Σ_{j=2}^{d} j L_j E_{d−j}
    while cache.len() <= degree as usize {
        let d = cache.len() as u32;
        let mut next: Component = vec![ZetaPolynomial::zero(); d as usize + 1];
        for j in 2..=d {
            let lj = log_component(j);
            let prev = &cache[(d - j) as usize];
            let weight = int(j as i64) / int(d as i64);
            for (a, la) in lj.iter().enumerate() {
                if la.is_zero() {
                    continue;
                }
                let la = la.scale(&weight);
                for (b, pb) in prev.iter().enumerate() {
                    if !pb.is_zero() {
                        next[a + b] += &(&la * pb);
                    }
                }
            }
        }
        let next = next.iter().map(normalize_even).collect();
        cache.push(next);
    }
    cache[degree as usize].clone()
}

/// `ζ(q, {1}_m)` as an even-normalized rational polynomial in the zeta
/// generators, read off
///
/// ```text
/// 1 − Σ_{a,b≥0} ζ(a+2, {1}_b) x^{a+1} y^{b+1} = exp(Σ_{k≥2} (x^k + y^k − (x+y)^k) ζ(k)/k)
/// ```
pub fn reduce_height_one(q: u32, m: u32) -> Result<ZetaPolynomial> {
    if q < 2 {
        return Err(Error::invalid(format!("ζ(q,{{1}}_m) needs q ≥ 2, got q = {q}")));
    }
    let d = q + m;
    Ok(-&component(d)[(q - 1) as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn z(k: u32) -> ZetaPolynomial {
        ZetaPolynomial::zeta(k)
    }

    #[test]
    fn even_ratios() {
        assert_eq!(even_zeta_ratio(2).unwrap(), rat(1, 6));
        assert_eq!(even_zeta_ratio(4).unwrap(), rat(1, 90));
        assert_eq!(even_zeta_ratio(6).unwrap(), rat(1, 945));
        assert_eq!(even_zeta_ratio(12).unwrap(), rat(691, 638512875));
        assert!(even_zeta_ratio(3).is_err());
        assert!(even_zeta_ratio(0).is_err());
    }

    #[test]
    fn normalization_examples() {
        assert_eq!(normalize_even(&(&z(2) * &z(2))), z(4).scale(&rat(5, 2)));
        assert_eq!(normalize_even(&(&z(2) * &z(4))), z(6).scale(&rat(7, 4)));
        let p = &(&z(3) * &z(3)) * &z(4);
        assert_eq!(normalize_even(&p), p);
    }

    #[test]
    fn classical_values() {
        assert_eq!(reduce_height_one(2, 0).unwrap(), z(2));
        assert_eq!(reduce_height_one(2, 1).unwrap(), z(3));
        assert_eq!(reduce_height_one(3, 1).unwrap(), z(4).scale(&rat(1, 4)));
        assert_eq!(reduce_height_one(4, 1).unwrap(), z(5).scale(&int(2)) - &z(2) * &z(3));
        assert_eq!(reduce_height_one(2, 2).unwrap(), z(4));
        assert!(reduce_height_one(1, 3).is_err());
    }

    #[test]
    fn duality() {
        for q in 2..=10u32 {
            for m in 0..=(10 - q) {
                assert_eq!(
                    reduce_height_one(q, m).unwrap(),
                    reduce_height_one(m + 2, q - 2).unwrap(),
                    "q={q} m={m}"
                );
            }
        }
    }

    #[test]
    fn homogeneous_weight() {
        for q in 2..=8u32 {
            for m in 0..=4 {
                let p = reduce_height_one(q, m).unwrap();
                assert!(p.terms().all(|(mono, _)| mono.weight() == q + m));
            }
        }
    }

    #[test]
    fn concurrent_reads_agree() {
        let handles: Vec<_> = (0..4)
            .map(|t| std::thread::spawn(move || reduce_height_one(3 + t, 5 - t).unwrap()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, r) in results.iter().enumerate() {
            assert_eq!(*r, reduce_height_one(3 + t as u32, 5 - t as u32).unwrap());
        }
    }
}

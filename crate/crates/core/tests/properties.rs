use proptest::prelude::*;

use zetanorm::combinatorics::{
    bell_partial, binomial, stirling_second, truncated_mzv, truncated_star,
};
use zetanorm::numeric::{cdf_infinity, cdf_zn, g_norm, zeta_f64};
use zetanorm::rational::{self, int, rat};
use zetanorm::series::{poly_weight, rho};
use zetanorm::zeta::normalize_even;
use zetanorm::{Rational, ZetaMonomial, ZetaPolynomial};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn monomial() -> impl Strategy<Value = ZetaMonomial> {
    prop::collection::vec(2u32..=7, 0..=3).prop_map(|f| ZetaMonomial::new(f).unwrap())
}

fn polynomial() -> impl Strategy<Value = ZetaPolynomial> {
    prop::collection::vec((monomial(), small_rational()), 0..=4).prop_map(|terms| {
        let mut p = ZetaPolynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_a_commutative_group(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &ZetaPolynomial::zero(), a.clone());
    }

    #[test]
    fn multiplication_is_commutative_and_distributes(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &ZetaPolynomial::one(), a.clone());
    }

    #[test]
    fn text_form_round_trips(a in polynomial()) {
        let parsed: ZetaPolynomial = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn even_normalization_preserves_value(a in polynomial()) {
        let n = normalize_even(&a);
        let (x, y) = (a.eval_f64(zeta_f64), n.eval_f64(zeta_f64));
        prop_assert!((x - y).abs() <= 1e-9 * (1.0 + x.abs()), "{} vs {}", x, y);
        prop_assert_eq!(normalize_even(&n), n.clone());
        prop_assert!(n.terms().all(|(m, _)| m.factors().iter().filter(|&&k| k % 2 == 0).count() <= 1));
    }

    #[test]
    fn rational_text_round_trips(r in small_rational()) {
        prop_assert_eq!(rational::parse(&rational::to_string(&r)), Some(r));
    }

    #[test]
    fn binomial_symmetry_and_pascal(n in 1u32..40, k in 0u32..40) {
        prop_assume!(k <= n);
        prop_assert_eq!(binomial(n, k), binomial(n, n - k));
        if k >= 1 {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }

    #[test]
    fn bell_polynomials_of_ones_count_partitions(n in 1u32..14, k in 1u32..14) {
        prop_assume!(k <= n);
        let ones = vec![int(1); n as usize];
        prop_assert_eq!(bell_partial(n, k, &ones).unwrap(), stirling_second(n, k));
    }

    #[test]
    fn star_values_dominate_strict_values(r in 1u32..25, args in prop::collection::vec(1u32..4, 1..4)) {
        prop_assert!(truncated_star(r, &args) >= truncated_mzv(r, &args));
    }

    #[test]
    fn rho_is_symmetric(p in 2u32..20, k in 1u32..20) {
        prop_assume!(k < p);
        prop_assert_eq!(rho(p, k).unwrap(), rho(p, p - k).unwrap());
        prop_assert!(poly_weight(p, k).is_ok());
    }

    #[test]
    fn norm_dominates_max(x in 0.0f64..=1.0, n in 1.0f64..200.0) {
        let g = g_norm(x, n);
        prop_assert!(g >= x.max(1.0 - x) - 1e-15);
        prop_assert!(g <= 1.0 + 1e-15);
    }

    #[test]
    fn finite_n_distribution_lies_below_limit(z in 0.5f64..=1.0, n in 2.0f64..100.0) {
        let f = cdf_zn(z, n);
        prop_assert!((0.0..=1.0).contains(&f));
        prop_assert!(f <= cdf_infinity(z) + 1e-12);
    }
}

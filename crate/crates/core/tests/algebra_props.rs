use num_bigint::BigInt;
use proptest::prelude::*;

use hilbcount::algebra::{
    format_rational, parse_rational, CyclotomicInt, FqPoly, LaurentPoly, Modulus, Partition, Rational, RootOrder,
    TruncSeries,
};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-4i64..4, prop::collection::vec(-20i64..20, 0..7)).prop_map(|(off, c)| LaurentPoly::from_i64s(off, &c))
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries<BigInt>> {
    prop::collection::vec(-9i64..9, order + 1).prop_map(move |c| TruncSeries::from_i64s(order, &c))
}

fn fq_poly(p: u64) -> impl Strategy<Value = FqPoly> {
    prop::collection::vec(0..p, 0..6).prop_map(move |c| FqPoly::new(Modulus::new(p).unwrap(), c))
}

fn root_order() -> impl Strategy<Value = RootOrder> {
    prop::sample::select(vec![3u32, 4, 6]).prop_map(|d| RootOrder::from_u32(d).unwrap())
}

proptest! {
    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn laurent_evaluation_is_a_homomorphism(a in laurent(), b in laurent(), q in prop::sample::select(vec![-3i64, -2, -1, 1, 2, 5])) {
        let (x, y) = (a.eval_i64(q).ok(), b.eval_i64(q).ok());
        if let (Some(x), Some(y)) = (x, y) {
            prop_assert_eq!((&a * &b).eval_i64(q).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval_i64(q).unwrap(), x + y);
        }
        let r = Rational::new(BigInt::from(q), BigInt::from(3));
        prop_assert_eq!(
            (&a * &b).eval_rational(&r).unwrap(),
            a.eval_rational(&r).unwrap() * b.eval_rational(&r).unwrap()
        );
    }

    #[test]
    fn laurent_exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn laurent_reflection(a in laurent(), b in laurent()) {
        prop_assert_eq!((&a * &b).reflect(), &a.reflect() * &b.reflect());
        prop_assert_eq!(a.reflect().reflect(), a.clone());
        let sym = &a * &a.reflect();
        prop_assert!(sym.is_zero() || sym.is_palindromic());
    }

    #[test]
    fn laurent_json_round_trip(a in laurent()) {
        prop_assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a.clone());
        let text = serde_json::to_string(&a.to_json()).unwrap();
        prop_assert_eq!(LaurentPoly::from_json(&serde_json::from_str(&text).unwrap()).unwrap(), a);
    }

    #[test]
    fn root_evaluation_is_a_homomorphism(a in laurent(), b in laurent(), order in root_order()) {
        let prod = (&a * &b).eval_at_root(order);
        prop_assert_eq!(prod, &a.eval_at_root(order) * &b.eval_at_root(order));
    }

    #[test]
    fn cyclotomic_norm_is_multiplicative(order in root_order(), a in -30i64..30, b in -30i64..30, c in -30i64..30, d in -30i64..30) {
        let x = CyclotomicInt::new(order, a, b);
        let y = CyclotomicInt::new(order, c, d);
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        prop_assert_eq!(&x * &x.conj(), CyclotomicInt::integer(order, x.norm()));
        prop_assert!(x.norm() >= BigInt::from(0));
    }

    #[test]
    fn series_multiplication_is_associative(a in series(10), b in series(10), c in series(10)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn series_inverse(mut coeffs in prop::collection::vec(-9i64..9, 13), unit in prop::bool::ANY) {
        coeffs[0] = if unit { 1 } else { -1 };
        let a = TruncSeries::from_i64s(12, &coeffs);
        let inv = a.inverse().unwrap();
        prop_assert_eq!(&a * &inv, TruncSeries::one(12));
        prop_assert_eq!(a.pow(-2).unwrap(), &inv * &inv);
    }

    #[test]
    fn fq_division_and_gcd((a, b) in prop::sample::select(vec![2u64, 3, 5, 7]).prop_flat_map(|p| (fq_poly(p), fq_poly(p)))) {
        if !b.is_zero() {
            let (quot, rem) = a.divrem(&b).unwrap();
            prop_assert_eq!(quot.mul(&b).add(&rem), a.clone());
            prop_assert!(rem.is_zero() || rem.degree() < b.degree());
        }
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!(a.divrem(&g).unwrap().1.is_zero());
            prop_assert!(b.divrem(&g).unwrap().1.is_zero());
            prop_assert_eq!(g.monic(), g);
        }
    }

    #[test]
    fn rational_text_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let r = Rational::new(BigInt::from(n), BigInt::from(d));
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn partition_profile(mut parts in prop::collection::vec(1u32..7, 1..6)) {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(parts.clone()).unwrap();
        prop_assert_eq!(lambda.n(), parts.iter().sum::<u32>());
        prop_assert_eq!(lambda.ell() as usize, parts.len());
        prop_assert_eq!(lambda.d().iter().sum::<u32>(), lambda.ell());
        prop_assert_eq!(lambda.v() as usize, lambda.d().iter().filter(|&&d| d >= 1).count());
        prop_assert_eq!(Partition::from_d_sequence(lambda.d()).unwrap(), lambda);
    }
}

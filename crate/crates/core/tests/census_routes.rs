//! The census polynomials against brute-force counts that share no code with
//! the library.

use num_bigint::BigInt;
use proptest::prelude::*;

use hilbcount::algebra::{enumerate_partitions, LaurentPoly};
use hilbcount::census::{
    cell_count, cell_sum, coeff_a, coeff_c, poly_a, poly_bcirc, poly_c, poly_c_from_c, poly_p, poly_p_from_a, Flavor,
};
use hilbcount::identities::gf_c;

fn brute_partitions(n: u32, max_part: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max_part.min(n)).map(|k| brute_partitions(n - k, k)).sum()
}

fn brute_distinct_odd(n: u32, min_part: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    (min_part..=n).step_by(2).map(|k| brute_distinct_odd(n - k, k + 2)).sum()
}

fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

fn two_squares(n: u32) -> i64 {
    let r = (n as f64).sqrt() as i64 + 1;
    let mut count = 0;
    for x in -r..=r {
        for y in -r..=r {
            if x * x + y * y == n as i64 {
                count += 1;
            }
        }
    }
    count
}

fn at(p: &LaurentPoly, q: i64) -> BigInt {
    p.eval_i64(q).unwrap()
}

#[test]
fn plane_counts_at_plus_and_minus_one() {
    for n in 1..=24 {
        let a = poly_a(n).unwrap();
        assert_eq!(at(&a, 1), BigInt::from(brute_partitions(n, n)), "A_{n}(1)");
        assert_eq!(at(&a, -1), BigInt::from(brute_distinct_odd(n, 1)), "A_{n}(-1)");
    }
}

#[test]
fn torus_counts_at_plus_and_minus_one() {
    for n in 1..=36 {
        let sigma: u32 = divisors(n).sum();
        let p = poly_p(n).unwrap();
        assert_eq!(at(&p, 1), BigInt::from(sigma), "P_{n}(1)");
        let c = poly_c(n).unwrap();
        assert_eq!(at(&c, 1), BigInt::from(0));
        assert_eq!(at(&c, -1), BigInt::from(two_squares(n)), "C_{n}(-1)");
    }
}

#[test]
fn punctured_plane_counts() {
    for n in 1..=60 {
        let b = poly_bcirc(n).unwrap();
        assert_eq!(at(&b, 1), BigInt::from(divisors(n).count()), "B°_{n}(1)");
        let k = (n as f64).sqrt().round() as u32;
        let expected = if k * k == n { if k % 2 == 1 { 1 } else { -1 } } else { 0 };
        assert_eq!(at(&b, -1), BigInt::from(expected), "B°_{n}(-1)");
    }
}

#[test]
fn cells_sum_to_the_census() {
    for n in 1..=10 {
        for flavor in Flavor::ALL {
            let mut total = LaurentPoly::zero();
            for lambda in enumerate_partitions(n).unwrap() {
                total = &total + &cell_count(&lambda, flavor).unwrap().value;
            }
            assert_eq!(total, cell_sum(n, flavor).unwrap(), "n={n} {flavor}");
        }
        assert_eq!(cell_sum(n, Flavor::Invertible).unwrap(), poly_c(n).unwrap());
        assert_eq!(cell_sum(n, Flavor::Affine).unwrap(), poly_a(n).unwrap());
    }
}

#[test]
fn small_torus_counts_by_hand() {
    // Ideals of codimension 1 are the points of the torus: (q-1)^2.
    assert_eq!(poly_c(1).unwrap(), LaurentPoly::from_i64s(0, &[1, -2, 1]));
    assert_eq!(poly_c(2).unwrap(), LaurentPoly::from_i64s(0, &[1, -1, 0, -1, 1]));
    assert_eq!(poly_a(2).unwrap(), LaurentPoly::from_i64s(3, &[1, 1]));
}

#[test]
fn product_formula_agrees_with_coefficients() {
    let gf = gf_c(30).unwrap();
    for n in 1..=30u32 {
        let from_product = gf.coeff(n as usize).shift(n as i64);
        assert_eq!(from_product, poly_c_from_c(n).unwrap(), "n={n}");
        assert_eq!(poly_p_from_a(n).unwrap(), poly_p(n).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn torus_polynomials_are_palindromic(n in 1u32..40) {
        let c = poly_c(n).unwrap();
        let p = poly_p(n).unwrap();
        prop_assert!(c.is_palindromic());
        prop_assert!(p.is_palindromic());
        prop_assert_eq!(c.degree(), Some(2 * n as i64));
        prop_assert_eq!(&p * &LaurentPoly::from_i64s(0, &[1, -2, 1]), c);
    }

    #[test]
    fn coefficient_bounds(n in 2u32..300) {
        prop_assert_eq!(coeff_a(n, n - 1), 1);
        prop_assert_eq!(coeff_a(n, n - 2), 1);
        for i in 0..=n {
            prop_assert!(coeff_c(n, i).unwrap().abs() <= 2);
        }
    }
}

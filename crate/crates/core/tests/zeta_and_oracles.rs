//! Zeta functions against point counts, and the brute-force oracles against
//! enumerations written here from scratch.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use hilbcount::algebra::{FqPoly, Modulus, Partition};
use hilbcount::census::{cell_count, poly_c, Flavor};
use hilbcount::oracle::cell::{cell_enumeration_count_via, parameter_count, CellMatrixInstance, CriterionRoute};
use hilbcount::oracle::coprime::{coprime_formula, count_coprime_tuples};
use hilbcount::oracle::OracleConfig;
use hilbcount::zeta::{functional_equation_check, zeta_factorization};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn point_count(n: u32, q: u64) -> BigRational {
    BigRational::from_integer(poly_c(n).unwrap().eval_i64(q as i64).unwrap())
}

#[test]
fn zeta_expansion_matches_point_counts() {
    // log Z = Σ N_m t^m / m, so [t] Z = N_1 and [t^2] Z = (N_1^2 + N_2)/2.
    for n in 1..=8 {
        let z = zeta_factorization(n).unwrap();
        for q in [2u64, 3, 5] {
            let series = z.expand(&BigInt::from(q), 3).unwrap();
            let n1 = point_count(n, q);
            let n2 = point_count(n, q * q);
            let n3 = point_count(n, q * q * q);
            assert_eq!(series.coeff(0), &ratio(1, 1));
            assert_eq!(series.coeff(1), &n1, "n={n} q={q}");
            assert_eq!(series.coeff(2), &((&n1 * &n1 + &n2) / ratio(2, 1)), "n={n} q={q}");
            let third = (&n1 * &n1 * &n1 + ratio(3, 1) * &n1 * &n2 + ratio(2, 1) * &n3) / ratio(6, 1);
            assert_eq!(series.coeff(3), &third, "n={n} q={q}");
        }
    }
}

#[test]
fn zeta_of_one_point_at_two_and_three() {
    let z = zeta_factorization(1).unwrap();
    assert_eq!(z.eval(&BigInt::from(2), &ratio(3, 1)).unwrap(), ratio(25, 22));
}

fn brute_coprime(q: u64, d: usize, qs: &[Vec<u64>]) -> u64 {
    let p = Modulus::new(q).unwrap();
    let qs: Vec<FqPoly> = qs.iter().map(|c| FqPoly::new(p, c.clone())).collect();
    let slots = (qs.len() + 1) * d;
    let mut count = 0;
    for idx in 0..q.pow(slots as u32) {
        let digits: Vec<u64> = (0..slots).map(|k| idx / q.pow(k as u32) % q).collect();
        let mut monic = digits[..d].to_vec();
        if monic[0] == 0 {
            continue;
        }
        monic.push(1);
        let big_p = FqPoly::new(p, monic);
        let combo = qs.iter().enumerate().fold(FqPoly::zero(p), |acc, (i, qi)| {
            let pi = FqPoly::new(p, digits[(i + 1) * d..(i + 2) * d].to_vec());
            acc.add(&pi.mul(qi))
        });
        if big_p.gcd(&combo).degree() == Some(0) {
            count += 1;
        }
    }
    count
}

fn coprime_family() -> impl Strategy<Value = (u64, usize, Vec<Vec<u64>>)> {
    (prop::sample::select(vec![2u64, 3]), 1usize..=2, 1usize..=2).prop_flat_map(|(q, d, h)| {
        let poly = prop::collection::vec(0..q, 1..=3);
        (Just(q), Just(d), prop::collection::vec(poly, h))
    })
}

fn instance() -> impl Strategy<Value = (Partition, u64, u64)> {
    let lambdas = vec![vec![1], vec![2], vec![1, 1], vec![2, 1], vec![3], vec![1, 1, 1], vec![2, 2], vec![3, 1], vec![2, 1, 1]];
    (prop::sample::select(lambdas), prop::sample::select(vec![2u64, 3])).prop_flat_map(|(parts, q)| {
        let lambda = Partition::new(parts).unwrap();
        let size = q.pow(parameter_count(&lambda));
        (Just(lambda), Just(q), 0..size)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn functional_equation_on_random_points(n in 1u32..=8, q in prop::sample::select(vec![2u64, 3, 5]), num in -40i64..40, den in 1i64..40) {
        prop_assume!(num != 0);
        let report = functional_equation_check(n, q, &ratio(num, den));
        if let Ok(report) = report {
            prop_assert!(report.pass, "{:?}", report);
        }
    }

    #[test]
    fn coprime_tuples_match_an_independent_count((q, d, raw) in coprime_family()) {
        let p = Modulus::new(q).unwrap();
        let qs: Vec<FqPoly> = raw.iter().map(|c| FqPoly::new(p, c.clone())).collect();
        let g = qs.iter().fold(FqPoly::zero(p), |acc, f| acc.gcd(f));
        prop_assume!(g.degree() == Some(0));
        let report = count_coprime_tuples(q, d as u32, &qs, &OracleConfig::default()).unwrap();
        let expected = brute_coprime(q, d, &raw);
        prop_assert_eq!(&report.count, &BigInt::from(expected));
        prop_assert_eq!(report.count, coprime_formula(q, d as u32, qs.len() as u32).unwrap());
    }

    #[test]
    fn membership_routes_agree((lambda, q, idx) in instance()) {
        let inst = CellMatrixInstance::from_index(&lambda, Modulus::new(q).unwrap(), idx);
        for flavor in [Flavor::SemiInvertible, Flavor::Invertible] {
            prop_assert_eq!(
                inst.passes(flavor, CriterionRoute::Criteria).unwrap(),
                inst.passes(flavor, CriterionRoute::Minors).unwrap(),
                "{:?} {} idx={}", lambda, flavor, idx
            );
        }
    }
}

#[test]
fn cell_enumeration_matches_cell_polynomials() {
    let cfg = OracleConfig::default();
    for parts in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![3], vec![1, 1, 1], vec![2, 2], vec![3, 1]] {
        let lambda = Partition::new(parts).unwrap();
        for q in [2u64, 3] {
            for flavor in Flavor::ALL {
                for route in [CriterionRoute::Criteria, CriterionRoute::Minors] {
                    let report = cell_enumeration_count_via(&lambda, q, flavor, route, &cfg).unwrap();
                    let expected = cell_count(&lambda, flavor).unwrap().value.eval_i64(q as i64).unwrap();
                    assert_eq!(report.count, expected, "{lambda:?} q={q} {flavor} {}", route.name());
                }
            }
        }
    }
}

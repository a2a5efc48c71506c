//! Property tests against brute-force oracles.

use foxhom_core::laurent::{shared_root_count, vars, LaurentMatrix, LaurentPoly, RootCount, Vars};
use foxhom_core::snf::{smith_normal_form, IntegerMatrix};
use foxhom_core::{branched_betti, fox_derivative, AbelianizationMap, SignedMonomial, Word};
use foxhom_testkit::{fixtures, oracle, random, suites};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r))
}

fn arb_word(k: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..k, prop_oneof![-3i64..=-1, 1i64..=3]), 0..10).prop_map(Word::from_letters)
}

fn arb_images(k: usize) -> impl Strategy<Value = Vec<(i64, Vec<i32>)>> {
    proptest::collection::vec(
        (
            prop_oneof![Just(1i64), Just(-1i64)],
            proptest::collection::vec(-2i32..=2, 2),
        ),
        k,
    )
}

fn to_map(images: &[(i64, Vec<i32>)]) -> AbelianizationMap {
    AbelianizationMap::new(
        (0..images.len()).map(|i| format!("g{i}")).collect(),
        vars(&["x", "y"]),
        images
            .iter()
            .map(|(s, e)| SignedMonomial::new(*s, e.clone()).unwrap())
            .collect(),
    )
    .unwrap()
}

fn arb_laurent(v: Vars) -> impl Strategy<Value = LaurentPoly> {
    let n = v.len();
    proptest::collection::vec((proptest::collection::vec(-1i32..=2, n), -3i64..=3), 0..4)
        .prop_map(move |t| LaurentPoly::from_terms(&v, t).unwrap())
}

fn arb_square(v: Vars, n: usize) -> impl Strategy<Value = Vec<Vec<LaurentPoly>>> {
    proptest::collection::vec(proptest::collection::vec(arb_laurent(v), n), n)
}

fn det(v: &Vars, rows: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    LaurentMatrix::from_rows(v, rows).unwrap().determinant().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn smith_divisors_match_minors(rows in arb_matrix()) {
        let m = IntegerMatrix::from_rows(rows[0].len(), rows.iter().map(|r| r.iter().copied())).unwrap();
        let ours = oracle::to_i128(&smith_normal_form(&m).divisors);
        prop_assert_eq!(ours, oracle::determinantal_divisors(&rows));
    }

    #[test]
    fn fox_matches_expansion_and_axioms(images in arb_images(3), u in arb_word(3), w in arb_word(3)) {
        let phi = to_map(&images);
        let v = phi.vars().clone();
        let one = LaurentPoly::one(&v);
        let uw = u.concat(&w);
        let phi_u = phi.apply(&u).unwrap().to_poly(&v);
        let mut identity = LaurentPoly::zero(&v);
        for g in 0..3 {
            let d = fox_derivative(&uw, g, &phi).unwrap();
            prop_assert_eq!(&d, &oracle::naive_fox(&uw, g, &images, &["x", "y"]));
            let split = &fox_derivative(&u, g, &phi).unwrap() + &(&phi_u * &fox_derivative(&w, g, &phi).unwrap());
            prop_assert_eq!(&d, &split);
            identity = &identity + &(&d * &(&phi.images()[g].to_poly(&v) - &one));
        }
        prop_assert_eq!(identity, &phi.apply(&uw).unwrap().to_poly(&v) - &one);
    }

    #[test]
    fn tietze_moves_preserve_abelianization(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let start = random::presentation(&mut rng);
        let mut walk = random::TietzeWalk::new(start.clone());
        for _ in 0..10 {
            walk.step(&mut rng);
            prop_assert_eq!(walk.current.abelianize(), start.abelianize());
        }
    }

    #[test]
    fn determinant_alternating_and_multilinear(
        rows in arb_square(vars(&["x", "y"]), 3),
        extra in proptest::collection::vec(arb_laurent(vars(&["x", "y"])), 3),
        scale in arb_laurent(vars(&["x", "y"])),
    ) {
        let v = vars(&["x", "y"]);
        let d = det(&v, rows.clone());
        let mut swapped = rows.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(det(&v, swapped), -&d);
        let mut repeated = rows.clone();
        repeated[1] = repeated[0].clone();
        prop_assert!(det(&v, repeated).is_zero());
        let mut other = rows.clone();
        other[1] = extra.clone();
        let mut combined = rows.clone();
        combined[1] = rows[1].iter().zip(&extra).map(|(a, b)| &(&scale * a) + b).collect();
        prop_assert_eq!(det(&v, combined), &(&scale * &d) + &det(&v, other));
    }

    #[test]
    fn determinant_multiplicative(a in arb_square(vars(&["x"]), 4), b in arb_square(vars(&["x"]), 4)) {
        let v = vars(&["x"]);
        let ma = LaurentMatrix::from_rows(&v, a).unwrap();
        let mb = LaurentMatrix::from_rows(&v, b).unwrap();
        let prod = ma.mul(&mb).unwrap();
        prop_assert_eq!(prod.determinant().unwrap(), &ma.determinant().unwrap() * &mb.determinant().unwrap());
    }

    #[test]
    fn shared_roots_match_cyclotomic_division(
        factors in proptest::collection::vec(prop_oneof![Just(1usize), 2usize..=12], 0..4),
        noise in proptest::collection::vec(-2i64..=2, 1..4),
        n in 2usize..=24,
    ) {
        let t = vars(&["t"]);
        let mut p = LaurentPoly::from_terms(&t, noise.iter().enumerate().map(|(i, &c)| (vec![i as i32], c))).unwrap();
        for d in factors {
            let phi = oracle::cyclotomic(d);
            let q = LaurentPoly::from_terms(&t, phi.iter().enumerate().map(|(i, &c)| (vec![i as i32], c as i64))).unwrap();
            p = &p * &q;
        }
        let count = shared_root_count(&p, n as i64).unwrap().count();
        prop_assert_eq!(count, oracle::shared_roots_by_cyclotomics(&p, n));
    }
}

#[test]
fn seeded_suites() {
    assert_eq!(suites::fox_axioms(7, 500), Ok(500));
    assert_eq!(suites::snf_oracle(7, 200), Ok(200));
    assert_eq!(suites::tietze_invariance(7, 100, 12), Ok(100));
}

#[test]
fn sumners_counts_for_prime_moduli() {
    let delta = fixtures::delta_l();
    for n in [5i64, 7, 11, 13] {
        for k in 1..n {
            let b = branched_betti(&delta, k, n).unwrap();
            if k == 1 || k == n - 1 {
                assert!(b.is_positive(), "n={n} k={k}");
            } else {
                assert!(!b.is_positive(), "n={n} k={k}");
            }
            assert_eq!(b.is_positive(), branched_betti(&delta, n - k, n).unwrap().is_positive());
        }
    }
}

#[test]
fn sumners_symmetry_for_composite_moduli() {
    let delta = fixtures::delta_l();
    for n in 2i64..=20 {
        for k in (1..n).filter(|k| num_gcd(*k, n) == 1) {
            let a = branched_betti(&delta, k, n).unwrap();
            let b = branched_betti(&delta, n - k, n).unwrap();
            if k == 1 || k == n - 1 {
                // one side vanishes identically and is only flagged
                assert!(a.is_positive() && b.is_positive(), "n={n} k={k}");
                assert_eq!(upper(a), (n - 1) as usize);
                assert_eq!(upper(b), (n - 1) as usize);
            } else {
                assert_eq!(a, b, "n={n} k={k}");
            }
        }
    }
    // ν_6 = Φ2·Φ3·Φ6 and k = 5 gives ν_4 ν_5 ν_6 up to units and powers of t - 1
    let spec = foxhom_core::branched::specialize(&delta, 5).unwrap();
    let expected = oracle::shared_roots_by_cyclotomics(&spec, 6);
    assert_eq!(
        branched_betti(&delta, 5, 6).unwrap(),
        foxhom_core::BettiNumber::Exact(expected)
    );
    assert_eq!(expected, 5);
    assert_eq!(shared_root_count(&spec, 6).unwrap(), RootCount::Exact(5));
}

fn upper(b: foxhom_core::BettiNumber) -> usize {
    match b {
        foxhom_core::BettiNumber::Exact(c) => c,
        foxhom_core::BettiNumber::PositiveFlagged { upper } => upper,
    }
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

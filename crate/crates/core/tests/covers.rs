//! Cyclic covers of the reference example and generic cover properties.

use foxhom_core::cover::{h1_cover, reidemeister_schreier, CoverPresentation, CyclicQuotientMap, FillingSpec};
use foxhom_core::laurent::shared_root_count;
use foxhom_core::{AbelianGroup, BigInt, Presentation, Word};
use foxhom_testkit::{fixtures, random, suites};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn n_cover(n: u64) -> CoverPresentation {
    let q = CyclicQuotientMap::new(fixtures::n_final(), fixtures::N_DEGREES.to_vec(), n).unwrap();
    reidemeister_schreier(&q)
}

#[test]
fn cover_sizes_for_three_fold_cover() {
    let cover = n_cover(3);
    assert_eq!(cover.presentation().generators().len(), 18);
    assert_eq!(cover.presentation().relators().len(), 15);
    assert_eq!(cover.tree_edges().len(), 2);
    assert_eq!(cover.homology().rank(), 3);
    assert!(!cover.even_modulus());
    assert!(n_cover(4).even_modulus());
}

#[test]
fn trivial_cover_matches_base() {
    let cover = n_cover(1);
    assert_eq!(cover.homology(), fixtures::n_final().abelianize());
    let m = fixtures::n_final().word("m").unwrap();
    assert_eq!(cover.transfer(&m), fixtures::n_final().exponent_vector(&m).unwrap());
    assert_eq!(cover.h_n_module(), AbelianGroup::trivial());
    let spec = FillingSpec::parse(&fixtures::n_final(), &fixtures::SLOPES).unwrap();
    let filled = cover.fill(&spec);
    assert!(filled.is_finite());
    assert!((BigInt::from(8) % filled.order().unwrap()) == BigInt::from(0));
    assert_eq!(cover.sakuma_quotient().unwrap(), filled);
}

#[test]
fn rank_agrees_with_root_count() {
    let delta_inf = fixtures::delta_infinity();
    for n in (3..=15).step_by(2) {
        let rank =
            h1_cover(&CyclicQuotientMap::new(fixtures::n_final(), fixtures::N_DEGREES.to_vec(), n).unwrap()).rank();
        let roots = shared_root_count(&delta_inf, n as i64).unwrap().count();
        assert_eq!(rank, 3 + roots, "n = {n}");
        assert_eq!(rank, 3);
    }
}

#[test]
fn filled_covers_are_finite() {
    let spec = FillingSpec::parse(&fixtures::n_final(), &fixtures::SLOPES).unwrap();
    for n in [3, 5, 7, 9] {
        let cover = n_cover(n);
        let filled = cover.fill(&spec);
        assert_eq!(filled.rank(), 0, "n = {n}: {filled}");
        let sakuma = cover.sakuma_quotient().unwrap();
        let hn = cover.h_n_module();
        assert_eq!(sakuma.rank(), 0);
        assert_eq!(hn.rank(), 0);
        let ratio = sakuma.order().unwrap() / hn.order().unwrap();
        assert_eq!(sakuma.order().unwrap(), &ratio * hn.order().unwrap());
        assert_eq!(BigInt::from(8) % ratio, BigInt::from(0));
    }
}

#[test]
fn transfer_and_filling_span_the_same_subgroups() {
    assert_eq!(suites::transfer_filling(&[1, 3, 5, 7, 9]), Ok(15));
}

#[test]
fn filling_is_independent_of_orbit_representatives() {
    let base = fixtures::n_final();
    for n in [3u64, 5] {
        let cover = n_cover(n);
        // degree of m is 2, a unit mod odd n: one orbit, any coset works
        for slope in fixtures::SLOPES {
            let w = base.word(slope).unwrap();
            let spec = FillingSpec::parse(&base, &[slope]).unwrap();
            let standard = cover.fill(&spec);
            for c in 1..n {
                let rep = cover.representative(c);
                let loop_word = w.pow(n as i64).conjugate_by(rep);
                let class = cover.lift_class(&loop_word, 0);
                assert_eq!(cover.quotient(&[class]), standard, "n={n} slope={slope} c={c}");
            }
        }
    }
    // degree-0 slopes have n orbits; shifting each representative by a full
    // loop of the transversal generator changes nothing
    let p = Presentation::parse("p", &["a", "b"], &["a b a^-1 b^-1"]).unwrap();
    let q = CyclicQuotientMap::new(p.clone(), vec![1, 0], 4).unwrap();
    let cover = reidemeister_schreier(&q);
    let spec = FillingSpec::parse(&p, &["b"]).unwrap();
    let standard = cover.fill(&spec);
    let a4 = p.word("a^4").unwrap();
    let shifted: Vec<Vec<i64>> = (0..4)
        .map(|c| {
            let rep = cover.representative(c).concat(&a4);
            cover.lift_class(&p.word("b").unwrap().conjugate_by(&rep), 0)
        })
        .collect();
    assert_eq!(cover.quotient(&shifted), standard);
}

#[test]
fn small_examples() {
    let free1 = Presentation::parse("z", &["a"], &[] as &[&str]).unwrap();
    let cover = reidemeister_schreier(&CyclicQuotientMap::new(free1, vec![1], 3).unwrap());
    assert_eq!(cover.presentation().generators().len(), 3);
    assert_eq!(cover.tree_edges().len(), 2);
    assert_eq!(cover.homology(), AbelianGroup::free(1));
    let free2 = Presentation::parse("f2", &["a", "b"], &[] as &[&str]).unwrap();
    let q = CyclicQuotientMap::new(free2, vec![1, 0], 2).unwrap();
    assert_eq!(h1_cover(&q), AbelianGroup::free(3));
    assert_eq!(reidemeister_schreier(&q).kernel_presentation().generators().len(), 3);
}

fn arb_cover_input() -> impl Strategy<Value = (u64, u64)> {
    (any::<u64>(), 1u64..=7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schreier_counts_and_rank_formula((seed, n) in arb_cover_input()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = 1 + (seed % 4) as usize;
        let names: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
        let mut degrees: Vec<i64> = (0..k).map(|i| (seed.rotate_left(i as u32 * 7) % 5) as i64 - 2).collect();
        degrees[0] = 1;
        let free = Presentation::new("free", names.clone(), vec![]).unwrap();
        let q = CyclicQuotientMap::new(free, degrees.clone(), n).unwrap();
        let cover = reidemeister_schreier(&q);
        prop_assert_eq!(cover.presentation().generators().len(), n as usize * k);
        prop_assert_eq!(cover.tree_edges().len(), n as usize - 1);
        prop_assert_eq!(cover.homology(), AbelianGroup::free(n as usize * (k - 1) + 1));

        // relators of degree zero: counts scale by n, lifts at every coset
        // are relators of the cover
        let relators: Vec<Word> = (0..2)
            .map(|_| {
                let w = random::word(&mut rng, k, 4);
                let d = q.degree(&w);
                w.concat(&Word::power(0, -d))
            })
            .collect();
        let p = Presentation::new("p", names, relators.clone()).unwrap();
        let q = CyclicQuotientMap::new(p, degrees, n).unwrap();
        let cover = reidemeister_schreier(&q);
        prop_assert_eq!(cover.presentation().relators().len(), 2 * n as usize);
        let h = cover.homology();
        for r in &relators {
            for c in 0..n {
                let conj = random::word(&mut rng, k, 3);
                let class = cover.lift_class(&r.conjugate_by(&conj), c);
                prop_assert_eq!(cover.quotient(&[class]), h.clone());
            }
        }
    }

    #[test]
    fn transfer_is_additive_and_deck_invariant(seed in any::<u64>(), n in 1u64..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cover = n_cover(2 * n - 1);
        let u = random::word(&mut rng, 6, 6);
        let v = random::word(&mut rng, 6, 6);
        let sum: Vec<i64> = cover.transfer(&u).iter().zip(cover.transfer(&v)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(cover.transfer(&u.concat(&v)), sum);
        let tr = cover.transfer(&u);
        prop_assert_eq!(cover.deck_shift(&tr), tr);
    }
}

#[test]
fn full_lift_of_meridian_is_its_transfer() {
    let cover = n_cover(3);
    let m = fixtures::n_final().word("m").unwrap();
    assert_eq!(cover.lift_class(&m.pow(3), 0), cover.transfer(&m));
    let s = fixtures::n_final().word("s").unwrap();
    assert_eq!(cover.lift_class(&s.pow(3), 0), cover.transfer(&s));
}

//! Property tests over random words and rewrites.

use braidtk::props::{random_word, rewrite, run_property_suite};
use braidtk::{
    alexander_of_closure, burau_char_poly, closure_component_count, equal_in_group, normal_form,
    permutation_to_braid, reduced_burau, word_to_permutation, BraidWord, NormalForm,
};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed),
        ..ProptestConfig::default()
    }
}

fn word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let g = n as i32 - 1;
        prop::collection::vec(
            (1..=g).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]),
            0..=max_len,
        )
        .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}

fn word_pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| {
        let g = n as i32 - 1;
        let letters = || {
            prop::collection::vec(
                (1..=g).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]),
                0..=max_len,
            )
        };
        (letters(), letters())
            .prop_map(move |(a, b)| (BraidWord::new(n, a).unwrap(), BraidWord::new(n, b).unwrap()))
    })
}

/// Appends a positive permutation braid so that the closure is a knot.
fn close_to_knot(w: &BraidWord) -> BraidWord {
    let n = w.strands();
    let target = word_to_permutation(&BraidWord::staircase(n));
    let fix = word_to_permutation(w).inverse().then(&target);
    w.concat(&permutation_to_braid(&fix)).unwrap()
}

proptest! {
    #![proptest_config(config(300))]

    #[test]
    fn rewrites_preserve_invariants(w in word(6, 12), seed in any::<u64>(), steps in 1usize..10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut v = w.clone();
        for _ in 0..steps {
            v = rewrite(&v, &mut rng);
        }
        prop_assert_eq!(word_to_permutation(&w), word_to_permutation(&v));
        prop_assert_eq!(normal_form(&w), normal_form(&v));
        prop_assert_eq!(reduced_burau(&w), reduced_burau(&v));
    }

    #[test]
    fn char_poly_is_a_class_function((w, u) in word_pair(6, 10)) {
        let c = w.conjugate_by(&u).unwrap();
        prop_assert_eq!(burau_char_poly(&w), burau_char_poly(&c));
    }

    #[test]
    fn normal_form_word_round_trip(w in word(6, 14)) {
        let nf = normal_form(&w);
        prop_assert_eq!(normal_form(&nf.to_word()), nf.clone());
        prop_assert!(equal_in_group(&nf.to_word(), &w).unwrap());
        let json = serde_json::to_string(&nf).unwrap();
        prop_assert_eq!(serde_json::from_str::<NormalForm>(&json).unwrap(), nf);
    }

    #[test]
    fn normal_form_is_multiplicative((a, b) in word_pair(5, 10)) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(normal_form(&a).mul(&normal_form(&b)), normal_form(&ab));
        prop_assert!(normal_form(&a).mul(&normal_form(&a).inverse()).is_identity());
    }

    #[test]
    fn word_text_round_trip(w in word(9, 12)) {
        prop_assert_eq!(BraidWord::parse(&w.to_string(), None).unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<BraidWord>(&json).unwrap(), w);
    }

    #[test]
    fn alexander_is_symmetric_and_stable(w in word(5, 10)) {
        let w = close_to_knot(&w);
        prop_assert_eq!(closure_component_count(&w), 1);
        let a = alexander_of_closure(&w).unwrap();
        prop_assert_eq!(a.reflect(), a.clone());
        prop_assert_eq!(a.eval_one(), 1.into());
        // Markov stabilization adds a strand and a crossing without changing the knot
        let n = w.strands();
        for sign in [1, -1] {
            let mut letters = w.letters().to_vec();
            letters.push(sign * n as i32);
            let stabilized = BraidWord::new(n + 1, letters).unwrap();
            prop_assert_eq!(alexander_of_closure(&stabilized).unwrap(), a.clone());
        }
    }
}

#[test]
fn seeded_suite_has_no_failures() {
    let report = run_property_suite(2024, 300, 150, 6);
    assert!(report.passed(), "{report:#?}");
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let w = random_word(&mut rng, 4, 8);
    assert_eq!(w.strands(), 4);
}

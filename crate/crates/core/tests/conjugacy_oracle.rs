//! Summit-set conjugacy decisions against a brute-force search.
//!
//! Conjugacy the search finds is certain; for the short words used here every
//! conjugate pair is joined well inside the search radius, so a miss means the
//! pair is not conjugate.

mod common;

use braidtk::{
    are_conjugate, closure_component_count, cycling, equal_in_group, normal_form, writhe,
    BraidWord, Limits,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(1..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.3) {
                -g
            } else {
                g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn cycle_type(w: &BraidWord) -> Vec<usize> {
    let mut lens: Vec<usize> = braidtk::word_to_permutation(w)
        .cycles()
        .iter()
        .map(Vec::len)
        .collect();
    lens.sort();
    lens
}

/// A word with the same writhe and cycle type, so only the full decision can
/// tell the pair apart.
fn lookalike(rng: &mut ChaCha8Rng, w: &BraidWord) -> BraidWord {
    loop {
        let v = random_word(rng, w.strands(), 6);
        if writhe(&v) == writhe(w) && cycle_type(&v) == cycle_type(w) {
            return v;
        }
    }
}

fn check_pair(a: &BraidWord, b: &BraidWord, radius: usize) -> bool {
    let decision = are_conjugate(a, b, &Limits::default()).unwrap();
    let near = common::conjugates_within(&normal_form(a), radius);
    let found = near.get(&normal_form(b));
    assert_eq!(decision.conjugate, found.is_some(), "{a} vs {b}");
    if let Some(u) = decision.witness {
        let lhs = a.conjugate_by(&u).unwrap();
        assert!(equal_in_group(&lhs, b).unwrap(), "witness for {a} vs {b}");
    }
    if let Some(path) = found {
        let u = BraidWord::new(a.strands(), path.clone()).unwrap();
        assert!(equal_in_group(&a.conjugate_by(&u).unwrap(), b).unwrap());
    }
    decision.conjugate
}

#[test]
fn three_strands_agree_with_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut outcomes = [0; 2];
    for _ in 0..150 {
        let a = random_word(&mut rng, 3, 6);
        let b = lookalike(&mut rng, &a);
        outcomes[check_pair(&a, &b, 8) as usize] += 1;
    }
    assert!(outcomes[0] > 10 && outcomes[1] > 10, "{outcomes:?}");
}

#[test]
fn four_strands_agree_with_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut outcomes = [0; 2];
    for _ in 0..80 {
        let a = random_word(&mut rng, 4, 6);
        let b = lookalike(&mut rng, &a);
        outcomes[check_pair(&a, &b, 6) as usize] += 1;
    }
    assert!(outcomes[0] > 10 && outcomes[1] > 10, "{outcomes:?}");
}

#[test]
fn hidden_conjugates_are_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..100 {
        let n = rng.gen_range(3..=4);
        let a = random_word(&mut rng, n, 6);
        let u = random_word(&mut rng, n, 4);
        let b = normal_form(&a.conjugate_by(&u).unwrap()).to_word();
        let decision = are_conjugate(&a, &b, &Limits::default()).unwrap();
        assert!(decision.conjugate, "{a} vs {b}");
        assert!(equal_in_group(&a.conjugate_by(&decision.witness.unwrap()).unwrap(), &b).unwrap());
    }
}

#[test]
fn all_short_positive_three_braids_partition_consistently() {
    // every positive word of length <= 5 on 3 strands
    let mut words = Vec::new();
    for len in 1..=5u32 {
        for code in 0..2usize.pow(len) {
            let letters = (0..len).map(|k| 1 + ((code >> k) & 1) as i32).collect();
            words.push(BraidWord::new(3, letters).unwrap());
        }
    }
    let limits = Limits::default();
    for (i, a) in words.iter().enumerate() {
        let near = common::conjugates_within(&normal_form(a), 6);
        for b in &words[i + 1..] {
            if a.len() != b.len() || closure_component_count(a) != closure_component_count(b) {
                continue;
            }
            let decision = are_conjugate(a, b, &limits).unwrap();
            assert_eq!(
                decision.conjugate,
                near.contains_key(&normal_form(b)),
                "{a} vs {b}"
            );
        }
    }
}

#[test]
fn cycling_stays_in_the_conjugacy_class() {
    // σ1σ2σ1σ2 on 3 strands: every conjugate by a simple element, by hand
    let x = normal_form(&BraidWord::new(3, vec![1, 2, 1, 2]).unwrap());
    let near = common::conjugates_within(&x, 3);
    let mut y = x.clone();
    for _ in 0..6 {
        y = cycling(&y);
        assert!(near.contains_key(&y), "{y}");
        assert!(y.inf() >= x.inf() && y.sup() <= x.sup());
    }
}

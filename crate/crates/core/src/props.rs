//! Seeded randomized checks of the algebraic invariants.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{enumerate_ncycle_braids, word_to_permutation, BraidWord};
use crate::garside::normal_form;
use crate::invariants::{alexander_of_closure, burau_char_poly, reduced_burau};
use crate::Limits;

/// A random word with letters drawn uniformly from `σ_i^{±1}`.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let letters = if n < 2 {
        Vec::new()
    } else {
        (0..len)
            .map(|_| {
                let g = rng.gen_range(1..n as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect()
    };
    BraidWord::new(n, letters).expect("letters in range")
}

/// Applies one group-preserving rewrite: insert or delete a cancelling pair,
/// swap distant commuting letters, or apply a braid relation.
pub fn rewrite<R: Rng>(w: &BraidWord, rng: &mut R) -> BraidWord {
    let n = w.strands();
    let mut l = w.letters().to_vec();
    if n < 2 {
        return w.clone();
    }
    let mut moves = vec![0];
    let cancel: Vec<usize> = (0..l.len().saturating_sub(1))
        .filter(|&k| l[k] == -l[k + 1])
        .collect();
    let commute: Vec<usize> = (0..l.len().saturating_sub(1))
        .filter(|&k| (l[k].abs() - l[k + 1].abs()).abs() >= 2)
        .collect();
    let braid: Vec<usize> = (0..l.len().saturating_sub(2))
        .filter(|&k| {
            l[k] == l[k + 2]
                && (l[k].abs() - l[k + 1].abs()).abs() == 1
                && l[k].signum() == l[k + 1].signum()
        })
        .collect();
    if !cancel.is_empty() {
        moves.push(1);
    }
    if !commute.is_empty() {
        moves.push(2);
    }
    if !braid.is_empty() {
        moves.push(3);
    }
    match *moves.choose(rng).unwrap() {
        0 => {
            let g = rng.gen_range(1..n as i32);
            let g = if rng.gen_bool(0.5) { g } else { -g };
            let at = rng.gen_range(0..=l.len());
            l.splice(at..at, [g, -g]);
        }
        1 => {
            let k = *cancel.choose(rng).unwrap();
            l.drain(k..k + 2);
        }
        2 => {
            let k = *commute.choose(rng).unwrap();
            l.swap(k, k + 1);
        }
        _ => {
            let k = *braid.choose(rng).unwrap();
            let (a, b) = (l[k], l[k + 1]);
            l[k..k + 3].copy_from_slice(&[b, a, b]);
        }
    }
    BraidWord::new(n, l).expect("rewrites keep letters in range")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl PropertyCheck {
    fn new(name: &str) -> Self {
        Self {
            name: name.into(),
            trials: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            self.first_failure.get_or_insert_with(detail);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

/// Runs `rewrites` relation-invariance trials and `conjugations` conjugation
/// trials from `seed`, then checks the Alexander polynomial of every census
/// knot up to `census_n` strands.
pub fn run_property_suite(
    seed: u64,
    rewrites: usize,
    conjugations: usize,
    census_n: usize,
) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm = PropertyCheck::new("relation invariance: word_to_permutation");
    let mut nf = PropertyCheck::new("relation invariance: normal_form");
    let mut burau = PropertyCheck::new("relation invariance: reduced_burau");
    for _ in 0..rewrites {
        let n = rng.gen_range(2..=6);
        let len = rng.gen_range(0..=12);
        let w = random_word(&mut rng, n, len);
        let mut v = w.clone();
        for _ in 0..rng.gen_range(1..=8) {
            v = rewrite(&v, &mut rng);
        }
        let detail = || format!("{w} vs {v}");
        perm.record(word_to_permutation(&w) == word_to_permutation(&v), detail);
        nf.record(normal_form(&w) == normal_form(&v), detail);
        burau.record(reduced_burau(&w) == reduced_burau(&v), detail);
    }
    let mut conj = PropertyCheck::new("conjugation invariance: burau_char_poly");
    for _ in 0..conjugations {
        let n = rng.gen_range(2..=6);
        let (len, ulen) = (rng.gen_range(0..=10), rng.gen_range(1..=6));
        let w = random_word(&mut rng, n, len);
        let u = random_word(&mut rng, n, ulen);
        let c = w.conjugate_by(&u).expect("same strands");
        conj.record(burau_char_poly(&w) == burau_char_poly(&c), || {
            format!("{w} conjugated by {u}")
        });
    }
    let mut alex = PropertyCheck::new("census knots: Alexander symmetric with value 1 at t = 1");
    let limits = Limits {
        max_n: census_n.max(2),
        ..Limits::default()
    };
    for n in 2..=census_n {
        for b in enumerate_ncycle_braids(n, &limits).expect("within limits") {
            let ok = alexander_of_closure(&b.word)
                .map(|a| a.reflect() == a && a.eval_one() == 1.into())
                .unwrap_or(false);
            alex.record(ok, || b.word.to_string());
        }
    }
    PropertyReport {
        seed,
        checks: vec![perm, nf, burau, conj, alex],
    }
}
